"""Build script.

The compiled kernel (factorforge._kernels._core) is optional: if Cython or a
C compiler is unavailable, or FACTORFORGE_NO_EXT=1 is set, the package
installs anyway and falls back to the pure-Python kernels at import time.
"""

import os
import sys

from setuptools import setup

ext_modules = []
if os.environ.get("FACTORFORGE_NO_EXT", "0") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools.extension import Extension

        ext = Extension(
            "factorforge._kernels._core",
            sources=["src/factorforge/_kernels/_core.pyx"],
            include_dirs=["src/factorforge/_kernels"],
            extra_compile_args=["-O3"],
        )
        ext_modules = cythonize([ext], compiler_directives={"language_level": "3"})
    except ImportError as exc:
        sys.stderr.write("factorforge: building without compiled kernels (%s)\n" % exc)

setup(ext_modules=ext_modules)
