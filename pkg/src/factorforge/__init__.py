"""factorforge: connected f-factor and partition-connector solvers.

A connected f-factor of a graph G is a connected spanning subgraph whose
degree at every vertex v is exactly f(v).  The package provides the degree
demand machinery (blowup encoding, general matching), alternating-circuit
surgery for reconnecting factors, a deterministic and a randomized
algebraic partition-connector backend, the refinement-driver solver, and an
instance lab (oracles, generators, file formats, CLI).
"""

from .errors import (
    FactorForgeError,
    FormatError,
    InfeasibleDemandError,
    InvalidPartitionError,
    InvalidSwitchError,
    NotAlternatingError,
    RepairContractError,
    SizeGuardError,
)
from .graphs import (
    DegreeSpec,
    FactorSubgraph,
    Graph,
    MaskedGraph,
    Partition,
    QuotientGraph,
    Report,
    components,
    quotient,
    refine_by_components,
    verify_f_factor,
)
from .blowup import (
    BlowupGraph,
    build_blowup,
    find_f_factor,
    find_f_factor_containing,
    induced_blowup,
)
from .matching import Matching, max_matching
from .gf2 import FieldElement, GF2Field, field_bits_for_instance
from .oracle import brute_force_cff, brute_force_pc
from .circuits import (
    ColoredMultigraph,
    MinimalAlternatingCircuit,
    color_symmetric_difference,
    decompose_minimal_alternating,
    repair_close_factor,
    switch,
)
from .connector_det import enumerate_quotient_spanning_trees, pc_deterministic
from .algebraic import (
    TutteAssignment,
    eval_pc,
    exists_pc_randomized,
    graph_tutte_det,
    pc_randomized,
    tutte_det,
)
from .solver import (
    SequenceTrace,
    SolveResult,
    SolverConfig,
    TraceRound,
    assert_sequence_bounds,
    connected_f_factor,
)
from .generate import (
    Instance,
    gen_hamiltonian_reduction,
    gen_planted,
    gen_random,
)
from .fileio import (
    emit_factor,
    emit_instance,
    load_instance,
    parse_factor,
    parse_instance,
    parse_partition,
    save_instance,
)

__version__ = "0.1.0"

__all__ = [
    "BlowupGraph",
    "ColoredMultigraph",
    "DegreeSpec",
    "FactorForgeError",
    "FactorSubgraph",
    "FieldElement",
    "FormatError",
    "GF2Field",
    "Graph",
    "InfeasibleDemandError",
    "Instance",
    "InvalidPartitionError",
    "InvalidSwitchError",
    "MaskedGraph",
    "Matching",
    "MinimalAlternatingCircuit",
    "NotAlternatingError",
    "Partition",
    "QuotientGraph",
    "RepairContractError",
    "Report",
    "SequenceTrace",
    "SizeGuardError",
    "SolveResult",
    "SolverConfig",
    "TraceRound",
    "TutteAssignment",
    "assert_sequence_bounds",
    "brute_force_cff",
    "brute_force_pc",
    "build_blowup",
    "color_symmetric_difference",
    "components",
    "connected_f_factor",
    "decompose_minimal_alternating",
    "emit_factor",
    "emit_instance",
    "enumerate_quotient_spanning_trees",
    "eval_pc",
    "exists_pc_randomized",
    "field_bits_for_instance",
    "find_f_factor",
    "find_f_factor_containing",
    "gen_hamiltonian_reduction",
    "gen_planted",
    "gen_random",
    "graph_tutte_det",
    "induced_blowup",
    "load_instance",
    "max_matching",
    "parse_factor",
    "parse_instance",
    "parse_partition",
    "pc_deterministic",
    "pc_randomized",
    "quotient",
    "refine_by_components",
    "repair_close_factor",
    "save_instance",
    "switch",
    "tutte_det",
    "verify_f_factor",
    "__version__",
]
