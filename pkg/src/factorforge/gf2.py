"""Binary finite fields GF(2^k) in polynomial basis.

Elements are Python ints whose bits are polynomial coefficients.  Addition
is xor; multiplication is carryless multiplication followed by reduction
modulo a fixed irreducible polynomial; inversion runs the extended Euclidean
algorithm over GF(2)[x].

The 64-bit field uses the fixed irreducible x^64 + x^4 + x^3 + x + 1 so the
compiled kernel and the pure fallback agree bit for bit.  Other widths get
the lexicographically first irreducible of their degree, found by Rabin's
irreducibility test.
"""

from __future__ import annotations

import random
from typing import Optional

GF64_BITS = 64
GF64_MODULUS = (1 << 64) | 0x1B  # x^64 + x^4 + x^3 + x + 1


def poly_mul(a: int, b: int) -> int:
    """Carryless product of two GF(2)[x] polynomials (no reduction)."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def poly_divmod(a: int, b: int) -> tuple[int, int]:
    """Quotient and remainder of polynomial division over GF(2)."""
    if b == 0:
        raise ZeroDivisionError("polynomial division by zero")
    q = 0
    db = b.bit_length()
    while a.bit_length() >= db:
        shift = a.bit_length() - db
        q ^= 1 << shift
        a ^= b << shift
    return q, a


def poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, poly_divmod(a, b)[1]
    return a


def _poly_mulmod(a: int, b: int, mod: int) -> int:
    return poly_divmod(poly_mul(a, b), mod)[1]


def _poly_powmod_x_2e(e: int, mod: int) -> int:
    """x^(2^e) mod `mod`, by repeated squaring."""
    r = 2  # the polynomial x
    for _ in range(e):
        r = _poly_mulmod(r, r, mod)
    return r


def _prime_factors(k: int) -> list[int]:
    out = []
    d = 2
    while d * d <= k:
        if k % d == 0:
            out.append(d)
            while k % d == 0:
                k //= d
        d += 1
    if k > 1:
        out.append(k)
    return out


def is_irreducible(p: int) -> bool:
    """Rabin's test for a degree-k polynomial over GF(2)."""
    k = p.bit_length() - 1
    if k <= 0:
        return False
    if _poly_powmod_x_2e(k, p) != 2:  # x^(2^k) must equal x
        return False
    for q in _prime_factors(k):
        h = _poly_powmod_x_2e(k // q, p) ^ 2
        if poly_gcd(h, p) != 1:
            return False
    return True


def find_irreducible(k: int) -> int:
    """Lexicographically first irreducible polynomial of degree k."""
    if k < 1:
        raise ValueError("degree must be positive")
    if k == 1:
        return 2  # x
    base = 1 << k
    for low in range(1, base, 2):  # constant term must be 1
        p = base | low
        if is_irreducible(p):
            return p
    raise AssertionError("unreachable: irreducible of degree %d exists" % k)


class GF2Field:
    """Arithmetic context for GF(2^bits)."""

    __slots__ = ("bits", "modulus", "mask", "_top")

    def __init__(self, bits: int, modulus: Optional[int] = None):
        if bits < 1:
            raise ValueError("field needs at least one bit")
        if modulus is None:
            modulus = GF64_MODULUS if bits == GF64_BITS else find_irreducible(bits)
        if modulus.bit_length() != bits + 1:
            raise ValueError("modulus degree does not match field width")
        if not is_irreducible(modulus):
            raise ValueError("modulus is reducible")
        self.bits = bits
        self.modulus = modulus
        self.mask = (1 << bits) - 1
        self._top = 1 << (bits - 1)

    @property
    def order(self) -> int:
        return 1 << self.bits

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        mod, top, mask = self.modulus, self._top, self.mask
        r = 0
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            if a & top:
                a = ((a << 1) ^ mod) & mask
            else:
                a <<= 1
        return r

    def inv(self, a: int) -> int:
        """Multiplicative inverse via extended Euclid over GF(2)[x]."""
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in GF(2^%d)" % self.bits)
        r0, s0 = self.modulus, 0
        r1, s1 = a & self.mask, 1
        while r1:
            q, rem = poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, s0 ^ poly_mul(q, s1)
        assert r0 == 1, "modulus must be irreducible"
        return poly_divmod(s0, self.modulus)[1]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        r = 1
        a &= self.mask
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def random(self, rng: random.Random) -> int:
        return rng.getrandbits(self.bits)

    def random_nonzero(self, rng: random.Random) -> int:
        while True:
            x = rng.getrandbits(self.bits)
            if x:
                return x

    def element(self, value: int) -> "FieldElement":
        return FieldElement(self, value & self.mask)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GF2Field)
            and self.bits == other.bits
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.bits, self.modulus))

    def __repr__(self) -> str:
        return "GF2Field(bits=%d, modulus=0x%x)" % (self.bits, self.modulus)


class FieldElement:
    """Thin operator wrapper over a field value.  Hot paths work on raw ints;
    this class exists for ergonomic call sites and tests."""

    __slots__ = ("field", "value")

    def __init__(self, field: GF2Field, value: int):
        self.field = field
        self.value = value & field.mask

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements from different fields")
            return other.value
        return int(other) & self.field.mask

    def __add__(self, other):
        return FieldElement(self.field, self.value ^ self._coerce(other))

    __radd__ = __add__
    __sub__ = __add__  # characteristic 2
    __rsub__ = __add__

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(
            self.field, self.field.mul(self.value, self.field.inv(self._coerce(other)))
        )

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.bits, self.value))

    def __repr__(self) -> str:
        return "FieldElement(0x%x over GF(2^%d))" % (self.value, self.field.bits)


def field_bits_for_instance(n: int) -> int:
    """Field width used for an n-vertex instance: max(64, 8*ceil((6*log2(n)+8)/8)).

    The evaluated polynomial has degree O(n^4) <= n^6 for n >= 2, so 2^bits
    >= n^6 (plus slack) keeps the per-evaluation error at most 1/n^2.
    """
    if n < 2:
        return GF64_BITS
    log2n = (n - 1).bit_length()  # ceil(log2 n) for n >= 2
    raw = 6 * log2n + 8
    return max(GF64_BITS, ((raw + 7) // 8) * 8)
