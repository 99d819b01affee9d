"""GF(2^n) arithmetic in a fixed polynomial basis, n = 1..5.

Elements are n-bit ints: bit i is the coefficient of x^i.  The modulus
for each degree is pinned (low-weight standard choices) so every output
of the package is reproducible bit for bit:

    n=1: x + 1        n=2: x^2 + x + 1    n=3: x^3 + x + 1
    n=4: x^4 + x + 1  n=5: x^5 + x^2 + 1

The only consumer is the field-plane spread construction, which needs
multiplication, the absolute trace, and the trace-dual of the
polynomial basis {1, x, ..., x^(n-1)}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import DimensionMismatch, NotABasisError

MODULI = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
}


@dataclass(frozen=True, slots=True)
class FieldElement:
    n: int
    bits: int

    def __post_init__(self) -> None:
        if self.n not in MODULI:
            raise DimensionMismatch(f"supported extension degrees are {sorted(MODULI)}, got {self.n}")
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError(f"coefficients must fit in {self.n} bits")

    def __xor__(self, other: "FieldElement") -> "FieldElement":
        if self.n != other.n:
            raise DimensionMismatch("cannot add elements of different degrees")
        return FieldElement(self.n, self.bits ^ other.bits)

    def __str__(self) -> str:
        if self.bits == 0:
            return "0"
        terms = []
        for i in range(self.n - 1, -1, -1):
            if (self.bits >> i) & 1:
                terms.append("1" if i == 0 else ("x" if i == 1 else f"x^{i}"))
        return "+".join(terms)


def zero(n: int) -> FieldElement:
    return FieldElement(n, 0)


def one(n: int) -> FieldElement:
    return FieldElement(n, 1)


def elements(n: int) -> Iterator[FieldElement]:
    """All 2^n field elements, in coefficient order."""
    for bits in range(1 << n):
        yield FieldElement(n, bits)


def fmul(a: FieldElement, b: FieldElement) -> FieldElement:
    """Product modulo the pinned irreducible polynomial."""
    if a.n != b.n:
        raise DimensionMismatch(f"cannot multiply degrees {a.n} and {b.n}")
    n = a.n
    # carry-less multiply
    prod = 0
    x, y = a.bits, b.bits
    while y:
        if y & 1:
            prod ^= x
        x <<= 1
        y >>= 1
    # reduce degree-by-degree from the top
    modulus = MODULI[n]
    for bit in range(prod.bit_length() - 1, n - 1, -1):
        if (prod >> bit) & 1:
            prod ^= modulus << (bit - n)
    return FieldElement(n, prod)


def trace(a: FieldElement) -> int:
    """Absolute trace a + a^2 + ... + a^(2^(n-1)), landing in {0, 1}."""
    acc = a
    power = a
    for _ in range(a.n - 1):
        power = fmul(power, power)
        acc = acc ^ power
    if acc.bits not in (0, 1):
        raise AssertionError(f"trace left the prime field: {acc}")  # pragma: no cover
    return acc.bits


def polynomial_basis(n: int) -> list[FieldElement]:
    """The default primal basis {1, x, ..., x^(n-1)}."""
    if n not in MODULI:
        raise DimensionMismatch(f"supported extension degrees are {sorted(MODULI)}, got {n}")
    return [FieldElement(n, 1 << i) for i in range(n)]


@dataclass(frozen=True)
class DualBasisPair:
    """A basis together with its trace-dual: Tr(primal_i * dual_j) = delta_ij."""

    n: int
    primal: tuple[FieldElement, ...]
    dual: tuple[FieldElement, ...]


def dual_basis(primal: list[FieldElement]) -> DualBasisPair:
    """Compute the unique trace-dual of a GF(2)-basis.

    Inverts the trace Gram matrix G_ij = Tr(primal_i * primal_j) over
    GF(2); a singular Gram matrix means the input is not a basis.  The
    delta_ij identities are re-verified on the result unconditionally.
    """
    if not primal:
        raise NotABasisError("empty primal basis")
    n = primal[0].n
    if len(primal) != n or any(e.n != n for e in primal):
        raise NotABasisError(f"need exactly {n} elements of degree {n}")

    gram = [sum(trace(fmul(primal[i], primal[j])) << j for j in range(n)) for i in range(n)]
    inv = _invert_gf2(gram, n)
    if inv is None:
        raise NotABasisError("trace Gram matrix is singular: primal is not a basis")

    dual = []
    for j in range(n):
        acc = zero(n)
        for k in range(n):
            if (inv[k] >> j) & 1:
                acc = acc ^ primal[k]
        dual.append(acc)

    for i in range(n):
        for j in range(n):
            if trace(fmul(primal[i], dual[j])) != (1 if i == j else 0):
                raise AssertionError("dual basis verification failed")  # pragma: no cover
    return DualBasisPair(n, tuple(primal), tuple(dual))


def _invert_gf2(rows: list[int], n: int) -> list[int] | None:
    """Invert an n x n GF(2) matrix given as row bitmasks; None if singular."""
    aug = [rows[i] | (1 << (n + i)) for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if (aug[r] >> col) & 1), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        for r in range(n):
            if r != col and (aug[r] >> col) & 1:
                aug[r] ^= aug[col]
    return [row >> n for row in aug]
