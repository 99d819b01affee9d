"""Bit-packed GF(2) symplectic linear algebra for N qubits.

Vectors live in V(2N, 2) and are written (x_1 .. x_N | z_1 .. z_N).
Both halves are packed into Python ints with qubit 1 at the most
significant bit, so ``(x << n) | z`` orders vectors exactly like reading
their coordinate string left to right.  The nonzero vectors are the
points of the rank-N symplectic polar space of order two; the zero
vector is a legal intermediate value in linear algebra but is rejected
by every point-level operation.

The alternating form is fixed once for the whole package:

    sp_form(u, v) = u.x . v.z  +  u.z . v.x   (mod 2)

i.e. the Gram matrix is [[0, I], [I, 0]] in the (x | z) split.  With the
letterwise Pauli encoding in :mod:`qpolar.pauli` this makes
"form vanishes" coincide with "operators commute".

Two distinct points are perpendicular when the form vanishes on them.
For order two this is the same as being joined by a totally isotropic
line: the line through p and q is {p, q, p + q}, and it is totally
isotropic iff sp_form(p, q) = 0 (bilinearity gives the form on all
other pairs).  Tests exercise this equivalence directly.

Subspaces are kept in reduced row echelon form with pivots taken left
to right across (x | z), so equal subspaces always carry identical
basis tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DimensionMismatch, ZeroVectorError

# One machine word per (x or z) part; enumeration commands cap far lower.
MAX_QUBITS = 12


@dataclass(frozen=True, slots=True)
class SymplecticVector:
    """An element of V(2N, 2), bit-packed as (x-part, z-part)."""

    n: int
    x: int
    z: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_QUBITS:
            raise DimensionMismatch(f"n_qubits must be in 1..{MAX_QUBITS}, got {self.n}")
        if not 0 <= self.x < (1 << self.n) or not 0 <= self.z < (1 << self.n):
            raise ValueError(f"x/z parts must be {self.n}-bit values")

    @classmethod
    def from_bits(cls, x_bits: str, z_bits: str) -> "SymplecticVector":
        """Build from coordinate strings, e.g. from_bits("10", "01") for N=2."""
        if len(x_bits) != len(z_bits) or not x_bits:
            raise DimensionMismatch("x and z bit strings must have equal positive length")
        return cls(len(x_bits), int(x_bits, 2), int(z_bits, 2))

    @property
    def is_zero(self) -> bool:
        return self.x == 0 and self.z == 0

    @property
    def key(self) -> int:
        """Packed 2N-bit value; ascending key = left-to-right lexicographic order."""
        return (self.x << self.n) | self.z

    @property
    def pivot(self) -> int | None:
        """Index of the leading coordinate (0 = x_1, ..., 2N-1 = z_N); None if zero."""
        if self.is_zero:
            return None
        return 2 * self.n - self.key.bit_length()

    def __xor__(self, other: "SymplecticVector") -> "SymplecticVector":
        if self.n != other.n:
            raise DimensionMismatch(f"cannot add vectors over {self.n} and {other.n} qubits")
        return SymplecticVector(self.n, self.x ^ other.x, self.z ^ other.z)

    def __str__(self) -> str:
        return f"{self.x:0{self.n}b}|{self.z:0{self.n}b}"


def all_points(n_qubits: int) -> Iterator[SymplecticVector]:
    """Yield all 4^N - 1 nonzero vectors in ascending key order."""
    n = n_qubits
    for key in range(1, 1 << (2 * n)):
        yield SymplecticVector(n, key >> n, key & ((1 << n) - 1))


def sp_form(u: SymplecticVector, v: SymplecticVector) -> int:
    """Evaluate the alternating form: parity of u.x & v.z plus u.z & v.x."""
    if u.n != v.n:
        raise DimensionMismatch(f"form needs equal qubit counts, got {u.n} and {v.n}")
    return ((u.x & v.z).bit_count() + (u.z & v.x).bit_count()) & 1


@dataclass(frozen=True, slots=True)
class Subspace:
    """A GF(2) subspace given by its (unique) reduced row echelon basis.

    Canonical form means value equality coincides with subspace
    equality.  Construct through :func:`rref` unless the basis is
    already known to be reduced.
    """

    n: int
    basis: tuple[SymplecticVector, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_QUBITS:
            raise DimensionMismatch(f"n_qubits must be in 1..{MAX_QUBITS}, got {self.n}")
        pivots = []
        for row in self.basis:
            if row.n != self.n:
                raise DimensionMismatch("basis rows must match the subspace qubit count")
            if row.pivot is None:
                raise ValueError("zero row in basis")
            pivots.append(row.pivot)
        if any(p >= q for p, q in zip(pivots, pivots[1:])):
            raise ValueError("basis pivots must strictly increase")
        for i, row in enumerate(self.basis):
            for j, other in enumerate(self.basis):
                if i != j and (other.key >> (2 * self.n - 1 - pivots[i])) & 1:
                    raise ValueError("basis is not fully reduced")

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, v: SymplecticVector) -> bool:
        if v.n != self.n:
            raise DimensionMismatch("vector and subspace qubit counts differ")
        key = v.key
        for row in self.basis:
            if key == 0:
                break
            if key.bit_length() == row.key.bit_length():
                key ^= row.key
        return key == 0

    def sort_key(self) -> tuple[tuple[int, int], ...]:
        """Canonical comparison key: rows ordered pivot-major, then by packed value."""
        return tuple((row.pivot, row.key) for row in self.basis)  # type: ignore[misc]


def rref(vectors: Iterable[SymplecticVector], n_qubits: int | None = None) -> Subspace:
    """Reduce a list of vectors to the canonical RREF basis of their span.

    ``n_qubits`` is only needed when ``vectors`` is empty (the rank-0
    subspace is a valid result, not an error).
    """
    rows: list[int] = []
    n = n_qubits
    for v in vectors:
        if n is None:
            n = v.n
        elif v.n != n:
            raise DimensionMismatch("all vectors must share one qubit count")
        rows.append(v.key)
    if n is None:
        raise DimensionMismatch("empty input needs an explicit n_qubits")

    reduced: list[int] = []  # kept sorted by descending leading bit
    for row in rows:
        for piv in reduced:
            if (row ^ piv).bit_length() < row.bit_length():
                row ^= piv
        if row:
            reduced.append(row)
            reduced.sort(reverse=True)
    # back-substitute so every pivot bit is unique to its row
    for i, piv in enumerate(reduced):
        lead = 1 << (piv.bit_length() - 1)
        for j in range(i):
            if reduced[j] & lead:
                reduced[j] ^= piv

    mask = (1 << n) - 1
    basis = tuple(SymplecticVector(n, key >> n, key & mask) for key in reduced)
    return Subspace(n, basis)


def span_points(s: Subspace) -> set[SymplecticVector]:
    """All 2^rank - 1 nonzero vectors in the span of the basis."""
    keys = {0}
    for row in s.basis:
        rk = row.key
        keys |= {k ^ rk for k in keys}
    keys.discard(0)
    mask = (1 << s.n) - 1
    return {SymplecticVector(s.n, k >> s.n, k & mask) for k in keys}


def is_totally_isotropic(s: Subspace) -> bool:
    """True iff the form vanishes on the whole subspace.

    Bilinearity means checking all basis pairs suffices (and the form is
    alternating, so diagonal pairs are free).
    """
    for i, u in enumerate(s.basis):
        for v in s.basis[i + 1:]:
            if sp_form(u, v):
                return False
    return True


def perp_census(p: SymplecticVector) -> tuple[int, int]:
    """Count (perpendicular, non-perpendicular) points among all q != p.

    Perpendicular means distinct with vanishing form.  The
    non-perpendicular count is 2^(2N-1) for every point.
    """
    if p.is_zero:
        raise ZeroVectorError("the zero vector is not a point of the space")
    non_perp = 0
    for q in all_points(p.n):
        non_perp += sp_form(p, q)
    total_others = (1 << (2 * p.n)) - 2
    return total_others - non_perp, non_perp
