"""Pauli words, their symplectic coordinates, and an exact matrix oracle.

Operators are phase-free classes written as words over {I, X, Y, Z},
qubit 1 leftmost, tensor factors read left to right.  Letters encode
into (x, z) coordinate pairs

    I -> (0, 0),  X -> (1, 0),  Z -> (0, 1),  Y -> (1, 1)

so the 4^N - 1 non-identity words biject onto the nonzero vectors of
V(2N, 2), and two operators commute exactly when the alternating form
vanishes on their vectors.  Phases are discarded throughout: the point
set has 4^N - 1 elements, which forces the quotient by {+-1, +-i}, and
commutation is phase-invariant, so nothing observable is lost.  (Y is
the X-then-Z composition up to the phase -i, which the quotient
absorbs.)  Any symplectic change of basis would give an equally valid
dictionary; this letterwise one is the package-wide convention.

The independent route that grounds the dictionary is ExactMatrix:
literal Kronecker products over the Gaussian integers (entries are
pairs of Python ints, never floats), where "commuting" means the
commutator is exactly the zero matrix.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product as _product

from .errors import (
    CapacityError,
    DimensionMismatch,
    DomainError,
    IdentityWordError,
    ZeroVectorError,
)
from .geometry import is_maximal_isotropic
from .gf2 import Subspace, SymplecticVector, sp_form, span_points

LETTERS = "IXYZ"
_LETTER_TO_XZ = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
_XZ_TO_LETTER = {xz: letter for letter, xz in _LETTER_TO_XZ.items()}

# 2^6 x 2^6 is the largest matrix the oracle will build
MAX_ORACLE_QUBITS = 6


def validate_word(word: str) -> str:
    """Check a Pauli word; returns it unchanged.  Raises naming the bad character."""
    if not word:
        raise DomainError("empty Pauli word")
    for ch in word:
        if ch not in _LETTER_TO_XZ:
            raise DomainError(f"invalid Pauli letter {ch!r} in {word!r} (allowed: I, X, Y, Z)")
    return word


def all_words(n_qubits: int):
    """All 4^N words including the identity, in letter order."""
    for letters in _product(LETTERS, repeat=n_qubits):
        yield "".join(letters)


def pauli_to_vector(word: str) -> SymplecticVector:
    """Letterwise encoding of a non-identity word into its point."""
    validate_word(word)
    n = len(word)
    x = z = 0
    for k, ch in enumerate(word):
        xb, zb = _LETTER_TO_XZ[ch]
        x |= xb << (n - 1 - k)
        z |= zb << (n - 1 - k)
    if x == 0 and z == 0:
        raise IdentityWordError("the identity word has no point in the space")
    return SymplecticVector(n, x, z)


def vector_to_pauli(v: SymplecticVector) -> str:
    """Inverse of pauli_to_vector."""
    if v.is_zero:
        raise ZeroVectorError("the zero vector corresponds to the excluded identity")
    letters = []
    for k in range(v.n):
        shift = v.n - 1 - k
        letters.append(_XZ_TO_LETTER[(v.x >> shift) & 1, (v.z >> shift) & 1])
    return "".join(letters)


def commutes(p: str, q: str) -> bool:
    """Symplectic commutation test: the form vanishes on the two points."""
    u, v = pauli_to_vector(p), pauli_to_vector(q)
    if u.n != v.n:
        raise DimensionMismatch(f"words of length {u.n} and {v.n} cannot be compared")
    return sp_form(u, v) == 0


class ExactMatrix:
    """A square matrix over the Gaussian integers.

    Stored as two parallel tuples-of-tuples of Python ints (real and
    imaginary parts), so all arithmetic is exact at any size.
    """

    __slots__ = ("dim", "re", "im")

    def __init__(self, re, im):
        re = tuple(tuple(row) for row in re)
        im = tuple(tuple(row) for row in im)
        dim = len(re)
        if len(im) != dim or any(len(row) != dim for row in re) or any(len(row) != dim for row in im):
            raise ValueError("real and imaginary parts must be square and congruent")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    def entry(self, i: int, j: int) -> tuple[int, int]:
        return self.re[i][j], self.im[i][j]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    @property
    def is_zero(self) -> bool:
        return not any(any(row) for row in self.re) and not any(any(row) for row in self.im)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.dim != other.dim:
            raise DimensionMismatch("matrix dimensions differ")
        re = [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.re, other.re)]
        im = [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.im, other.im)]
        return ExactMatrix(re, im)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.dim != other.dim:
            raise DimensionMismatch("matrix dimensions differ")
        new_re = []
        new_im = []
        for a_re_row, a_im_row in zip(self.re, self.im):
            racc = [0] * self.dim
            iacc = [0] * self.dim
            for ar, ai, b_re_row, b_im_row in zip(a_re_row, a_im_row, other.re, other.im):
                if ar == 0 and ai == 0:
                    continue
                racc = [acc + ar * br - ai * bi for acc, br, bi in zip(racc, b_re_row, b_im_row)]
                iacc = [acc + ar * bi + ai * br for acc, br, bi in zip(iacc, b_re_row, b_im_row)]
            new_re.append(racc)
            new_im.append(iacc)
        return ExactMatrix(new_re, new_im)

    def kron(self, other: "ExactMatrix") -> "ExactMatrix":
        """Kronecker product with self as the outer (left) factor."""
        d1, d2 = self.dim, other.dim
        dim = d1 * d2
        re = [[0] * dim for _ in range(dim)]
        im = [[0] * dim for _ in range(dim)]
        for i0 in range(d1):
            for j0 in range(d1):
                ar, ai = self.re[i0][j0], self.im[i0][j0]
                if ar == 0 and ai == 0:
                    continue
                for i1 in range(d2):
                    for j1 in range(d2):
                        br, bi = other.re[i1][j1], other.im[i1][j1]
                        re[i0 * d2 + i1][j0 * d2 + j1] = ar * br - ai * bi
                        im[i0 * d2 + i1][j0 * d2 + j1] = ar * bi + ai * br
        return ExactMatrix(re, im)

    def __repr__(self):
        return f"ExactMatrix(dim={self.dim})"


SINGLE_QUBIT = {
    "I": ExactMatrix(((1, 0), (0, 1)), ((0, 0), (0, 0))),
    "X": ExactMatrix(((0, 1), (1, 0)), ((0, 0), (0, 0))),
    "Y": ExactMatrix(((0, 0), (0, 0)), ((0, -1), (1, 0))),
    "Z": ExactMatrix(((1, 0), (0, -1)), ((0, 0), (0, 0))),
}


@lru_cache(maxsize=None)
def pauli_matrix(word: str) -> ExactMatrix:
    """The literal 2^N x 2^N matrix of a word, leftmost letter outermost."""
    validate_word(word)
    if len(word) > MAX_ORACLE_QUBITS:
        raise CapacityError(
            f"the matrix oracle is capped at N<={MAX_ORACLE_QUBITS} "
            f"(2^{len(word)} x 2^{len(word)} requested)"
        )
    m = SINGLE_QUBIT[word[0]]
    for ch in word[1:]:
        m = m.kron(SINGLE_QUBIT[ch])
    return m


def commutes_matrix(p: str, q: str) -> bool:
    """Brute-force commutation: AB - BA is exactly the zero matrix."""
    if len(p) != len(q):
        raise DimensionMismatch(f"words of length {len(p)} and {len(q)} cannot be compared")
    a, b = pauli_matrix(p), pauli_matrix(q)
    return (a @ b - b @ a).is_zero


def commutation_sweep(n_qubits: int) -> tuple[int, int]:
    """Compare both commutation routes over all ordered pairs of non-identity words.

    Returns (pairs_checked, mismatches).
    """
    if n_qubits > MAX_ORACLE_QUBITS:
        raise CapacityError(f"the matrix oracle is capped at N<={MAX_ORACLE_QUBITS}")
    words = [w for w in all_words(n_qubits) if set(w) != {"I"}]
    pairs = 0
    mismatches = 0
    for p in words:
        for q in words:
            pairs += 1
            if commutes(p, q) != commutes_matrix(p, q):
                mismatches += 1
    return pairs, mismatches


def mcs_of_generator(g: Subspace) -> list[str]:
    """The maximally commuting operator set carried by a generator.

    The result is the generator's 2^N - 1 points as words, ascending in
    point order.  Maximality is checked via the form (no outside point
    is perpendicular to the whole block) by is_maximal_isotropic, which
    also confirms the equivalent rank-N characterization.
    """
    if not is_maximal_isotropic(g):
        raise DomainError(f"rank {g.rank} subspace is not a generator (need rank {g.n})")
    pts = sorted(span_points(g), key=lambda v: v.key)
    return [vector_to_pauli(v) for v in pts]
