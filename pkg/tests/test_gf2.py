"""Form, RREF, span, and census tests for the GF(2) symplectic layer."""

import random

import pytest

from qpolar import (
    DimensionMismatch,
    Subspace,
    SymplecticVector,
    ZeroVectorError,
    all_points,
    is_totally_isotropic,
    perp_census,
    rref,
    span_points,
    sp_form,
)

SEED = 20260826


def rand_vector(rng, n, nonzero=False):
    while True:
        v = SymplecticVector(n, rng.randrange(1 << n), rng.randrange(1 << n))
        if not (nonzero and v.is_zero):
            return v


def test_vector_construction():
    v = SymplecticVector.from_bits("10", "11")
    assert (v.n, v.x, v.z) == (2, 0b10, 0b11)
    assert str(v) == "10|11"
    assert v.key == 0b1011
    assert v.pivot == 0  # leading coordinate is x_1
    assert not v.is_zero
    assert SymplecticVector(2, 0, 0).is_zero
    assert SymplecticVector(2, 0, 0).pivot is None


def test_vector_validation():
    with pytest.raises(DimensionMismatch):
        SymplecticVector(0, 0, 0)
    with pytest.raises(DimensionMismatch):
        SymplecticVector(13, 0, 0)
    with pytest.raises(ValueError):
        SymplecticVector(2, 4, 0)
    with pytest.raises(DimensionMismatch):
        SymplecticVector.from_bits("1", "10")
    with pytest.raises(DimensionMismatch):
        SymplecticVector.from_bits("", "")


def test_vector_xor():
    x = SymplecticVector(1, 1, 0)
    y = SymplecticVector(1, 1, 1)
    assert x ^ y == SymplecticVector(1, 0, 1)
    with pytest.raises(DimensionMismatch):
        x ^ SymplecticVector(2, 1, 0)


@pytest.mark.parametrize("n,count", [(1, 3), (2, 15), (3, 63), (4, 255)])
def test_all_points_count_and_order(n, count):
    pts = list(all_points(n))
    assert len(pts) == count
    assert all(not p.is_zero for p in pts)
    keys = [p.key for p in pts]
    assert keys == sorted(keys) and len(set(keys)) == count


def test_sp_form_goldens():
    x = SymplecticVector(1, 1, 0)
    y = SymplecticVector(1, 1, 1)
    z = SymplecticVector(1, 0, 1)
    assert sp_form(x, x) == 0
    assert sp_form(x, z) == 1
    assert sp_form(x, y) == 1
    assert sp_form(y, z) == 1
    xx = SymplecticVector(2, 0b11, 0)
    zz = SymplecticVector(2, 0, 0b11)
    assert sp_form(xx, zz) == 0  # two sign flips cancel
    with pytest.raises(DimensionMismatch):
        sp_form(x, xx)


def test_form_alternating():
    for n in (1, 2, 3):
        for p in all_points(n):
            assert sp_form(p, p) == 0
    rng = random.Random(SEED)
    for n in (4, 5):
        for _ in range(500):
            v = rand_vector(rng, n)
            assert sp_form(v, v) == 0


def test_form_symmetric_in_characteristic_two():
    rng = random.Random(SEED)
    for n in (1, 2, 3, 4, 5):
        for _ in range(300):
            u, v = rand_vector(rng, n), rand_vector(rng, n)
            assert sp_form(u, v) == sp_form(v, u)


def test_form_bilinear():
    rng = random.Random(SEED)
    for n in (1, 2, 3, 4, 5):
        for _ in range(300):
            u, v, w = (rand_vector(rng, n) for _ in range(3))
            assert sp_form(u ^ w, v) == sp_form(u, v) ^ sp_form(w, v)


def test_form_nondegenerate():
    for n in (1, 2, 3):
        for p in all_points(n):
            assert any(sp_form(p, q) == 1 for q in all_points(n))


def test_rref_goldens():
    x = SymplecticVector(1, 1, 0)
    y = SymplecticVector(1, 1, 1)
    z = SymplecticVector(1, 0, 1)
    assert rref([x]).basis == (x,)
    # {X, Y} spans the whole plane; canonical basis is {X, Z}
    assert rref([y, x]).basis == (x, z)
    assert rref([x, x]).basis == (x,)
    assert rref([SymplecticVector(2, 0, 0)]).rank == 0
    assert rref([], n_qubits=2).rank == 0
    with pytest.raises(DimensionMismatch):
        rref([])
    with pytest.raises(DimensionMismatch):
        rref([x, SymplecticVector(2, 1, 0)])


def test_rref_idempotent_and_shuffle_invariant():
    rng = random.Random(SEED)
    for n in (1, 2, 3, 4):
        for _ in range(60):
            batch = [rand_vector(rng, n) for _ in range(rng.randrange(1, 2 * n + 2))]
            s = rref(batch, n_qubits=n)
            assert rref(s.basis, n_qubits=n) == s
            shuffled = batch[:]
            rng.shuffle(shuffled)
            s2 = rref(shuffled, n_qubits=n)
            assert s2 == s
            assert span_points(s2) == span_points(s)


def test_span_points_size():
    rng = random.Random(SEED)
    for n in (1, 2, 3, 4):
        for _ in range(40):
            s = rref([rand_vector(rng, n) for _ in range(n + 1)], n_qubits=n)
            assert len(span_points(s)) == (1 << s.rank) - 1


def test_contains_agrees_with_span():
    rng = random.Random(SEED)
    for n in (2, 3):
        for _ in range(20):
            s = rref([rand_vector(rng, n) for _ in range(n)], n_qubits=n)
            members = span_points(s)
            assert s.contains(SymplecticVector(n, 0, 0))
            for key in range(1, 1 << (2 * n)):
                v = SymplecticVector(n, key >> n, key & ((1 << n) - 1))
                assert s.contains(v) == (v in members)


def test_subspace_rejects_non_canonical_basis():
    y = SymplecticVector(1, 1, 1)
    x = SymplecticVector(1, 1, 0)
    z = SymplecticVector(1, 0, 1)
    with pytest.raises(ValueError):
        Subspace(1, (y, x))  # pivots collide
    with pytest.raises(ValueError):
        Subspace(1, (y, z))  # pivot of z appears in y: not reduced
    with pytest.raises(ValueError):
        Subspace(1, (SymplecticVector(1, 0, 0),))
    with pytest.raises(DimensionMismatch):
        Subspace(1, (SymplecticVector(2, 1, 0),))


def test_is_totally_isotropic():
    for n in (1, 2):
        for p in all_points(n):
            assert is_totally_isotropic(rref([p]))
    xi = SymplecticVector(2, 0b10, 0)
    ix = SymplecticVector(2, 0b01, 0)
    assert is_totally_isotropic(rref([xi, ix]))
    x = SymplecticVector(1, 1, 0)
    z = SymplecticVector(1, 0, 1)
    assert not is_totally_isotropic(rref([x, z]))


@pytest.mark.parametrize("n,census", [(1, (0, 2)), (2, (6, 8)), (3, (30, 32))])
def test_perp_census(n, census):
    for p in all_points(n):
        assert perp_census(p) == census


def test_perp_census_rejects_zero():
    with pytest.raises(ZeroVectorError):
        perp_census(SymplecticVector(2, 0, 0))


def test_perpendicular_iff_line_is_isotropic():
    # at order two, "joined by a totally isotropic line" and "form
    # vanishes" pick out the same pairs
    for n in (1, 2, 3):
        pts = list(all_points(n))
        for i, p in enumerate(pts):
            for q in pts[i + 1:]:
                line = rref([p, q, p ^ q])
                assert line.rank == 2
                assert len(span_points(line)) == 3
                assert (sp_form(p, q) == 0) == is_totally_isotropic(line)
