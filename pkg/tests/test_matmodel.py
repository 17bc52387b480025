from fractions import Fraction

import random

import pytest

from nilorb import partitions
from nilorb.matmodel import (
    RankOneElement,
    SymplecticSpace,
    fiber,
    kk_rank_at,
    mu,
    product_cover_degree,
)

F = Fraction


def test_form_is_invertible_antisymmetric():
    for n in (1, 2, 3):
        sp = SymplecticSpace(n)
        m = sp.form()
        d = sp.dim
        assert all(m[i][j] == -m[j][i] for i in range(d) for j in range(d))
        from nilorb import linalg
        assert linalg.rank(m) == d


def test_mu_lands_in_sp_random():
    rng = random.Random(2)
    for _ in range(30):
        n = rng.randint(1, 3)
        sp = SymplecticSpace(n)
        v = [F(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(2 * n)]
        e = mu(sp, v)
        rows = e.rows()
        assert sp.in_sp(rows)
        # square zero is asserted inside mu; spot-check the defining formula
        u = [F(rng.randint(-3, 3)) for _ in range(2 * n)]
        xu = [sum(rows[i][j] * u[j] for j in range(2 * n)) for i in range(2 * n)]
        om = sp.omega(tuple(e.v), tuple(u))
        assert xu == [om * c for c in e.v]


def test_mu_scales_quadratically():
    sp = SymplecticSpace(2)
    v = (F(1), F(-2), F(3), F(5))
    lam = F(3, 2)
    scaled = mu(sp, tuple(lam * c for c in v))
    base = mu(sp, v)
    assert scaled.matrix == tuple(
        tuple(lam * lam * x for x in row) for row in base.matrix
    )


def test_mu_zero():
    sp = SymplecticSpace(2)
    e = mu(sp, (0, 0, 0, 0))
    assert all(x == 0 for row in e.matrix for x in row)


def test_jordan_type_is_minimal_orbit_partition():
    for n in (1, 2, 3):
        sp = SymplecticSpace(n)
        v = tuple(F(i + 1) for i in range(2 * n))
        assert mu(sp, v).jordan_type() == partitions.minimal_orbit("C", n).partition


def test_fiber_is_sign_pair():
    sp = SymplecticSpace(2)
    v = (F(2), F(-1), F(3), F(1, 2))
    e = mu(sp, v)
    sols = fiber(sp, e)
    assert set(sols) == {v, tuple(-c for c in v)}


def test_fiber_of_zero_rejected():
    sp = SymplecticSpace(1)
    z = mu(sp, (0, 0))
    with pytest.raises(ValueError):
        fiber(sp, z)


def test_product_cover_degrees():
    assert product_cover_degree([1]) == 1
    assert product_cover_degree([1, 1]) == 2
    assert product_cover_degree([1, 2, 1]) == 4
    assert product_cover_degree([2, 2]) == 2


def test_kk_rank_equals_orbit_dim():
    for n in (1, 2, 3):
        sp = SymplecticSpace(n)
        v = tuple(F(i + 1) for i in range(2 * n))
        assert kk_rank_at(sp, v) == 2 * n
        assert kk_rank_at(sp, v) == partitions.orbit_dim(
            partitions.minimal_orbit("C", n))


def test_kk_rank_scale_invariant():
    sp = SymplecticSpace(2)
    v = (F(3), F(-1), F(2), F(5))
    w = tuple(F(7) * c for c in v)
    assert kk_rank_at(sp, v) == kk_rank_at(sp, w)


def test_kk_rank_zero_vector_rejected():
    with pytest.raises(ValueError):
        kk_rank_at(SymplecticSpace(1), (0, 0))


def test_sp_basis_dimension():
    for n in (1, 2, 3):
        sp = SymplecticSpace(n)
        basis = sp.sp_basis()
        assert len(basis) == n * (2 * n + 1)
        assert all(sp.in_sp(b) for b in basis)
