import numpy as np
import pytest

from szgroup import linalg as la
from szgroup.errors import FlagIntersectionFailed, NotConjugate
from szgroup.groupcore import GenSet, make_rng
from szgroup.recognize import recognize_standard
from szgroup.standardize import (
    conj_to_triangular, conjugate_to_standard, diagonal_adjust, find_ovoid_point, stabilizer_gens,
)
from szgroup.suzuki import P_INF, P_ZERO, ovoid_contains

from conftest import conjugate_copy, ctx_for, sp4_gens


def _std_after(ctx, gs, g):
    F = ctx.F
    gi = la.mat_inv(F, g)
    return [la.conj(F, h, g, gi) for h in gs.gens]


def test_find_ovoid_point_standard(ctx8, rng):
    gs = GenSet(ctx8.F, ctx8.std_gens)
    for _ in range(20):
        assert ovoid_contains(ctx8.F, find_ovoid_point(gs, rng))


def test_find_ovoid_point_conjugated(ctx32, rng):
    F = ctx32.F
    gs, x = conjugate_copy(ctx32, rng)
    xi = la.mat_inv(F, x)
    for _ in range(100):
        P = find_ovoid_point(gs, rng)
        assert ovoid_contains(F, la.point_image(F, P, xi))


def test_triangular_standard(ctx8, rng):
    F = ctx8.F
    gs = GenSet(F, ctx8.std_gens)
    YP = stabilizer_gens(gs, P_INF, rng)
    YQ = stabilizer_gens(gs, P_ZERO, rng)
    k = conj_to_triangular(gs, YP, YQ)
    assert np.array_equal(k, np.diag(np.diagonal(k)))


def test_triangular_conjugate(ctx8, rng):
    F = ctx8.F
    gs, _ = conjugate_copy(ctx8, rng)
    P = find_ovoid_point(gs, rng)
    Q = P
    while Q == P:
        Q = find_ovoid_point(gs, rng)
    YP = stabilizer_gens(gs, P, rng)
    YQ = stabilizer_gens(gs, Q, rng)
    k = conj_to_triangular(gs, YP, YQ)
    ki = la.mat_inv(F, k)
    for y in YP:
        assert not np.any(np.triu(la.conj(F, y, k, ki), 1))
    for y in YQ:
        assert not np.any(np.tril(la.conj(F, y, k, ki), -1))
    with pytest.raises(FlagIntersectionFailed):
        conj_to_triangular(gs, YP, YP)


def test_y_recovery_identity(F8):
    t, u = F8.t, F8.u
    for y in range(1, F8.q):
        assert F8.pow(F8.pow(y, 1 - u), t + 2) == y


def test_diagonal_adjust(ctx8, rng):
    F = ctx8.F
    gs = GenSet(F, ctx8.std_gens)
    e = diagonal_adjust(gs, rng, ctx8)
    assert recognize_standard(_std_after(ctx8, gs, e), ctx8)
    for _ in range(10):
        d = np.diag([F.random(rng, nonzero=True) for _ in range(4)])
        di = la.mat_inv(F, d)
        gd = GenSet(F, [la.conj(F, g, d, di) for g in ctx8.std_gens])
        e = diagonal_adjust(gd, rng, ctx8)
        assert recognize_standard(_std_after(ctx8, gd, e), ctx8)


def test_standard_input(ctx8, rng):
    gs = GenSet(ctx8.F, ctx8.std_gens)
    g = conjugate_to_standard(gs, rng, ctx8)
    assert recognize_standard(_std_after(ctx8, gs, g), ctx8)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_random_conjugates(m):
    ctx = ctx_for(m)
    rng = make_rng(40 + m)
    for _ in range(5):
        gs, _ = conjugate_copy(ctx, rng)
        g = conjugate_to_standard(gs, rng, ctx)
        assert recognize_standard(_std_after(ctx, gs, g), ctx)


def test_symplectic_input_rejected(ctx8, rng):
    gs = GenSet(ctx8.F, sp4_gens(ctx8.F))
    with pytest.raises(NotConjugate):
        conjugate_to_standard(gs, rng, ctx8)
