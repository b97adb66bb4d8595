import numpy as np
import pytest

from szgroup import linalg as la
from szgroup.errors import BadPoint, NotInStabilizer, NotMember
from szgroup.groupcore import GenSet, make_rng
from szgroup.membership import (
    element_to_slp, f2_rank, point_to_P0, point_to_Pinf, preprocess, row_reduce,
)
from szgroup.suzuki import P_INF, P_ZERO, make_Mprime, make_S, make_T, ovoid_point

from conftest import conjugate_copy, ctx_for


@pytest.fixture(scope="module")
def data8():
    ctx = ctx_for(1)
    gs = GenSet(ctx.F, ctx.std_gens)
    return gs, preprocess(gs, make_rng(3), ctx)


def test_preprocess_shape(data8):
    gs, data = data8
    F = gs.F
    for B, P in ((data.L, P_INF), (data.U, P_ZERO)):
        els = B.top + B.centre
        assert len(els) == 6
        assert f2_rank(F, B.a) == 3 and f2_rank(F, B.b) == 3
        for e in els:
            assert la.point_image(F, P, e.mat) == P
            assert la.matrix_order(F, e.mat) in (2, 4)
            assert np.array_equal(gs.slp(e).evaluate(F, gs.gens), e.mat)


def test_row_reduce_examples(data8):
    gs, data = data8
    F = gs.F
    M = make_Mprime(F, F.lam)
    h = row_reduce(data, la.matmul(F, M, make_S(F, 1, 0)))
    assert np.array_equal(h.mat, make_S(F, 1, 1))
    assert la.is_identity(row_reduce(data, M).mat)
    with pytest.raises(NotInStabilizer):
        row_reduce(data, make_T())


def test_row_reduce_sides(data8, rng):
    gs, data = data8
    F = gs.F
    for _ in range(20):
        a, b = F.random(rng), F.random(rng)
        mu = F.random(rng, nonzero=True)
        g = la.matmul(F, make_S(F, a, b), make_Mprime(F, mu))
        h = row_reduce(data, g, "right")
        D = la.matmul(F, g, h.mat)
        assert np.array_equal(D, np.diag(np.diagonal(D)))
        h = row_reduce(data, g, "left")
        D = la.matmul(F, h.mat, g)
        assert np.array_equal(D, np.diag(np.diagonal(D)))
        gT = la.conj(F, g, make_T())
        h = row_reduce(data, gT, "right", "P0")
        D = la.matmul(F, gT, h.mat)
        assert np.array_equal(D, np.diag(np.diagonal(D)))


def test_point_to_P0(data8, rng):
    gs, data = data8
    F = gs.F
    assert la.is_identity(point_to_P0(P_ZERO, data).mat)
    P = ovoid_point(F, 1, 0)
    assert la.point_image(F, P, point_to_P0(P, data).mat) == P_ZERO
    with pytest.raises(BadPoint):
        point_to_P0(P_INF, data)
    for _ in range(20):
        P = ovoid_point(F, F.random(rng), F.random(rng))
        Q = la.normalize(F, P)
        if Q != P_ZERO:
            assert la.point_image(F, Q, point_to_Pinf(Q, data).mat) == P_INF


def test_examples(data8, rng):
    gs, data = data8
    F = gs.F
    S10 = make_S(F, 1, 0)
    w = element_to_slp(data, gs, S10, rng)
    assert np.array_equal(w.evaluate(F, gs.gens), S10)
    with pytest.raises(NotMember):
        element_to_slp(data, gs, np.diag([F.lam, 1, 1, F.inv(F.lam)]), rng)
    assert la.is_identity(element_to_slp(data, gs, la.identity(4), rng).evaluate(F, gs.gens))


@pytest.mark.parametrize("m", [1, 2, 3])
def test_round_trip(m):
    ctx = ctx_for(m)
    F = ctx.F
    rng = make_rng(100 + m)
    gs = GenSet(F, ctx.std_gens)
    data = preprocess(gs, rng, ctx)
    src = GenSet(F, ctx.std_gens)
    for _ in range(40):
        g = src.random(rng).mat
        w = element_to_slp(data, gs, g, rng)
        assert np.array_equal(w.evaluate(F, ctx.std_gens), g)


def test_nonstandard_generators(ctx32, rng):
    F = ctx32.F
    src = GenSet(F, ctx32.std_gens)
    gens = [src.random(rng).mat for _ in range(3)]
    gs = GenSet(F, gens)
    data = preprocess(gs, rng, ctx32)
    for _ in range(10):
        g = src.random(rng).mat
        assert np.array_equal(element_to_slp(data, gs, g, rng).evaluate(F, gens), g)


def test_structured_elements(data8, rng):
    gs, data = data8
    F = gs.F
    for g in (make_T(), make_S(F, 0, 1), make_Mprime(F, F.lam), la.matmul(F, make_T(), make_S(F, 3, 5))):
        assert np.array_equal(element_to_slp(data, gs, g, rng).evaluate(F, gs.gens), g)
