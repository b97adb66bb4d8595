import numpy as np
import pytest
from hypothesis import given, strategies as st

from szgroup import linalg as la
from szgroup.errors import EvenOrder, IndexOutOfRange, ParseError, RetryLimitExceeded
from szgroup.groupcore import (
    SLP, GenSet, dihedral_conjugator, enumerate_group, formula_conjugator, group_order,
    make_rng, random_element, slp_evaluate,
)
from szgroup.suzuki import make_Mprime, make_S


def test_slp_examples(F8):
    S10 = make_S(F8, 1, 0)
    assert np.array_equal(slp_evaluate(SLP([("G", 0)]), [S10], F8), S10)
    assert np.array_equal(slp_evaluate(SLP([("G", 0), ("P", 0, -1)]), [S10], F8), make_S(F8, 1, 1))
    a, b = S10, make_Mprime(F8, F8.lam)
    w = SLP([("G", 0), ("G", 1), ("C", 0, 1)])
    assert np.array_equal(w.evaluate(F8, [a, b]), la.conj(F8, a, b))


def test_slp_bad_references():
    with pytest.raises(IndexOutOfRange):
        SLP([("G", 0), ("M", 0, 1)])
    with pytest.raises(IndexOutOfRange):
        slp_evaluate(SLP([("G", 3)]), [la.identity(4)], None)
    with pytest.raises(ParseError):
        SLP.from_text("G 0\nX 1 2")


slp_ops = st.lists(st.tuples(st.sampled_from("GMPC"), st.integers(0, 50), st.integers(-9, 50)),
                   min_size=1, max_size=30)


def _valid_slp(ops, ngens):
    out = []
    for op, i, j in ops:
        n = len(out)
        if op == "G" or n == 0:
            out.append(("G", i % ngens))
        elif op == "P":
            out.append(("P", i % n, j))
        else:
            out.append((op, i % n, abs(j) % n))
    return SLP(out)


@given(ops=slp_ops)
def test_slp_text_roundtrip(ops):
    w = _valid_slp(ops, 3)
    assert SLP.from_text(w.to_text()) == w


@given(ops=slp_ops)
def test_slp_commutes_with_conjugation(ops):
    # evaluating on conjugated generators conjugates the value
    from szgroup.field import make_field
    from szgroup.suzuki import SuzukiCtx
    F = make_field(1)
    ctx = SuzukiCtx(F)
    w = _valid_slp(ops, 3)
    x = ctx.T
    v = w.evaluate(F, ctx.std_gens)
    vx = w.evaluate(F, [la.conj(F, g, x) for g in ctx.std_gens])
    assert np.array_equal(la.conj(F, v, x), vx)


def test_builder_tracks_slps(ctx8, rng):
    gs = GenSet(ctx8.F, ctx8.std_gens)
    x = gs.random(rng)
    y = gs.random(rng)
    for e in (gs.mul(x, y), gs.inv(x), gs.pow(y, 5), gs.conj(x, y), gs.comm(x, y), gs.prod(x, y, x)):
        assert np.array_equal(gs.slp(e).evaluate(ctx8.F, ctx8.std_gens), e.mat)
    # deduplicated: building the same product twice adds nothing
    n = len(gs.builder.instr)
    gs.mul(x, y)
    assert len(gs.builder.instr) == n


def test_random_element(ctx8):
    F = ctx8.F
    gs = GenSet(F, [la.identity(4)])
    g, w = random_element(gs, make_rng(0))
    assert la.is_identity(g) and la.is_identity(w.evaluate(F, gs.gens))
    a = random_element(GenSet(F, ctx8.std_gens), make_rng(7))
    b = random_element(GenSet(F, ctx8.std_gens), make_rng(7))
    assert np.array_equal(a[0], b[0]) and a[1] == b[1]
    for _ in range(50):
        g, w = random_element(GenSet(F, ctx8.std_gens), make_rng(_))
        assert ctx8.is_member(g)
        assert np.array_equal(w.evaluate(F, ctx8.std_gens), g)


def test_short_words_source(ctx8, rng):
    gs = GenSet(ctx8.F, ctx8.std_gens)
    view = gs.with_short_words(rng)
    for _ in range(20):
        x = view.random(rng)
        assert ctx8.is_member(x.mat)
        assert np.array_equal(gs.slp(x).evaluate(ctx8.F, ctx8.std_gens), x.mat)


def test_dihedral_conjugator(ctx8, rng):
    F = ctx8.F
    gs = GenSet(F, ctx8.std_gens)
    z = make_S(F, 0, 1)
    from szgroup.membership import element_to_slp, preprocess
    data = preprocess(gs, rng, ctx8)
    a = element_to_slp(data, gs, z, rng, return_elt=True)
    assert la.is_identity(dihedral_conjugator(gs, a, a, rng).mat)
    for _ in range(10):
        x = gs.random(rng)
        b = gs.conj(a, x)
        g = dihedral_conjugator(gs, a, b, rng)
        assert np.array_equal(la.conj(F, a.mat, g.mat), b.mat)
        assert np.array_equal(gs.slp(g).evaluate(F, ctx8.std_gens), g.mat)


def test_dihedral_non_conjugate(ctx8, rng):
    F = ctx8.F
    gs = GenSet(F, ctx8.std_gens)
    from szgroup.membership import element_to_slp, preprocess
    data = preprocess(gs, rng, ctx8)
    a = element_to_slp(data, gs, make_S(F, 0, 1), rng, return_elt=True)
    b = element_to_slp(data, gs, make_S(F, 1, 0), rng, return_elt=True)
    gs.retry_mult = 1
    with pytest.raises(RetryLimitExceeded):
        dihedral_conjugator(gs, a, b, rng)


def test_formula_conjugator(ctx8, rng):
    F = ctx8.F
    a = make_Mprime(F, F.lam)
    b = la.conj(F, a, make_S(F, 1, 0))
    g = formula_conjugator(F, a, b)
    assert np.array_equal(g, la.mat_pow(F, la.matmul(F, b, a), 3))
    r = la.matmul(F, la.conj(F, a, g), la.mat_inv(F, b))
    assert np.array_equal(r, make_S(F, 0, int(r[2, 0])))
    # order 3
    c = np.array([[0, 1], [1, 1]], dtype=np.int64)
    assert la.matrix_order(F, c) == 3
    g = formula_conjugator(F, c, c)
    assert np.array_equal(g, la.matmul(F, c, c))
    assert np.array_equal(la.conj(F, c, g), c)
    with pytest.raises(EvenOrder):
        formula_conjugator(F, make_S(F, 1, 0), make_S(F, 1, 0))


def test_enumerate_small(F8):
    assert group_order(F8, [make_Mprime(F8, F8.lam)]) == 7
    assert group_order(F8, [make_S(F8, 1, 0)]) == 4
    els = enumerate_group(F8, [make_S(F8, 1, 0), make_S(F8, F8.lam, 0)])
    assert len({e.tobytes() for e in els}) == els.shape[0]


def test_enumerate_limit(ctx8):
    with pytest.raises(RetryLimitExceeded):
        group_order(ctx8.F, ctx8.std_gens, limit=1000)


def test_retry_cap():
    gs = GenSet(None, [la.identity(2)], retry_mult=0.01)
    assert gs.cap(3) == 1
    assert GenSet(None, [la.identity(2)], retry_mult=2).cap(3) == 6
