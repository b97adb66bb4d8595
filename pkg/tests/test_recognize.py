import numpy as np
import pytest

from szgroup import linalg as la
from szgroup.groupcore import make_rng
from szgroup.recognize import recognize_conjugate, recognize_standard, trace_field_degree
from szgroup.suzuki import make_Mprime, make_S, make_T
from szgroup.subgroups import SubfieldEmbedding, maximal_generate

from conftest import conjugate_copy, ctx_for, sp4_gens


def test_standard(ctx8, ctx32):
    assert recognize_standard(ctx8.std_gens, ctx8)
    assert recognize_standard(ctx32.std_gens, ctx32)


def test_reducible_subgroup(ctx8):
    F = ctx8.F
    assert not recognize_standard([make_S(F, 1, 0), make_Mprime(F, F.lam)], ctx8)


def test_symplectic_group_rejected(ctx8):
    X = sp4_gens(ctx8.F)
    assert not recognize_standard(X, ctx8)
    assert not recognize_conjugate(X, ctx8)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_conjugates_accepted(m):
    ctx = ctx_for(m)
    rng = make_rng(m)
    for _ in range(5):
        gs, _ = conjugate_copy(ctx, rng)
        assert recognize_conjugate(gs.gens, ctx)


def test_conjugate_not_standard(ctx8, rng):
    gs, x = conjugate_copy(ctx8, rng)
    assert not recognize_standard(gs.gens, ctx8)


def test_dihedral_conjugate_rejected(ctx8, rng):
    F = ctx8.F
    gs, _ = conjugate_copy(ctx8, rng, [make_Mprime(F, F.lam), make_T()])
    assert not recognize_conjugate(gs.gens, ctx8)


def test_subfield_copy_rejected():
    ctx = ctx_for(4)
    F = ctx.F
    emb = SubfieldEmbedding(F, 3)
    small = ctx_for(1)
    X = [emb.extend(g) for g in small.std_gens]
    assert all(ctx.is_member(g) for g in X)
    assert trace_field_degree(F, X) == 3
    assert not recognize_standard(X, ctx)
    assert not recognize_conjugate(X, ctx)


def test_bad_shapes(ctx8):
    assert not recognize_standard([], ctx8)
    assert not recognize_standard([la.identity(2)], ctx8)
