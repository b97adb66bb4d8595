import numpy as np
import pytest
from hypothesis import settings

from szgroup import linalg as la
from szgroup.field import make_field
from szgroup.groupcore import GenSet, make_rng
from szgroup.suzuki import SuzukiCtx

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def F8():
    return make_field(1)


@pytest.fixture(scope="session")
def F32():
    return make_field(2)


@pytest.fixture(scope="session")
def F128():
    return make_field(3)


_CTX = {}


def ctx_for(m):
    if m not in _CTX:
        _CTX[m] = SuzukiCtx(make_field(m))
    return _CTX[m]


@pytest.fixture(scope="session")
def ctx8():
    return ctx_for(1)


@pytest.fixture(scope="session")
def ctx32():
    return ctx_for(2)


@pytest.fixture(scope="session")
def ctx128():
    return ctx_for(3)


@pytest.fixture
def rng():
    return make_rng(12345)


def random_invertible(F, rng, d=4):
    while True:
        x = np.array([[F.random(rng) for _ in range(d)] for _ in range(d)], dtype=np.int64)
        if la.det(F, x):
            return x


def conjugate_copy(ctx, rng, mats=None):
    """(GenSet of a random GL(4,q)-conjugate, x) with gens = std^x."""
    F = ctx.F
    x = random_invertible(F, rng)
    xi = la.mat_inv(F, x)
    mats = ctx.std_gens if mats is None else mats
    return GenSet(F, [la.conj(F, g, x, xi) for g in mats]), x


def sp4_gens(F):
    """Generators of Sp(4, q) for the form J: Sz(q) and a symplectic transvection."""
    ctx = SuzukiCtx(F)
    # x -> x + B(x, e1) e1, B(x, y) = x J y^T
    tv = la.identity(4).copy()
    tv[3, 0] = 1
    assert ctx.is_symplectic(tv)
    return list(ctx.std_gens) + [tv]
