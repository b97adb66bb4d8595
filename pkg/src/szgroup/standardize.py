"""Conjugating a GL(4, q)-copy of Sz(q) to the standard copy.

The stabilisers of two points of the translated ovoid are lower and upper
triangular in a common basis, which pins the conjugator down to a diagonal
matrix; the diagonal is then read off the preserved form and two points.
"""
import logging

import numpy as np

from . import linalg as la
from .errors import (FlagIntersectionFailed, NotConjugate, NotSuzukiDiagonalizable,
                     RetryLimitExceeded)
from .groupcore import GenSet
from .recognize import recognize_conjugate
from .stabmap import random_stabilizer_element
from .suzuki import SuzukiCtx

log = logging.getLogger(__name__)


def _mats(X):
    if isinstance(X, GenSet):
        return X.gens
    return [np.asarray(g, dtype=np.int64) for g in X]


def _torus_draw(gs: GenSet, rng):
    F = gs.F
    for _ in range(gs.cap(2)):
        g = gs.random(rng)
        if la.is_identity(g.mat) or not la.is_identity(la.mat_pow(F, g.mat, F.q - 1)):
            continue
        try:
            return la.diagonalise(F, g.mat)
        except NotSuzukiDiagonalizable:
            continue
    raise RetryLimitExceeded("no element of order dividing q-1")


def find_ovoid_point(gs: GenSet, rng) -> tuple:
    """A point of the set on which <gs> acts doubly transitively."""
    _, x = _torus_draw(gs, rng)
    return la.normalize(gs.F, x[0])


def _full_degree(F, mat) -> bool:
    try:
        D, _ = la.diagonalise(F, mat)
    except NotSuzukiDiagonalizable:
        return False
    mu = int(D[1, 1])
    return not any(F.in_subfield(mu, e) for e in range(1, F.n) if F.n % e == 0)


def stabilizer_gens(gs: GenSet, P, rng) -> list:
    """[a1, c] generating a subgroup of G_P that properly contains O_2(G_P)."""
    F = gs.F
    for _ in range(gs.cap(4)):
        a1 = random_stabilizer_element(gs, P, rng)
        if _full_degree(F, a1.mat):
            break
    else:
        raise RetryLimitExceeded("no full-degree torus element in the stabiliser")
    for _ in range(gs.cap(2)):
        a2 = random_stabilizer_element(gs, P, rng)
        c = la.comm(F, a1.mat, a2.mat)
        if not la.is_identity(la.mat_pow(F, c, 2)):
            return [a1.mat, c]
    raise RetryLimitExceeded("no commutator of order 4")


def conj_to_triangular(gs, YP, YQ) -> np.ndarray:
    """k with <YP>^k lower and <YQ>^k upper triangular."""
    YP = _mats(YP)
    YQ = _mats(YQ)
    F = (gs.F if isinstance(gs, GenSet) else gs)
    VP = la.invariant_chain(F, YP)
    VQ = la.invariant_chain(F, YQ)
    Us = [VP[0], la.intersect(F, VP[1], VQ[2]), la.intersect(F, VP[2], VQ[1]), VQ[0]]
    if any(U.dim != 1 for U in Us):
        raise FlagIntersectionFailed("flag intersections are not lines")
    kinv = np.array([U.basis[0] for U in Us], dtype=np.int64)
    try:
        return la.mat_inv(F, kinv)
    except Exception:
        raise FlagIntersectionFailed("flag lines do not span the space") from None


def diagonal_adjust(gs: GenSet, rng, ctx: SuzukiCtx | None = None) -> np.ndarray:
    """Diagonal e with <gs>^e the standard copy, given that some diagonal works."""
    F = gs.F
    ctx = ctx or SuzukiCtx(F)
    t, u = F.t, F.u
    K = la.preserved_symplectic_form(F, gs.gens, rng)
    if K is None:
        raise NotConjugate("no preserved symplectic form")
    k14, k23 = int(K[0, 3]), int(K[1, 2])
    if not (k14 and k23):
        raise NotConjugate("preserved form is not antidiagonal")

    def row(P):
        p1, p2, p3, _ = P
        return F.pow(p2, t), F.pow(p3, t + 2), F.mul(p1, k14) ^ F.mul(F.mul(p2, p3), k23)

    for _ in range(gs.cap(2)):
        P = find_ovoid_point(gs, rng)
        Q = find_ovoid_point(gs, rng)
        if P[3] == 0 or Q[3] == 0:
            continue
        P = la.normalize(F, np.array(P[::-1]))[::-1]
        Q = la.normalize(F, np.array(Q[::-1]))[::-1]
        a1, b1, c1 = row(P)
        a2, b2, c2 = row(Q)
        det = F.mul(a1, b2) ^ F.mul(a2, b1)
        if det == 0:
            continue
        x = F.div(F.mul(c1, b2) ^ F.mul(c2, b1), det)
        y = F.div(F.mul(a1, c2) ^ F.mul(a2, c1), det)
        if x == 0 or y == 0:
            continue
        e2 = F.sqrt(F.pow(x, t))
        e3 = F.pow(y, 1 - u)
        e = np.diag(np.array([k14, e2, e3, 1], dtype=np.int64))
        if all(ctx.is_member(la.conj(F, g, e)) for g in gs.gens):
            return e
    raise RetryLimitExceeded("diagonal_adjust")


def conjugate_to_standard(gs: GenSet, rng, ctx: SuzukiCtx | None = None,
                          check: bool = True) -> np.ndarray:
    """g with <gs>^g equal to the standard copy."""
    F = gs.F
    ctx = ctx or SuzukiCtx(F)
    if check and not recognize_conjugate(gs.gens, ctx):
        raise NotConjugate("generators do not generate a conjugate of Sz(q)")
    for _ in range(gs.cap(1)):
        P = find_ovoid_point(gs, rng)
        Q = find_ovoid_point(gs, rng)
        if P == Q:
            continue
        YP = stabilizer_gens(gs, P, rng)
        YQ = stabilizer_gens(gs, Q, rng)
        try:
            k = conj_to_triangular(F, YP, YQ)
        except FlagIntersectionFailed:
            log.info("flag intersection failed, resampling points")
            continue
        kinv = la.mat_inv(F, k)
        Gk = GenSet(F, [la.conj(F, g, k, kinv) for g in gs.gens], retry_mult=gs.retry_mult)
        e = diagonal_adjust(Gk, rng, ctx)
        return la.matmul(F, k, e)
    raise RetryLimitExceeded("conjugate_to_standard")
