"""Non-constructive recognition of Sz(q) and of its GL(4, q)-conjugates."""
import numpy as np

from . import linalg as la
from .suzuki import SuzukiCtx


def _proper_subfield_degrees(F):
    return [e for e in range(1, F.n) if F.n % e == 0]


def trace_field_degree(F, gens) -> int:
    """Degree over GF(2) of the field generated by traces of a spanning set of words."""
    traces = [la.trace(w) for w in la.enveloping_words(F, gens)]
    for e in _proper_subfield_degrees(F):
        if all(F.in_subfield(x, e) for x in traces):
            return e
    return F.n


def _commutator_test(F, gens) -> bool:
    """Some pairwise commutator c != 1 and generator x with [c, c^x] != 1."""
    cs = []
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            c = la.comm(F, gens[i], gens[j])
            if not la.is_identity(c):
                cs.append(c)
    for c in cs:
        for x in gens:
            if not la.is_identity(la.comm(F, c, la.conj(F, c, x))):
                return True
    return False


def recognize_standard(X, ctx: SuzukiCtx) -> bool:
    """Decide whether ⟨X⟩ is the standard copy."""
    F = ctx.F
    X = [np.asarray(g, dtype=np.int64) for g in X]
    if not X or any(g.shape != (4, 4) for g in X):
        return False
    if not all(ctx.is_member(g) for g in X):
        return False
    if la.enveloping_dim(F, X) != 16:
        return False
    if trace_field_degree(F, X) != F.n:
        return False
    return _commutator_test(F, X)


def symplectic_basis(F, form) -> np.ndarray:
    """Y with Y form Y^T = J (J the antidiagonal form)."""
    B = lambda x, y: int(la.vecmat(F, la.vecmat(F, x, form), y[:, None])[0])
    E = la.identity(4)
    v1 = E[next(i for i in range(4) if np.any(form[i]))]
    w = next(E[i] for i in range(4) if B(v1, E[i]))
    v4 = la.scal(F, F.inv(B(v1, w)), w)

    def proj(x):
        return x ^ la.scal(F, B(x, v4), v1) ^ la.scal(F, B(x, v1), v4)

    comp = [proj(E[i]) for i in range(4)]
    v2 = next(c for c in comp if np.any(c))
    w = next(c for c in comp if B(v2, c))
    v3 = la.scal(F, F.inv(B(v2, w)), w)
    return np.array([v1, v2, v3, v4])


def to_symplectic_copy(F, X, form):
    """Conjugate X so the preserved form becomes J; returns (X', Y) with X' = Y X Y^-1."""
    Y = symplectic_basis(F, form)
    Yi = la.mat_inv(F, Y)
    return [la.matmul(F, la.matmul(F, Y, g), Yi) for g in X], Y


def recognize_conjugate(X, ctx: SuzukiCtx) -> bool:
    """Decide whether ⟨X⟩^h = Sz(q) for some h in GL(4, q)."""
    F = ctx.F
    X = [np.asarray(g, dtype=np.int64) for g in X]
    if not X or any(g.shape != (4, 4) for g in X):
        return False
    if any(la.det(F, g) != 1 for g in X):
        return False
    if la.enveloping_dim(F, X) != 16:
        return False
    form = la.preserved_symplectic_form(F, X)
    if form is None:
        return False
    Xs, _ = to_symplectic_copy(F, X, form)
    if not all(ctx.is_symplectic(g) for g in Xs):
        return False
    twisted = [ctx.psi(g) for g in Xs]
    if not any(la.det(F, H) for H in la.hom_space(F, Xs, twisted)):
        return False
    if trace_field_degree(F, X) != F.n:
        return False
    return _commutator_test(F, X)
