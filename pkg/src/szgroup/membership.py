"""Constructive membership in the standard copy of Sz(q).

Preprocessing finds F_2-bases ("standard generators") for the unipotent
radicals of the stabilisers of P_inf and P_0.  Any element of either
stabiliser can then be row reduced to a diagonal matrix M'(lambda) by
solving two small F_2-linear systems, and a diagonal matrix is reached as a
conjugate of a commutator of two unipotent elements with the right trace.
"""
import numpy as np

from . import linalg as la
from .errors import BadPoint, NotInStabilizer, NotMember, RetryLimitExceeded
from .groupcore import Elt, GenSet
from .stabmap import find_mapping_element, random_stabilizer_element
from .suzuki import P_INF, P_ZERO, SuzukiCtx, ovoid_contains, ovoid_coords



def _tconj(g):
    # T is a permutation matrix and an involution, so g^T is a reindexing
    return np.asarray(g)[::-1, ::-1]


def _bits_solve(F, basis, value):
    """Coefficients in GF(2) of value in the F_2-basis `basis` of F_q."""
    n = F.n
    A = np.array([[(b >> k) & 1 for b in basis] for k in range(n)], dtype=np.uint8)
    rhs = np.array([(value >> k) & 1 for k in range(n)], dtype=np.uint8)
    # Gaussian elimination over GF(2)
    M = np.concatenate([A, rhs[:, None]], axis=1)
    piv_cols = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, n) if M[i, c]), None)
        if p is None:
            continue
        M[[r, p]] = M[[p, r]]
        for i in range(n):
            if i != r and M[i, c]:
                M[i] ^= M[r]
        piv_cols.append(c)
        r += 1
    if r < n:
        raise AssertionError("field values do not form an F_2-basis")
    x = np.zeros(n, dtype=np.uint8)
    for i, c in enumerate(piv_cols):
        x[c] = M[i, n]
    return x


def f2_rank(F, vals) -> int:
    rows = [v for v in vals]
    rank = 0
    for k in reversed(range(F.n)):
        piv = next((i for i, v in enumerate(rows) if (v >> k) & 1), None)
        if piv is None:
            continue
        pv = rows.pop(piv)
        rows = [v ^ pv if (v >> k) & 1 else v for v in rows]
        rank += 1
    return rank


class UnipotentBasis:
    """Standard generators of O_2 of a point stabiliser.

    ``top`` are S(a_i, x_i) and ``centre`` are S(0, b_i), read after
    conjugating by T when the stabilised point is P_0.
    """

    def __init__(self, F, top, centre, flip: bool):
        self.F = F
        self.top = top
        self.centre = centre
        self.flip = flip
        view = [_tconj(e.mat) if flip else e.mat for e in top]
        self.a = [F.div(int(v[1, 0]), int(v[1, 1])) for v in view]
        cview = [_tconj(e.mat) if flip else e.mat for e in centre]
        self.b = [F.div(int(v[2, 0]), int(v[2, 2])) for v in cview]
        if f2_rank(F, self.a) != F.n or f2_rank(F, self.b) != F.n:
            raise AssertionError("unipotent generators do not give F_2-bases")

    def view(self, g):
        return _tconj(g) if self.flip else np.asarray(g)

    def _product(self, gs, elts, coefs):
        chosen = [e for e, c in zip(elts, coefs) if c]
        if not chosen:
            return gs.identity()
        return gs.prod(*chosen)

    def top_part(self, gs, a):
        return self._product(gs, self.top, _bits_solve(self.F, self.a, a))

    def centre_part(self, gs, b):
        return self._product(gs, self.centre, _bits_solve(self.F, self.b, b))

    def random(self, gs, rng) -> Elt:
        n = self.F.n
        bits = rng.integers(0, 2, size=2 * n)
        elts = self.top + self.centre
        return self._product(gs, elts, bits)


class MembershipData:
    def __init__(self, ctx, gs, L: UnipotentBasis, U: UnipotentBasis, a1: Elt, b1: Elt, c1, c2):
        self.ctx = ctx
        self.gs = gs
        self.L = L
        self.U = U
        self.a1 = a1
        self.b1 = b1
        self.c1 = c1
        self.c2 = c2

    @property
    def a_values(self):
        return self.L.a

    @property
    def b_values(self):
        return self.L.b


def _full_degree_torus(F, mat) -> bool:
    """Triangular element whose diagonal is M'(lambda) with lambda of full degree."""
    d = np.diagonal(mat)
    lam = int(d[1])
    if lam in (0, 1):
        return False
    if not la.is_identity(la.mat_pow(F, mat, F.q - 1)):
        return False
    return not any(F.in_subfield(lam, e) for e in range(1, F.n) if F.n % e == 0)


def _basis_from(gs, a1: Elt, c1: Elt, n: int) -> tuple:
    top, centre = [], []
    c1sq = gs.pow(c1, 2)
    for i in range(1, n + 1):
        ai = gs.pow(a1, i)
        top.append(gs.conj(c1, ai))
        centre.append(gs.conj(c1sq, ai))
    return top, centre


def _stab_pair(gs, point, rng):
    F = gs.F
    for _ in range(gs.cap(4)):
        a1 = random_stabilizer_element(gs, point, rng)
        if _full_degree_torus(F, a1.mat):
            break
    else:
        raise RetryLimitExceeded("no full-degree torus element in the stabiliser")
    for _ in range(gs.cap(2)):
        a2 = random_stabilizer_element(gs, point, rng)
        c1 = gs.comm(a1, a2)
        if not la.is_identity(la.mat_pow(F, c1.mat, 2)):
            return a1, c1
    raise RetryLimitExceeded("no commutator of order 4")


def _swap_element(gs, L: UnipotentBasis, rng) -> Elt:
    """w with P_inf w = P_0 and P_0 w = P_inf."""
    F = gs.F
    w1 = find_mapping_element(gs, P_INF, P_ZERO, rng)
    R = la.point_image(F, P_INF, la.mat_inv(F, w1.mat))
    # f in O_2(G_{P_inf}) taking P_0 to R, so f w1 swaps the two points
    f = gs.inv(_to_P0(gs, L, R))
    w = gs.mul(f, w1)
    if la.point_image(F, P_ZERO, w.mat) != P_INF:
        raise AssertionError("swap element does not swap the points")
    return w


def preprocess(gs: GenSet, rng, ctx: SuzukiCtx | None = None) -> MembershipData:
    """Standard generators for O_2(G_{P_inf}) and O_2(G_{P_0}) as tracked elements.

    Random elements come from a short-word source so that only the draws
    that end up in the data contribute to its programs; the P_0 side is the
    conjugate of the P_inf side by an element swapping the two points.
    """
    F = gs.F
    if ctx is None:
        ctx = SuzukiCtx(F)
    n = F.n
    view = gs.with_short_words(rng)
    a1, c1 = _stab_pair(view, P_INF, rng)
    top, centre = _basis_from(gs, a1, c1, n)
    L = UnipotentBasis(F, top, centre, flip=False)
    w = _swap_element(view, L, rng)
    U = UnipotentBasis(F, [gs.conj(e, w) for e in top], [gs.conj(e, w) for e in centre], flip=True)
    return MembershipData(ctx, gs, L, U, a1, gs.conj(a1, w), c1, gs.conj(c1, w))


# row reductions

def _in_stab_view(F, v) -> bool:
    # lower triangular view fixes P_inf
    return not np.any(np.triu(v, 1))


def row_reduce(data: MembershipData, g, side: str = "right", stab: str = "Pinf"):
    """h in O_2 of the stabiliser with g h (side='right') or h g (side='left') diagonal."""
    gs = data.gs
    F = gs.F
    B = data.L if stab.lower() in ("pinf", "p_inf") else data.U
    g = np.asarray(g)
    if side == "left":
        h = row_reduce(data, la.mat_inv(F, g), "right", stab)
        return gs.inv(h)
    v = B.view(g)
    if not _in_stab_view(F, v):
        raise NotInStabilizer("element does not fix the point")
    a = F.div(int(v[1, 0]), int(v[1, 1]))
    h1 = B.top_part(gs, a)
    v1 = la.matmul(F, v, B.view(h1.mat))
    if int(v1[1, 0]):
        raise NotInStabilizer("inconsistent first reduction")
    b = F.div(int(v1[2, 0]), int(v1[2, 2]))
    h2 = B.centre_part(gs, b)
    h = gs.mul(h1, h2)
    res = la.matmul(F, v, B.view(h.mat))
    if np.any(res != np.diag(np.diagonal(res))):
        raise NotInStabilizer("element is not in the stabiliser of the standard copy")
    return h


def _to_P0(gs, B: UnipotentBasis, P) -> Elt:
    F = gs.F
    P = la.normalize(F, P)
    if B.flip:
        P = la.normalize(F, P[::-1])
    if not ovoid_contains(F, P) or P == P_INF:
        raise BadPoint("point is not on the ovoid or is the fixed point")
    a, b = ovoid_coords(F, P)
    h1 = B.top_part(gs, a)
    v1 = B.view(h1.mat)
    h2 = B.centre_part(gs, b ^ int(v1[2, 0]))
    return gs.mul(h1, h2)


def point_to_P0(P, data: MembershipData, stab: str = "Pinf") -> Elt:
    """g in O_2(G_{P_inf}) with P g = P_0 (for stab='P0', g in O_2(G_{P_0}) with P g = P_inf)."""
    B = data.L if stab.lower() in ("pinf", "p_inf") else data.U
    return _to_P0(data.gs, B, P)


def point_to_Pinf(P, data: MembershipData) -> Elt:
    return point_to_P0(P, data, stab="P0")


def centre_element(data: MembershipData, c: int, stab: str = "Pinf") -> Elt:
    """S(0, c) (or its T-conjugate for stab='P0') from the centre basis."""
    B = data.L if stab.lower() in ("pinf", "p_inf") else data.U
    return B.centre_part(data.gs, c)


def bruhat_random(data: MembershipData, rng) -> Elt:
    """Uniform element of the big cell O_2(G_{P_inf}) <a1> O_2(G_{P_0})."""
    gs = data.gs
    F = gs.F
    f = data.L.random(gs, rng)
    k = int(rng.integers(0, F.q - 1))
    u = data.U.random(gs, rng)
    return gs.prod(f, gs.pow(data.a1, k), u)


def _ovoid_eigenpoints(F, M):
    pts = []
    for mu in la.eigenvalues(F, M):
        E = la.eigenspace(F, M, mu)
        if E.dim == 1:
            P = la.normalize(F, E.basis[0])
            if ovoid_contains(F, P):
                pts.append(P)
    return pts


def element_to_slp(data: MembershipData, gs: GenSet, g, rng, return_elt: bool = False):
    """An SLP in the generators of gs evaluating to g."""
    F = gs.F
    ctx = data.ctx
    g = np.asarray(g, dtype=np.int64)
    if not ctx.is_member(g):
        raise NotMember("matrix is not in the standard copy")
    t = F.t
    for _ in range(gs.cap(2)):
        r = bruhat_random(data, rng)
        gr = la.matmul(F, g, r.mat)
        pts = [P for P in _ovoid_eigenpoints(F, gr) if P != P_INF]
        if not pts:
            continue
        Q = pts[0]
        z1 = point_to_P0(Q, data)
        y = la.conj(F, gr, z1.mat)
        z2 = row_reduce(data, y, "right", "P0")
        D = la.matmul(F, y, z2.mat)
        lam = int(D[1, 1])
        # gr = (D z2^-1)^(z1^-1)
        if lam == 1:
            k = gs.identity()
        else:
            x = la.trace(D)
            c = F.sqrt(F.sqrt(F.pow(x, t)))
            A = centre_element(data, c, "Pinf")
            Bm = centre_element(data, 1, "P0")
            h = gs.comm(A, Bm)
            if la.trace(h.mat) != x:
                raise AssertionError("commutator has the wrong trace")
            fixed = _ovoid_eigenpoints(F, h.mat)
            if len(fixed) != 2:
                continue
            P1, P2 = fixed
            if P1 == P_INF:
                P1, P2 = P2, P1
            a = point_to_P0(P1, data)
            P2a = la.point_image(F, P2, a.mat)
            b = point_to_Pinf(P2a, data)
            k = gs.conj(h, gs.mul(a, b))
            if np.array_equal(k.mat, D):
                pass
            elif np.array_equal(la.mat_inv(F, k.mat), D):
                k = gs.inv(k)
            else:
                raise AssertionError("conjugated commutator is not the torus element")
        w = gs.mul(gs.conj(gs.mul(k, gs.inv(z2)), gs.inv(z1)), gs.inv(r))
        if not np.array_equal(w.mat, g):
            raise AssertionError("membership word does not reproduce the element")
        return w if return_elt else gs.slp(w)
    raise RetryLimitExceeded("element_to_slp")
