"""The standard copy of Sz(q) inside Sp(4, q).

Generators are S(1,0), M'(lambda) and the antidiagonal involution T.  The
group is the fixed-point set in Sp(4, q) of an automorphism Psi, built here
from the exterior square: the 4-dimensional section U/<f> of the exterior
square, Frobenius twisted by x -> x^(2^m), is isomorphic to the natural
module, and pinning that isomorphism on the generators gives Psi.
"""
from functools import lru_cache
from itertools import combinations

import numpy as np

from . import linalg as la
from .errors import NotSymplectic, ZeroElement
from .field import make_field

PAIRS = list(combinations(range(4), 2))  # 12,13,14,23,24,34
SECTION = [0, 1, 4, 5]  # e12, e13, e24, e34


def make_S(F, a: int, b: int) -> np.ndarray:
    t = F.t
    mul = F.mul
    at = F.pow(a, t)
    bt = F.pow(b, t)
    return np.array([
        [1, 0, 0, 0],
        [a, 1, 0, 0],
        [b, at, 1, 0],
        [mul(mul(a, a), at) ^ mul(a, b) ^ bt, mul(a, at) ^ b, a, 1],
    ], dtype=np.int64)


def make_Mprime(F, mu: int) -> np.ndarray:
    if mu == 0:
        raise ZeroElement("M'(0) is undefined")
    t = F.t
    return np.diag(np.array([F.pow(mu, t + 1), mu, F.inv(mu), F.pow(mu, -(t + 1))], dtype=np.int64))


def make_T() -> np.ndarray:
    return np.fliplr(np.eye(4, dtype=np.int64)).copy()


def make_J() -> np.ndarray:
    return make_T()


P_INF = (1, 0, 0, 0)
P_ZERO = (0, 0, 0, 1)


def ovoid_point(F, a: int, b: int) -> tuple:
    x = F.mul(a, b) ^ F.mul(F.pow(a, F.t + 2), 1) ^ F.pow(b, F.t)
    return (x, b, a, 1)


def ovoid_contains(F, P) -> bool:
    P = tuple(int(x) for x in P)
    if P[3] == 0:
        return la.normalize(F, P) == P_INF
    inv = F.inv(P[3])
    x, b, a = (F.mul(c, inv) for c in P[:3])
    return ovoid_point(F, a, b)[0] == x


def ovoid_coords(F, P):
    """(a, b) with P = ovoid_point(a, b), for P != P_inf on the ovoid."""
    inv = F.inv(int(P[3]))
    return F.mul(int(P[2]), inv), F.mul(int(P[1]), inv)


def ovoid(F) -> list:
    pts = [P_INF]
    for a in range(F.q):
        for b in range(F.q):
            pts.append(ovoid_point(F, a, b))
    return pts


def exterior_square(F, g) -> np.ndarray:
    """Action on e_i ^ e_j (i < j) of the row-vector action of g."""
    g = np.asarray(g)
    rows = np.array([i for i, _ in PAIRS])
    rows2 = np.array([j for _, j in PAIRS])
    # minor[(i,j),(k,l)] = g_ik g_jl + g_il g_jk
    A = g[rows][:, rows]
    B = g[rows2][:, rows2]
    C = g[rows][:, rows2]
    D = g[rows2][:, rows]
    return F.vmul(A, B) ^ F.vmul(C, D)


class SuzukiCtx:
    """The standard copy Sz(q) with its form, generators and Psi."""

    def __init__(self, F):
        self.F = F
        self.q = F.q
        self.t = F.t
        self.J = make_J()
        self.T = make_T()
        self.S10 = make_S(F, 1, 0)
        self.M_lam = make_Mprime(F, F.lam)
        self.std_gens = [self.S10, self.M_lam, self.T]
        self.order = self.q ** 2 * (self.q ** 2 + 1) * (self.q - 1)
        self._build_psi()

    def _section(self, g):
        return exterior_square(self.F, g)[np.ix_(SECTION, SECTION)]

    def _twisted(self, g):
        return self.F.vpow(self._section(g), self.F.u)

    def _build_psi(self):
        F = self.F
        gens = self.std_gens
        rho = [self._twisted(g) for g in gens]
        sols = la.hom_space(F, rho, gens)
        C = next((X for X in sols if la.det(F, X)), None)
        if C is None:
            raise AssertionError("twisted section is not isomorphic to the natural module")
        self.psi_basis = C
        self._psi_basis_inv = la.mat_inv(F, C)
        for g in gens:
            if not np.array_equal(self.psi(g), g):
                raise AssertionError("Psi does not fix the standard generators")

    def is_symplectic(self, g) -> bool:
        F = self.F
        return np.array_equal(la.matmul(F, la.matmul(F, g, self.J), la.transpose(g)), self.J)

    def psi(self, g, check: bool = True):
        if check and not self.is_symplectic(g):
            raise NotSymplectic("g does not preserve J")
        return la.conj(self.F, self._twisted(g), self.psi_basis, self._psi_basis_inv)

    def is_member(self, g) -> bool:
        g = np.asarray(g)
        if g.shape != (4, 4):
            return False
        if la.det(self.F, g) != 1 or not self.is_symplectic(g):
            return False
        return np.array_equal(self.psi(g, check=False), g)

    # convenience wrappers
    def S(self, a, b):
        return make_S(self.F, a, b)

    def Mp(self, mu):
        return make_Mprime(self.F, mu)

    def ovoid_point(self, a, b):
        return ovoid_point(self.F, a, b)

    def ovoid_contains(self, P):
        return ovoid_contains(self.F, P)


@lru_cache(maxsize=None)
def suzuki_ctx(m: int) -> SuzukiCtx:
    return SuzukiCtx(make_field(m))


def is_member(g, ctx: SuzukiCtx) -> bool:
    return ctx.is_member(g)


def psi(g, ctx: SuzukiCtx):
    return ctx.psi(g)
