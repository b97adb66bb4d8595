"""Sylow and maximal subgroups of Sz(q): generation and conjugation.

Everything is done in the standard copy through an effective isomorphism
x -> x^y and mapped back; conjugating elements come with SLPs in the user
generators via constructive membership.

Sylow p-subgroups fall into three cases.  For p = 2 and p | q-1 the
subgroups fix one or two ovoid points and the row reductions move those
points to P_inf and P_0.  For p | q^2+1 they are cyclic, fixed point free
and irreducible; a conjugator is found as a similarity in GL(4, q),
corrected first into Sp(4, q) by a norm equation and then into Sz(q) by a
discrete log in F_{q^4}.
"""
from dataclasses import dataclass, field
import math
import re

import numpy as np

from . import linalg as la
from . import membership as mb
from .errors import BadClass, BadPrime, NotConjugate, RetryLimitExceeded, UnsupportedInput
from .field import (discrete_log, ext4, factor_int, make_field,
                    roots_univariate, solve_norm_equation)
from .field.ntheory import is_probable_prime
from .groupcore import Elt, GenSet
from .standardize import conjugate_to_standard
from .suzuki import P_INF, P_ZERO, SuzukiCtx, make_Mprime, make_S, make_T


@dataclass
class SubgroupGens:
    """Generators in the user's group with SLPs, plus their standard-copy images."""
    elements: list
    slps: list
    std: list = field(repr=False)


_CLASS_RE = re.compile(r"^(PointStab|TorusNormaliser|B1|B2|SubfieldSz)(?:\((\d+)\)|:(\d+))?$")


@dataclass(frozen=True)
class SubgroupClass:
    tag: str
    e: int | None = None

    @classmethod
    def parse(cls, text: str) -> "SubgroupClass":
        mt = _CLASS_RE.match(text.strip())
        if not mt:
            raise BadClass(f"unknown class {text!r}")
        tag = mt.group(1)
        e = mt.group(2) or mt.group(3)
        if (tag == "SubfieldSz") != (e is not None):
            raise BadClass(f"bad class {text!r}")
        return cls(tag, int(e) if e else None)

    def __str__(self):
        return f"{self.tag}({self.e})" if self.e else self.tag


class Recognition:
    """Effective isomorphism from a degree-4 copy of Sz(q) to the standard copy."""

    def __init__(self, gs: GenSet, rng, ctx: SuzukiCtx | None = None):
        F = gs.F
        self.F = F
        self.ctx = ctx or SuzukiCtx(F)
        self.user = gs
        if all(self.ctx.is_member(g) for g in gs.gens):
            self.y = la.identity(4)
        else:
            self.y = conjugate_to_standard(gs, rng, self.ctx)
        self.yinv = la.mat_inv(F, self.y)
        self.H = GenSet(F, [self.to_std(g) for g in gs.gens], retry_mult=gs.retry_mult)
        self.data = mb.preprocess(self.H, rng, self.ctx)
        self._T = None

    def to_std(self, x):
        return la.conj(self.F, np.asarray(x), self.y, self.yinv)

    def from_std(self, m):
        return la.matmul(self.F, la.matmul(self.F, self.y, m), self.yinv)

    def tracked(self, m, rng) -> Elt:
        return mb.element_to_slp(self.data, self.H, m, rng, return_elt=True)

    def T(self, rng) -> Elt:
        if self._T is None:
            self._T = self.tracked(make_T(), rng)
        return self._T

    def result(self, elts) -> SubgroupGens:
        return SubgroupGens([self.from_std(e.mat) for e in elts], [self.H.slp(e) for e in elts],
                            [e.mat for e in elts])

    def output(self, c: Elt):
        return self.from_std(c.mat), self.H.slp(c)


def as_recognition(X, rng) -> Recognition:
    """Accept either a Recognition or the user's GenSet."""
    return X if isinstance(X, Recognition) else Recognition(X, rng)


# helpers in the standard copy

def _exact_order(F, M, n: int) -> bool:
    if not la.is_identity(la.mat_pow(F, M, n)):
        return False
    return all(not la.is_identity(la.mat_pow(F, M, n // p)) for p, _ in factor_int(n))


def _ppart(n: int, p: int) -> int:
    pe = 1
    while n % (pe * p) == 0:
        pe *= p
    return pe


def _cyclic_modulus(F, p: int) -> int:
    q, t = F.q, F.t
    for r in (q - 1, q + t + 1, q - t + 1):
        if r % p == 0:
            return r
    raise BadPrime(f"{p} does not divide |Sz({q})|")


def _common_point(F, mats):
    v = la.common_eigenvector(F, list(mats))
    if v is None:
        raise NotConjugate("subgroup fixes no point")
    return la.normalize(F, v)


def _max_order_element(F, mats):
    best, n = None, 0
    for g in mats:
        k = la.matrix_order(F, g)
        if k > n:
            best, n = g, k
    return best, n


def _to_inf(rec: Recognition, P, rng) -> Elt:
    """Tracked element taking P to P_inf."""
    if P == P_INF:
        return rec.H.identity()
    if P == P_ZERO:
        return rec.T(rng)
    return mb.point_to_Pinf(P, rec.data)


def _to_inf_zero(rec: Recognition, P, Q, rng) -> Elt:
    """Tracked element taking P to P_inf and Q to P_0 (P != Q)."""
    F = rec.F
    if P == P_ZERO:
        P, Q = Q, P
        swap = True
    else:
        swap = False
    a1 = _to_inf(rec, P, rng)
    Qa = la.point_image(F, Q, a1.mat)
    a2 = rec.H.identity() if Qa == P_ZERO else mb.point_to_P0(Qa, rec.data)
    a = rec.H.mul(a1, a2)
    if swap:
        a = rec.H.mul(a, rec.T(rng))
    return a


# Sylow subgroups

def _check_prime(F, p: int):
    order = F.q ** 2 * (F.q ** 2 + 1) * (F.q - 1)
    if p < 2 or not is_probable_prime(p) or order % p:
        raise BadPrime(f"{p} is not a prime divisor of |Sz({F.q})|")


def sylow_generate(rec: Recognition, p: int, rng) -> SubgroupGens:
    rec = as_recognition(rec, rng)
    F = rec.F
    _check_prime(F, p)
    H = rec.H
    if p == 2:
        h = mb.bruhat_random(rec.data, rng)
        L = rec.data.L
        return rec.result([H.conj(x, h) for x in L.top + L.centre])
    r = _cyclic_modulus(F, p)
    pe = _ppart(r, p)
    for _ in range(H.cap(8)):
        g = H.random(rng)
        c = H.pow(g, r // pe)
        if _exact_order(F, c.mat, pe):
            return rec.result([c])
    raise RetryLimitExceeded("sylow_generate")


def field_coords(K4, z) -> list:
    """F_q-coordinates of an element of the quadratic tower F_{q^4}."""
    (a, b), (c, d) = z
    return [a, b, c, d]


def _embed4(K4, a):
    return K4.embed(K4.base.embed(a))


class CentraliserField:
    """theta: F_q[c] -> F_{q^4} for c acting irreducibly, with its inverse."""

    def __init__(self, F, c, rng=None):
        self.F = F
        self.K4 = K4 = ext4(F)
        self.c = np.asarray(c)
        chi = la.char_poly(F, self.c)
        roots = roots_univariate(K4, [_embed4(K4, a) for a in chi], rng)
        if not roots:
            raise NotConjugate("characteristic polynomial has no roots in F_{q^4}")
        self.alpha = roots[0]
        v = np.zeros(4, dtype=np.int64)
        v[0] = 1
        rows = [v]
        for _ in range(3):
            rows.append(la.vecmat(F, rows[-1], self.c))
        self.cyc = np.array(rows)
        self.cyc_inv = la.mat_inv(F, self.cyc)
        self.powers = [la.identity(4)]
        for _ in range(3):
            self.powers.append(la.matmul(F, self.powers[-1], self.c))
        apow = [K4.one]
        for _ in range(3):
            apow.append(K4.mul(apow[-1], self.alpha))
        self.apow = apow
        B = np.array([field_coords(K4, x) for x in apow], dtype=np.int64)
        self.basis_inv = la.mat_inv(F, B)

    def theta(self, a):
        F, K4 = self.F, self.K4
        coefs = la.vecmat(F, la.vecmat(F, self.cyc[0], np.asarray(a)), self.cyc_inv)
        z = K4.zero
        for k, x in zip(coefs, self.apow):
            if k:
                z = K4.add(z, K4.mul(_embed4(K4, int(k)), x))
        return z

    def theta_inv(self, z):
        F = self.F
        coefs = la.vecmat(F, np.array(field_coords(self.K4, z), dtype=np.int64), self.basis_inv)
        out = la.zeros(4)
        for k, P in zip(coefs, self.powers):
            if k:
                out ^= la.scal(F, int(k), P)
        return out


def matched_power(F, g, h, rng=None) -> int:
    """k with g^k conjugate to h in Sz(q), for g, h of equal order dividing q +- t + 1."""
    K4 = ext4(F)
    r1 = roots_univariate(K4, [_embed4(K4, a) for a in la.char_poly(F, g)], rng)
    r2 = roots_univariate(K4, [_embed4(K4, a) for a in la.char_poly(F, h)], rng)
    if not r1 or not r2:
        raise NotConjugate("elements do not act irreducibly")
    k = discrete_log(K4, r1[0], r2[0])
    if k is None:
        raise NotConjugate("orders of the elements differ")
    return k


def similarity(F, a, b):
    """g with a^g = b for a, b with the same irreducible characteristic polynomial."""
    def cyclic_basis(M):
        v = np.zeros(4, dtype=np.int64)
        v[0] = 1
        rows = [v]
        for _ in range(3):
            rows.append(la.vecmat(F, rows[-1], M))
        return np.array(rows)
    Ba, Bb = cyclic_basis(a), cyclic_basis(b)
    return la.matmul(F, la.mat_inv(F, Ba), Bb)


def hard_conjugator(F, ctx: SuzukiCtx, hy, hz, rng=None):
    """(k, g): g in Sz(q) with (hy^k)^g = hz, for hy, hz of equal order dividing q^2 + 1."""
    J = ctx.J
    k = matched_power(F, hy, hz, rng)
    c = la.mat_pow(F, hy, k)
    g1 = similarity(F, c, hz)
    cf = CentraliserField(F, c, rng)
    K4 = cf.K4
    g1inv = la.mat_inv(F, g1)
    # t1 = J g1^-T J^-1 g1^-1, and J^-1 = J
    t1 = la.matmul(F, la.matmul(F, la.matmul(F, J, la.transpose(g1inv)), J), g1inv)
    y = solve_norm_equation(K4, cf.theta(t1))
    g2 = cf.theta_inv(y)
    g21 = la.matmul(F, g2, g1)
    if not ctx.is_symplectic(g21):
        raise AssertionError("norm correction did not give a symplectic conjugator")
    q = F.q
    N = q * q + 1
    w = _order_element(K4, F, N, rng)
    W = cf.theta_inv(w)
    kk = discrete_log(K4, w, cf.theta(ctx.psi(W)))
    t2m = la.matmul(F, g21, la.mat_inv(F, ctx.psi(g21)))
    n = discrete_log(K4, w, cf.theta(t2m))
    if kk is None or n is None:
        raise AssertionError("Psi does not preserve the centraliser torus")
    i = _solve_congruence(kk - 1, n, N)
    g = la.matmul(F, la.mat_pow(F, W, i), g21)
    if not ctx.is_member(g) or not np.array_equal(la.conj(F, c, g), hz):
        raise AssertionError("hard conjugation failed")
    return k, g


def _order_element(K4, F, N, rng):
    """An element of order exactly N of F_{q^4}^*."""
    rng = rng if rng is not None else np.random.default_rng(0)
    total = F.q ** 4 - 1
    facs = [p for p, _ in factor_int(N)]
    while True:
        z = K4.random(rng, nonzero=True)
        w = K4.pow(z, total // N)
        if all(K4.pow(w, N // p) != K4.one for p in facs):
            return w


def _solve_congruence(a: int, b: int, n: int) -> int:
    """i with a i = b (mod n)."""
    a %= n
    b %= n
    d = math.gcd(a, n)
    if b % d:
        raise NotConjugate("no solution of the congruence")
    a, b, m = a // d, b // d, n // d
    if m == 1:
        return 0
    return (b * pow(a, -1, m)) % m


def sylow_conjugate(rec: Recognition, Y, Z, p: int, rng):
    """(c, slp) with <Y>^c = <Z> for Sylow p-subgroups given in the user's group."""
    rec = as_recognition(rec, rng)
    F = rec.F
    _check_prime(F, p)
    Ys = [rec.to_std(g) for g in Y]
    Zs = [rec.to_std(g) for g in Z]
    H = rec.H
    if p == 2:
        a = _to_inf(rec, _common_point(F, Ys), rng)
        b = _to_inf(rec, _common_point(F, Zs), rng)
        return rec.output(H.mul(a, H.inv(b)))
    r = _cyclic_modulus(F, p)
    hy, ny = _max_order_element(F, Ys)
    hz, nz = _max_order_element(F, Zs)
    if ny != nz or ny == 1:
        raise NotConjugate("generating sets have different maximal orders")
    if r == F.q - 1:
        Py = mb._ovoid_eigenpoints(F, hy)
        Pz = mb._ovoid_eigenpoints(F, hz)
        if len(Py) != 2 or len(Pz) != 2:
            raise NotConjugate("torus element does not fix two points")
        a = _to_inf_zero(rec, Py[0], Py[1], rng)
        b = _to_inf_zero(rec, Pz[0], Pz[1], rng)
        return rec.output(H.mul(a, H.inv(b)))
    _, g = hard_conjugator(F, rec.ctx, hy, hz, rng)
    return rec.output(rec.tracked(g, rng))


# maximal subgroups

def _torus_order_class(F, cls):
    return F.q + F.t + 1 if cls.tag == "B1" else F.q - F.t + 1


def maximal_generate(rec: Recognition, cls, rng) -> SubgroupGens:
    rec = as_recognition(rec, rng)
    F = rec.F
    if isinstance(cls, str):
        cls = SubgroupClass.parse(cls)
    t = F.t
    S10 = make_S(F, 1, 0)
    Ml = make_Mprime(F, F.lam)
    T = make_T()
    if cls.tag == "PointStab":
        mats = [Ml, S10]
    elif cls.tag == "TorusNormaliser":
        mats = [Ml, T]
    elif cls.tag == "SubfieldSz":
        e = cls.e
        if not (1 < e < F.n and F.n % e == 0):
            raise BadClass(f"no subfield of degree {e} giving a maximal Sz(2^{e})")
        s = 1 << e
        mats = [T, S10, la.mat_pow(F, Ml, (F.q - 1) // (s - 1))]
    elif cls.tag in ("B1", "B2"):
        mats = _hard_maximal(rec, _torus_order_class(F, cls), rng)
    else:
        raise BadClass(str(cls))
    return rec.result([rec.tracked(m, rng) for m in mats])


def trace_zero_partner(F, lam: int):
    """(a, [b1, b2]) with Tr(T S(a, b)^2) = lam and Tr(T S(a, b)) = 0 candidates."""
    t = F.t
    # Tr(T S(a,b)^2) = a^(t+2), so a is the (t+2)-th root of lam
    a = F.pow(lam, pow(t + 2, -1, F.q - 1))
    at1 = F.pow(a, t + 1)
    s = 0
    for i in range(1, F.m + 2):
        s ^= F.pow(a, -(1 << i))
    b1 = F.mul(at1, s)
    return a, [b1, b1 ^ at1]


def _hard_maximal(rec: Recognition, r: int, rng):
    F = rec.F
    H = rec.H
    T = make_T()
    for _ in range(H.cap(24)):
        g = H.random(rng).mat
        if not _exact_order(F, g, r):
            continue
        lam = la.trace(g)
        if lam == 0:
            continue
        a, bs = trace_zero_partner(F, lam)
        for b in bs:
            Sab = make_S(F, a, b)
            x = la.matmul(F, T, Sab)
            if la.matrix_order(F, x) == 4 and la.matrix_order(F, la.matmul(F, T, la.matmul(F, Sab, Sab))) == r:
                return [T, Sab]
    raise RetryLimitExceeded("no generators for the torus normaliser")


def maximal_conjugate(rec: Recognition, Y, Z, cls, rng):
    """(c, slp) with <Y>^c = <Z> for two conjugates of a maximal subgroup."""
    rec = as_recognition(rec, rng)
    F = rec.F
    if isinstance(cls, str):
        cls = SubgroupClass.parse(cls)
    Ys = [rec.to_std(g) for g in Y]
    Zs = [rec.to_std(g) for g in Z]
    H = rec.H
    if cls.tag == "PointStab":
        a = _to_inf(rec, _common_point(F, Ys), rng)
        b = _to_inf(rec, _common_point(F, Zs), rng)
        return rec.output(H.mul(a, H.inv(b)))
    if cls.tag == "TorusNormaliser":
        hy = _derived_element(F, Ys, F.q - 1, rng, rec.H.retry_mult)
        hz = _derived_element(F, Zs, F.q - 1, rng, rec.H.retry_mult)
        Py = mb._ovoid_eigenpoints(F, hy)
        Pz = mb._ovoid_eigenpoints(F, hz)
        a = _to_inf_zero(rec, Py[0], Py[1], rng)
        b = _to_inf_zero(rec, Pz[0], Pz[1], rng)
        return rec.output(H.mul(a, H.inv(b)))
    if cls.tag in ("B1", "B2"):
        r = _torus_order_class(F, cls)
        hy = _derived_element(F, Ys, r, rng, rec.H.retry_mult)
        hz = _derived_element(F, Zs, r, rng, rec.H.retry_mult)
        _, g = hard_conjugator(F, rec.ctx, hy, hz, rng)
        return rec.output(rec.tracked(g, rng))
    if cls.tag == "SubfieldSz":
        emb = SubfieldEmbedding(F, cls.e)
        Yu = [np.asarray(g) for g in Y]
        Zu = [np.asarray(g) for g in Z]
        if emb.contains(Yu + Zu):
            g = rec.to_std(subfield_conjugator(F, Yu, Zu, emb, rng))
        elif emb.contains(Ys + Zs):
            g = subfield_conjugator(F, Ys, Zs, emb, rng)
        else:
            raise UnsupportedInput("subgroup generators are not written over the subfield")
        if not rec.ctx.is_member(g):
            raise NotConjugate("subfield copies are not conjugate in the group")
        return rec.output(rec.tracked(g, rng))
    raise BadClass(str(cls))


def _derived_element(F, mats, r: int, rng, retry_mult):
    """An element of exact order r from the commutator subgroup of <mats>."""
    gs = GenSet(F, mats, retry_mult=retry_mult)
    for _ in range(gs.cap(8)):
        x = gs.random(rng).mat
        y = gs.random(rng).mat
        c = la.comm(F, x, y)
        if _exact_order(F, c, r):
            return c
    raise RetryLimitExceeded("no element of the required order in the derived group")


# subfield copies

class SubfieldEmbedding:
    """F_s = GF(2^e) inside F_q, matching the built-in polynomial of degree e."""

    def __init__(self, F, e: int):
        if e % 2 == 0 or F.n % e:
            raise BadClass(f"GF(2^{e}) is not the field of a Suzuki subgroup of Sz({F.q})")
        self.F = F
        self.Fs = Fs = make_field((e - 1) // 2)
        poly = [(Fs.poly >> i) & 1 for i in range(e + 1)]
        roots = roots_univariate(F, poly)
        self.root = roots[0]
        self.up = [0] * Fs.q
        for k in range(Fs.q):
            v, x, p = 0, k, 1
            while x:
                if x & 1:
                    v ^= p
                p = F.mul(p, self.root)
                x >>= 1
            self.up[k] = v
        self.down = {v: k for k, v in enumerate(self.up)}

    def contains(self, mats) -> bool:
        return all(int(x) in self.down for M in mats for x in np.asarray(M).ravel())

    def restrict(self, M) -> np.ndarray:
        try:
            return np.vectorize(lambda x: self.down[int(x)], otypes=[np.int64])(np.asarray(M))
        except KeyError:
            raise UnsupportedInput("matrix entry outside the subfield") from None

    def extend(self, M) -> np.ndarray:
        return np.vectorize(lambda x: self.up[int(x)], otypes=[np.int64])(np.asarray(M))


def subfield_conjugator(F, Ys, Zs, emb: SubfieldEmbedding, rng):
    """det-1 rescaling of c in GL(4, q) with <Ys>^c = <Zs>, copies of Sz(s) written over F_s."""
    Fs = emb.Fs
    cs = SuzukiCtx(Fs)
    cY = conjugate_to_standard(GenSet(Fs, [emb.restrict(g) for g in Ys]), rng, cs)
    cZ = conjugate_to_standard(GenSet(Fs, [emb.restrict(g) for g in Zs]), rng, cs)
    c = la.matmul(F, emb.extend(cY), la.mat_inv(F, emb.extend(cZ)))
    # the normaliser of Sz(s) is Sz(s) times scalars, and det of a scalar is its 4th power
    gamma = F.sqrt(F.sqrt(la.det(F, c)))
    return la.scal(F, F.inv(gamma), c)
