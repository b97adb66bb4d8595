"""Elements mapping one ovoid point to another, via torus double cosets.

Given P', Q' and g, we look for (alpha, beta) with

    P' M'(alpha) g M'(beta) = Q'   (projectively).

Writing K, L, M, N for the coordinates of P' M'(alpha) g, eliminating beta
and the scalar leaves four equations in alpha alone.  Every exponent that
occurs has the shape A*u + B with u = t/2, so a Laurent polynomial is kept as
a dict {(A, B): coeff}.  After suitable shifts only A = 2n (n = 0..4)
occurs, i.e. alpha^(nt) times a polynomial of small degree, and treating the
alpha^(nt) as unknowns gives a 4x4 linear system over F_q[alpha].  Cramer's
rule and the relation (alpha^t)^4 = alpha^(4t) yield one polynomial f whose
roots contain every admissible alpha.
"""
import logging

import numpy as np

from . import linalg as la
from .errors import ConjectureViolation, DegenerateCoordinates, RetryLimitExceeded
from .field import discrete_log, roots_univariate
from .groupcore import Elt, GenSet
from .suzuki import make_Mprime

log = logging.getLogger(__name__)

# instances where the coefficient determinant vanished identically
violation_count = 0

# exponents of alpha in P' M'(alpha): t+1, 1, -1, -t-1
_K_EXPS = [(2, 1), (0, 1), (0, -1), (-2, -1)]
# after the shifts alpha^(2t+2), alpha^(3t/2+2), alpha^(2t+3), alpha^(5t/2+2)
_SHIFTS = [(4, 2), (3, 2), (4, 3), (5, 2)]


# Laurent polynomials in alpha with exponents A*u + B

def _lmul(F, p, r):
    out = {}
    for (a1, b1), c1 in p.items():
        for (a2, b2), c2 in r.items():
            k = (a1 + a2, b1 + b2)
            out[k] = out.get(k, 0) ^ F.mul(c1, c2)
    return {k: v for k, v in out.items() if v}


def _ladd(p, r):
    out = dict(p)
    for k, v in r.items():
        out[k] = out.get(k, 0) ^ v
    return {k: v for k, v in out.items() if v}


def _lscale(F, p, c):
    return {k: F.mul(v, c) for k, v in p.items() if F.mul(v, c)}


def _frob_t(F, p):
    # (alpha^(Au+B))^t = alpha^(2Bu + A), since alpha^(2u^2) = alpha^q = alpha
    out = {}
    for (a, b), c in p.items():
        k = (2 * b, a)
        out[k] = out.get(k, 0) ^ F.pow(c, F.t)
    return {k: v for k, v in out.items() if v}


def _frob_u(F, p):
    # (alpha^(Au+B))^u = alpha^(Bu + A/2) for even A
    out = {}
    for (a, b), c in p.items():
        if a % 2:
            raise AssertionError("odd u-exponent under u-Frobenius")
        k = (b, a // 2)
        out[k] = out.get(k, 0) ^ F.pow(c, F.u)
    return {k: v for k, v in out.items() if v}


def _shift(p, s):
    return {(a + s[0], b + s[1]): c for (a, b), c in p.items()}


# dense polynomials as numpy arrays

def _pmul(F, a, b):
    if a.size == 0 or b.size == 0:
        return np.zeros(0, dtype=np.int64)
    prod = F.EXP[F.LOG[a][:, None] + F.LOG[b][None, :]]
    la_, lb = a.size, b.size
    Z = np.zeros((la_, la_ + lb - 1), dtype=np.int64)
    rows = np.arange(la_)[:, None]
    Z[rows, rows + np.arange(lb)[None, :]] = prod
    return _trim(np.bitwise_xor.reduce(Z, axis=0))


def _padd(a, b):
    if a.size < b.size:
        a, b = b, a
    out = a.copy()
    out[: b.size] ^= b
    return _trim(out)


def _trim(a):
    nz = np.nonzero(a)[0]
    return a[: nz[-1] + 1] if nz.size else a[:0]


def _det4(F, rows):
    """Determinant of a 4x4 matrix of polynomials (Laplace on rows 0,1 / 2,3)."""
    pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]

    def minor(r0, r1, c0, c1):
        return _padd(_pmul(F, rows[r0][c0], rows[r1][c1]), _pmul(F, rows[r0][c1], rows[r1][c0]))

    total = np.zeros(0, dtype=np.int64)
    for c0, c1 in pairs:
        rest = tuple(c for c in range(4) if c not in (c0, c1))
        total = _padd(total, _pmul(F, minor(0, 1, c0, c1), minor(2, 3, *rest)))
    return total


def _peval(F, f, x):
    r = 0
    for c in reversed(f.tolist()):
        r = F.mul(r, x) ^ c
    return r


class DoubleCosetEqn:
    __slots__ = ("Pp", "Qp", "g", "K", "L", "M", "N", "cs", "ds", "D", "f")

    def __init__(self, **kw):
        for k, v in kw.items():
            setattr(self, k, v)

    @property
    def degree(self) -> int:
        return len(self.f) - 1


def build_magic_poly(F, Pp, Qp, g) -> DoubleCosetEqn:
    """Set up the elimination polynomial f for P' M'(alpha) g M'(beta) = Q'."""
    Pp = [int(x) for x in Pp]
    r1, r2, r3, r4 = (int(x) for x in Qp)
    if 0 in (r1, r2, r3, r4):
        raise DegenerateCoordinates("target point has a zero coordinate")
    g = np.asarray(g)
    mul, pw = F.mul, F.pow
    t, u = F.t, F.u
    cols = []
    for j in range(4):
        p = {}
        for i, e in enumerate(_K_EXPS):
            c = mul(Pp[i], int(g[i, j]))
            if c:
                p[e] = c
        cols.append(p)
    K, L, M, N = cols
    Lu, Mu = _frob_u(F, L), _frob_u(F, M)
    Mt, Nt = _frob_t(F, M), _frob_t(F, N)
    E1 = _ladd(_lscale(F, _lmul(F, N, K), mul(r2, r3)), _lscale(F, _lmul(F, M, L), mul(r1, r4)))
    E2 = _ladd(_lscale(F, _lmul(F, L, Lu), mul(r1, pw(r3, u))),
               _lscale(F, _lmul(F, Mu, K), pw(r2, 1 + u)))
    E3 = _ladd(_lscale(F, _lmul(F, Nt, L), pw(r3, t + 1)),
               _lscale(F, _lmul(F, Mt, M), mul(r2, pw(r4, t))))
    E4 = _ladd(_lscale(F, _lmul(F, N, Lu), pw(r3, 1 + u)),
               _lscale(F, _lmul(F, M, Mu), mul(r4, pw(r2, u))))
    cs, ds = [], []
    for E, s in zip((E1, E2, E3, E4), _SHIFTS):
        E = _shift(E, s)
        groups = [dict() for _ in range(5)]
        for (a, b), c in E.items():
            if a % 2 or not 0 <= a <= 8 or b < 0:
                raise AssertionError(f"unexpected exponent {(a, b)}")
            groups[a // 2][b] = groups[a // 2].get(b, 0) ^ c
        polys = []
        for gr in groups:
            arr = np.zeros(max(gr, default=-1) + 1, dtype=np.int64)
            for b, c in gr.items():
                arr[b] = c
            polys.append(_trim(arr))
        ds.append(polys[0])
        cs.append(polys[1:])
    D = _det4(F, cs)
    if D.size == 0:
        raise ConjectureViolation("coefficient determinant vanishes identically")
    f = elimination_poly(F, cs, ds, D)
    return DoubleCosetEqn(Pp=tuple(Pp), Qp=(r1, r2, r3, r4), g=g, K=K, L=L, M=M, N=N,
                          cs=cs, ds=ds, D=D, f=f)


def elimination_poly(F, cs, ds, D):
    """A nonzero polynomial vanishing at every alpha that solves the system.

    With D_n the Cramer numerators, any solution satisfies
    D(alpha) alpha^(nt) = D_n(alpha) even where D(alpha) = 0, so each relation
    alpha^(it) alpha^(jt) = alpha^((i+j)t) gives a valid f.  The quadratic one
    (degree <= 30) is tried first, the quartic D1^4 = D^3 D4 last.
    """
    Dn = [None] + [_det4(F, [cs[k][:n] + [ds[k]] + cs[k][n + 1:] for k in range(4)])
                   for n in range(4)]
    cands = [
        lambda: _padd(_pmul(F, Dn[1], Dn[1]), _pmul(F, D, Dn[2])),
        lambda: _padd(_pmul(F, Dn[1], Dn[2]), _pmul(F, D, Dn[3])),
        lambda: _padd(_pmul(F, Dn[2], Dn[2]), _pmul(F, D, Dn[4])),
        lambda: _padd(_pmul(F, Dn[1], Dn[3]), _pmul(F, D, Dn[4])),
    ]
    for c in cands:
        f = c()
        if f.size:
            return f
    D1sq = _pmul(F, Dn[1], Dn[1])
    f = _padd(_pmul(F, D1sq, D1sq), _pmul(F, _pmul(F, _pmul(F, D, D), D), Dn[4]))
    if f.size == 0:
        raise ConjectureViolation("elimination polynomial vanishes identically")
    return f


def _leval(F, p, x):
    """Evaluate a Laurent polynomial (exponents A*u + B) at x != 0."""
    r = 0
    for (a, b), c in p.items():
        r ^= F.mul(c, F.pow(x, a * F.u + b))
    return r


def check_pair(F, Pp, Qp, g, gamma, delta) -> bool:
    v = la.vecmat(F, np.asarray(Pp, dtype=np.int64),
                  la.matmul(F, la.matmul(F, make_Mprime(F, gamma), g), make_Mprime(F, delta)))
    if not np.any(v):
        return False
    return la.normalize(F, v) == la.normalize(F, Qp)


def solve_double_coset(F, eqn: DoubleCosetEqn) -> list:
    """All (gamma, delta) in (F_q^x)^2 solving the equation, by increasing gamma."""
    r1, r2, r3, r4 = eqn.Qp
    out = []
    for gamma in roots_univariate(F, eqn.f.tolist()):
        if gamma == 0:
            continue
        Lg = _leval(F, eqn.L, gamma)
        Mg = _leval(F, eqn.M, gamma)
        if Lg == 0 or Mg == 0:
            continue
        delta = F.sqrt(F.div(F.mul(Mg, r2), F.mul(Lg, r3)))
        if check_pair(F, eqn.Pp, eqn.Qp, eqn.g, gamma, delta):
            out.append((gamma, delta))
    return out


def brute_force_double_coset(F, Pp, Qp, g) -> list:
    """Exhaustive oracle over all (gamma, delta) in (F_q^x)^2."""
    out = []
    for gamma in range(1, F.q):
        for delta in range(1, F.q):
            if check_pair(F, Pp, Qp, g, gamma, delta):
                out.append((gamma, delta))
    return out


def random_torus_element(gs: GenSet, rng, need_full_order: bool = True):
    """(a, mu, x) with a random of order dividing q-1, a = M'(mu)^x."""
    F = gs.F
    for _ in range(gs.cap(4)):
        a = gs.random(rng)
        if la.is_identity(a.mat) or not la.is_identity(la.mat_pow(F, a.mat, F.q - 1)):
            continue
        try:
            D, x = la.diagonalise(F, a.mat)
        except Exception:
            continue
        return a, int(D[1, 1]), x
    raise RetryLimitExceeded("no element of order dividing q-1")


def _record_violation(err, Pp, Qp, g):
    global violation_count
    violation_count += 1
    log.info("%s: P'=%s Q'=%s g=%s", err, list(map(int, Pp)), list(map(int, Qp)),
                np.asarray(g).tolist())


def find_mapping_element(gs: GenSet, P, Q, rng) -> Elt:
    """g in ⟨gs⟩ with P g = Q, as a tracked element a^l h a^k."""
    F = gs.F
    Pn = la.normalize(F, P)
    Qn = la.normalize(F, Q)
    for _ in range(gs.cap(4)):
        a, mu, x = random_torus_element(gs, rng)
        xinv = la.mat_inv(F, x)
        Pp = la.vecmat(F, np.asarray(Pn, dtype=np.int64), xinv)
        Qp = la.vecmat(F, np.asarray(Qn, dtype=np.int64), xinv)
        if np.count_nonzero(Pp) == 1 or np.count_nonzero(Qp) == 1:
            # P or Q is fixed by a: the torus side of the double coset collapses
            continue
        found = None
        for _ in range(gs.cap(4)):
            h = gs.random(rng)
            g = la.matmul(F, la.matmul(F, x, h.mat), xinv)
            try:
                eqn = build_magic_poly(F, Pp, Qp, g)
            except DegenerateCoordinates:
                continue
            except ConjectureViolation as err:
                _record_violation(err, Pp, Qp, g)
                break
            sols = solve_double_coset(F, eqn)
            if sols:
                found = (h, sols)
                break
        if found is None:
            continue
        h, sols = found
        for gamma, delta in sols:
            l = discrete_log(F, mu, gamma)
            k = discrete_log(F, mu, delta)
            if l is None or k is None:
                continue
            res = gs.prod(gs.pow(a, l), h, gs.pow(a, k))
            if la.point_image(F, Pn, res.mat) == Qn:
                return res
    raise RetryLimitExceeded("find_mapping_element")


def random_stabilizer_element(gs: GenSet, P, rng) -> Elt:
    F = gs.F
    Pn = la.normalize(F, P)
    for _ in range(gs.cap(2)):
        x = gs.random(rng)
        Q = la.point_image(F, Pn, x.mat)
        if Q == Pn:
            continue
        y = find_mapping_element(gs, Q, Pn, rng)
        return gs.mul(x, y)
    raise RetryLimitExceeded("random_stabilizer_element")
