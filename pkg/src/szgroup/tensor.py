"""Twisted tensor representations of Sz(q).

A module of dimension 4^n is a tensor product of Frobenius twists of the
natural module.  An element of order q-1 has eigenvalues that are products
of powers of n base values; summing the right eigenspaces gives a flat
(a subspace of the form V x ... x A x ... x V with dim A = 2).  For small
fields the group is instead made to act on the q^2 + 1 points of its
doubly transitive orbit.
"""
from dataclasses import dataclass
from itertools import product

import numpy as np

from . import linalg as la
from .errors import BadTwists, BaseValueCountMismatch, RetryLimitExceeded
from .groupcore import GenSet
from .suzuki import SuzukiCtx


@dataclass
class TensorCtx:
    twists: tuple
    dim: int
    gens: GenSet
    kron_basis: np.ndarray


def twisted_kron(F, g, twists):
    out = la.frobenius_power(F, g, twists[0])
    for i in twists[1:]:
        out = la.kron(F, out, la.frobenius_power(F, g, i))
    return out


def build_twisted_tensor(F, twists, allow_n3: bool = False) -> TensorCtx:
    """Kronecker product of twisted copies of the standard generators."""
    twists = tuple(int(i) for i in twists)
    n = len(twists)
    if n not in ((2, 3) if allow_n3 else (2,)):
        raise BadTwists(f"{n} tensor factors not supported")
    if twists[0] != 0 or any(a >= b for a, b in zip(twists, twists[1:])) or twists[-1] > 2 * F.m:
        raise BadTwists("twists must be 0 = i_0 < i_1 < ... <= 2m")
    ctx = SuzukiCtx(F)
    gens = [twisted_kron(F, g, twists) for g in ctx.std_gens]
    d = 4 ** n
    return TensorCtx(twists, d, GenSet(F, gens), la.identity(d))


# base values, in the exponent group Z/(q-1) of a primitive element

def _log_set(F, E):
    return {int(F.log_lambda(int(e))) for e in E}


def base_values(E, F, n: int) -> set:
    """One of each inverse pair of base values for the eigenvalues E."""
    N = F.q - 1
    t = F.t
    half = pow(2, -1, N) if N > 1 else 0
    L = _log_set(F, E)
    # sqrt(e/f) in logs
    S = {((a - b) * half) % N for a in L for b in L if a != b}
    mults = (1, -1, t + 1, -(t + 1))

    def in_P(x):
        quad = [(c * x) % N for c in mults]
        for e in L:
            if not any(all((e + y + z) % N in L for z in quad) for y in quad):
                return False
        return True

    P = {x for x in S if in_P(x)}
    # Galois closure: x^(2^a) in P for at least n exponents 0 = a_0 < ... <= 2m
    Pp = {x for x in P if sum(((x << a) % N) in P for a in range(F.n)) >= n}
    if len(Pp) != 2 * n:
        raise BaseValueCountMismatch(f"found {len(Pp)} candidates, expected {2 * n}")
    reps = set()
    for x in sorted(Pp):
        if (-x) % N not in reps:
            reps.add(x)
    if len(reps) != n:
        raise BaseValueCountMismatch("candidates are not closed under inversion")
    return {F.exp_lambda(x) for x in reps}


def _exponent_sets(F, base_logs, i):
    """Logs of E_i: lambda_i^{+-1} times all lambda_k^{j_k}, k != i."""
    N = F.q - 1
    t = F.t
    choices = []
    for k, x in enumerate(base_logs):
        js = (1, -1) if k == i else (1, -1, t + 1, -(t + 1))
        choices.append([(j * x) % N for j in js])
    return {sum(c) % N for c in product(*choices)}


def find_flat(gs: GenSet, F, n: int, rng):
    """A flat of dimension 2 * 4^(n-1) as a sum of eigenspaces."""
    target = 2 * 4 ** (n - 1)
    for _ in range(gs.cap(4)):
        g = gs.random(rng).mat
        if la.is_identity(g) or not la.is_identity(la.mat_pow(F, g, F.q - 1)):
            continue
        E = la.eigenvalues(F, g)
        try:
            base = sorted(base_values(E, F, n))
        except BaseValueCountMismatch:
            continue
        logs = [int(F.log_lambda(b)) for b in base]
        present = _log_set(F, E)
        for i in range(n):
            S = la.Subspace(F, np.zeros((0, g.shape[0]), dtype=np.int64), g.shape[0])
            for x in sorted(_exponent_sets(F, logs, i) & present):
                S = la.subspace_sum(F, S, la.eigenspace(F, g, F.exp_lambda(x)))
            if S.dim == target:
                return S
    raise RetryLimitExceeded("find_flat")


def flat_position(F, S, n: int, basis=None):
    """Tensor position k with S = V x .. x A x .. x V in the given basis, or None."""
    rows = S.basis if basis is None else la.matmul(F, S.basis, la.mat_inv(F, basis))
    if S.dim != 2 * 4 ** (n - 1):
        return None
    for k in range(n):
        fibres = []
        for v in rows:
            T = np.moveaxis(v.reshape((4,) * n), k, 0).reshape(4, -1)
            fibres.extend(T.T)
        if la.rank(F, np.array(fibres)) == 2:
            return k
    return None


# permutation representation on the doubly transitive orbit

def _normalize_rows(F, X):
    X = np.asarray(X)
    first = np.argmax(X != 0, axis=1)
    lead = X[np.arange(X.shape[0]), first]
    return F.vmul(X, F.vinv(lead)[:, None])


def _fixed_point(gs: GenSet, rng):
    F = gs.F
    for _ in range(gs.cap(4)):
        g = gs.random(rng).mat
        if la.is_identity(g) or not la.is_identity(la.mat_pow(F, g, F.q - 1)):
            continue
        for _ in range(gs.cap(2)):
            x = gs.random(rng).mat
            h = la.conj(F, g, x)
            c = la.comm(F, g, h)
            if la.is_identity(c) or not la.is_identity(la.mat_pow(F, c, 4)):
                continue
            v = la.common_eigenvector(F, [g, h])
            if v is not None:
                return la.normalize(F, v)
        # g may lie in a torus normaliser only; draw again
    raise RetryLimitExceeded("no point of the doubly transitive orbit")


class PermRep:
    """Action on an orbit of projective points, with a Schreier tree."""

    def __init__(self, F, gens, root):
        self.F = F
        self.gens = [np.asarray(g) for g in gens]
        self.points = [root]
        self.index = {root: 0}
        self.parent = [(-1, -1)]
        frontier = [0]
        while frontier:
            X = np.array([self.points[i] for i in frontier], dtype=np.int64)
            new = []
            for k, g in enumerate(self.gens):
                Y = _normalize_rows(F, la.matmul(F, X, g))
                for src, y in zip(frontier, map(tuple, Y.tolist())):
                    if y not in self.index:
                        self.index[y] = len(self.points)
                        self.points.append(y)
                        self.parent.append((src, k))
                        new.append(self.index[y])
            frontier = new
        self._X = np.array(self.points, dtype=np.int64)
        self.perms = [self.image(g) for g in self.gens]

    def __len__(self):
        return len(self.points)

    def image(self, g) -> list:
        """Permutation of the orbit induced by g (as an index list)."""
        Y = _normalize_rows(self.F, la.matmul(self.F, self._X, np.asarray(g)))
        try:
            perm = [self.index[y] for y in map(tuple, Y.tolist())]
        except KeyError:
            raise ValueError("element does not preserve the orbit") from None
        if len(set(perm)) != len(perm):
            raise ValueError("induced map is not a permutation")
        return perm

    def word_to(self, i: int) -> list:
        """Generator indices mapping the root to point i."""
        w = []
        while i:
            i, k = self.parent[i]
            w.append(k)
        return w[::-1]


def perm_representation(gs: GenSet, rng):
    """(orbit points, per-generator permutations) on q^2 + 1 points."""
    F = gs.F
    want = F.q ** 2 + 1
    for _ in range(gs.cap(1)):
        P = _fixed_point(gs, rng)
        rep = PermRep(F, gs.gens, P)
        if len(rep) == want:
            return rep
    raise RetryLimitExceeded("orbit of the wrong size")


def cycles(perm) -> str:
    seen = set()
    out = []
    for i in range(len(perm)):
        if i in seen or perm[i] == i:
            continue
        c = [i]
        seen.add(i)
        j = perm[i]
        while j != i:
            c.append(j)
            seen.add(j)
            j = perm[j]
        out.append("(" + ",".join(str(x) for x in c) + ")")
    return "".join(out) or "()"
