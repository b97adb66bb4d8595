"""Dense linear algebra over GF(2^n).

Matrices are square ``int64`` numpy arrays of field encodings and act on row
vectors, so a point P maps to P @ g.  Addition is XOR; products go through the
exp/log tables of the field, so a matrix product is one gather, one add and
one XOR-reduction.
"""
import numpy as np

from .errors import NotSuzukiDiagonalizable, NotTriangularizable, Singular
from .field import roots_univariate
from .field.poly import padd, pmul, pscale
from .field.ntheory import order_from_factors


# basic matrix arithmetic

def identity(d: int) -> np.ndarray:
    return np.eye(d, dtype=np.int64)


def zeros(d: int, e: int | None = None) -> np.ndarray:
    return np.zeros((d, d if e is None else e), dtype=np.int64)


def matmul(F, A, B):
    """A @ B; both may carry leading batch axes."""
    prod = F.EXP[F.LOG[A][..., :, :, None] + F.LOG[B][..., None, :, :]]
    return np.bitwise_xor.reduce(prod, axis=-2)


def vecmat(F, v, M):
    prod = F.EXP[F.LOG[v][..., :, None] + F.LOG[M]]
    return np.bitwise_xor.reduce(prod, axis=-2)


def scal(F, c, A):
    return F.EXP[F.LOG[A] + F.LOG[c]]


def is_identity(A) -> bool:
    return np.array_equal(A, np.eye(A.shape[0], dtype=A.dtype))


def mat_inv(F, A):
    d = A.shape[0]
    M = [list(map(int, r)) + [1 if i == j else 0 for j in range(d)] for i, r in enumerate(A)]
    mul, inv = F.mul, F.inv
    for c in range(d):
        p = next((r for r in range(c, d) if M[r][c]), None)
        if p is None:
            raise Singular("matrix is singular")
        M[c], M[p] = M[p], M[c]
        piv = M[c]
        iv = inv(piv[c])
        if iv != 1:
            piv = M[c] = [mul(x, iv) for x in piv]
        for r in range(d):
            f = M[r][c]
            if r != c and f:
                row = M[r]
                M[r] = [x ^ mul(f, y) for x, y in zip(row, piv)]
    return np.array([r[d:] for r in M], dtype=np.int64)


def mat_pow(F, A, e: int):
    if e < 0:
        A, e = mat_inv(F, A), -e
    R = identity(A.shape[0])
    while e:
        if e & 1:
            R = matmul(F, R, A)
        e >>= 1
        if e:
            A = matmul(F, A, A)
    return R


def conj(F, A, X, Xinv=None):
    """A^X = X^-1 A X."""
    if Xinv is None:
        Xinv = mat_inv(F, X)
    return matmul(F, matmul(F, Xinv, A), X)


def comm(F, A, B):
    """[A, B] = A^-1 B^-1 A B."""
    return matmul(F, matmul(F, mat_inv(F, A), mat_inv(F, B)), matmul(F, A, B))


def det(F, A) -> int:
    d = A.shape[0]
    M = [list(map(int, r)) for r in A]
    res = 1
    for c in range(d):
        p = next((r for r in range(c, d) if M[r][c]), None)
        if p is None:
            return 0
        M[c], M[p] = M[p], M[c]
        res = F.mul(res, M[c][c])
        iv = F.inv(M[c][c])
        for r in range(c + 1, d):
            f = F.mul(M[r][c], iv)
            if f:
                M[r] = [x ^ F.mul(f, y) for x, y in zip(M[r], M[c])]
    return res


def trace(A) -> int:
    return int(np.bitwise_xor.reduce(np.diagonal(A)))


def frobenius_power(F, A, k: int):
    """Entrywise x -> x^(2^k)."""
    return F.vpow(A, 1 << k)


def transpose(A):
    return np.ascontiguousarray(A.T)


# row reduction, kernels and subspaces

def rref(F, rows):
    """Reduced row echelon form; returns (matrix of nonzero rows, pivot columns)."""
    A = np.array(rows, dtype=np.int64, copy=True)
    if A.ndim == 1:
        A = A[None, :]
    nr, nc = A.shape
    pivots = []
    r = 0
    for c in range(nc):
        if r == nr:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + nz[0]
        if p != r:
            A[[r, p]] = A[[p, r]]
        piv = A[r, c]
        if piv != 1:
            A[r] = scal(F, F.inv(int(piv)), A[r])
        col = A[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            A[hit] ^= F.EXP[F.LOG[col[hit]][:, None] + F.LOG[A[r]][None, :]]
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(F, rows) -> int:
    return len(rref(F, rows)[1])


def nullspace(F, A):
    """Basis (as rows) of {x : A x = 0}."""
    A = np.asarray(A, dtype=np.int64)
    nc = A.shape[1]
    R, piv = rref(F, A)
    free = [c for c in range(nc) if c not in set(piv)]
    out = []
    for f in free:
        v = np.zeros(nc, dtype=np.int64)
        v[f] = 1
        for i, p in enumerate(piv):
            v[p] = R[i, f]
        out.append(v)
    if not out:
        return np.zeros((0, nc), dtype=np.int64)
    return np.array(out)


def left_nullspace(F, A):
    """Basis of {v : v A = 0}."""
    return nullspace(F, transpose(np.asarray(A)))


def solve(F, A, b):
    """One x with A x = b, or None."""
    A = np.asarray(A, dtype=np.int64)
    aug = np.concatenate([A, np.asarray(b, dtype=np.int64)[:, None]], axis=1)
    R, piv = rref(F, aug)
    nc = A.shape[1]
    if nc in piv:
        return None
    x = np.zeros(nc, dtype=np.int64)
    for i, p in enumerate(piv):
        x[p] = R[i, nc]
    return x


class Subspace:
    """Row space in canonical reduced echelon form."""

    __slots__ = ("basis", "d")

    def __init__(self, F, rows, d=None):
        rows = np.asarray(rows, dtype=np.int64)
        if rows.size == 0:
            self.d = d if d is not None else (rows.shape[1] if rows.ndim == 2 else 0)
            self.basis = np.zeros((0, self.d), dtype=np.int64)
        else:
            self.basis = rref(F, rows)[0]
            self.d = self.basis.shape[1]

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def __eq__(self, other):
        return isinstance(other, Subspace) and np.array_equal(self.basis, other.basis)

    def __hash__(self):
        return hash(self.basis.tobytes())

    def __repr__(self):
        return f"Subspace(dim={self.dim}, d={self.d})"


def span(F, rows, d=None) -> Subspace:
    return Subspace(F, rows, d)


def subspace_sum(F, U: Subspace, W: Subspace) -> Subspace:
    return Subspace(F, np.concatenate([U.basis, W.basis]), U.d)


def intersect(F, U: Subspace, W: Subspace) -> Subspace:
    if U.dim == 0 or W.dim == 0:
        return Subspace(F, [], U.d)
    stacked = np.concatenate([U.basis, W.basis])
    K = left_nullspace(F, stacked)
    if K.shape[0] == 0:
        return Subspace(F, [], U.d)
    vecs = matmul(F, K[:, :U.dim], U.basis)
    return Subspace(F, vecs, U.d)


def contains(F, U: Subspace, v) -> bool:
    if U.dim == 0:
        return not np.any(v)
    return rank(F, np.concatenate([U.basis, np.asarray(v)[None, :]])) == U.dim


def image(F, U: Subspace, g) -> Subspace:
    if U.dim == 0:
        return U
    return Subspace(F, matmul(F, U.basis, g), U.d)


def is_invariant(F, U: Subspace, g) -> bool:
    return image(F, U, g) == U


def normalize(F, v):
    """Projective normalization: first nonzero coordinate becomes 1."""
    v = np.asarray(v, dtype=np.int64)
    nz = np.nonzero(v)[0]
    if nz.size == 0:
        raise ValueError("zero vector is not a projective point")
    c = int(v[nz[0]])
    if c != 1:
        v = scal(F, F.inv(c), v)
    return tuple(int(x) for x in v)


def point_image(F, P, g):
    return normalize(F, vecmat(F, np.asarray(P, dtype=np.int64), g))


# characteristic polynomial, eigenvalues and eigenspaces

def char_poly(F, M) -> list:
    """Monic characteristic polynomial, coefficients low degree first."""
    n = M.shape[0]
    H = [list(map(int, r)) for r in M]
    mul, inv = F.mul, F.inv
    # reduce to upper Hessenberg form by similarity
    for m in range(1, n - 1):
        i = next((r for r in range(m, n) if H[r][m - 1]), None)
        if i is None:
            continue
        if i != m:
            H[i], H[m] = H[m], H[i]
            for r in range(n):
                H[r][i], H[r][m] = H[r][m], H[r][i]
        tinv = inv(H[m][m - 1])
        for i in range(m + 1, n):
            u = mul(H[i][m - 1], tinv)
            if not u:
                continue
            H[i] = [x ^ mul(u, y) for x, y in zip(H[i], H[m])]
            for r in range(n):
                H[r][m] ^= mul(u, H[r][i])
    p = [[1]]
    for k in range(1, n + 1):
        acc = pmul(F, [H[k - 1][k - 1], 1], p[k - 1])
        prod = 1
        for i in range(k - 1, 0, -1):
            prod = mul(prod, H[i][i - 1])
            if not prod:
                break
            c = mul(H[i - 1][k - 1], prod)
            if c:
                acc = padd(F, acc, pscale(F, p[i - 1], c))
        p.append(acc)
    return p[n]


def eigenvalues(F, M) -> list:
    return roots_univariate(F, char_poly(F, M))


def eigenspace(F, M, mu) -> Subspace:
    """{v : v M = mu v}."""
    d = M.shape[0]
    A = M.copy()
    A[np.arange(d), np.arange(d)] ^= mu
    return Subspace(F, left_nullspace(F, A), d)


# orders

def _unipotent_exponent(d: int) -> int:
    e = 1
    while e < d:
        e *= 2
    return e


def order_multiple_factors(F, d: int):
    """Factorization of a multiple of every element order in GL(d, q), d <= 4."""
    facs = {}
    for i in range(1, d + 1):
        for p, e in F.factor_qpow_minus1(i):
            facs[p] = max(facs.get(p, 0), e)
    k = _unipotent_exponent(d).bit_length() - 1
    if k:
        facs[2] = facs.get(2, 0) + k
    return sorted(facs.items())


def matrix_order(F, M) -> int:
    d = M.shape[0]
    if d > 4:
        raise ValueError("exact orders are only supported up to degree 4")
    if det(F, M) == 0:
        raise Singular("matrix is singular")
    facs = order_multiple_factors(F, d)
    return order_from_factors(facs, lambda k: is_identity(mat_pow(F, M, k)))


def has_order(F, M, n: int, n_factors) -> bool:
    """True iff M has exact order n, given n's factorization."""
    if not is_identity(mat_pow(F, M, n)):
        return False
    return all(not is_identity(mat_pow(F, M, n // p)) for p, _ in n_factors)


def power_to_order(F, M, p: int, e: int):
    n = matrix_order(F, M)
    pe = p ** e
    if n % pe:
        return None
    return mat_pow(F, M, n // pe)


# algebra spinning, invariant flags, Hom spaces, forms

def enveloping_dim(F, gens) -> int:
    """Dimension of the matrix algebra generated by gens (closure by spinning)."""
    return len(enveloping_words(F, gens))


def enveloping_words(F, gens) -> list:
    """Group words in gens whose span is the enveloping algebra."""
    d = gens[0].shape[0]
    basis_rows = []  # echelon rows over d*d coordinates
    pivots = []
    mats = []

    def reduce(v):
        v = v.copy()
        for row, p in zip(basis_rows, pivots):
            c = v[p]
            if c:
                v ^= scal(F, int(c), row)
        return v

    def add(Mx):
        v = reduce(Mx.reshape(-1))
        nz = np.nonzero(v)[0]
        if nz.size == 0:
            return False
        p = nz[0]
        v = scal(F, F.inv(int(v[p])), v)
        basis_rows.append(v)
        pivots.append(p)
        mats.append(Mx)
        return True

    add(identity(d))
    i = 0
    while i < len(mats) and len(mats) < d * d:
        for g in gens:
            add(matmul(F, mats[i], g))
        i += 1
    return mats


def _common_eigenvector(F, gens, W: Subspace):
    """A vector of W that is an eigenvector of every generator, or None."""
    if W.dim == 0:
        return None
    if not gens:
        return W.basis[0]
    g, rest = gens[0], gens[1:]
    for mu in eigenvalues(F, g):
        E = intersect(F, W, eigenspace(F, g, mu))
        if E.dim:
            v = _common_eigenvector(F, rest, E)
            if v is not None:
                return v
    return None


def _complete_basis(F, v):
    d = v.shape[0]
    rows = [v]
    for i in range(d):
        e = np.zeros(d, dtype=np.int64)
        e[i] = 1
        cand = np.array(rows + [e])
        if rank(F, cand) == len(rows) + 1:
            rows.append(e)
        if len(rows) == d:
            break
    return np.array(rows)


def invariant_chain(F, gens) -> list:
    """Full flag V_1 < ... < V_d of subspaces invariant under all gens."""
    d = gens[0].shape[0]
    full = Subspace(F, identity(d))
    v = _common_eigenvector(F, list(gens), full)
    if v is None:
        raise NotTriangularizable("no common eigenvector")
    if d == 1:
        return [full]
    B = _complete_basis(F, v)
    Binv = mat_inv(F, B)
    sub = [matmul(F, matmul(F, B, g), Binv)[1:, 1:] for g in gens]
    inner = invariant_chain(F, sub)
    flag = [Subspace(F, v[None, :])]
    for W in inner:
        lift = np.concatenate([np.zeros((W.dim, 1), dtype=np.int64), W.basis], axis=1)
        rows = np.concatenate([v[None, :], matmul(F, lift, B)])
        flag.append(Subspace(F, rows))
    return flag


def hom_space(F, gensA, gensB) -> list:
    """Basis of {X : A_i X = X B_i for all i}."""
    d = gensA[0].shape[0]
    I = identity(d)
    blocks = []
    for A, B in zip(gensA, gensB):
        # vec is row-major: (A X)_{jk} -> kron(A, I), (X B)_{jk} -> kron(I, B^T)
        blocks.append(np.kron(A, I) ^ np.kron(I, transpose(B)))
    C = np.concatenate(blocks)
    return [x.reshape(d, d) for x in nullspace(F, C)]


def preserved_symplectic_form(F, gens, rng=None):
    """Invertible alternating J' with g J' g^T = J' for all g, or None."""
    d = gens[0].shape[0]
    forms = []
    for i in range(d):
        for j in range(i + 1, d):
            E = zeros(d)
            E[i, j] = E[j, i] = 1
            forms.append(E)
    cols = []
    for E in forms:
        col = [(matmul(F, matmul(F, g, E), transpose(g)) ^ E).reshape(-1) for g in gens]
        cols.append(np.concatenate(col))
    C = transpose(np.array(cols))
    sols = nullspace(F, C)
    if sols.shape[0] == 0:
        return None

    def combine(coefs):
        Jp = zeros(d)
        for c, E in zip(coefs, forms):
            if c:
                Jp ^= scal(F, int(c), E)
        return Jp

    for s in sols:
        Jp = combine(s)
        if det(F, Jp):
            return Jp
    if rng is None:
        rng = np.random.default_rng(0)
    for _ in range(64):
        coef = rng.integers(0, F.q, size=sols.shape[0])
        s = np.bitwise_xor.reduce(F.EXP[F.LOG[coef][:, None] + F.LOG[sols]], axis=0)
        Jp = combine(s)
        if det(F, Jp):
            return Jp
    return None


def diagonalise(F, M):
    """(D, x) with D = M'(mu) and x^-1 D x = M, for M with the torus eigenvalue pattern."""
    if M.shape[0] != 4:
        raise NotSuzukiDiagonalizable("degree must be 4")
    ev = eigenvalues(F, M)
    if len(ev) != 4:
        raise NotSuzukiDiagonalizable("need four distinct eigenvalues in F_q")
    evs = set(ev)
    t = F.t
    mu = None
    for c in ev:  # ascending encoding
        ct = F.pow(c, t + 1)
        if ct in evs and ct != c:
            pattern = {ct, c, F.inv(c), F.inv(ct)}
            if pattern == evs:
                mu = c
                break
    if mu is None:
        raise NotSuzukiDiagonalizable("eigenvalue pattern absent")
    order = [F.pow(mu, t + 1), mu, F.inv(mu), F.pow(mu, -(t + 1))]
    rows = []
    for lam in order:
        E = eigenspace(F, M, lam)
        if E.dim != 1:
            raise NotSuzukiDiagonalizable("eigenspace not one-dimensional")
        rows.append(E.basis[0])
    x = np.array(rows)
    D = np.diag(np.array(order, dtype=np.int64))
    return D, x


def common_eigenvector(F, gens):
    """A common eigenvector of all gens (row action), or None."""
    d = gens[0].shape[0]
    return _common_eigenvector(F, list(gens), Subspace(F, identity(d)))


def kron(F, A, B):
    """Kronecker product over F."""
    A = np.asarray(A)
    B = np.asarray(B)
    (a, b), (c, d) = A.shape, B.shape
    return F.vmul(A[:, None, :, None], B[None, :, None, :]).reshape(a * c, b * d)
