import numpy as np
import pytest
from hypothesis import given, strategies as st

from szgroup.errors import BadDegree, NoSolution, UnsupportedM, ZeroElement, ZeroPolynomial
from szgroup.field import (
    PRIMITIVE_POLYS, discrete_log, ext2, ext4, factor_int, factor_qpow_minus1, frobenius_t,
    in_subfield, make_field, mult_order, roots_univariate, solve_norm_equation, sqrt,
)
from szgroup.field.ntheory import crt, is_probable_prime

FIELDS = [make_field(m) for m in (1, 2, 3)]
elt = st.integers(min_value=0)


def _mod(F, x):
    return x % F.q


# parameters and tables

@pytest.mark.parametrize("m,q,t", [(1, 8, 4), (2, 32, 8), (3, 128, 16), (10, 2 ** 21, 2 ** 11)])
def test_parameters(m, q, t):
    F = make_field(m)
    assert (F.q, F.t, F.u, F.n) == (q, t, t // 2, 2 * m + 1)


def test_defining_poly_q8():
    F = make_field(1)
    lam = F.lam
    assert F.pow(lam, 3) == lam ^ 1
    assert len({F.pow(lam, k) for k in range(7)}) == 7


@pytest.mark.parametrize("m", sorted(PRIMITIVE_POLYS))
def test_builtin_polys_primitive(m):
    F = make_field(m)
    assert F.mult_order(F.lam) == F.q - 1


@pytest.mark.parametrize("m", [0, 11, -1])
def test_unsupported_m(m):
    with pytest.raises(UnsupportedM):
        make_field(m)


# arithmetic laws

@pytest.mark.parametrize("F", FIELDS, ids=["q8", "q32", "q128"])
@given(a=elt, b=elt, c=elt)
def test_field_axioms(F, a, b, c):
    a, b, c = _mod(F, a), _mod(F, b), _mod(F, c)
    assert F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c)
    assert F.mul(a, b ^ c) == F.mul(a, b) ^ F.mul(a, c)
    assert F.mul(a, b) == F.mul(b, a)
    if a:
        assert F.mul(a, F.inv(a)) == 1
        assert F.div(F.mul(a, b), a) == b


@pytest.mark.parametrize("F", FIELDS, ids=["q8", "q32", "q128"])
@given(a=elt)
def test_frobenius_and_sqrt(F, a):
    a = _mod(F, a)
    # pi^2 is squaring, and sqrt inverts squaring
    assert frobenius_t(F, frobenius_t(F, a)) == F.mul(a, a)
    assert F.mul(sqrt(F, a), sqrt(F, a)) == a
    assert F.frobenius_t(a) == F.pow(a, F.t)


def test_frobenius_small_values(F8):
    assert frobenius_t(F8, 0) == 0 and frobenius_t(F8, 1) == 1
    assert frobenius_t(F8, frobenius_t(F8, F8.lam)) == F8.mul(F8.lam, F8.lam)
    assert sqrt(F8, 1) == 1 and sqrt(F8, 0) == 0
    assert sqrt(F8, F8.lam) == F8.pow(F8.lam, 4) == F8.mul(F8.lam, F8.lam) ^ F8.lam


def test_vectorised_ops_match(F32):
    rng = np.random.default_rng(1)
    A = rng.integers(0, 32, size=(5, 7))
    B = rng.integers(0, 32, size=(5, 7))
    M = F32.vmul(A, B)
    assert all(M[i, j] == F32.mul(int(A[i, j]), int(B[i, j])) for i in range(5) for j in range(7))
    P = F32.vpow(A, 5)
    assert all(P[i, j] == F32.pow(int(A[i, j]), 5) for i in range(5) for j in range(7))


def test_zero_inverse(F8):
    with pytest.raises(ZeroElement):
        F8.inv(0)


# subfields, orders, factorisation

def test_in_subfield():
    F = make_field(1)
    assert in_subfield(F, 1, 1) and in_subfield(F, 1, 3)
    assert not in_subfield(F, F.lam, 1)
    F7 = make_field(7)
    x = F7.pow(F7.lam, (F7.q - 1) // 7)
    assert F7.mult_order(x) == 7
    assert in_subfield(F7, x, 3)
    assert not in_subfield(F7, F7.lam, 3)


def test_mult_order_examples(F8, F32):
    assert mult_order(F8, 1) == 1
    assert mult_order(F8, F8.lam) == 7
    assert mult_order(F32, F32.mul(F32.lam, F32.lam)) == 31


def test_factor_qpow_minus1(F8):
    assert factor_qpow_minus1(F8, 1) == [(7, 1)]
    assert factor_qpow_minus1(F8, 2) == [(3, 2), (7, 1)]
    assert factor_qpow_minus1(F8, 4) == [(3, 2), (5, 1), (7, 1), (13, 1)]
    with pytest.raises(BadDegree):
        factor_qpow_minus1(F8, 5)


@given(st.integers(min_value=2, max_value=10 ** 12))
def test_factor_int_product(n):
    fs = factor_int(n)
    prod = 1
    for p, e in fs:
        assert is_probable_prime(p)
        prod *= p ** e
    assert prod == n
    assert [p for p, _ in fs] == sorted(p for p, _ in fs)


def test_crt():
    x, mod = crt([2, 3, 1], [3, 5, 7])
    assert mod == 105 and x % 3 == 2 and x % 5 == 3 and x % 7 == 1


# discrete logs

def test_discrete_log_examples(F8):
    lam = F8.lam
    assert discrete_log(F8, lam, 1) == 0
    assert discrete_log(F8, lam, lam ^ 1) == 3
    assert discrete_log(F8, F8.mul(lam, lam), lam) == 4


def test_discrete_log_absent(F32):
    # <lam^31> is trivial in F_32 but lam^(q-1) = 1; use a proper subgroup in F_{q^2}
    K = ext2(F32)
    g = next(x for x in K.elements() if x != K.zero and K.mult_order(x) == K.size - 1)
    sub = K.pow(g, 3)
    assert discrete_log(K, sub, g) is None
    assert discrete_log(K, sub, K.pow(sub, 17)) == 17


@pytest.mark.parametrize("F", FIELDS, ids=["q8", "q32", "q128"])
@given(k=st.integers(min_value=0, max_value=10 ** 9), j=st.integers(min_value=1, max_value=10 ** 9))
def test_discrete_log_roundtrip(F, k, j):
    base = F.pow(F.lam, j)
    x = F.pow(base, k)
    d = discrete_log(F, base, x)
    assert d is not None and F.pow(base, d) == x
    assert d < F.mult_order(base)


def test_discrete_log_zero(F8):
    with pytest.raises(ZeroElement):
        discrete_log(F8, F8.lam, 0)


# extension fields

@pytest.mark.parametrize("level", [2, 4])
def test_extension_axioms(F8, level, rng):
    K = ext2(F8) if level == 2 else ext4(F8)
    assert K.size == 8 ** level
    for _ in range(200):
        a, b, c = (K.random(rng) for _ in range(3))
        assert K.mul(a, K.mul(b, c)) == K.mul(K.mul(a, b), c)
        assert K.mul(a, K.add(b, c)) == K.add(K.mul(a, b), K.mul(a, c))
        if a != K.zero:
            assert K.mul(a, K.inv(a)) == K.one
            assert K.pow(a, K.size - 1) == K.one


def test_ext2_is_a_field(F8):
    K = ext2(F8)
    nz = [x for x in K.elements() if x != K.zero]
    assert len(nz) == 63
    assert max(K.mult_order(x) for x in nz) == 63


def test_ext_norm(F32, rng):
    K = ext2(F32)
    for _ in range(50):
        x = K.random(rng, nonzero=True)
        n = K.norm(x)
        assert K.embed(n) == K.mul(x, K.conj(x))
        assert n != 0


def test_ext_keys_roundtrip(F8):
    K = ext4(F8)
    for k in (0, 1, 77, 4095):
        assert K.key(K.from_key(k)) == k


# polynomial roots

def test_roots_examples(F8):
    lam = F8.lam
    assert roots_univariate(F8, [1, 0, 1]) == [1]
    assert sorted(roots_univariate(F8, [1, 1, 0, 1])) == sorted([lam, F8.pow(lam, 2), F8.pow(lam, 4)])
    assert roots_univariate(F8, [1, 1, 1]) == []
    with pytest.raises(ZeroPolynomial):
        roots_univariate(F8, [0, 0])


@pytest.mark.parametrize("F", FIELDS[:2], ids=["q8", "q32"])
@given(coefs=st.lists(st.integers(min_value=0, max_value=31), min_size=2, max_size=9))
def test_roots_match_brute_force(F, coefs):
    f = [c % F.q for c in coefs]
    if not any(f[1:]):
        return
    from szgroup.field.poly import peval
    brute = sorted(x for x in range(F.q) if peval(F, f, x) == 0)
    assert sorted(roots_univariate(F, f)) == brute


def test_roots_over_extension(F8, rng):
    from szgroup.field.poly import peval, poly_from_roots
    K = ext4(F8)
    rs = [K.random(rng) for _ in range(3)]
    f = poly_from_roots(K, rs)
    got = roots_univariate(K, f, rng)
    assert {K.key(x) for x in got} == {K.key(x) for x in rs}
    assert all(peval(K, f, x) == K.zero for x in got)


# norm equation

def test_norm_equation(F8, rng):
    K = ext4(F8)
    e = F8.q ** 2 + 1
    assert K.pow(solve_norm_equation(K, K.one), e) == K.one
    for _ in range(20):
        w = K.random(rng, nonzero=True)
        t1 = K.pow(w, e)
        y = solve_norm_equation(K, t1)
        assert K.pow(y, e) == t1


def test_norm_equation_generator(F8):
    K = ext4(F8)
    g = next(x for x in K.elements() if x != K.zero and K.mult_order(x) == K.size - 1)
    # the image of y -> y^65 has order 63, so g^k is a norm iff 65 divides k
    for k in (1, 63, 65, 130, 5):
        t1 = K.pow(g, k)
        if k % 65 == 0:
            assert K.pow(solve_norm_equation(K, t1), 65) == t1
        else:
            with pytest.raises(NoSolution):
                solve_norm_equation(K, t1)
    with pytest.raises(ZeroElement):
        solve_norm_equation(K, K.zero)
