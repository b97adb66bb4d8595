"""Discrete logarithms by Pohlig-Hellman with baby-step giant-step per prime."""
import math

from ..errors import NoSolution, ZeroElement
from .ntheory import crt, order_from_factors


def _bsgs(K, g, h, p):
    """k in [0, p) with g^k = h, g of prime order p, or None."""
    m = math.isqrt(p - 1) + 1
    table = {}
    e = K.one
    for j in range(m):
        table.setdefault(K.key(e), j)
        e = K.mul(e, g)
    step = K.inv(e)  # g^-m
    y = h
    for i in range(m + 1):
        j = table.get(K.key(y))
        if j is not None:
            k = i * m + j
            if k < p:
                return k
        y = K.mul(y, step)
    return None


def discrete_log(K, base, x):
    """Smallest k >= 0 with base^k = x, or None if x is not in <base>."""
    if base == K.zero or x == K.zero:
        raise ZeroElement("discrete log of 0")
    facs = K.order_factors()
    n = order_from_factors(facs, lambda k: K.pow(base, k) == K.one)
    # x in <base> iff x^n = 1 (the unit group is cyclic)
    if K.pow(x, n) != K.one:
        return None
    residues, moduli = [], []
    for p, _ in facs:
        if n % p:
            continue
        e = 0
        while n % (p ** (e + 1)) == 0:
            e += 1
        pe = p ** e
        cof = n // pe
        g = K.pow(base, cof)
        h = K.pow(x, cof)
        gamma = K.pow(g, p ** (e - 1))  # order p
        k = 0
        for i in range(e):
            hk = K.pow(K.mul(K.pow(g, -k), h), p ** (e - 1 - i))
            d = _bsgs(K, gamma, hk, p)
            if d is None:
                return None
            k += d * p ** i
        residues.append(k)
        moduli.append(pe)
    if not moduli:
        return 0
    k, _ = crt(residues, moduli)
    return k


def mult_order(K, x) -> int:
    return K.mult_order(x)


def solve_norm_equation(K4, t1):
    """y in F_{q^4} with y^(q^2+1) = t1."""
    if t1 == K4.zero:
        raise ZeroElement("norm equation with 0")
    Fq = K4.base.base
    q = Fq.q
    e = q * q + 1
    # image of y -> y^e is the subgroup of order n/e = q^2-1
    if K4.pow(t1, q * q - 1) != K4.one:
        raise NoSolution("element is not a norm")
    # e is coprime to q^2-1 (q even), so invert e on that subgroup
    d = pow(e, -1, q * q - 1)
    y = K4.pow(t1, d)
    assert K4.pow(y, e) == t1
    return y
