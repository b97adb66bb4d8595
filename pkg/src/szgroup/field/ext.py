"""Quadratic extension towers F_{q^2} = F_q[u]/(u^2+u+c), F_{q^4} over F_{q^2}.

An element is a pair (a0, a1) meaning a0 + a1*u with a0, a1 in the base.
"""
from functools import lru_cache

from ..errors import ZeroElement
from .ntheory import order_from_factors


class QuadExt:
    def __init__(self, base, c=None, level: int = 2):
        self.base = base
        self.level = level  # degree over F_q
        self.degree = 2 * base.degree
        self.size = 1 << self.degree
        self.zero = (base.zero, base.zero)
        self.one = (base.one, base.zero)
        self.c = self._least_c() if c is None else c
        self._bits = base.degree

    def _least_c(self):
        # u^2+u+c is irreducible over K iff Tr_{K/F2}(c) = 1
        B = self.base
        for k in range(1, B.size):
            c = _from_key(B, k)
            if _abs_trace(B, c) == B.one:
                return c
        raise AssertionError("no irreducible quadratic")

    def __repr__(self):
        return f"QuadExt(level={self.level}, degree={self.degree})"

    def embed(self, a):
        return (a, self.base.zero)

    def add(self, x, y):
        B = self.base
        return (B.add(x[0], y[0]), B.add(x[1], y[1]))

    def mul(self, x, y):
        B = self.base
        a0, a1 = x
        b0, b1 = y
        hh = B.mul(a1, b1)
        lo = B.add(B.mul(a0, b0), B.mul(hh, self.c))
        hi = B.add(B.add(B.mul(a0, b1), B.mul(a1, b0)), hh)
        return (lo, hi)

    def conj(self, x):
        return (self.base.add(x[0], x[1]), x[1])

    def norm(self, x):
        B = self.base
        a0, a1 = x
        return B.add(B.add(B.mul(a0, a0), B.mul(a0, a1)), B.mul(B.mul(a1, a1), self.c))

    def inv(self, x):
        if x == self.zero:
            raise ZeroElement("inverse of 0")
        ni = self.base.inv(self.norm(x))
        a, b = self.conj(x)
        return (self.base.mul(a, ni), self.base.mul(b, ni))

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def pow(self, x, e: int):
        if e < 0:
            x, e = self.inv(x), -e
        r = self.one
        while e:
            if e & 1:
                r = self.mul(r, x)
            x = self.mul(x, x)
            e >>= 1
        return r

    def square(self, x):
        return self.mul(x, x)

    def key(self, x) -> int:
        B = self.base
        return B.key(x[0]) | (B.key(x[1]) << self._bits)

    def from_key(self, k: int):
        return _from_key(self, k)

    def random(self, rng, nonzero=False):
        while True:
            x = (self.base.random(rng), self.base.random(rng))
            if not nonzero or x != self.zero:
                return x

    def elements(self):
        for k in range(self.size):
            yield self.from_key(k)

    def order_factors(self):
        F = self.base
        while isinstance(F, QuadExt):
            F = F.base
        return F.factor_qpow_minus1(self.level)

    def mult_order(self, x) -> int:
        if x == self.zero:
            raise ZeroElement("order of 0")
        return order_from_factors(self.order_factors(), lambda k: self.pow(x, k) == self.one)


def _from_key(K, k):
    if isinstance(K, QuadExt):
        b = K.base.degree
        return (_from_key(K.base, k & ((1 << b) - 1)), _from_key(K.base, k >> b))
    return k


def _abs_trace(K, x):
    s, y = K.zero, x
    for _ in range(K.degree):
        s = K.add(s, y)
        y = K.mul(y, y)
    return s


@lru_cache(maxsize=None)
def ext2(F):
    return QuadExt(F, level=2)


@lru_cache(maxsize=None)
def ext4(F):
    return QuadExt(ext2(F), level=4)
