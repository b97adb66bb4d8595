"""GF(2^n) for odd n = 2m+1, backed by exp/log tables.

Elements are plain ints: bit i is the coefficient of lambda^i, where lambda
is the class of the indeterminate.  Scalar operations go through Python
lists, array operations through the numpy copies of the same tables.
"""
from functools import lru_cache

import numpy as np

from ..errors import BadDegree, ParseError, UnsupportedM, ZeroElement
from .ntheory import factor_int, order_from_factors

# lexicographically least primitive polynomial of degree 2m+1, bit i <-> x^i
PRIMITIVE_POLYS = {
    1: 0xB,
    2: 0x25,
    3: 0x83,
    4: 0x211,
    5: 0x805,
    6: 0x201B,
    7: 0x8003,
    8: 0x20009,
    9: 0x80027,
    10: 0x200005,
}


class FieldParams:
    """The field F_q, q = 2^(2m+1), with t = 2^(m+1)."""

    def __init__(self, m: int, poly: int | None = None):
        if m not in PRIMITIVE_POLYS and poly is None:
            raise UnsupportedM(f"m={m} outside 1..10")
        self.m = m
        self.n = 2 * m + 1
        self.degree = self.n
        self.q = 1 << self.n
        self.size = self.q
        self.t = 1 << (m + 1)
        self.u = 1 << m
        self.poly = PRIMITIVE_POLYS[m] if poly is None else poly
        self.lam = 2
        self.zero = 0
        self.one = 1
        self.N = self.q - 1
        self._build_tables()
        self._factor_cache = {}

    def _build_tables(self):
        N, q, poly = self.N, self.q, self.poly
        exp = np.zeros(4 * N + 1, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        x = 1
        for i in range(N):
            exp[i] = x
            log[x] = i
            x <<= 1
            if x & q:
                x ^= poly
            if x == 1 and i < N - 1:
                raise UnsupportedM("defining polynomial is not primitive")
        if x != 1:
            raise UnsupportedM("defining polynomial is not primitive")
        exp[N:2 * N] = exp[:N]
        log[0] = 2 * N
        self.EXP = exp
        self.LOG = log
        self._exp = exp[:2 * N].tolist()
        self._log = log.tolist()

    def __repr__(self):
        return f"FieldParams(m={self.m}, q={self.q})"

    def __eq__(self, other):
        return isinstance(other, FieldParams) and (self.m, self.poly) == (other.m, other.poly)

    def __hash__(self):
        return hash((self.m, self.poly))

    # scalar arithmetic
    @staticmethod
    def add(a, b):
        return a ^ b

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a):
        if a == 0:
            raise ZeroElement("inverse of 0")
        return self._exp[(self.N - self._log[a]) % self.N]

    def div(self, a, b):
        if b == 0:
            raise ZeroElement("division by 0")
        if a == 0:
            return 0
        return self._exp[(self._log[a] - self._log[b]) % self.N]

    def pow(self, a, e: int):
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroElement("negative power of 0")
            return 0
        return self._exp[(self._log[a] * e) % self.N]

    def square(self, a):
        return self.pow(a, 2)

    def frobenius_t(self, a):
        return self.pow(a, self.t)

    def sqrt(self, a):
        return self.pow(a, self.q // 2)

    def exp_lambda(self, k: int):
        return self._exp[k % self.N]

    def log_lambda(self, a) -> int:
        """Table lookup log to base lambda (internal fast path)."""
        if a == 0:
            raise ZeroElement("log of 0")
        return self._log[a]

    def trace(self, a) -> int:
        """Absolute trace to GF(2)."""
        s, x = 0, a
        for _ in range(self.n):
            s ^= x
            x = self.mul(x, x)
        return s

    def in_subfield(self, a, e: int) -> bool:
        if e <= 0 or self.n % e:
            raise BadDegree(f"{e} does not divide {self.n}")
        return self.pow(a, 1 << e) == a

    def key(self, a) -> int:
        return a

    # numpy arrays of elements
    def vmul(self, A, B):
        return self.EXP[self.LOG[A] + self.LOG[B]]

    def vinv(self, A):
        A = np.asarray(A)
        if np.any(A == 0):
            raise ZeroElement("inverse of 0")
        return self.EXP[(self.N - self.LOG[A]) % self.N]

    def vpow(self, A, e: int):
        A = np.asarray(A)
        r = self.EXP[(self.LOG[A] * (e % self.N)) % self.N]
        if e > 0:
            r = np.where(A == 0, 0, r)
        elif e == 0:
            r = np.ones_like(A)
        return r

    # orders and factorizations
    def factor_qpow_minus1(self, i: int) -> list:
        if not 1 <= i <= 4:
            raise BadDegree("i must lie in 1..4")
        if i not in self._factor_cache:
            self._factor_cache[i] = tuple(factor_int(self.q ** i - 1))
        return list(self._factor_cache[i])

    def order_factors(self):
        return self.factor_qpow_minus1(1)

    def mult_order(self, a) -> int:
        if a == 0:
            raise ZeroElement("order of 0")
        return order_from_factors(self.order_factors(), lambda k: self.pow(a, k) == 1)

    # random elements and text
    def random(self, rng, nonzero=False):
        return int(rng.integers(1 if nonzero else 0, self.q))

    def elements(self):
        return range(self.q)

    def fmt(self, a) -> str:
        return f"0x{a:x}"

    def parse(self, s: str):
        s = s.strip()
        if not s.lower().startswith("0x"):
            raise ParseError(f"bad field element {s!r}")
        try:
            v = int(s, 16)
        except ValueError:
            raise ParseError(f"bad field element {s!r}") from None
        if v >= self.q:
            raise ParseError(f"field element {s!r} out of range")
        return v

    def header(self) -> str:
        return f"F m={self.m} poly=0x{self.poly:x}"


@lru_cache(maxsize=None)
def make_field(m: int) -> FieldParams:
    if not isinstance(m, int) or m not in PRIMITIVE_POLYS:
        raise UnsupportedM(f"m={m} outside 1..10")
    return FieldParams(m)


def frobenius_t(F: FieldParams, x):
    return F.frobenius_t(x)


def sqrt(F: FieldParams, x):
    return F.sqrt(x)


def in_subfield(F: FieldParams, x, e: int) -> bool:
    return F.in_subfield(x, e)


def factor_qpow_minus1(F: FieldParams, i: int) -> list:
    return F.factor_qpow_minus1(i)
