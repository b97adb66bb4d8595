"""Dense univariate polynomials over a field K, as coefficient lists (low first)."""
import numpy as np

from ..errors import ZeroPolynomial


def trim(K, f):
    f = list(f)
    while f and f[-1] == K.zero:
        f.pop()
    return f


def deg(f) -> int:
    return len(f) - 1


def padd(K, f, g):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = K.add(out[i], c)
    return trim(K, out)


def pscale(K, f, c):
    return trim(K, [K.mul(a, c) for a in f])


def pmul(K, f, g):
    if not f or not g:
        return []
    out = [K.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == K.zero:
            continue
        for j, b in enumerate(g):
            out[i + j] = K.add(out[i + j], K.mul(a, b))
    return trim(K, out)


def pdivmod(K, f, g):
    g = trim(K, g)
    if not g:
        raise ZeroPolynomial("division by zero polynomial")
    r = trim(K, f)
    dg = len(g) - 1
    lead_inv = K.inv(g[-1])
    if len(r) <= dg:
        return [], r
    qt = [K.zero] * (len(r) - dg)
    while len(r) - 1 >= dg:
        c = K.mul(r[-1], lead_inv)
        s = len(r) - 1 - dg
        qt[s] = c
        for j, b in enumerate(g):
            r[s + j] = K.add(r[s + j], K.mul(c, b))
        r = trim(K, r)
    return trim(K, qt), r


def pmod(K, f, g):
    return pdivmod(K, f, g)[1]


def monic(K, f):
    f = trim(K, f)
    if not f:
        raise ZeroPolynomial("zero polynomial")
    return pscale(K, f, K.inv(f[-1]))


def pgcd(K, f, g):
    f, g = trim(K, f), trim(K, g)
    while g:
        f, g = g, pmod(K, f, g)
    return monic(K, f) if f else []


def peval(K, f, x):
    r = K.zero
    for c in reversed(f):
        r = K.add(K.mul(r, x), c)
    return r


def pderiv(K, f):
    # in characteristic 2 only odd-degree terms survive
    return trim(K, [f[i] if i % 2 else K.zero for i in range(1, len(f))])


def psquare(K, f):
    out = [K.zero] * (2 * len(f) - 1) if f else []
    for i, c in enumerate(f):
        out[2 * i] = K.mul(c, c)
    return trim(K, out)


def _frobenius_power_x(K, f, k):
    """x^(2^k) mod f."""
    r = pmod(K, [K.zero, K.one], f)
    for _ in range(k):
        r = pmod(K, psquare(K, r), f)
    return r


def roots_univariate(K, f, rng=None):
    """All roots of f lying in K, sorted by encoding, each listed once."""
    f = trim(K, f)
    if not f:
        raise ZeroPolynomial("zero polynomial")
    if len(f) == 1:
        return []
    f = monic(K, f)
    roots = []
    # root zero handled directly
    if f[0] == K.zero:
        roots.append(K.zero)
        while f and f[0] == K.zero:
            f = f[1:]
    if len(f) > 1:
        xq = _frobenius_power_x(K, f, K.degree)
        g = pgcd(K, f, padd(K, xq, [K.zero, K.one]))
        if rng is None:
            rng = np.random.default_rng(0x7007)
        _split(K, g, rng, roots)
    return _dedupe(K, roots)


def _dedupe(K, roots):
    seen = {}
    for r in roots:
        seen[K.key(r)] = r
    return [seen[k] for k in sorted(seen)]


def _split(K, g, rng, out):
    """Equal-degree splitting of a product of distinct linear factors."""
    d = len(g) - 1
    if d <= 0:
        return
    if d == 1:
        out.append(K.mul(g[0], K.inv(g[1])))
        return
    while True:
        r = K.random(rng, nonzero=True)
        # Tr(r x) mod g
        y = [K.zero, r]
        acc = list(y)
        for _ in range(K.degree - 1):
            y = pmod(K, psquare(K, y), g)
            acc = padd(K, acc, y)
        h = pgcd(K, g, acc)
        if 0 < len(h) - 1 < d:
            _split(K, h, rng, out)
            _split(K, pdivmod(K, g, h)[0], rng, out)
            return


def poly_from_roots(K, roots):
    f = [K.one]
    for r in roots:
        f = pmul(K, f, [r, K.one])
    return f
