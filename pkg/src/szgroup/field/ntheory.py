"""Integer helpers: primality, factorization, CRT."""
import math
import random

_SMALL_PRIMES = [p for p in range(2, 1000) if all(p % d for d in range(2, int(p ** 0.5) + 1))]


def is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES[:15]:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for n < 3.3e24
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int, rng: random.Random) -> int:
    """A nontrivial factor of the odd composite n."""
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factor_int(n: int) -> list:
    """Prime factorization of n >= 1 as a sorted list of (prime, exponent)."""
    if n < 1:
        raise ValueError("n must be positive")
    out = {}
    for p in _SMALL_PRIMES:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    rng = random.Random(0x5a17)
    stack = [n] if n > 1 else []
    while stack:
        k = stack.pop()
        if k == 1:
            continue
        if is_probable_prime(k):
            out[k] = out.get(k, 0) + 1
            continue
        d = _pollard_brent(k, rng)
        stack.extend([d, k // d])
    return sorted(out.items())


def crt(residues, moduli):
    """Combine x = r_i mod m_i for pairwise coprime m_i."""
    x, mod = 0, 1
    for r, m in zip(residues, moduli):
        # x + mod*s = r (mod m)
        s = ((r - x) * pow(mod, -1, m)) % m
        x += mod * s
        mod *= m
    return x % mod, mod


def order_from_factors(n_factors, is_one_after) -> int:
    """Exact order given the factorization of a multiple N of it.

    ``is_one_after(k)`` must report whether x^k = 1.
    """
    n = 1
    for p, e in n_factors:
        n *= p ** e
    for p, e in n_factors:
        for _ in range(e):
            if n % p == 0 and is_one_after(n // p):
                n //= p
            else:
                break
    return n
