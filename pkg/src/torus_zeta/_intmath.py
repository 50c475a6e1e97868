"""Integer helpers: primality, factorization, p-adic valuation."""

import math
import random
from functools import lru_cache

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
TRIAL_LIMIT = 10**6


def is_prime(n):
    """Miller-Rabin with the first 13 prime bases.

    Deterministic for n < 3.3e24, which covers every field size this
    library is meant for.
    """
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n, rng):
    if n % 2 == 0:
        return 2
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
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


@lru_cache(maxsize=1024)
def factorint(n):
    """Prime factorization of n >= 1 as a sorted tuple of (prime, exponent).

    Trial division up to 10**6, then Pollard-Brent rho on what is left.
    """
    if n < 1:
        raise ValueError("n must be positive")
    out = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f <= TRIAL_LIMIT and f * f <= n:
        for g in (f, f + 2):
            while n % g == 0:
                out[g] = out.get(g, 0) + 1
                n //= g
        f += 6
    stack = [n] if n > 1 else []
    rng = random.Random(n)
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_brent(m, rng)
        stack.extend((d, m // d))
    return tuple(sorted(out.items()))


def vp(n, p):
    """Exponent of p in the nonzero integer n."""
    if n == 0:
        raise ValueError("v_p(0) is infinite")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def ilog_floor(n, p):
    """Largest j with p**j <= n, for n >= 1 (exact, no floats)."""
    j, pw = 0, p
    while pw <= n:
        j += 1
        pw *= p
    return j


def ilog_ceil(n, p):
    """Smallest j with p**j >= n, for n >= 1."""
    j, pw = 0, 1
    while pw < n:
        j += 1
        pw *= p
    return j


def lcm(*xs):
    out = 1
    for x in xs:
        out = out * x // math.gcd(out, x)
    return out
