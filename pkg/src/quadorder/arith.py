"""Basic integer number theory shared across modules.

Factorization strategy (per the scan design): smallest-prime-factor tables for
sieve-scale inputs, deterministic Miller-Rabin plus Pollard rho with a fixed
seed sequence beyond that.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from . import kernels
from .errors import FactorizationBoundExceeded, NotPrime

FACTOR_LIMIT = 1 << 63

_SPF_CACHE_LIMIT = 1 << 22  # lazily grown table used for small factorizations
_spf_table: np.ndarray | None = None


def spf_table(limit: int) -> np.ndarray:
    """Smallest-prime-factor table covering 0..limit (cached, grow-only)."""
    global _spf_table
    if _spf_table is None or len(_spf_table) <= limit:
        _spf_table = kernels.spf_sieve(max(limit, _SPF_CACHE_LIMIT))
    return _spf_table


def primes_upto(n: int) -> np.ndarray:
    spf = spf_table(n)
    vals = np.arange(2, n + 1, dtype=np.int32)
    return (np.flatnonzero(spf[2 : n + 1] == vals) + 2).astype(np.int64)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all n < 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
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


def _pollard_rho(n: int) -> int:
    # Brent's variant; deterministic seed sequence keeps runs reproducible
    if n % 2 == 0:
        return 2
    for c in range(1, 50):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise FactorizationBoundExceeded(f"pollard rho failed on {n}")


def factorint(n: int) -> dict[int, int]:
    """Prime factorization as {p: e}; n >= 1."""
    if n < 1:
        raise ValueError("factorint requires n >= 1")
    if n >= FACTOR_LIMIT:
        raise FactorizationBoundExceeded(f"{n} exceeds the 2^63 factorization bound")
    out: dict[int, int] = {}
    if n < _SPF_CACHE_LIMIT or (_spf_table is not None and n < len(_spf_table)):
        spf = spf_table(n)
        while n > 1:
            p = int(spf[n])
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out[p] = e
        return out
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return dict(sorted(out.items()))


def omega_big(n: int) -> int:
    """Number of prime divisors counted with multiplicity; Omega(1) = 0."""
    return sum(factorint(n).values())


def rad(n: int) -> int:
    """Product of the distinct primes dividing n; rad(1) = 1."""
    r = 1
    for p in factorint(n):
        r *= p
    return r


def smooth_part(n: int, z: float) -> int:
    """Product of the prime powers p^k || n with p <= z."""
    s = 1
    for p, e in factorint(n).items():
        if p <= z:
            s *= p**e
    return s


def valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0 and n != 0:
        n //= p
        v += 1
    return v


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n) by reciprocity, no factorization of n."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    if n < 0:
        return (-1 if a < 0 else 1) * kronecker(a, -n)
    t = 1
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v % 2 == 1:
        r = a % 8
        if r in (3, 5):
            t = -t
        elif r in (0, 2, 4, 6):
            return 0
    a %= n
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                t = -t
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            t = -t
        a %= n
    return t if n == 1 else 0


def check_prime(p: int) -> None:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")


@lru_cache(maxsize=None)
def li(y: float) -> float:
    """Offset logarithmic integral: adaptive quadrature of 1/log t on [2, y]."""
    if y <= 2:
        return 0.0
    from scipy.integrate import quad

    val, _err = quad(lambda t: 1.0 / math.log(t), 2.0, y, epsrel=1e-9, limit=200)
    return val
