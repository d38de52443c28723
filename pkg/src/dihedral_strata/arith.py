"""Small exact number theory: totient, Moebius, divisors, Ramanujan sums."""

from math import gcd


def factorize(m: int) -> dict:
    if m < 1:
        raise ValueError("m must be positive")
    out = {}
    p = 2
    while p * p <= m:
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
        p += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def totient(m: int) -> int:
    phi = m
    for p in factorize(m):
        phi = phi // p * (p - 1)
    return phi


def mobius(m: int) -> int:
    f = factorize(m)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def divisors(m: int) -> list:
    return [d for d in range(1, m + 1) if m % d == 0]


def ramanujan_sum(m: int, r: int) -> int:
    """c_m(r), the sum of ``zeta^r`` over the primitive m-th roots of unity zeta.

    Uses von Sterneck's closed form mu(m/g) phi(m) / phi(m/g), g = gcd(r, m).
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    g = gcd(r, m)
    q = m // g
    return mobius(q) * totient(m) // totient(q)
