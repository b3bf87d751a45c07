"""Integer number theory helpers: primality, factorization, modular square roots.

Factorization uses trial division for small factors and Brent's variant of
Pollard's rho beyond that, with a deterministic retry schedule so repeated
runs factor identically.
"""

from __future__ import annotations

from math import gcd, isqrt

# Below 3.3 * 10^24 these bases make Miller-Rabin a proven primality test;
# beyond that the fixed-base test is heuristic but deterministic.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

TRIAL_DIVISION_BOUND = 10**6
FACTORIZATION_CEILING = 10**40


class FactorizationError(Exception):
    """Raised when a cofactor resists the configured factorization effort."""


def is_prime(n: int) -> bool:
    """Miller-Rabin primality test with fixed bases."""
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
    for a in _MR_BASES:
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


def smallest_prime_factor(n: int, bound: int = TRIAL_DIVISION_BOUND) -> int | None:
    """Least prime factor of n found by trial division up to bound, else None."""
    if n < 2:
        return None
    if n % 2 == 0:
        return 2
    if n % 3 == 0:
        return 3
    f = 5
    while f <= bound and f * f <= n:
        if n % f == 0:
            return f
        if n % (f + 2) == 0:
            return f + 2
        f += 6
    if f * f > n:
        return n
    return None


def is_prime_power(n: int) -> bool:
    """True iff n = r^k for a prime r and k >= 1 (1 is not a prime power)."""
    if n < 2:
        return False
    r = smallest_prime_factor(n)
    if r is None:
        return is_prime(n)
    while n % r == 0:
        n //= r
    return n == 1


def prime_power_decomposition(n: int) -> tuple[int, int]:
    """Write n = r^k with r prime; raise ValueError if n is not a prime power."""
    if n < 2:
        raise ValueError(f"{n} is not a prime power")
    r = smallest_prime_factor(n)
    if r is None:
        if is_prime(n):
            return n, 1
        raise ValueError(f"{n} is not a prime power")
    k = 0
    m = n
    while m % r == 0:
        m //= r
        k += 1
    if m != 1:
        raise ValueError(f"{n} is not a prime power")
    return r, k


def _brent_rho(n: int) -> int:
    """A nontrivial factor of odd composite n via Brent-cycle Pollard rho."""
    if n % 2 == 0:
        return 2
    # Deterministic schedule over the increment constant and starting point.
    for c in range(1, 64):
        y, m, g, r, q = 2 + c, 128, 1, 1, 1
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
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise FactorizationError(f"rho schedule exhausted on cofactor {n}")


def factorize(n: int, ceiling: int = FACTORIZATION_CEILING) -> list[int]:
    """Sorted prime factors of n with multiplicity; [] for n = 1.

    Trial division to 10^6, then Brent rho on what remains.  A composite
    cofactor above the ceiling raises FactorizationError naming it.
    """
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    factors: list[int] = []
    for p in (2, 3, 5):
        while n % p == 0:
            factors.append(p)
            n //= p
    f = 7
    while f <= TRIAL_DIVISION_BOUND and f * f <= n:
        for step in (0, 4, 6, 10, 12, 16, 22, 24):
            d = f + step
            while n % d == 0:
                factors.append(d)
                n //= d
        f += 30
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            factors.append(m)
            continue
        if m > ceiling:
            raise FactorizationError(f"composite cofactor {m} exceeds ceiling {ceiling}")
        d = _brent_rho(m)
        stack.append(d)
        stack.append(m // d)
    return sorted(factors)


def prime_divisors(n: int) -> list[int]:
    """Sorted distinct primes dividing n."""
    return sorted(set(factorize(n)))


def sqrt_mod(a: int, p: int) -> int:
    """A square root of a modulo odd prime p (Tonelli-Shanks); ValueError if none."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        raise ValueError(f"{a} is not a quadratic residue mod {p}")
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t = t * c % p
        r = r * b % p
    return r
