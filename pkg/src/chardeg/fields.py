"""Small finite fields with explicit element tables.

Elements of GF(r^m) are encoded as integers in [0, r^m): the base-r digits
of an encoding are the coefficients of a polynomial in the generator, least
degree first.  The modulus is the lexicographically least monic irreducible
polynomial of degree m over GF(r), ordering candidates by their coefficient
tuples in ascending degree, so every field here is reproducible.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .numbers import prime_divisors, prime_power_decomposition


def _poly_trim(a: tuple[int, ...]) -> tuple[int, ...]:
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return a[:i]


def _poly_mulmod_r(a, b, r):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % r
    return _poly_trim(tuple(out))


def _poly_mod(a, f, r):
    """a mod f for monic f, coefficients over GF(r)."""
    a = list(a)
    df = len(f) - 1
    inv_lead = 1  # f monic
    for top in range(len(a) - 1, df - 1, -1):
        c = a[top] * inv_lead % r
        if c:
            for i, y in enumerate(f):
                a[top - df + i] = (a[top - df + i] - c * y) % r
    return _poly_trim(tuple(a[:df]))


def _poly_gcd(a, b, r):
    a, b = _poly_trim(tuple(a)), _poly_trim(tuple(b))
    while b:
        inv = pow(b[-1], -1, r)
        monic_b = tuple(c * inv % r for c in b)
        a, b = monic_b, _poly_mod(a, monic_b, r)
    return a


def _poly_powmod(base, e, f, r):
    result = (1,)
    base = _poly_mod(base, f, r)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mulmod_r(result, base, r), f, r)
        base = _poly_mod(_poly_mulmod_r(base, base, r), f, r)
        e >>= 1
    return result


def _poly_sub(a, b, r):
    n = max(len(a), len(b))
    return _poly_trim(
        tuple(((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % r for i in range(n))
    )


def _is_irreducible(f: tuple[int, ...], r: int) -> bool:
    """Monic f of degree m is irreducible iff gcd(x^(r^d) - x, f) = 1 for
    all 1 <= d <= m/2."""
    m = len(f) - 1
    x = (0, 1)
    for d in range(1, m // 2 + 1):
        w = _poly_powmod(x, r**d, f, r)
        if len(_poly_gcd(_poly_sub(w, x, r), f, r)) != 1:
            return False
    return True


def _least_irreducible(r: int, m: int) -> tuple[int, ...]:
    if m == 1:
        return (0, 1)
    for low in product(range(r), repeat=m):
        f = low + (1,)
        if f[0] == 0:
            continue  # constant term 0 means x divides f
        if _is_irreducible(f, r):
            return f
    raise RuntimeError("no irreducible polynomial found")


class FiniteField:
    """GF(q) for a prime power q, with integer-encoded elements."""

    def __init__(self, q: int):
        r, m = prime_power_decomposition(q)
        self.q = q
        self.char = r
        self.degree = m
        self.modulus = _least_irreducible(r, m)
        self.zero = 0
        self.one = 1

    def vector(self, a: int) -> tuple[int, ...]:
        """Base-r digit vector of length m, least degree first."""
        out = []
        for _ in range(self.degree):
            out.append(a % self.char)
            a //= self.char
        return tuple(out)

    def from_vector(self, v) -> int:
        a = 0
        for c in reversed(tuple(v)):
            a = a * self.char + c % self.char
        return a

    def add(self, a: int, b: int) -> int:
        va, vb = self.vector(a), self.vector(b)
        return self.from_vector((x + y) % self.char for x, y in zip(va, vb))

    def neg(self, a: int) -> int:
        return self.from_vector((-x) % self.char for x in self.vector(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        pa = _poly_trim(self.vector(a))
        pb = _poly_trim(self.vector(b))
        prod = _poly_mod(_poly_mulmod_r(pa, pb, self.char), self.modulus, self.char)
        return self.from_vector(prod + (0,) * (self.degree - len(prod)))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        out = self.one
        while e:
            if e & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            e >>= 1
        return out

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self.pow(a, self.q - 2)

    @property
    def elements(self) -> range:
        return range(self.q)

    def primitive_element(self) -> int:
        """Least generator of the multiplicative group."""
        n = self.q - 1
        checks = [n // t for t in prime_divisors(n)] if n > 1 else []
        for g in range(1, self.q):
            if all(self.pow(g, c) != self.one for c in checks):
                return g
        raise RuntimeError("no primitive element found")


@lru_cache(maxsize=None)
def finite_field(q: int) -> FiniteField:
    return FiniteField(q)
