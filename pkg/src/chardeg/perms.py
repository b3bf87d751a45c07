"""Permutations on {0, ..., n-1} represented as tuples of images.

A permutation ``p`` sends point ``i`` to ``p[i]``.  Products compose left
to right: ``mult(p, q)`` acts as "apply p, then q", so that the image of
``i`` under the product is ``q[p[i]]``.
"""

from __future__ import annotations

from math import lcm

Perm = tuple[int, ...]


def identity_perm(n: int) -> Perm:
    """The identity permutation on n points."""
    return tuple(range(n))


def is_identity(p: Perm) -> bool:
    """True iff p fixes every point."""
    return all(p[i] == i for i in range(len(p)))


def mult(p: Perm, q: Perm) -> Perm:
    """Product "p then q": i -> q[p[i]]."""
    return tuple(q[i] for i in p)


def inverse(p: Perm) -> Perm:
    """The two-sided inverse of p."""
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def conjugate(p: Perm, g: Perm) -> Perm:
    """g^-1 * p * g, the conjugate of p by g."""
    gi = inverse(g)
    return tuple(g[p[gi[i]]] for i in range(len(p)))


def commutator(a: Perm, b: Perm) -> Perm:
    """a^-1 * b^-1 * a * b."""
    return mult(mult(inverse(a), inverse(b)), mult(a, b))


def perm_order(p: Perm) -> int:
    """Multiplicative order, the lcm of the cycle lengths."""
    return lcm(*(len(c) for c in cycles(p))) if len(p) else 1


def perm_power(p: Perm, k: int) -> Perm:
    """k-th power of p (k may be negative)."""
    n = len(p)
    if k < 0:
        p, k = inverse(p), -k
    result = identity_perm(n)
    base = p
    while k:
        if k & 1:
            result = mult(result, base)
        base = mult(base, base)
        k >>= 1
    return result


def cycles(p: Perm) -> list[tuple[int, ...]]:
    """Cycle decomposition including fixed points, each cycle led by its minimum."""
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        j = p[start]
        while j != start:
            seen[j] = True
            cyc.append(j)
            j = p[j]
        out.append(tuple(cyc))
    return out


def from_cycles(cyclist: list[tuple[int, ...]], n: int) -> Perm:
    """Permutation on n points from disjoint cycles given as point tuples."""
    images = list(range(n))
    for cyc in cyclist:
        for i, pt in enumerate(cyc):
            images[pt] = cyc[(i + 1) % len(cyc)]
    return tuple(images)


def check_bijection(p: Perm) -> None:
    """Raise ValueError unless p is a bijection on {0, ..., len(p)-1}."""
    if sorted(p) != list(range(len(p))):
        raise ValueError(f"not a permutation of 0..{len(p) - 1}: {p!r}")
