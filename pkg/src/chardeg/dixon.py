"""Exact irreducible character degrees via modular class-algebra splitting.

The degrees of the complex irreducible characters of a finite group are
recovered without any floating point: structure constants of the class
algebra are reduced modulo a prime l = 1 (mod exponent), the common
eigenvectors of the class-sum matrices over F_l are the reductions of the
central characters, and each degree is recovered from its square modulo l
and lifted to the unique integer below l/2.

All linear algebra is dense numpy arithmetic on int64 arrays mod l, with a
deterministic root-splitting schedule, so repeated runs agree exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

import numpy as np

from .groups import ENUMERATION_CAP, ClassStructure, PermGroup, conjugacy_classes
from .numbers import is_prime, sqrt_mod
from .perms import inverse, mult

CLASS_CAP = 150


class ClassCountError(Exception):
    """Raised when a group has more conjugacy classes than the solver cap."""


@dataclass(frozen=True)
class DegreeSpectrum:
    """Sorted multiset of irreducible character degrees of a group."""

    degrees: tuple[int, ...]
    group_order: int

    def __post_init__(self):
        assert self.degrees == tuple(sorted(self.degrees))
        assert sum(d * d for d in self.degrees) == self.group_order

    def count(self, d: int) -> int:
        """Multiplicity of degree d in the spectrum."""
        return sum(1 for x in self.degrees if x == d)


def class_matrix(cs: ClassStructure, i: int) -> list[list[int]]:
    """Structure-constant matrix of class i.

    Entry [j][k] counts pairs (x, y) with x in class i, y in class k and
    xy equal to the fixed representative of class j.  Row sums equal the
    size of class i, and row 0 is supported on the inverse class of i.
    """
    k = len(cs.reps)
    M = [[0] * k for _ in range(k)]
    for x in cs.members(i):
        xi = inverse(x)
        for j, z in enumerate(cs.reps):
            M[j][cs.class_of[mult(xi, z)]] += 1
    return M


def choose_modulus(order: int, exponent: int, min_value: int = 0) -> int:
    """Least prime l = 1 (mod exponent) with l*l > 4*order and l > min_value."""
    ell = exponent + 1
    while True:
        if ell * ell > 4 * order and ell > min_value and is_prime(ell):
            return ell
        ell += exponent


def _trim(a: np.ndarray) -> np.ndarray:
    nz = np.nonzero(a)[0]
    return a[: nz[-1] + 1] if len(nz) else a[:1]


def _poly_mul(a: np.ndarray, b: np.ndarray, ell: int) -> np.ndarray:
    return _trim(np.convolve(a, b) % ell)


def _poly_monic(a: np.ndarray, ell: int) -> np.ndarray:
    a = _trim(a % ell)
    lead = int(a[-1])
    if lead != 1:
        a = a * pow(lead, -1, ell) % ell
    return a


def _poly_mod(a: np.ndarray, f: np.ndarray, ell: int) -> np.ndarray:
    """Remainder of a modulo monic f."""
    a = a.copy() % ell
    df = len(f) - 1
    for top in range(len(a) - 1, df - 1, -1):
        c = int(a[top])
        if c:
            a[top - df : top + 1] = (a[top - df : top + 1] - c * f) % ell
    return _trim(a)


def _poly_gcd(a: np.ndarray, b: np.ndarray, ell: int) -> np.ndarray:
    a, b = _trim(a % ell), _trim(b % ell)
    while len(b) > 1 or b[0] != 0:
        b = _poly_monic(b, ell)
        a, b = b, _poly_mod(a, b, ell)
    return _poly_monic(a, ell)


def _poly_powmod(base: np.ndarray, e: int, f: np.ndarray, ell: int) -> np.ndarray:
    result = np.array([1], dtype=np.int64)
    base = _poly_mod(base, f, ell)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, base, ell), f, ell)
        base = _poly_mod(_poly_mul(base, base, ell), f, ell)
        e >>= 1
    return result


def _distinct_roots(c: np.ndarray, ell: int) -> list[int]:
    """All roots in F_l of a polynomial known to split over F_l, each once."""
    c = _poly_monic(c, ell)
    deriv = _trim((c[1:] * np.arange(1, len(c), dtype=np.int64)) % ell)
    square_part = _poly_gcd(c, deriv, ell)
    f = _poly_exact_div(c, square_part, ell) if len(square_part) > 1 else c
    roots: list[int] = []
    stack = [f]
    shift = 0
    half = (ell - 1) // 2
    while stack:
        g = stack.pop()
        deg = len(g) - 1
        if deg == 0:
            continue
        if deg == 1:
            roots.append((-int(g[0])) % ell)
            continue
        if deg == 2:
            b, c0 = int(g[1]), int(g[0])
            disc = (b * b - 4 * c0) % ell
            r = sqrt_mod(disc, ell)
            inv2 = pow(2, -1, ell)
            roots.append((-b + r) * inv2 % ell)
            roots.append((-b - r) * inv2 % ell)
            continue
        while True:
            base = np.array([shift, 1], dtype=np.int64)
            shift += 1
            if shift > 4 * ell:
                raise RuntimeError("root splitting failed to make progress")
            w = _poly_powmod(base, half, g, ell).copy()
            w[0] = (w[0] - 1) % ell
            h = _poly_gcd(g, w, ell)
            if 0 < len(h) - 1 < deg:
                stack.append(h)
                stack.append(_poly_exact_div(g, h, ell))
                break
    return sorted(roots)


def _poly_exact_div(a: np.ndarray, b: np.ndarray, ell: int) -> np.ndarray:
    """Quotient a / b for monic b dividing a exactly."""
    a = a.copy() % ell
    db = len(b) - 1
    out = np.zeros(len(a) - db, dtype=np.int64)
    for top in range(len(a) - 1, db - 1, -1):
        c = int(a[top])
        out[top - db] = c
        if c:
            a[top - db : top + 1] = (a[top - db : top + 1] - c * b) % ell
    assert db == 0 or not np.any(a[:db]), "division was not exact"
    return _trim(out)


def _rref(M: np.ndarray, ell: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod l; returns nonzero rows and pivot columns."""
    A = M.copy() % ell
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if len(nz) == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            A[[r, p]] = A[[p, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, ell) % ell
        other = [i for i in range(rows) if i != r and A[i, c] != 0]
        if other:
            A[other] = (A[other] - np.outer(A[other, c], A[r])) % ell
        pivots.append(c)
        r += 1
    return A[:r], pivots


def _nullspace(M: np.ndarray, ell: int) -> np.ndarray:
    """Rows spanning the kernel of M (acting on row vectors v: v M^T = 0 is
    not meant here; this is the usual kernel  {x : M x = 0}  as row vectors)."""
    R, pivots = _rref(M, ell)
    n = M.shape[1]
    free = [c for c in range(n) if c not in pivots]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for idx, fc in enumerate(free):
        basis[idx, fc] = 1
        for r, pc in enumerate(pivots):
            basis[idx, pc] = (-int(R[r, fc])) % ell
    return basis


def _charpoly(R: np.ndarray, ell: int) -> np.ndarray:
    """Characteristic polynomial of R mod l, ascending coefficients, monic."""
    H = R.copy() % ell
    n = H.shape[0]
    for j in range(n - 2):
        col = H[j + 1 :, j]
        nz = np.nonzero(col)[0]
        if len(nz) == 0:
            continue
        p = j + 1 + int(nz[0])
        if p != j + 1:
            H[[j + 1, p]] = H[[p, j + 1]]
            H[:, [j + 1, p]] = H[:, [p, j + 1]]
        ipiv = pow(int(H[j + 1, j]), -1, ell)
        factors = H[j + 2 :, j] * ipiv % ell
        if np.any(factors):
            H[j + 2 :, :] = (H[j + 2 :, :] - np.outer(factors, H[j + 1, :])) % ell
            H[:, j + 1] = (H[:, j + 1] + H[:, j + 2 :] @ factors) % ell
    polys = [np.array([1], dtype=np.int64)]
    for m in range(1, n + 1):
        prev = polys[m - 1]
        p = np.zeros(m + 1, dtype=np.int64)
        p[1:] += prev
        p[:-1] -= int(H[m - 1, m - 1]) * prev
        beta = 1
        for t in range(m - 1, 0, -1):
            beta = beta * int(H[t, t - 1]) % ell
            coeff = int(H[t - 1, m - 1]) * beta % ell
            if coeff:
                p[:t] -= coeff * polys[t - 1]
        polys.append(p % ell)
    return polys[n]


class _ClassMatrixBuilder:
    """Vectorized structure-constant matrices in the transposed arrangement
    used by the eigen splitter: A_i[j, k] counts x in class i with
    x^{-1} z_k in class j, so that A_i w = w_i w for central characters w."""

    def __init__(self, cs: ClassStructure):
        self.cs = cs
        elements = cs.group.elements()
        rows = np.array(elements, dtype=np.int32)
        self.class_key = {
            rows[idx].tobytes(): cs.class_of[el] for idx, el in enumerate(elements)
        }
        k = len(cs.reps)
        members: list[list[int]] = [[] for _ in range(k)]
        for idx, el in enumerate(elements):
            members[cs.class_of[el]].append(idx)
        self.member_rows = [rows[m] for m in members]
        self.rep_arrays = [np.array(r, dtype=np.int32) for r in cs.reps]

    def matrix(self, i: int) -> np.ndarray:
        cs = self.cs
        k = len(cs.reps)
        X = self.member_rows[cs.inverse_class[i]]
        A = np.zeros((k, k), dtype=np.int64)
        for kk in range(k):
            Y = self.rep_arrays[kk][X]
            js = [self.class_key[row.tobytes()] for row in Y]
            A[:, kk] = np.bincount(js, minlength=k)
        return A


def dixon_degrees(cs: ClassStructure, class_cap: int = CLASS_CAP) -> DegreeSpectrum:
    """Character degree spectrum from a class structure."""
    k = len(cs.reps)
    if k > class_cap:
        raise ClassCountError(f"{k} classes exceed the solver cap of {class_cap}")
    order = cs.order
    if k == 1:
        return DegreeSpectrum((1,), 1)
    ell = choose_modulus(order, cs.exponent(), min_value=k)
    builder = _ClassMatrixBuilder(cs)

    # Intersect eigenspaces class by class until all common spaces are lines.
    spaces: list[tuple[np.ndarray, list[int]]] = [_rref(np.eye(k, dtype=np.int64), ell)]
    class_order = sorted(range(1, k), key=lambda i: (cs.sizes[i], i))
    for i in class_order:
        if all(B.shape[0] == 1 for B, _ in spaces):
            break
        A = builder.matrix(i) % ell
        At = A.T.copy()
        next_spaces: list[tuple[np.ndarray, list[int]]] = []
        for B, pivots in spaces:
            dim = B.shape[0]
            if dim == 1:
                next_spaces.append((B, pivots))
                continue
            W = B @ At % ell
            R = W[:, pivots]
            assert np.array_equal(W, R @ B % ell), "space was not invariant"
            roots = _distinct_roots(_charpoly(R, ell), ell)
            if len(roots) == 1:
                next_spaces.append((B, pivots))
                continue
            total = 0
            for lam in roots:
                # coefficient rows transform as c -> c R, so eigenrows for lam
                # form the kernel of (R - lam I) transposed
                K = _nullspace((R - lam * np.eye(dim, dtype=np.int64)).T % ell, ell)
                total += K.shape[0]
                next_spaces.append(_rref(K @ B % ell, ell))
            assert total == dim, "eigenspaces do not fill the space"
        spaces = next_spaces
    assert all(B.shape[0] == 1 for B, _ in spaces), "splitting incomplete"

    inv_sizes = [pow(h, -1, ell) for h in cs.sizes]
    degrees = []
    bound = isqrt(order)
    for B, _ in spaces:
        v = B[0]
        assert v[0] != 0, "central character vanishes on the identity class"
        omega = v * pow(int(v[0]), -1, ell) % ell
        s = 0
        for j in range(k):
            s = (s + int(omega[j]) * int(omega[cs.inverse_class[j]]) * inv_sizes[j]) % ell
        d2 = order * pow(s, -1, ell) % ell
        d = sqrt_mod(d2, ell)
        d = min(d, ell - d)
        assert 1 <= d <= bound and order % d == 0, "degree lift out of range"
        degrees.append(d)
    degrees.sort()
    assert len(degrees) == k
    return DegreeSpectrum(tuple(degrees), order)


def degree_spectrum(
    G: PermGroup,
    *,
    factors: list[PermGroup] | None = None,
    enumeration_cap: int = ENUMERATION_CAP,
    class_cap: int = CLASS_CAP,
) -> DegreeSpectrum:
    """Spectrum of G: all ones for abelian groups, a pointwise product over
    explicit direct factors, and the modular solver otherwise."""
    if factors:
        spectra = [
            degree_spectrum(F, enumeration_cap=enumeration_cap, class_cap=class_cap)
            for F in factors
        ]
        degrees = [1]
        order = 1
        for sp in spectra:
            degrees = [a * b for a in degrees for b in sp.degrees]
            order *= sp.group_order
        assert order == G.order, "factor orders disagree with the product group"
        return DegreeSpectrum(tuple(sorted(degrees)), order)
    if G.is_abelian():
        return DegreeSpectrum((1,) * G.order, G.order)
    return dixon_degrees(conjugacy_classes(G, enumeration_cap), class_cap)
