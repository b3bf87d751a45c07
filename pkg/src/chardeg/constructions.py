"""Named finite groups, a recipe grammar, and a deterministic catalog.

Recipes are strings like "sym:4", "frob:7:1:3", or "extraspecial:3xcyclic:2"
(direct products join atoms with "x").  Parsing validates parameters and
records the declared order; building returns the permutation group together
with split-extension data for the affine and Frobenius constructions, which
downstream orbit computations consume.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import factorial

from .dixon import CLASS_CAP, DegreeSpectrum, degree_spectrum
from .fields import finite_field
from .groups import MAX_POINTS, PermGroup
from .numbers import is_prime, is_prime_power, prime_power_decomposition
from .perms import Perm, from_cycles

ABELIAN_PAIR_CAP = 32
FROBENIUS_FIELD_CAP = 128
PSL2_CATALOG_MAX = 13
_PRODUCT_POOL_LEFT = (
    "sym:3",
    "sym:4",
    "alt:4",
    "alt:5",
    "dihedral:4",
    "dihedral:5",
    "extraspecial:3",
    "psl2:7",
)
_PRODUCT_POOL_EXTRA = ("sym:3xsym:3", "sym:3xalt:4", "sym:3xsym:4")


@dataclass(frozen=True)
class SplitExtensionData:
    """A split extension V . H with V elementary abelian of rank m over GF(r).

    kernel_gens are the translations spanning V and complement_gens generate
    H.  complement_matrices[i] describes conjugation by complement_gens[i]
    on exponent column vectors: conjugating kernel_gens[j] sends it to the
    product of kernel generators with exponents in column j of the matrix.
    """

    r: int
    m: int
    kernel_gens: tuple[Perm, ...]
    complement_gens: tuple[Perm, ...]
    complement_matrices: tuple[tuple[tuple[int, ...], ...], ...]


@dataclass(frozen=True)
class GroupRecipe:
    """A validated group description with its declared order."""

    spec: str
    kind: str
    params: tuple[int, ...]
    order: int
    factors: tuple["GroupRecipe", ...] = ()


@dataclass(frozen=True)
class BuiltGroup:
    recipe: GroupRecipe
    group: PermGroup
    split: SplitExtensionData | None = None
    factors: tuple["BuiltGroup", ...] = ()


def cyclic(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("cyclic order must be positive")
    if n == 1:
        return PermGroup([], degree=1)
    return PermGroup([from_cycles([tuple(range(n))], n)])


def dihedral(n: int) -> PermGroup:
    """Symmetries of a regular n-gon, order 2n, n >= 3."""
    if n < 3:
        raise ValueError("dihedral index must be at least 3")
    rotation = from_cycles([tuple(range(n))], n)
    reflection = tuple((n - i) % n for i in range(n))
    return PermGroup([rotation, reflection])


def dihedral_class_count(n: int) -> int:
    return n // 2 + 3 if n % 2 == 0 else (n + 3) // 2


def sym(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("symmetric index must be positive")
    if n == 1:
        return PermGroup([], degree=1)
    gens = [from_cycles([(0, 1)], n)]
    if n > 2:
        gens.append(from_cycles([tuple(range(n))], n))
    return PermGroup(gens)


def alt(n: int) -> PermGroup:
    if n < 3:
        raise ValueError("alternating index must be at least 3")
    gens = [from_cycles([(0, 1, 2)], n)]
    if n > 3:
        if n % 2 == 1:
            gens.append(from_cycles([tuple(range(n))], n))
        else:
            gens.append(from_cycles([tuple(range(1, n))], n))
    return PermGroup(gens)


def _translation_perm(F, basis_elt: int) -> Perm:
    return tuple(F.add(x, basis_elt) for x in F.elements)


def _multiplier_perm(F, s: int) -> Perm:
    return tuple(F.mul(s, x) for x in F.elements)


def _multiplier_matrix(F, s: int) -> tuple[tuple[int, ...], ...]:
    """Matrix of x -> s*x in the power basis 1, a, .., a^(m-1), row-major."""
    cols = [F.vector(F.mul(s, F.char**j)) for j in range(F.degree)]
    return tuple(tuple(cols[j][i] for j in range(F.degree)) for i in range(F.degree))


def frobenius(r: int, m: int, d: int) -> tuple[PermGroup, SplitExtensionData]:
    """GF(r^m)+ extended by the order-d subgroup of the multiplicative group.

    d must divide r^m - 1; d = 1 gives the elementary abelian kernel alone
    and d = r^m - 1 recovers the full one-dimensional affine group.
    """
    if not is_prime(r):
        raise ValueError(f"{r} is not prime")
    if m < 1:
        raise ValueError("field degree must be positive")
    q = r**m
    if q > MAX_POINTS:
        raise ValueError(f"field size {q} exceeds the point cap")
    if d < 1 or (q - 1) % d != 0:
        raise ValueError(f"order {d} does not divide {q - 1}")
    F = finite_field(q)
    kernel = tuple(_translation_perm(F, r**i) for i in range(m))
    if d > 1:
        s = F.pow(F.primitive_element(), (q - 1) // d)
        complement = (_multiplier_perm(F, s),)
        matrices = (_multiplier_matrix(F, s),)
    else:
        complement = ()
        matrices = ()
    G = PermGroup(list(kernel) + list(complement), degree=q)
    assert G.order == q * d
    return G, SplitExtensionData(r, m, kernel, complement, matrices)


def agl1(q: int) -> tuple[PermGroup, SplitExtensionData]:
    """One-dimensional affine group x -> ax + b over GF(q), order q(q-1)."""
    r, m = prime_power_decomposition(q)
    return frobenius(r, m, q - 1)


PSL2_SUPPORTED = frozenset({4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27})


def psl2(q: int, supported: frozenset[int] = PSL2_SUPPORTED) -> PermGroup:
    """PSL_2(q) acting on the q + 1 points of the projective line."""
    if not is_prime_power(q) or q < 4:
        raise ValueError("psl2 requires a prime power q >= 4")
    if q not in supported:
        raise ValueError(f"psl2({q}) is outside the supported set {sorted(supported)}")
    if q + 1 > MAX_POINTS:
        raise ValueError(f"projective line over GF({q}) exceeds the point cap")
    F = finite_field(q)
    r = F.char

    # points: (0, 1) then (1, x); a projective point is normalized so that
    # its first nonzero coordinate is 1
    points = [(0, 1)] + [(1, x) for x in F.elements]
    index = {pt: i for i, pt in enumerate(points)}

    def normalize(a: int, b: int) -> tuple[int, int]:
        if a != 0:
            return (1, F.mul(F.inv(a), b))
        return (0, 1)

    def matrix_perm(mat) -> Perm:
        (m00, m01), (m10, m11) = mat
        images = []
        for a, b in points:
            na = F.add(F.mul(m00, a), F.mul(m01, b))
            nb = F.add(F.mul(m10, a), F.mul(m11, b))
            images.append(index[normalize(na, nb)])
        return tuple(images)

    gens = [matrix_perm(((1, r**i), (0, 1))) for i in range(F.degree)]
    gens.append(matrix_perm(((0, 1), (F.neg(1), 0))))
    G = PermGroup(gens, degree=q + 1)
    expected = q * (q * q - 1) // (2 if q % 2 else 1)
    assert G.order == expected
    return G


def extraspecial(p: int) -> PermGroup:
    """Extraspecial group of order p^3 and exponent p, for p in {3, 5}."""
    if p not in (3, 5):
        raise ValueError("extraspecial recipe supports p in {3, 5}")
    cube = p**3

    def idx(a: int, b: int, c: int) -> int:
        return (a * p + b) * p + c

    def right_mult(da: int, db: int, dc: int) -> Perm:
        images = [0] * cube
        for a in range(p):
            for b in range(p):
                for c in range(p):
                    images[idx(a, b, c)] = idx(
                        (a + da) % p, (b + db) % p, (c + dc + a * db) % p
                    )
        return tuple(images)

    G = PermGroup([right_mult(1, 0, 0), right_mult(0, 1, 0)], degree=cube)
    assert G.order == cube
    return G


def direct_product(groups: list[PermGroup]) -> PermGroup:
    """Internal direct product on the disjoint union of the point sets."""
    degree = sum(g.degree for g in groups)
    gens = []
    offset = 0
    for g in groups:
        ident = tuple(range(degree))
        for gen in g.generators:
            shifted = list(ident)
            for i, img in enumerate(gen):
                shifted[offset + i] = offset + img
            gens.append(tuple(shifted))
        offset += g.degree
    return PermGroup(gens, degree=degree)


_ATOM_ORDERS = {
    "cyclic": lambda n: n,
    "dihedral": lambda n: 2 * n,
    "sym": factorial,
    "alt": lambda n: factorial(n) // 2,
}


def _parse_atom(text: str) -> GroupRecipe:
    parts = text.split(":")
    kind, raw = parts[0], parts[1:]
    if not raw or not all(re.fullmatch(r"[0-9]+", x) for x in raw):
        raise ValueError(f"malformed group spec atom {text!r}")
    params = tuple(int(x) for x in raw)

    def arity(k: int):
        if len(params) != k:
            raise ValueError(f"{kind} takes {k} parameter(s), got {text!r}")

    if kind in ("cyclic", "dihedral", "sym", "alt"):
        arity(1)
        n = params[0]
        if kind == "cyclic" and n < 1:
            raise ValueError("cyclic order must be positive")
        if kind == "dihedral" and n < 3:
            raise ValueError("dihedral index must be at least 3")
        if kind == "sym" and n < 1:
            raise ValueError("symmetric index must be positive")
        if kind == "alt" and n < 3:
            raise ValueError("alternating index must be at least 3")
        order = _ATOM_ORDERS[kind](n)
    elif kind == "agl1":
        arity(1)
        q = params[0]
        if not is_prime_power(q):
            raise ValueError(f"agl1 requires a prime power, got {q}")
        order = q * (q - 1)
    elif kind == "frob":
        arity(3)
        r, m, d = params
        if not is_prime(r):
            raise ValueError(f"frob base {r} is not prime")
        if m < 1 or d < 1 or (r**m - 1) % d != 0:
            raise ValueError(f"frob order {d} must divide {r}^{m} - 1")
        order = r**m * d
    elif kind == "psl2":
        arity(1)
        q = params[0]
        if not is_prime_power(q) or q < 4:
            raise ValueError("psl2 requires a prime power q >= 4")
        order = q * (q * q - 1) // (2 if q % 2 else 1)
    elif kind == "extraspecial":
        arity(1)
        if params[0] not in (3, 5):
            raise ValueError("extraspecial recipe supports p in {3, 5}")
        order = params[0] ** 3
    else:
        raise ValueError(f"unknown group kind {kind!r}")
    return GroupRecipe(spec=text, kind=kind, params=params, order=order)


def parse_group_spec(text: str) -> GroupRecipe:
    """Parse a recipe string; products join atoms with "x" between a digit
    and a letter, as in "sym:3xalt:4"."""
    text = text.strip()
    if not text:
        raise ValueError("empty group spec")
    parts = re.split(r"(?<=\d)x(?=[a-z])", text)
    atoms = tuple(_parse_atom(p) for p in parts)
    if len(atoms) == 1:
        return atoms[0]
    order = 1
    for a in atoms:
        order *= a.order
    return GroupRecipe(
        spec="x".join(a.spec for a in atoms),
        kind="product",
        params=(),
        order=order,
        factors=atoms,
    )


def build(recipe: GroupRecipe) -> BuiltGroup:
    """Construct the permutation group a recipe describes."""
    if recipe.kind == "product":
        factors = tuple(build(f) for f in recipe.factors)
        G = direct_product([f.group for f in factors])
        built = BuiltGroup(recipe=recipe, group=G, factors=factors)
    elif recipe.kind == "cyclic":
        built = BuiltGroup(recipe, cyclic(recipe.params[0]))
    elif recipe.kind == "dihedral":
        built = BuiltGroup(recipe, dihedral(recipe.params[0]))
    elif recipe.kind == "sym":
        built = BuiltGroup(recipe, sym(recipe.params[0]))
    elif recipe.kind == "alt":
        built = BuiltGroup(recipe, alt(recipe.params[0]))
    elif recipe.kind == "agl1":
        G, split = agl1(recipe.params[0])
        built = BuiltGroup(recipe, G, split=split)
    elif recipe.kind == "frob":
        G, split = frobenius(*recipe.params)
        built = BuiltGroup(recipe, G, split=split)
    elif recipe.kind == "psl2":
        built = BuiltGroup(recipe, psl2(recipe.params[0]))
    elif recipe.kind == "extraspecial":
        built = BuiltGroup(recipe, extraspecial(recipe.params[0]))
    else:
        raise ValueError(f"unknown group kind {recipe.kind!r}")
    assert built.group.order == recipe.order, "declared order mismatch"
    return built


def spectrum_of(built: BuiltGroup, class_cap: int = CLASS_CAP) -> DegreeSpectrum:
    """Character degree spectrum, multiplying factor spectra for products."""
    if built.factors:
        return degree_spectrum(
            built.group,
            factors=[f.group for f in built.factors],
            class_cap=class_cap,
        )
    return degree_spectrum(built.group, class_cap=class_cap)


def iter_catalog(max_order: int):
    """Yield catalog recipes with order at most max_order, sorted by
    (order, spec).  The catalog covers cyclic groups, abelian pairs,
    dihedral groups within the class cap, small symmetric and alternating
    groups, affine and Frobenius groups, PSL_2, extraspecial groups, and a
    fixed pool of direct products."""
    specs: list[str] = []
    specs.extend(f"cyclic:{n}" for n in range(1, max_order + 1))
    for a in range(2, ABELIAN_PAIR_CAP + 1):
        for b in range(a, max_order // a + 1):
            specs.append(f"cyclic:{a}xcyclic:{b}")
    for n in range(4, max_order // 2 + 1):
        if dihedral_class_count(n) <= CLASS_CAP:
            specs.append(f"dihedral:{n}")
    specs.extend(f"sym:{n}" for n in range(3, 8) if factorial(n) <= max_order)
    specs.extend(f"alt:{n}" for n in range(4, 9) if factorial(n) // 2 <= max_order)
    for q in range(3, MAX_POINTS):
        if is_prime_power(q) and q * (q - 1) <= max_order:
            specs.append(f"agl1:{q}")
    for q in range(3, FROBENIUS_FIELD_CAP + 1):
        if not is_prime_power(q):
            continue
        r, m = prime_power_decomposition(q)
        for d in range(2, q - 1):
            if (q - 1) % d == 0 and q * d <= max_order:
                specs.append(f"frob:{r}:{m}:{d}")
    for q in (4, 5, 7, 8, 9, 11, 13):
        if q <= PSL2_CATALOG_MAX:
            order = q * (q * q - 1) // (2 if q % 2 else 1)
            if order <= max_order:
                specs.append(f"psl2:{q}")
    for p in (3, 5):
        if p**3 <= max_order:
            specs.append(f"extraspecial:{p}")
    for left in _PRODUCT_POOL_LEFT:
        left_order = parse_group_spec(left).order
        for m in range(2, 8):
            if left_order * m <= max_order:
                specs.append(f"{left}xcyclic:{m}")
    for spec in _PRODUCT_POOL_EXTRA:
        if parse_group_spec(spec).order <= max_order:
            specs.append(spec)

    recipes = [parse_group_spec(s) for s in sorted(set(specs))]
    recipes = [r for r in recipes if r.order <= max_order]
    recipes.sort(key=lambda r: (r.order, r.spec))
    yield from recipes


def catalog(max_order: int) -> list[GroupRecipe]:
    return list(iter_catalog(max_order))
