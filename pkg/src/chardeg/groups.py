"""Finite permutation groups with a base-and-strong-generating-set index.

A PermGroup is generated by permutations of {0, .., degree-1}.  The order
and membership tests come from a deterministic Schreier-Sims chain.  Two
shortcuts keep large but structurally simple inputs cheap: generators are
split into support-disjoint components (a direct product internally), and
a component with a single generator is handled as an explicit cyclic group
instead of building transversals.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import lcm

from .perms import (
    Perm,
    check_bijection,
    conjugate,
    identity_perm,
    inverse,
    is_identity,
    mult,
    perm_order,
    perm_power,
)

MAX_POINTS = 4096
ENUMERATION_CAP = 100_000


class GroupTooLargeError(Exception):
    """Raised when an operation needs more elements than the configured cap."""


class _Level:
    """One level of a stabilizer chain: base point, generators, transversal."""

    __slots__ = ("point", "gens", "transversal")

    def __init__(self, point: int, identity: Perm):
        self.point = point
        self.gens: list[Perm] = []
        self.transversal: dict[int, Perm] = {point: identity}


def _schreier_sims(gens: list[Perm], degree: int) -> list[_Level]:
    """Deterministic Schreier-Sims; returns the verified stabilizer chain."""
    identity = identity_perm(degree)
    levels: list[_Level] = []

    def chain_gens(idx: int) -> list[Perm]:
        # Level idx is generated by the residues stored at idx and deeper:
        # deeper residues fix this base point but can still grow its orbit.
        return [g for lv in levels[idx:] for g in lv.gens]

    def rebuild_orbit(idx: int, gens_here: list[Perm]) -> list[int]:
        level = levels[idx]
        trans = {level.point: identity}
        queue = [level.point]
        qi = 0
        while qi < len(queue):
            x = queue[qi]
            qi += 1
            ux = trans[x]
            for s in gens_here:
                y = s[x]
                if y not in trans:
                    trans[y] = mult(ux, s)
                    queue.append(y)
        level.transversal = trans
        return queue

    def sift(p: Perm, start: int) -> tuple[Perm, int]:
        for idx in range(start, len(levels)):
            lv = levels[idx]
            u = lv.transversal.get(p[lv.point])
            if u is None:
                return p, idx
            p = mult(p, inverse(u))
        return p, len(levels)

    def place(p: Perm, idx: int) -> int:
        """Append residue p at level idx, extending the base if needed."""
        if idx == len(levels):
            b = min(i for i in range(degree) if p[i] != i)
            levels.append(_Level(b, identity))
        levels[idx].gens.append(p)
        return idx

    for g in gens:
        residue, j = sift(g, 0)
        if not is_identity(residue):
            place(residue, j)

    # Verify levels bottom-up; adding a residue at level j restarts from j.
    i = len(levels) - 1
    while i >= 0:
        level = levels[i]
        gens_here = chain_gens(i)
        orbit = rebuild_orbit(i, gens_here)
        restart = -1
        for x in orbit:
            ux = level.transversal[x]
            for s in gens_here:
                sg = mult(mult(ux, s), inverse(level.transversal[s[x]]))
                residue, j = sift(sg, i + 1)
                if not is_identity(residue):
                    restart = place(residue, j)
                    break
            if restart >= 0:
                break
        i = restart if restart >= 0 else i - 1
    return levels


class _Component:
    """Generators whose supports form one connected block."""

    __slots__ = ("gens", "support", "_levels", "_cyclic_orbits")

    def __init__(self, gens: list[Perm], support: frozenset[int]):
        self.gens = gens
        self.support = support
        self._levels: list[_Level] | None = None
        self._cyclic_orbits = None

    @property
    def is_cyclic_shortcut(self) -> bool:
        return len(self.gens) == 1

    def order(self) -> int:
        if self.is_cyclic_shortcut:
            return perm_order(self.gens[0])
        out = 1
        for lv in self.levels():
            out *= len(lv.transversal)
        return out

    def levels(self) -> list[_Level]:
        if self._levels is None:
            self._levels = _schreier_sims(self.gens, len(self.gens[0]))
        return self._levels

    def contains(self, p: Perm) -> bool:
        """Membership of p looking only at this component's support."""
        if self.is_cyclic_shortcut:
            g = self.gens[0]
            b = min(self.support)
            # p[b] pins the exponent modulo the length of b's orbit; the
            # other cycles of g then leave order/orbit_len residues to try.
            k, x = 0, b
            target = p[b]
            while x != target:
                x = g[x]
                k += 1
                if x == b:
                    return False
            orbit_len = k + 1
            while g[x] != b:
                x = g[x]
                orbit_len += 1
            candidate = perm_power(g, k)
            step = perm_power(g, orbit_len)
            for _ in range(perm_order(g) // orbit_len):
                if all(candidate[i] == p[i] for i in self.support):
                    return True
                candidate = mult(candidate, step)
            return False
        for lv in self.levels():
            u = lv.transversal.get(p[lv.point])
            if u is None:
                return False
            p = mult(p, inverse(u))
        return all(p[i] == i for i in self.support)

    def random_element(self, rng: random.Random) -> Perm:
        if self.is_cyclic_shortcut:
            g = self.gens[0]
            return perm_power(g, rng.randrange(perm_order(g)))
        out = identity_perm(len(self.gens[0]))
        for lv in self.levels():
            pts = sorted(lv.transversal)
            out = mult(out, lv.transversal[rng.choice(pts)])
        return out


def _split_components(gens: list[Perm]) -> list[_Component]:
    """Partition generators into support-connected components."""
    supports = [frozenset(i for i, j in enumerate(g) if i != j) for g in gens]
    remaining = list(range(len(gens)))
    components = []
    while remaining:
        block = [remaining.pop(0)]
        points = set(supports[block[0]])
        grew = True
        while grew:
            grew = False
            for idx in remaining[:]:
                if supports[idx] & points:
                    block.append(idx)
                    points |= supports[idx]
                    remaining.remove(idx)
                    grew = True
        components.append(_Component([gens[i] for i in sorted(block)], frozenset(points)))
    return components


class PermGroup:
    """Group generated by permutations, all of the same degree."""

    def __init__(self, generators, degree: int | None = None, *, max_points: int = MAX_POINTS):
        gens: list[Perm] = []
        for g in generators:
            g = tuple(g)
            check_bijection(g)
            if not is_identity(g) and g not in gens:
                gens.append(g)
        if degree is None:
            if not gens:
                raise ValueError("degree required for a group with no moving generators")
            degree = len(gens[0])
        if degree > max_points:
            raise ValueError(f"degree {degree} exceeds the {max_points}-point cap")
        if any(len(g) != degree for g in gens):
            raise ValueError("generators act on different point sets")
        self.degree = degree
        self.generators = tuple(gens)
        self._components = _split_components(gens)
        self._order: int | None = None
        self._elements: list[Perm] | None = None
        self._abelian: bool | None = None

    @property
    def identity(self) -> Perm:
        return identity_perm(self.degree)

    @property
    def order(self) -> int:
        if self._order is None:
            out = 1
            for comp in self._components:
                out *= comp.order()
            self._order = out
        return self._order

    def is_trivial(self) -> bool:
        return not self.generators

    def is_abelian(self) -> bool:
        if self._abelian is None:
            gens = self.generators
            self._abelian = all(
                mult(a, b) == mult(b, a) for i, a in enumerate(gens) for b in gens[i + 1 :]
            )
        return self._abelian

    def contains(self, p) -> bool:
        p = tuple(p)
        if len(p) != self.degree:
            return False
        covered = set()
        for comp in self._components:
            covered |= comp.support
        if any(p[i] != i for i in range(self.degree) if i not in covered):
            return False
        for comp in self._components:
            if any(p[i] not in comp.support for i in comp.support):
                return False
            if not comp.contains(p):
                return False
        return True

    def random_element(self, rng: random.Random) -> Perm:
        out = self.identity
        for comp in self._components:
            out = mult(out, comp.random_element(rng))
        return out

    def elements(self, cap: int = ENUMERATION_CAP) -> list[Perm]:
        """All elements, lexicographically sorted; error beyond the cap."""
        if self._elements is None:
            if self._order is not None and self._order > cap:
                raise GroupTooLargeError(f"group of order {self._order} exceeds cap {cap}")
            seen = {self.identity}
            frontier = [self.identity]
            while frontier:
                nxt = []
                for x in frontier:
                    for g in self.generators:
                        y = mult(x, g)
                        if y not in seen:
                            seen.add(y)
                            nxt.append(y)
                            if len(seen) > cap:
                                raise GroupTooLargeError(
                                    f"group too large for enumeration (cap {cap})"
                                )
                frontier = nxt
            assert len(seen) == self.order, "closure disagrees with the stabilizer chain"
            self._elements = sorted(seen)
        return self._elements

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, ngens={len(self.generators)})"


@dataclass(frozen=True)
class ClassStructure:
    """Conjugacy classes with canonical (lexicographically least) representatives.

    Class 0 is the identity class; classes are sorted by representative, and
    class_of indexes every enumerated element.  inverse_class[j] is the class
    containing the inverses of class j.
    """

    group: PermGroup = field(repr=False)
    reps: tuple[Perm, ...]
    sizes: tuple[int, ...]
    class_of: dict[Perm, int] = field(repr=False)
    inverse_class: tuple[int, ...]
    order: int

    def exponent(self) -> int:
        """Group exponent, the lcm of the representative orders."""
        return lcm(*(perm_order(r) for r in self.reps))

    def members(self, j: int) -> list[Perm]:
        """Sorted elements of class j."""
        return sorted(el for el, c in self.class_of.items() if c == j)


def conjugacy_classes(G: PermGroup, cap: int = ENUMERATION_CAP) -> ClassStructure:
    """Full class partition of G; requires |G| within the enumeration cap."""
    elements = G.elements(cap)
    gens = G.generators
    class_of: dict[Perm, int] = {}
    reps: list[Perm] = []
    sizes: list[int] = []
    for el in elements:
        if el in class_of:
            continue
        idx = len(reps)
        members = [el]
        class_of[el] = idx
        qi = 0
        while qi < len(members):
            x = members[qi]
            qi += 1
            for g in gens:
                y = conjugate(x, g)
                if y not in class_of:
                    class_of[y] = idx
                    members.append(y)
        reps.append(el)
        sizes.append(len(members))
    inverse_class = tuple(class_of[inverse(r)] for r in reps)
    assert inverse_class[0] == 0 and sum(sizes) == G.order
    assert all(inverse_class[inverse_class[j]] == j for j in range(len(reps)))
    return ClassStructure(
        group=G,
        reps=tuple(reps),
        sizes=tuple(sizes),
        class_of=class_of,
        inverse_class=inverse_class,
        order=G.order,
    )
