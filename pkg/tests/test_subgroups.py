"""Tests for subgroup operations: derived series, Sylow subgroups, quotients."""

import random

from chardeg.groups import PermGroup, conjugacy_classes
from chardeg.perms import conjugate, identity_perm, inverse, mult
from chardeg.subgroups import (
    derived_series,
    derived_subgroup,
    is_normal,
    is_solvable,
    normal_closure,
    normalizer,
    p_residual,
    quotient_group,
    subgroup,
    sylow,
)

from support import group_of


def test_derived_subgroup():
    assert derived_subgroup(group_of("sym:4")).group.order == 12
    assert derived_subgroup(group_of("alt:5")).group.order == 60
    assert derived_subgroup(group_of("cyclic:12")).group.order == 1
    assert derived_subgroup(group_of("dihedral:6")).group.order == 3
    assert derived_subgroup(group_of("frob:7:1:3")).group.order == 7


def test_derived_subgroup_is_normal_with_abelian_quotient():
    for spec in ["sym:4", "dihedral:10", "frob:5:1:4", "agl1:9"]:
        G = group_of(spec)
        D = derived_subgroup(G)
        assert is_normal(G, D)
        Q = quotient_group(G, D)
        assert Q.is_abelian()
        assert Q.order * D.group.order == G.order


def test_derived_series_strictly_decreases_until_stable():
    G = group_of("sym:4")
    series = derived_series(G)
    orders = [H.order for H in series]
    assert orders == [24, 12, 4, 1]

    P = group_of("alt:5")
    assert [H.order for H in derived_series(P)][-1] == 60


def test_is_solvable():
    assert is_solvable(group_of("sym:4"))
    assert is_solvable(group_of("extraspecial:3"))
    assert is_solvable(group_of("frob:13:1:4"))
    assert not is_solvable(group_of("alt:5"))
    assert not is_solvable(group_of("psl2:7"))
    assert not is_solvable(group_of("sym:5"))


def test_sylow_orders():
    assert sylow(group_of("cyclic:6"), 3).group.order == 3
    assert sylow(group_of("sym:4"), 2).group.order == 8
    assert sylow(group_of("alt:5"), 5).group.order == 5
    assert sylow(group_of("alt:5"), 2).group.order == 4
    assert sylow(group_of("psl2:7"), 7).group.order == 7
    assert sylow(group_of("psl2:7"), 2).group.order == 8
    assert sylow(group_of("sym:4"), 5).group.order == 1


def test_sylow_is_p_subgroup_and_seed_stable():
    for spec, p in [("sym:5", 2), ("sym:5", 3), ("agl1:8", 2), ("frob:11:1:5", 5)]:
        G = group_of(spec)
        P0 = sylow(G, p, seed=0)
        P1 = sylow(G, p, seed=1)
        assert P0.group.order == P1.group.order
        n = G.order
        while n % p == 0:
            n //= p
        assert P0.group.order * n == G.order
        for x in P0.group.elements():
            assert G.contains(x)


def test_is_normal():
    A4 = group_of("frob:2:2:3")
    V = derived_subgroup(A4)
    assert V.group.order == 4
    assert is_normal(A4, V)

    S4 = group_of("sym:4")
    P2 = sylow(S4, 2)
    assert not is_normal(S4, P2)
    assert is_normal(S4, subgroup(S4, [S4.identity]))


def test_p_residual():
    C6 = group_of("cyclic:6")
    R = p_residual(C6, 3)
    assert R.group.order == 3

    S4 = group_of("sym:4")
    R2 = p_residual(S4, 2)
    assert R2.group.order == 24

    A5 = group_of("alt:5")
    assert p_residual(A5, 5).group.order == 60


def test_p_residual_is_normal_with_coprime_quotient():
    cases = [("sym:3", 3), ("cyclic:12", 2), ("frob:7:1:3", 7), ("agl1:11", 11)]
    for spec, p in cases:
        G = group_of(spec)
        R = p_residual(G, p)
        assert is_normal(G, R)
        q = G.order // R.group.order
        assert q % p != 0
        # no proper subgroup between R and G has p'-index: the quotient of G
        # by R is the largest p'-quotient reachable through a Sylow closure
        assert R.group.order % p == 0 or R.group.order == 1


def test_quotient_group():
    S4 = group_of("sym:4")
    V = derived_subgroup(derived_subgroup(S4).group)
    assert V.group.order == 4
    Q = quotient_group(S4, subgroup(S4, V.group.generators))
    assert Q.order == 6
    assert not Q.is_abelian()

    C6 = group_of("cyclic:6")
    C3 = sylow(C6, 3)
    Q2 = quotient_group(C6, C3)
    assert Q2.order == 2

    # quotient by the trivial subgroup is the group itself
    T = subgroup(S4, [S4.identity])
    assert quotient_group(S4, T) is S4

    # quotient by the whole group is trivial
    W = subgroup(S4, S4.generators)
    assert quotient_group(S4, W).order == 1


def test_quotient_class_count_not_above_parent():
    G = group_of("sym:4")
    N = derived_subgroup(G)
    Q = quotient_group(G, N)
    assert len(conjugacy_classes(Q).reps) <= len(conjugacy_classes(G).reps)


def test_normal_closure():
    S4 = group_of("sym:4")
    # closure of a single transposition is all of S4
    t = next(g for g in S4.elements() if sorted(i for i, j in enumerate(g) if i != j) == [0, 1])
    assert normal_closure(S4, [t]).order == 24
    # closure of a double transposition is the Klein four group
    d = (1, 0, 3, 2)
    K = normal_closure(S4, [d])
    assert K.order == 4
    for x in K.elements():
        for g in S4.generators:
            assert K.contains(conjugate(x, g))


def test_normalizer():
    S4 = group_of("sym:4")
    P = sylow(S4, 3)
    N = normalizer(S4, P)
    assert N.group.order == 6  # S_3 normalizes each Sylow 3-subgroup
    P2 = sylow(S4, 2)
    assert normalizer(S4, P2).group.order == 8

    A5 = group_of("alt:5")
    assert normalizer(A5, sylow(A5, 5)).group.order == 10


def test_normalizer_contains_subgroup_and_fixes_it():
    G = group_of("dihedral:6")
    H = sylow(G, 3)
    N = normalizer(G, H)
    for x in H.group.elements():
        assert N.group.contains(x)
    for n in N.group.generators:
        for h in H.group.generators:
            assert H.group.contains(conjugate(h, n))
