"""Cayley-table core: constructors, subgroup machinery, search routines."""

import math

import numpy as np
import pytest

from holoreg import (FiniteGroup, GroupDefinitionError, Homomorphism,
                     HomomorphismError, all_homomorphisms, all_subgroups,
                     as_subgroup, automorphism_group, center,
                     characteristic_subgroups, commutator_subgroup,
                     cyclic_group, dihedral_group, direct_product,
                     element_order, find_isomorphism, is_cgroup, is_normal,
                     is_subgroup, normal_hall_odd_subgroup, quaternion_group,
                     quotient_group, semidirect_product, subgroup_generated,
                     sylow_subgroup, CGroupPresentation, cgroup_group)


def klein_group():
    return dihedral_group(4)


# -- constructors ------------------------------------------------------------


def test_cyclic_trivial_group():
    G = cyclic_group(1)
    assert G.order == 1 and G.identity == 0


def test_cyclic_generator_has_full_order():
    G = cyclic_group(6)
    assert element_order(G, 1) == 6


def test_cyclic_generator_count_matches_totient():
    G = cyclic_group(12)
    generators = [g for g in range(12) if element_order(G, g) == 12]
    assert len(generators) == 4  # phi(12), by scanning orders


def test_cyclic_rejects_zero():
    with pytest.raises(GroupDefinitionError):
        cyclic_group(0)


def test_dihedral_4_is_klein():
    G = klein_group()
    assert G.is_abelian
    assert all(element_order(G, g) <= 2 for g in range(4))


def test_dihedral_8_center():
    G = dihedral_group(8)
    assert set(center(G)) == {G.identity, G.power(2, 2)}  # r sits at index 2


def test_dihedral_16_generator_orders():
    G = dihedral_group(16)
    r, s = 2, 1
    assert element_order(G, r) == 8
    assert element_order(G, s) == 2


def test_dihedral_rejects_bad_orders():
    for bad in (2, 6, 12):
        with pytest.raises(GroupDefinitionError):
            dihedral_group(bad)


def test_quaternion_8_order_profile():
    G = quaternion_group(8)
    profile = sorted(element_order(G, g) for g in range(8))
    assert profile == [1, 2, 4, 4, 4, 4, 4, 4]


def test_quaternion_s_squared_is_r_squared():
    G = quaternion_group(8)
    r, s = 2, 1
    assert G.mul(s, s) == G.power(r, 2)


def test_quaternion_16_unique_involution():
    G = quaternion_group(16)
    r = 2
    involutions = [g for g in range(16) if element_order(G, g) == 2]
    assert involutions == [G.power(r, 4)]


def test_quaternion_rejects_order_4():
    with pytest.raises(GroupDefinitionError):
        quaternion_group(4)


def test_trivial_action_gives_direct_product():
    G = direct_product(cyclic_group(3), klein_group())
    assert G.order == 12
    assert G.is_abelian


def test_semidirect_validates_action():
    M = cyclic_group(5)
    P = cyclic_group(2)
    bad = np.array([[0, 1, 2, 3, 4], [0, 2, 4, 1, 3]], dtype=np.int32)
    # x -> x^2 has order 4 mod 5, not an involution: not a homomorphism from C2
    with pytest.raises(HomomorphismError):
        semidirect_product(M, P, bad)


def test_semidirect_embeds_normal_factor():
    pres = CGroupPresentation(7, 3, 2)
    M = cgroup_group(pres)
    P = klein_group()
    # alpha(r) = id, alpha(s) inverts the x factor
    from holoreg import CGroupAut
    coords = [M.label(i) for i in range(M.order)]
    index_m = {lab: i for i, lab in enumerate(coords)}
    phi_neg = CGroupAut(pres, 0, 6, 1)
    ident = CGroupAut(pres, 0, 1, 1)
    acts = {(0, 0): ident, (1, 0): ident, (0, 1): phi_neg, (1, 1): phi_neg}
    perms = [acts[P.label(t)].as_permutation(coords, index_m) for t in range(P.order)]
    N = semidirect_product(M, P, perms)
    assert N.order == 84
    m_inside = tuple(range(0, 84, 4))  # (m, identity) pairs sit at index m*|P|
    assert is_subgroup(N, m_inside)
    assert is_normal(N, m_inside)
    odd = normal_hall_odd_subgroup(N)
    assert odd == m_inside


def test_conjugation_inside_semidirect_recovers_action():
    M = cyclic_group(7)
    P = cyclic_group(2)
    inversion = np.array([np.arange(7), (-np.arange(7)) % 7], dtype=np.int32)
    N = semidirect_product(M, P, inversion)
    t = 1  # the element (0, 1) of order 2
    for m in range(7):
        embedded = m * 2  # (m, 0)
        assert N.conj(embedded, t) == ((7 - m) % 7) * 2


# -- element and subgroup machinery -------------------------------------------


def test_identity_has_order_one():
    assert element_order(dihedral_group(16), 0) == 1


def test_element_order_in_presented_group():
    G = cgroup_group(CGroupPresentation(7, 3, 2))
    xy = G.labels.index((1, 1))
    assert element_order(G, xy) == 3


def test_power_negative_exponent():
    G = cyclic_group(12)
    assert G.power(1, -1) == 11


def test_subgroup_generated_whole_group():
    G = dihedral_group(8)
    assert len(subgroup_generated(G, [2, 1])) == 8


def test_sylow_of_cyclic_group():
    G = cyclic_group(12)
    syl = sylow_subgroup(G, 2)
    assert len(syl) == 4
    H, _ = as_subgroup(G, syl)
    assert max(int(o) for o in H.orders) == 4  # the unique C4


def test_sylow_of_order_84_group():
    D14 = cgroup_group(CGroupPresentation(7, 2, 6))
    D6 = cgroup_group(CGroupPresentation(3, 2, 2))
    N = direct_product(D14, D6)
    syl = sylow_subgroup(N, 2)
    assert len(syl) == 4
    H, _ = as_subgroup(N, syl)
    assert all(int(o) <= 2 for o in H.orders)  # exponent 2


def test_sylow_7_of_frobenius_double():
    G = cgroup_group(CGroupPresentation(7, 6, 3))  # order 42
    syl = sylow_subgroup(G, 7)
    assert len(syl) == 7


def test_sylow_rejects_composite():
    with pytest.raises(GroupDefinitionError):
        sylow_subgroup(cyclic_group(12), 4)


def test_cgroup_predicate():
    assert is_cgroup(cyclic_group(30))
    assert is_cgroup(cgroup_group(CGroupPresentation(3, 2, 2)))  # S3
    assert not is_cgroup(dihedral_group(8))
    assert not is_cgroup(klein_group())


def test_center_and_commutator_of_two_groups():
    for P in (dihedral_group(8), dihedral_group(16),
              quaternion_group(8), quaternion_group(16)):
        r = 2
        derived = commutator_subgroup(P)
        expected = subgroup_generated(P, [P.power(r, 2)])
        assert derived == expected


def test_quotient_by_commutator_is_klein():
    for P in (dihedral_group(8), dihedral_group(16),
              quaternion_group(8), quaternion_group(16)):
        Q, _ = quotient_group(P, commutator_subgroup(P))
        assert Q.order == 4
        assert find_isomorphism(Q, klein_group()) is not None


def test_quotient_requires_normal_subgroup():
    G = cgroup_group(CGroupPresentation(3, 2, 2))
    reflection = G.labels.index((0, 1))
    with pytest.raises(GroupDefinitionError):
        quotient_group(G, subgroup_generated(G, [reflection]))


def test_normal_hall_odd_subgroup_absent_in_alternating_group():
    # A4 as the Klein group extended by a 3-cycle rotation of coordinates
    K = klein_group()
    P = cyclic_group(3)
    rot = {0: 0, 1: 2, 2: 3, 3: 1}  # cycles the three involutions
    perm1 = [rot[g] for g in range(4)]
    perm2 = [rot[rot[g]] for g in range(4)]
    A4 = semidirect_product(K, P, [list(range(4)), perm1, perm2])
    assert A4.order == 12
    assert normal_hall_odd_subgroup(A4) is None


# -- automorphisms and isomorphisms ---------------------------------------------


def test_automorphism_count_cyclic_7():
    assert len(automorphism_group(cyclic_group(7))) == 6


def test_automorphism_count_klein():
    assert len(automorphism_group(klein_group())) == 6


def test_automorphism_count_frobenius_21():
    G = cgroup_group(CGroupPresentation(7, 3, 2))
    assert len(automorphism_group(G)) == 42


@pytest.mark.parametrize("n", range(1, 65))
def test_cyclic_automorphism_counts_match_totient(n):
    phi = sum(1 for a in range(1, n + 1) if math.gcd(a, n) == 1)
    assert len(automorphism_group(cyclic_group(n))) == phi


def test_automorphisms_are_valid_homomorphisms():
    G = dihedral_group(16)
    for aut in automorphism_group(G):
        Homomorphism(G, G, aut.images)  # re-validates the product rule
        assert aut.is_bijective


def test_characteristic_subgroups_of_klein():
    subs = characteristic_subgroups(klein_group())
    assert subs == [(0,), (0, 1, 2, 3)]


def test_all_subgroups_of_quaternion_8():
    subs = all_subgroups(quaternion_group(8))
    assert len(subs) == 6  # 1, center, three C4, Q8


def test_odd_normal_part_is_characteristic_in_order_84_group():
    D14 = cgroup_group(CGroupPresentation(7, 2, 6))
    D6 = cgroup_group(CGroupPresentation(3, 2, 2))
    N = direct_product(D14, D6)
    odd = normal_hall_odd_subgroup(N)
    assert odd is not None and len(odd) == 21
    assert odd in characteristic_subgroups(N)


def test_find_isomorphism_rejects_c4_vs_klein():
    assert find_isomorphism(cyclic_group(4), klein_group()) is None


def test_find_isomorphism_klein_vs_product():
    target = direct_product(cyclic_group(2), cyclic_group(2))
    iso = find_isomorphism(klein_group(), target)
    assert iso is not None and iso.is_bijective


def test_find_isomorphism_rejects_q8_vs_d8():
    assert find_isomorphism(quaternion_group(8), dihedral_group(8)) is None


def test_all_homomorphisms_c4_to_c2():
    homs = all_homomorphisms(cyclic_group(4), cyclic_group(2))
    assert len(homs) == 2


def test_homomorphism_validation_rejects_non_hom():
    G = cyclic_group(4)
    with pytest.raises(HomomorphismError):
        Homomorphism(G, G, (0, 1, 2, 0))


# -- table invariants ------------------------------------------------------------


def test_constructor_rejects_non_latin_table():
    with pytest.raises(GroupDefinitionError):
        FiniteGroup([[0, 0], [1, 1]])


def test_constructor_rejects_non_associative_table():
    # a Latin square with identity that fails associativity (order 5 loop)
    table = [[0, 1, 2, 3, 4],
             [1, 0, 3, 4, 2],
             [2, 4, 0, 1, 3],
             [3, 2, 4, 0, 1],
             [4, 3, 1, 2, 0]]
    with pytest.raises(GroupDefinitionError):
        FiniteGroup(table)


def test_trivial_group_is_valid():
    G = FiniteGroup([[0]])
    assert G.order == 1 and is_cgroup(G)


def test_label_round_trip_in_presented_groups():
    pres = CGroupPresentation(7, 3, 2)
    G = cgroup_group(pres)
    for g in range(G.order):
        i, j = G.label(g)
        for h in range(G.order):
            i2, j2 = G.label(h)
            assert G.label(G.mul(g, h)) == pres.mul((i, j), (i2, j2))


def test_twogroup_label_relation():
    # y^j x^i = x^(i k^j) y^j analogue: s r = r^-1 s in dihedral coordinates
    G = dihedral_group(16)
    r, s = 2, 1
    assert G.mul(s, r) == G.mul(G.power(r, 7), s)
