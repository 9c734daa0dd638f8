"""The classifier, the decomposition, normalization, and the constructor."""

import numpy as np
import pytest

from holoreg import (CGroupAut, CGroupPresentation, GroupDefinitionError,
                     cgroup_group, classify, classify_rump,
                     closed_form_product, construct, cyclic_group,
                     cyclic_regular_oracle, decompose, dihedral_group,
                     direct_product, find_isomorphism, generate_corpus,
                     normalize_alpha, parse_group_spec, quaternion_group,
                     quotient_action_probe, semidirect_product,
                     twisted_partial_products)
from holoreg.realizability import (REASON_ALPHA, REASON_CASE_1, REASON_CASE_2,
                                   REASON_CGROUP, REASON_NOT_2NILPOTENT,
                                   REASON_P_SHAPE)


def klein_group():
    return dihedral_group(4)


def faithful_order_84_group():
    return parse_group_spec(
        "semidirect (cgroup 21 1 1) (dihedral 4) alpha r->phi:8 s->phi:13")


def alternating_4():
    K = klein_group()
    rot = {0: 0, 1: 2, 2: 3, 3: 1}
    perm1 = [rot[g] for g in range(4)]
    perm2 = [rot[rot[g]] for g in range(4)]
    return semidirect_product(K, cyclic_group(3),
                              [list(range(4)), perm1, perm2], name="alt 4")


# -- decompose -------------------------------------------------------------------


def test_decompose_order_84_group():
    N = faithful_order_84_group()
    dec = decompose(N)
    assert dec is not None
    assert dec.pres.order == 21
    assert dec.p_kind == "dihedral" and dec.m_exp == 2
    assert dec.alpha_image_size == 4


def test_decompose_quaternion_8():
    dec = decompose(quaternion_group(8))
    assert dec.pres.order == 1
    assert dec.p_kind == "quaternion"
    assert dec.alpha_image_size == 1


def test_decompose_alternating_4_absent():
    assert decompose(alternating_4()) is None


def test_decompose_odd_cgroup():
    dec = decompose(cgroup_group(CGroupPresentation(7, 3, 2)))
    assert dec.p_kind == "cyclic" and dec.p_group.order == 1


def test_decompose_witnesses_satisfy_relations():
    for N in (dihedral_group(16), quaternion_group(16),
              faithful_order_84_group()):
        dec = decompose(N)
        half = dec.p_group.order // 2
        assert N.order_of(dec.r) == half
        assert N.power(dec.r, half) == N.identity
        s_sq = N.mul(dec.s, dec.s)
        if dec.p_kind == "dihedral":
            assert s_sq == N.identity
        else:
            assert s_sq == N.power(dec.r, half // 2)
        assert N.conj(dec.r, dec.s) == N.inv(dec.r)


def test_decompose_alpha_matches_conjugation():
    N = faithful_order_84_group()
    dec = decompose(N)
    for idx, t in enumerate(dec.p_to_n):
        aut = dec.alpha[idx]
        for m in dec.m_elems:
            i, j = dec.coords[m]
            assert dec.coords[N.conj(m, t)] == aut.apply(i, j)


# -- classify --------------------------------------------------------------------


def test_classify_odd_prime_powers():
    assert classify(cyclic_group(9)).realizable
    assert classify(cyclic_group(27)).realizable
    nine = direct_product(cyclic_group(3), cyclic_group(3))
    verdict = classify(nine)
    assert not verdict.realizable
    assert verdict.reason == REASON_NOT_2NILPOTENT


def test_classify_order_8_exactly_three_groups():
    expected = {
        "cyclic": True, "dihedral": True, "quaternion": True,
        "c2xc4": False, "c2cubed": False,
    }
    groups = {
        "cyclic": cyclic_group(8),
        "dihedral": dihedral_group(8),
        "quaternion": quaternion_group(8),
        "c2xc4": direct_product(cyclic_group(2), cyclic_group(4)),
        "c2cubed": direct_product(cyclic_group(2), klein_group()),
    }
    for name, G in groups.items():
        assert classify(G).realizable == expected[name], name


def test_classify_reasons():
    assert classify(cyclic_group(8)).reason == REASON_CGROUP
    assert classify(klein_group()).reason == REASON_CASE_1
    assert classify(quaternion_group(8)).reason == REASON_CASE_1
    assert classify(dihedral_group(8)).reason == REASON_CASE_2
    assert classify(quaternion_group(16)).reason == REASON_CASE_2
    assert classify(direct_product(cyclic_group(2), cyclic_group(4))
                    ).reason == REASON_P_SHAPE
    assert classify(alternating_4()).reason == REASON_NOT_2NILPOTENT
    assert classify(faithful_order_84_group()).reason == REASON_ALPHA


def test_every_positive_verdict_carries_regular_witness(corpus_reps):
    for entry in corpus_reps:
        verdict = classify(entry.group)
        if verdict.realizable:
            w = verdict.witness
            assert w.order() == entry.group.order
            assert w.cycle_length_through_identity() == entry.group.order


def test_classify_agrees_with_oracle_on_small_corpus(corpus_reps):
    from holoreg import BoundExceeded
    for entry in corpus_reps:
        if entry.group.order > 48:
            continue
        verdict = classify(entry.group)
        try:
            found = cyclic_regular_oracle(entry.group, hol_bound=20000)
        except BoundExceeded:
            continue
        assert verdict.realizable == bool(found), entry.spec


# -- normalization ------------------------------------------------------------------


def test_normalize_leaves_trivial_action_alone():
    N = direct_product(cgroup_group(CGroupPresentation(7, 3, 2)), klein_group())
    dec = decompose(N)
    ndec = normalize_alpha(dec)
    assert ndec.alpha_r.is_identity
    assert ndec.alpha_s.is_identity
    assert ndec.model is not None and ndec.model_iso.is_bijective


def test_normalize_moves_kernel_element_onto_r():
    # ker(alpha) = {1, rs}: r and s both invert, rs acts trivially
    spec = "semidirect (cgroup 21 1 1) (dihedral 4) alpha r->phi:20 s->phi:20"
    N = parse_group_spec(spec)
    dec = decompose(N)
    assert not dec.alpha_r.is_identity
    ndec = normalize_alpha(dec)
    assert ndec.alpha_r.is_identity
    assert ndec.alpha_s.c == 0 and ndec.alpha_s.v == 1
    assert ndec.model_iso.is_bijective


def test_normalize_conjugates_s_action_into_phi_family():
    # force witnesses that put the s action outside the phi family, then
    # check the normalization search conjugates it back in
    from holoreg.realizability import _rewitness
    from holoreg.specs import build_semidirect_from_auts

    pres = CGroupPresentation(7, 3, 2)
    N = build_semidirect_from_auts(pres, klein_group(),
                                   CGroupAut(pres, 0, 1, 1),
                                   CGroupAut(pres, 0, 6, 1))
    dec = decompose(N)
    # orient the witnesses so that r acts trivially and s does not
    if dec.alpha_r.is_identity and dec.alpha_s.is_identity:
        pytest.fail("the action should have image of order 2")
    if not dec.alpha_r.is_identity:
        if dec.alpha_s.is_identity:
            dec = _rewitness(dec, dec.s, dec.r, dec.x, dec.y)
        else:
            dec = _rewitness(dec, N.mul(dec.r, dec.s), dec.s, dec.x, dec.y)
    theta_shifted_y = N.mul(dec.index_of[(dec.pres.z % 7, 0)], dec.y)
    dec = _rewitness(dec, dec.r, dec.s, dec.x, theta_shifted_y)
    assert dec.alpha_r.is_identity
    assert dec.alpha_s.c != 0
    ndec = normalize_alpha(dec)
    assert ndec.alpha_r.is_identity
    assert ndec.alpha_s.c == 0 and ndec.alpha_s.v == 1
    assert ndec.alpha_s.u != 1
    assert ndec.model_iso.is_bijective
    _, _, witness = construct(ndec)
    assert witness.cycle_length_through_identity() == 84


def test_normalize_rejects_failing_condition():
    dec = decompose(faithful_order_84_group())
    with pytest.raises(GroupDefinitionError):
        normalize_alpha(dec)


# -- the constructor -----------------------------------------------------------------


def test_construct_on_dihedral_8():
    dec = normalize_alpha(decompose(dihedral_group(8)))
    xi, eta0, witness = construct(dec)
    N = dec.group
    assert eta0 == N.mul(dec.r, dec.s)
    prods = twisted_partial_products(dec, xi, eta0, 2 * N.order)
    assert prods[1] == dec.r  # (rs) xi(rs) = r
    for length in range(1, 2 * N.order + 1):
        assert prods[length - 1] == closed_form_product(dec, length)
    assert prods[N.order - 1] == N.identity
    assert witness.cycle_length_through_identity() == N.order


def test_construct_on_direct_product_with_frobenius():
    N = direct_product(cgroup_group(CGroupPresentation(7, 3, 2)), klein_group())
    dec = normalize_alpha(decompose(N))
    xi, eta0, witness = construct(dec)
    # with a trivial action xi acts on the odd part as phi with u = k^-1 = 4
    assert xi(dec.x) == N.power(dec.x, 4)
    assert witness.order() == 84
    assert witness.cycle_length_through_identity() == 84


def test_construct_requires_normalized_action():
    spec = "semidirect (cgroup 21 1 1) (dihedral 4) alpha r->phi:20 s->phi:20"
    dec = decompose(parse_group_spec(spec))
    with pytest.raises(GroupDefinitionError):
        construct(dec)


def test_constructed_xi_has_order_dividing_2d(corpus_reps):
    for entry in corpus_reps:
        if entry.group.order > 100:
            continue
        verdict = classify(entry.group)
        if not verdict.realizable or verdict.decomposition is None:
            continue
        dec = verdict.decomposition
        xi, _, _ = construct(dec)
        perm = np.asarray(xi.images)
        power = perm.copy()
        order = 1
        idx = np.arange(entry.group.order)
        while not np.array_equal(power, idx):
            power = perm[power]
            order += 1
        assert (2 * dec.pres.d) % order == 0


# -- quotient-action diagnostics -------------------------------------------------------


def test_probe_is_trivial_for_the_order_84_group():
    N = faithful_order_84_group()
    dec = decompose(N)
    probe = quotient_action_probe(N, dec)
    assert len(probe) == 1


def test_probe_is_full_for_untwisted_product():
    N = direct_product(cgroup_group(CGroupPresentation(7, 3, 2)), klein_group())
    dec = decompose(N)
    probe = quotient_action_probe(N, dec)
    assert len(probe) == 6  # every automorphism of the Klein quotient


def test_probe_nontrivial_for_dihedral_8():
    N = dihedral_group(8)
    dec = decompose(N)
    probe = quotient_action_probe(N, dec)
    assert len(probe) > 1


# -- the companion classifier ------------------------------------------------------------


def test_rump_on_order_84_group():
    assert classify_rump(faithful_order_84_group())


def test_rump_rejects_elementary_9():
    assert not classify_rump(direct_product(cyclic_group(3), cyclic_group(3)))


def test_rump_accepts_quaternion_16():
    assert classify_rump(quaternion_group(16))


def test_rump_rejects_alternating_4():
    assert not classify_rump(alternating_4())


def test_rump_matches_regular_enumeration_in_cyclic_holomorph():
    # the companion classifier predicts whether a regular copy of G sits in
    # the holomorph of the cyclic group of the same order; enumerate to check
    from holoreg import regular_subgroups_isomorphic_to
    cases = [
        cyclic_group(8),
        dihedral_group(8),
        quaternion_group(8),
        direct_product(cyclic_group(2), cyclic_group(4)),
        dihedral_group(4),
        cgroup_group(CGroupPresentation(3, 2, 2)),
        direct_product(cyclic_group(3), cyclic_group(3)),
        parse_group_spec("semidirect (cyclic 3) (dihedral 4) alpha r->id s->phi:2"),
        cgroup_group(CGroupPresentation(7, 2, 6)),
        direct_product(cyclic_group(2), cyclic_group(6)),
        quaternion_group(16),
        dihedral_group(16),
        cyclic_group(16),
    ]
    for G in cases:
        found = regular_subgroups_isomorphic_to(G, cyclic_group(G.order))
        assert classify_rump(G) == bool(found), G.name


def test_realizable_implies_rump(corpus_reps):
    for entry in corpus_reps:
        if classify(entry.group).realizable:
            assert classify_rump(entry.group), entry.spec


# -- corpus hygiene ---------------------------------------------------------------------


def test_corpus_is_deterministic():
    first = [e.spec for e in generate_corpus(max_m_order=5, mark_duplicates=False)]
    second = [e.spec for e in generate_corpus(max_m_order=5, mark_duplicates=False)]
    assert first == second


def test_corpus_specs_parse_back(corpus_reps):
    for entry in corpus_reps[:25]:
        G = parse_group_spec(entry.spec)
        assert G.order == entry.group.order


def test_corpus_duplicates_really_are_isomorphic(corpus):
    seen = 0
    for entry in corpus:
        if entry.duplicate_of is not None and entry.group.order <= 60:
            other = corpus[entry.duplicate_of].group
            assert find_isomorphism(entry.group, other, bound=None) is not None
            seen += 1
            if seen >= 10:
                break
    assert seen > 0


def test_classify_is_isomorphism_invariant_up_to_96(corpus):
    """Equal verdicts along every isomorphism between corpus members.

    Isomorphic pairs are exactly the duplicate links found during corpus
    dedup; for pairs with differing verdicts we confirm no isomorphism
    exists, which together covers every pair of equal order.
    """
    small = [e for e in corpus if e.group.order <= 96]
    verdicts = {}
    for entry in small:
        rep = entry if entry.duplicate_of is None else corpus[entry.duplicate_of]
        key = id(rep)
        if key not in verdicts:
            verdicts[key] = classify(rep.group).realizable
        if entry.duplicate_of is not None:
            assert classify(entry.group).realizable == verdicts[key]
    by_order = {}
    for entry in small:
        if entry.duplicate_of is None:
            by_order.setdefault(entry.group.order, []).append(entry)
    for order, bucket in by_order.items():
        for i, a in enumerate(bucket):
            for b in bucket[i + 1:]:
                if classify(a.group).realizable != classify(b.group).realizable:
                    assert find_isomorphism(a.group, b.group, bound=None) is None
