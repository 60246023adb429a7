import pytest

from bicrossed.errors import (
    MalformedInput,
    MatchedPairViolation,
    NotAnAction,
    NotExactFactorization,
    NotStable,
)
from bicrossed.groups import group_cyclic, group_symmetric, subgroup_generated
from bicrossed.matched_pair import (
    Factorization,
    MatchedPair,
    analyze,
    bicrossed_group,
    bicrossed_matches_factorization,
    from_factorization,
    matched_pair_conjugation,
    matched_pair_from_factorization,
    matched_pair_trivial,
    matched_pair_validate,
    restrict,
    semidirect_group_g_fixed,
)


def test_trivial_pair_validates():
    mp = matched_pair_trivial(group_cyclic(2), group_cyclic(3))
    assert mp.validate().ok
    assert bicrossed_group(mp).order == 6


def test_validate_catches_broken_action(mp6):
    lact = [list(r) for r in mp6.lact]
    lact[1][1] = 1  # should be 2 for this pair
    rep = MatchedPair(mp6.G, mp6.Gamma, lact, mp6.ract, check=False).validate()
    assert not rep.ok
    assert rep.failures()[0].name == "right action: composition"
    with pytest.raises(NotAnAction):
        matched_pair_validate(mp6.G, mp6.Gamma, lact, mp6.ract)


def test_validate_catches_broken_mixed_unit():
    # swapping 0 and 1 in the action column is still an involution, hence a
    # perfectly good action, but the identity grading no longer stays put
    z2, z3 = group_cyclic(2), group_cyclic(3)
    lact = [[0, 1], [1, 0], [2, 2]]
    ract = [[g for g in range(2)] for _ in range(3)]
    rep = MatchedPair(z2, z3, lact, ract, check=False).validate()
    assert rep.failures()[0].name == "mixed unit: e <| g = e"
    with pytest.raises(MatchedPairViolation):
        matched_pair_validate(z2, z3, lact, ract)


def test_table_shape_is_checked(mp6):
    with pytest.raises(MalformedInput):
        MatchedPair(mp6.G, mp6.Gamma, mp6.lact[:2], mp6.ract)
    with pytest.raises(MalformedInput):
        MatchedPair(mp6.G, mp6.Gamma, mp6.lact, [[9] * 2 for _ in range(3)])


def test_factorization_of_s3(mp6, s3):
    assert mp6.G.order == 2 and mp6.Gamma.order == 3
    assert mp6.validate().ok
    # the grading group is normal here, so the group action is trivial
    ana = analyze(mp6)
    assert ana.ract_trivial and ana.lact_by_automorphisms
    assert not ana.lact_trivial


def test_pair_map_is_an_isomorphism(s3):
    lab = {s3.label(i): i for i in range(6)}
    pair, fac = matched_pair_from_factorization(
        s3,
        subgroup_generated(s3, [lab["(1 2)"]]).elements,
        subgroup_generated(s3, [lab["(1 2 3)"]]).elements,
    )
    rep = bicrossed_matches_factorization(pair, fac)
    assert rep.ok, rep.failures()


def test_factorization_rejects_overlapping_subgroups(s3):
    lab = {s3.label(i): i for i in range(6)}
    whole = list(range(6))
    with pytest.raises(NotExactFactorization):
        from_factorization(s3, whole, whole)
    with pytest.raises(NotExactFactorization):
        # orders 2 * 2 cannot cover 6
        from_factorization(
            s3,
            subgroup_generated(s3, [lab["(1 2)"]]).elements,
            subgroup_generated(s3, [lab["(1 3)"]]).elements,
        )


def test_factorization_splits_every_element(s3):
    lab = {s3.label(i): i for i in range(6)}
    fact = Factorization(
        s3,
        subgroup_generated(s3, [lab["(1 2)"]]).elements,
        subgroup_generated(s3, [lab["(1 2 3)"]]).elements,
    )
    for h in range(6):
        g, s = fact.factor(h)
        assert s3.mul(fact.g_elems[g], fact.gamma_elems[s]) == h


def test_bicrossed_group_round_trip(mp6):
    big = bicrossed_group(mp6)
    assert big.order == 6
    assert big.validate().ok
    gsub = [mp6.pair_index(g, mp6.Gamma.identity) for g in mp6.G.elements()]
    gammasub = [mp6.pair_index(mp6.G.identity, s) for s in mp6.Gamma.elements()]
    again = from_factorization(big, gsub, gammasub)
    assert again.lact == mp6.lact and again.ract == mp6.ract


def test_conjugation_pair(s3):
    mp = matched_pair_conjugation(s3)
    assert mp.G.order == 6 and mp.Gamma.order == 6
    assert mp.validate().ok
    ana = analyze(mp)
    assert ana.ract_trivial and ana.lact_by_automorphisms
    x, y = 1, 3
    assert mp.lact[x][y] == s3.mul(s3.inv(y), s3.mul(x, y))


def test_semidirect_construction_agrees(mp6):
    semi = semidirect_group_g_fixed(mp6)
    big = bicrossed_group(mp6)
    assert semi.table == big.table


def test_analyze_subgroups(mp6):
    ana = analyze(mp6)
    # every grading element acts trivially through the trivial group action
    assert list(ana.gamma_bar.elements) == [0, 1, 2]
    # only the identity is fixed by conjugation by the transposition
    assert list(ana.gamma_under.elements) == [0]


def test_restrict_to_stable_subgroup(mp_conj_s3, s3):
    rotations = subgroup_generated(
        s3, [next(i for i in range(6) if s3.label(i) == "(1 2 3)")]
    ).elements
    sub = restrict(mp_conj_s3, rotations)
    assert sub.Gamma.order == 3
    assert sub.validate().ok
    with pytest.raises(NotStable):
        restrict(mp_conj_s3, [0, 1])  # a transposition coset is not stable


def test_restrict_rejects_non_subgroup(mp_conj_s3):
    with pytest.raises(NotStable):
        restrict(mp_conj_s3, [0, 1, 2])


def test_json_round_trip(mp6):
    clone = MatchedPair.from_json(mp6.to_json())
    assert clone.lact == mp6.lact and clone.ract == mp6.ract
    with pytest.raises(MalformedInput):
        MatchedPair.from_json({"G": mp6.G.to_json()})
