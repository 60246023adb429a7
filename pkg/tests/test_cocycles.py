import itertools

import pytest

from bicrossed.cocycles import (
    CocyclePair,
    cocycle_pair_validate,
    embed_cocycles,
    enumerate_cocycle_pairs,
    pointwise_product,
    trivial_cocycles,
)
from bicrossed.errors import (
    CocycleViolation,
    ConductorMismatch,
    MalformedInput,
    SearchBudgetExceeded,
    ZeroValue,
)
from bicrossed.scalars import Cyclotomic, root_of_unity


def test_trivial_cocycles_validate(mp6):
    cp = trivial_cocycles(mp6, 1)
    assert cp.is_trivial()
    assert cp.validate().ok


def test_nontrivial_pair_validates(cp8):
    rep = cp8.validate()
    assert rep.ok, rep.failures()
    assert not cp8.is_trivial()
    z4 = root_of_unity(4, 2)
    assert cp8.tau_val(1, 1, 2) == z4
    assert cp8.sigma_val(1, 1, 1) == Cyclotomic.one(4)


def test_validate_names_every_family(cp8):
    names = [c.name for c in cp8.validate().checks]
    assert names == [
        "values nonzero",
        "sigma two-cocycle",
        "sigma normalized",
        "tau two-cocycle",
        "tau normalized",
        "sigma-tau compatibility",
        "neutral grading component",
        "neutral group component",
    ]


def test_corrupted_value_is_caught(mp8, cp8):
    tau = [[list(row) for row in plane] for plane in cp8.tau]
    tau[1][1][1] = root_of_unity(4, 1)
    rep = CocyclePair(mp8, 4, cp8.sigma, tau, check=False).validate()
    assert not rep.ok
    with pytest.raises(CocycleViolation):
        cocycle_pair_validate(mp8, cp8.sigma, tau, 4)


def test_zero_value_is_its_own_failure(mp8, cp8):
    tau = [[list(row) for row in plane] for plane in cp8.tau]
    tau[1][2][1] = Cyclotomic.zero(4)
    rep = CocyclePair(mp8, 4, cp8.sigma, tau, check=False).validate()
    assert [c.name for c in rep.failures()] == ["values nonzero"]
    with pytest.raises(ZeroValue):
        cocycle_pair_validate(mp8, cp8.sigma, tau, 4)


def test_unnormalized_sigma_is_caught(mp6):
    cp = trivial_cocycles(mp6, 4)
    sigma = [[list(row) for row in plane] for plane in cp.sigma]
    sigma[1][0][1] = root_of_unity(4, 1)  # identity slot must stay 1
    rep = CocyclePair(mp6, 4, sigma, cp.tau, check=False).validate()
    assert not rep.ok
    assert "sigma normalized" in {c.name for c in rep.failures()}


def _sign_pair(mp8, signs):
    """Build a conductor-2 candidate from twelve sign bits.

    The free slots are exactly those with no identity index; everything
    else is pinned to 1 by the normalization families.
    """
    one, minus = Cyclotomic.one(2), root_of_unity(2, 1)
    vals = [minus if b else one for b in signs]
    tau = [[[one] * 4 for _ in range(4)] for _ in range(2)]
    sigma = [[[one] * 2 for _ in range(2)] for _ in range(4)]
    k = 0
    for s in (1, 2, 3):
        for t in (1, 2, 3):
            tau[1][s][t] = vals[k]
            k += 1
    for s in (1, 2, 3):
        sigma[s][1][1] = vals[k]
        k += 1
    return CocyclePair(mp8, 2, sigma, tau, check=False)


def _sign_pair_is_solution(signs):
    """Independent oracle: the condition families on exponents mod 2.

    Both actions are trivial here, so each family collapses to a sum of
    bits being even.  te[g][s][t] and se[s][g][h] hold the exponents,
    with the pinned slots already zero.
    """
    te = [[[0] * 4 for _ in range(4)] for _ in range(2)]
    se = [[[0] * 2 for _ in range(2)] for _ in range(4)]
    k = 0
    for s in (1, 2, 3):
        for t in (1, 2, 3):
            te[1][s][t] = signs[k]
            k += 1
    for s in (1, 2, 3):
        se[s][1][1] = signs[k]
        k += 1
    for s in range(4):
        for g in range(2):
            for h in range(2):
                for l in range(2):
                    if (se[s][h][l] + se[s][g][h ^ l]
                            - se[s][g][h] - se[s][g ^ h][l]) % 2:
                        return False
    for g in range(2):
        for s in range(4):
            for t in range(4):
                for u in range(4):
                    if (te[g][s ^ t][u] + te[g][s][t]
                            - te[g][t][u] - te[g][s][t ^ u]) % 2:
                        return False
    for g in range(2):
        for h in range(2):
            for s in range(4):
                for t in range(4):
                    lhs = se[s ^ t][g][h] + te[g ^ h][s][t]
                    rhs = se[s][g][h] + se[t][g][h] + te[g][s][t] + te[h][s][t]
                    if (lhs - rhs) % 2:
                        return False
    return True


def test_sign_oracle_agrees_with_validator(mp8):
    import random

    rng = random.Random(7)
    picks = [tuple(rng.randrange(2) for _ in range(12)) for _ in range(40)]
    picks.append((0,) * 12)
    for signs in picks:
        cand = _sign_pair(mp8, signs)
        assert cand.validate().ok == _sign_pair_is_solution(signs)


def test_enumeration_matches_exhaustive_filter(mp8):
    """Cross-check the pruned search against brute force at conductor 2."""
    found = enumerate_cocycle_pairs(mp8, 2, budget=10 ** 6)
    assert len(found) == 64
    found_tables = {(cp.sigma, cp.tau) for cp in found}
    assert len(found_tables) == 64

    expected = set()
    for signs in itertools.product((0, 1), repeat=12):
        if _sign_pair_is_solution(signs):
            cand = _sign_pair(mp8, signs)
            expected.add((cand.sigma, cand.tau))
    assert found_tables == expected


def test_enumeration_at_conductor_four(mp8, cp8):
    found = enumerate_cocycle_pairs(mp8, 4, budget=10 ** 6)
    assert len(found) == 512
    assert sum(1 for cp in found if cp.is_trivial()) == 1
    assert any(cp.sigma == cp8.sigma and cp.tau == cp8.tau for cp in found)
    for cp in found[:10]:
        assert cp.validate().ok


def test_enumeration_value_subset(mp8):
    # restricting the value set to {1} leaves only the trivial pair
    found = enumerate_cocycle_pairs(mp8, 4, value_set_exponents=[0])
    assert len(found) == 1 and found[0].is_trivial()
    with pytest.raises(MalformedInput):
        enumerate_cocycle_pairs(mp8, 4, value_set_exponents=[])


def test_enumeration_budget(mp8):
    with pytest.raises(SearchBudgetExceeded):
        enumerate_cocycle_pairs(mp8, 4, budget=3)


def test_embedding_preserves_values(cp8):
    big = embed_cocycles(cp8, 8)
    assert big.N == 8
    assert big.tau[1][1][2].N == 8
    assert big.tau[1][1][2] == root_of_unity(8, 4)
    assert big.validate().ok
    assert embed_cocycles(cp8, 4) is cp8
    with pytest.raises(ConductorMismatch):
        embed_cocycles(cp8, 6)


def test_pointwise_product(mp8, cp8):
    sq = pointwise_product(cp8, cp8)
    # the nontrivial values are all -1, so the square collapses
    assert sq.is_trivial()
    with_triv = pointwise_product(cp8, trivial_cocycles(mp8, 1))
    assert with_triv.sigma == embed_cocycles(cp8, with_triv.N).sigma
    assert with_triv.tau == embed_cocycles(cp8, with_triv.N).tau


def test_pointwise_product_needs_matching_pair(mp6, mp8, cp8):
    with pytest.raises(MalformedInput):
        pointwise_product(cp8, trivial_cocycles(mp6, 1))


def test_json_round_trip(mp8, cp8):
    doc = cp8.to_json()
    # sparse storage: trivial slots are omitted
    assert all(v != Cyclotomic.one(4).to_json() for v in doc["tau"].values())
    clone = CocyclePair.from_json(mp8, doc)
    assert clone.sigma == cp8.sigma and clone.tau == cp8.tau
    assert clone.N == cp8.N


def test_json_rejects_malformed_documents(mp8):
    with pytest.raises(MalformedInput):
        CocyclePair.from_json(mp8, {"sigma": {}, "tau": {}})
    with pytest.raises(MalformedInput):
        CocyclePair.from_json(mp8, {"N": 0, "sigma": {}, "tau": {}})
    with pytest.raises(MalformedInput):
        CocyclePair.from_json(mp8, {"N": 4, "sigma": {"bad-key": 1}, "tau": {}})
    with pytest.raises(MalformedInput):
        CocyclePair.from_json(mp8, {"N": 4, "sigma": {"9,0,0": 1}, "tau": {}})
