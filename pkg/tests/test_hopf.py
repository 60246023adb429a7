from fractions import Fraction

import pytest

from bicrossed.cocycles import CocyclePair, trivial_cocycles
from bicrossed.crossed_cat import CrossedAction, regular_braiding_matrix
from bicrossed.errors import (
    MalformedInput,
    NoAntipode,
    NotAModule,
    NotUnique,
)
from bicrossed.hopf import (
    HopfAlgebra,
    antipode_antihom_report,
    bicrossed_index,
    build_bicrossed,
    closed_form_antipode,
    module_tensor,
    module_validate,
    regular_module,
    rmatrix_from_braiding,
    seq_maps,
    seq_maps_report,
    solve_antipode,
    trivial_module,
    verify_antipode,
    verify_bialgebra,
    verify_quasitriangular,
)
from bicrossed.scalars import Cyclotomic, root_of_unity
from bicrossed.ybe import enumerate_braiding_pairs, scalar_braiding_search

BIALGEBRA_CHECKS = [
    "associative",
    "unital",
    "coassociative",
    "counital",
    "Δ multiplicative",
    "Δ unital",
    "ε multiplicative",
    "ε unital",
]


def test_dim6_is_a_bialgebra(H6):
    rep = verify_bialgebra(H6)
    assert rep.ok, rep.failures()
    assert [c.name for c in rep.checks] == BIALGEBRA_CHECKS
    assert H6.dim == 6
    assert H6.pair is not None and H6.cocycles is not None


def test_dim8_is_a_bialgebra(H8):
    rep = verify_bialgebra(H8)
    assert rep.ok, rep.failures()
    assert H8.dim == 8 and H8.N == 4


def test_basis_indexing(mp6, H6):
    # functions on the grading group first, then the group direction
    assert bicrossed_index(mp6, 2, 1) == 2 * 2 + 1
    assert H6.labels[bicrossed_index(mp6, 0, 0)].startswith("e")


def test_corrupted_compatibility_breaks_delta(mp8, cp8):
    tau = [[list(row) for row in plane] for plane in cp8.tau]
    tau[1][1][1] = root_of_unity(4, 1)
    bad_cp = CocyclePair(mp8, 4, cp8.sigma, tau, check=False)
    assert not bad_cp.validate().ok
    H = build_bicrossed(mp8, bad_cp)
    rep = verify_bialgebra(H)
    failed = {c.name for c in rep.failures()}
    assert "Δ multiplicative" in failed
    # the product side never sees tau, so the algebra half survives
    assert "associative" not in failed
    assert "unital" not in failed


def test_antipode_solved_and_unique(H6):
    S = solve_antipode(H6)
    assert verify_antipode(H6, S).ok
    assert antipode_antihom_report(H6, S).ok
    assert S == closed_form_antipode(H6)


def test_closed_form_antipode_dim8(H8):
    S = closed_form_antipode(H8)
    assert verify_antipode(H8, S).ok
    assert antipode_antihom_report(H8, S).ok
    assert S == solve_antipode(H8)


def test_closed_form_needs_construction_data(H6):
    clone = HopfAlgebra.from_json(H6.to_json())
    assert clone.pair is None
    with pytest.raises(MalformedInput):
        closed_form_antipode(clone)


def _monoid_algebra():
    """The algebra of the two element idempotent monoid {e, x}, x^2 = x,
    with both basis elements grouplike.  A bialgebra without antipode:
    S(x) x = 1 would make the idempotent invertible."""
    one = Cyclotomic.one(1)
    mult = {
        (0, 0): ((0, one),),
        (0, 1): ((1, one),),
        (1, 0): ((1, one),),
        (1, 1): ((1, one),),
    }
    comult = {0: (((0, 0), one),), 1: (((1, 1), one),)}
    zero = Cyclotomic.zero(1)
    return HopfAlgebra(2, 1, mult, comult, [one, zero], [one, one])


def _nilpotent_algebra():
    """Unit u and n with n^2 = 0, n grouplike-shaped with counit zero.
    Not a bialgebra (the counit axiom fails at n), but the solver does
    not presume validity, and here the antipode equation at n reads
    n S(n) = 0, which pins nothing beyond the u coefficient.  For an
    honest finite dimensional bialgebra a one-sided convolution inverse
    of the identity is automatically two-sided and unique, so an
    underdetermined system can only come from input like this."""
    one = Cyclotomic.one(1)
    mult = {
        (0, 0): ((0, one),),
        (0, 1): ((1, one),),
        (1, 0): ((1, one),),
    }
    comult = {0: (((0, 0), one),), 1: (((1, 1), one),)}
    zero = Cyclotomic.zero(1)
    return HopfAlgebra(2, 1, mult, comult, [one, zero], [one, zero])


def test_monoid_algebra_has_no_antipode():
    H = _monoid_algebra()
    assert verify_bialgebra(H).ok
    with pytest.raises(NoAntipode):
        solve_antipode(H)


def test_nilpotent_algebra_antipode_not_unique():
    H = _nilpotent_algebra()
    rep = verify_bialgebra(H)
    assert "counital" in {c.name for c in rep.failures()}
    with pytest.raises(NotUnique):
        solve_antipode(H)


def test_verify_antipode_rejects_wrong_matrix(H6):
    eye = [
        [Cyclotomic.one(H6.N) if i == j else H6.zero() for j in range(H6.dim)]
        for i in range(H6.dim)
    ]
    rep = verify_antipode(H6, eye)
    assert not rep.ok


def test_structural_maps(H6, mp6):
    rep = seq_maps_report(H6, mp6)
    assert rep.ok, rep.failures()
    assert [c.name for c in rep.checks] == [
        "inclusion multiplicative",
        "inclusion unital",
        "inclusion comultiplicative",
        "projection multiplicative",
        "projection unital",
        "projection comultiplicative",
        "composite factors through counit",
    ]
    inc, proj = seq_maps(H6, mp6)
    assert len(inc) == 6 and len(inc[0]) == 3
    assert len(proj) == 2 and len(proj[0]) == 6
    one = Cyclotomic.one(H6.N)
    for s in range(3):
        col = [inc[r][s] for r in range(6)]
        assert col[bicrossed_index(mp6, s, 0)] == one
        assert sum(1 for v in col if not v.is_zero()) == 1


def test_modules(H6):
    reg = regular_module(H6)
    assert reg.validate().ok
    triv = trivial_module(H6)
    assert triv.validate().ok
    both = module_tensor(H6, triv, reg)
    assert both.dim == 6
    assert both.validate().ok


def test_module_validate_rejects_non_action(H6):
    one = Cyclotomic.one(H6.N)
    eye = [[one if i == j else H6.zero() for j in range(2)] for i in range(2)]
    with pytest.raises(NotAModule):
        module_validate(H6, [eye] * H6.dim)


def test_module_shape_errors(H6):
    with pytest.raises(MalformedInput):
        module_validate(H6, [])
    ragged = [[[Cyclotomic.one(H6.N)]]] * (H6.dim - 1) + [
        [[Cyclotomic.one(H6.N), Cyclotomic.one(H6.N)]]
    ]
    with pytest.raises(MalformedInput):
        module_validate(H6, ragged)


def _split_braiding(sign: int):
    """The rank one split case: H = functions on Z2, braided by the
    bicharacter c(s, t) = sign^(s t)."""
    from bicrossed.groups import group_cyclic, group_trivial
    from bicrossed.matched_pair import matched_pair_trivial

    mp = matched_pair_trivial(group_trivial(), group_cyclic(2))
    ca = CrossedAction(mp, trivial_cocycles(mp, 1))
    (bp,) = enumerate_braiding_pairs(mp)
    sols = scalar_braiding_search(ca, bp, 4)
    want = Cyclotomic.from_rational(sign, 4)
    picked = [bd for bd in sols if bd.c[1][1] == want]
    assert len(picked) == 1
    return ca, picked[0]


def _leg_embed(H, r, legs):
    """Place a two leg tensor into three legs, unit in the open slot."""
    out = {}
    other = next(i for i in range(3) if i not in legs)
    for (p, q), c in r.items():
        for u, cu in enumerate(H.unit):
            if cu.is_zero():
                continue
            key = [None, None, None]
            key[legs[0]], key[legs[1]], key[other] = p, q, u
            k = tuple(key)
            out[k] = out.get(k, H.zero()) + c * cu
    return out


def test_rmatrix_is_quasitriangular():
    ca, bd = _split_braiding(-1)
    caM = ca.at_conductor(4)
    H = caM.algebra()
    R = rmatrix_from_braiding(H, regular_braiding_matrix(caM, bd))
    rep = verify_quasitriangular(H, R)
    assert rep.ok, rep.failures()
    assert [c.name for c in rep.checks] == [
        "R invertible",
        "R intertwines the coproduct",
        "coproduct splitting, first leg",
        "coproduct splitting, second leg",
    ]
    # the coefficients are exactly the bicharacter values
    for s in range(2):
        for t in range(2):
            assert R.coeffs[s][t] == bd.c[s][t]


def test_splitting_axiom_direction():
    """Regression for the order of the factors in the splitting axioms.

    With the sign braiding on functions on Z2 the wrong order differs
    from (id ⊗ Δ)R in the (0,1,1) coefficient, so a swapped
    implementation cannot pass this algebra.
    """
    ca, bd = _split_braiding(-1)
    caM = ca.at_conductor(4)
    H = caM.algebra()
    R = rmatrix_from_braiding(H, regular_braiding_matrix(caM, bd))
    r = R.as_dict()
    r12 = _leg_embed(H, r, (0, 1))
    r13 = _leg_embed(H, r, (0, 2))
    r23 = _leg_embed(H, r, (1, 2))

    delta_first = {}
    delta_second = {}
    for (p, q), c in r.items():
        for (a, b), d in H.comult_basis(p):
            key = (a, b, q)
            delta_first[key] = delta_first.get(key, H.zero()) + c * d
        for (a, b), d in H.comult_basis(q):
            key = (p, a, b)
            delta_second[key] = delta_second.get(key, H.zero()) + c * d

    def tidy(t):
        return {k: v for k, v in t.items() if not v.is_zero()}

    assert tidy(delta_first) == tidy(H.tensor_mul(r13, r23))
    assert tidy(delta_second) == tidy(H.tensor_mul(r13, r12))
    wrong = tidy(H.tensor_mul(r23, r13))
    lhs = tidy(delta_second)
    assert lhs != wrong
    assert lhs[(0, 1, 1)] == Cyclotomic.one(4)
    assert wrong[(0, 1, 1)] == Cyclotomic.from_rational(-1, 4)


def test_json_round_trip(H6):
    doc = H6.to_json()
    clone = HopfAlgebra.from_json(doc)
    assert clone.dim == H6.dim and clone.N == H6.N
    assert clone.mult == H6.mult
    assert clone.comult == H6.comult
    assert clone.unit == H6.unit and clone.counit == H6.counit
    assert verify_bialgebra(clone).ok


def test_json_round_trip_keeps_antipode(H8):
    closed_form_antipode(H8)
    clone = HopfAlgebra.from_json(H8.to_json())
    assert clone.antipode is not None
    assert verify_antipode(clone, clone.antipode).ok


def test_from_json_rejects_malformed():
    with pytest.raises(MalformedInput):
        HopfAlgebra.from_json({"dim": 2})
    with pytest.raises(MalformedInput):
        HopfAlgebra.from_json([1, 2, 3])
