import pytest

from bicrossed.cocycles import CocyclePair, enumerate_cocycle_pairs, trivial_cocycles
from bicrossed.crossed_cat import (
    CrossedAction,
    EquivariantObject,
    GradedMap,
    GradedSpace,
    K_functor,
    K_inverse,
    action_structure_map,
    atomic_space,
    equivariant_from_json,
    equivariant_tensor,
    equivariant_validate,
    eta_map,
    free_object,
    hopf_monad_check,
    mu_map,
    rho_apply,
    scalar_object,
    space_tensor,
    t0_map,
    t2_map,
    t_map,
    t_space,
    tensor_map,
    twist_object,
    unit_object,
    unit_space,
    verify_crossed_action,
)
from bicrossed.errors import (
    InternalCheckFailed,
    MalformedInput,
    NotEquivariant,
    NotInvertible,
    ShapeMismatch,
)
from bicrossed.hopf import module_tensor, regular_module, trivial_module
from bicrossed.matched_pair import MatchedPair
from bicrossed.scalars import Cyclotomic, root_of_unity

COHERENCE_CHECKS = [
    "action composition coherence",
    "action unit coherence",
    "diagram (a)",
    "diagram (b)",
    "diagram (c)",
    "diagram (d)",
    "diagram (e)",
]


def test_coherence_dim6(ca6):
    rep = verify_crossed_action(ca6)
    assert rep.ok, rep.failures()
    assert [c.name for c in rep.checks] == COHERENCE_CHECKS


def test_coherence_dim8(ca8):
    rep = verify_crossed_action(ca8)
    assert rep.ok, rep.failures()


def test_corrupted_tau_fails_two_diagrams(mp8, cp8):
    tau = [[list(row) for row in plane] for plane in cp8.tau]
    tau[1][1][1] = root_of_unity(4, 1)
    bad = CocyclePair(mp8, 4, cp8.sigma, tau, check=False)
    rep = verify_crossed_action(CrossedAction(mp8, bad))
    assert [c.name for c in rep.failures()] == ["diagram (a)", "diagram (c)"]


@pytest.fixture(scope="module")
def ca_order4(mp8):
    """A crossed action whose sigma and tau both contain a primitive
    fourth root, so inverted and non-inverted scalar conventions give
    different numbers."""
    i_val = root_of_unity(4, 1)

    def has_i(tbl):
        return any(v == i_val for plane in tbl for row in plane for v in row)

    for cp in enumerate_cocycle_pairs(mp8, 4, budget=10 ** 6):
        if has_i(cp.sigma) and has_i(cp.tau):
            return CrossedAction(mp8, cp)
    raise AssertionError("no suitable cocycle pair found")


def test_order4_pair_is_coherent(ca_order4):
    assert verify_crossed_action(ca_order4).ok
    assert hopf_monad_check(ca_order4).ok


def test_monad_multiplication_scalar_convention(ca_order4):
    """The composition scalar must enter inverted; with a value of
    order four the two conventions disagree, and only the inverted one
    passes the coherence suite above."""
    cp = ca_order4.cocycles
    i_val = root_of_unity(4, 1)
    s, g, h = next(
        (s, g, h)
        for s in range(4) for g in range(2) for h in range(2)
        if cp.sigma[s][g][h] == i_val
    )
    x = atomic_space(ca_order4.gamma, s, 1)
    lb = x.labels[s][0]
    mu = mu_map(ca_order4, x)
    tx = t_space(ca_order4, x)
    ttx = t_space(ca_order4, tx)
    # both actions are trivial here, so every copy stays in degree s
    col = ttx.pos(s, (("T", g), ("T", h)) + lb)
    row = tx.pos(s, (("T", ca_order4.G.mul(h, g)),) + lb)
    entry = mu.block(s, ca_order4.N)[row][col]
    assert entry == cp.sigma[s][h][g].inverse()
    assert entry != cp.sigma[s][h][g]


def test_comonoidal_scalar_convention(ca_order4):
    cp = ca_order4.cocycles
    i_val = root_of_unity(4, 1)
    g, t, s = next(
        (g, t, s)
        for g in range(2) for t in range(4) for s in range(4)
        if cp.tau[g][t][s] == i_val
    )
    gm = ca_order4.gamma
    x = atomic_space(gm, t, 1, tag="U")
    y = atomic_space(gm, s, 1, tag="V")
    lx, ly = x.labels[t][0], y.labels[s][0]
    two = t2_map(ca_order4, x, y)
    d = gm.mul(t, s)
    col = two.src.pos(d, (("T", g),) + lx + ly)
    row = two.dst.pos(d, ((("T", g),) + lx) + ((("T", g),) + ly))
    entry = two.block(d, ca_order4.N)[row][col]
    assert entry == cp.tau[g][t][s].inverse()
    assert entry != cp.tau[g][t][s]


@pytest.mark.parametrize("which", ["dim6", "dim8"])
def test_monad_laws(which, ca6, ca8):
    ca = {"dim6": ca6, "dim8": ca8}[which]
    gm = ca.gamma
    x = GradedSpace(gm, {1: (("x", 1, 0),), 0: (("x", 0, 0), ("x", 0, 1))})
    tx = t_space(ca, x)
    mu_x = mu_map(ca, x)
    assert mu_x.compose(t_map(ca, mu_x)).eq(mu_x.compose(mu_map(ca, tx)))
    assert mu_x.compose(eta_map(ca, tx)).is_identity()
    assert mu_x.compose(t_map(ca, eta_map(ca, x))).is_identity()


@pytest.mark.parametrize("which", ["dim6", "dim8"])
def test_monad_comonoidality(which, ca6, ca8):
    ca = {"dim6": ca6, "dim8": ca8}[which]
    gm = ca.gamma
    x = GradedSpace(gm, {1: (("x", 1, 0),), 0: (("x", 0, 0),)})
    y = GradedSpace(gm, {2 % gm.order: (("y", 0, 0),)})
    xy = space_tensor(x, y)
    lhs = t2_map(ca, x, y).compose(mu_map(ca, xy))
    rhs = tensor_map(mu_map(ca, x), mu_map(ca, y)).compose(
        t2_map(ca, t_space(ca, x), t_space(ca, y))
    ).compose(t_map(ca, t2_map(ca, x, y)))
    assert lhs.eq(rhs)


def test_monad_check_reports(ca6, ca8):
    assert hopf_monad_check(ca6).ok
    assert hopf_monad_check(ca8).ok


def test_monad_check_catches_fake_pair(mp8):
    ract = [[g for g in range(2)] for _ in range(4)]
    ract[1][1] = 0  # no longer a bijection in the fused direction
    fake = MatchedPair(mp8.G, mp8.Gamma, [list(r) for r in mp8.lact], ract, check=False)
    rep = hopf_monad_check(CrossedAction(fake, trivial_cocycles(fake)))
    assert "right fusion indices bijective" in {c.name for c in rep.failures()}


def test_unit_counts_group_copies(ca6):
    tu = t_space(ca6, unit_space(ca6.gamma))
    assert tu.dims() == {ca6.gamma.identity: ca6.G.order}
    assert t0_map(ca6).src.dims() == tu.dims()


def test_rho_apply_moves_degrees(ca6):
    x = GradedSpace(ca6.gamma, {1: (("x", 0, 0),)})
    moved = rho_apply(ca6, 1, x)
    assert moved.degrees() == [ca6.pair.lact[1][1]]
    assert rho_apply(ca6, 0, x) == x


def test_free_object_structure_is_monad_multiplication(ca6):
    base = GradedSpace(ca6.gamma, {1: (("b", 0, 0), ("b", 0, 1))})
    fr = free_object(ca6, base)
    assert action_structure_map(ca6, fr).eq(mu_map(ca6, base))


def test_twist_changes_data_but_stays_equivariant(ca6):
    base = GradedSpace(ca6.gamma, {1: (("b", 0, 0), ("b", 0, 1))})
    fr = free_object(ca6, base)
    units = {
        s: [
            [Cyclotomic.one(1) if i == j else Cyclotomic.zero(1)
             for j in range(fr.space.dim_at(s))]
            for i in range(fr.space.dim_at(s))
        ]
        for s in fr.space.degrees()
    }
    shear_at = min(s for s in units if fr.space.dim_at(s) > 1)
    units[shear_at][0][1] = Cyclotomic.one(1)
    tw = twist_object(fr, units)
    assert not tw.eq_data(fr)
    assert tw.space == fr.space


def test_validate_rejects_scaled_block(ca6):
    base = GradedSpace(ca6.gamma, {1: (("b", 0, 0), ("b", 0, 1))})
    fr = free_object(ca6, base)
    r = {
        g: {s: [list(row) for row in fr.block(g, s)] for s in fr.space.degrees()}
        for g in ca6.G.elements()
    }
    r[1][1] = [[c * 2 for c in row] for row in r[1][1]]
    with pytest.raises(NotEquivariant):
        equivariant_validate(ca6, fr.space, r)
    r[1][1] = [[c * 0 for c in row] for row in r[1][1]]
    with pytest.raises(NotInvertible):
        equivariant_validate(ca6, fr.space, r)


def test_scalar_objects(ca6, ca8):
    # conjugation moves every nontrivial grading element of the dim-6
    # pair, so no scalar object exists off the identity
    for s in range(1, 3):
        assert scalar_object(ca6, s) is None
    # the trivial-action pair admits all of them
    made = [scalar_object(ca8, s) for s in range(1, 4)]
    assert all(obj is not None for obj in made)
    for obj in made:
        assert obj.space.total_dim() == 1


def test_tensor_is_strictly_associative(ca6, H6):
    a = free_object(ca6, GradedSpace(ca6.gamma, {1: (("b", 0, 0), ("b", 0, 1))}))
    b = free_object(ca6, GradedSpace(ca6.gamma, {2: (("c", 0, 0),)}))
    d = K_functor(H6, regular_module(H6))
    left = equivariant_tensor(ca6, equivariant_tensor(ca6, a, b), d)
    right = equivariant_tensor(ca6, a, equivariant_tensor(ca6, b, d))
    assert left.space == right.space
    assert left.eq_data(right)


def test_tensor_unit_is_strict(ca6):
    a = free_object(ca6, GradedSpace(ca6.gamma, {1: (("b", 0, 0),)}))
    u = unit_object(ca6)
    au = equivariant_tensor(ca6, a, u)
    ua = equivariant_tensor(ca6, u, a)
    assert au.space == a.space and au.eq_data(a)
    assert ua.space == a.space and ua.eq_data(a)


def test_image_of_regular_module(ca6, H6):
    k_reg = K_functor(H6, regular_module(H6))
    assert k_reg.space.dims() == {s: 2 for s in range(3)}
    k_tri = K_functor(H6, trivial_module(H6))
    assert k_tri.eq_data(unit_object(ca6))


def test_round_trip_module_to_object(ca6, H6):
    w = regular_module(H6)
    back = K_inverse(ca6, K_functor(H6, w))
    assert all(
        back.action[i][p][q] == w.action[i][p][q]
        for i in range(6) for p in range(6) for q in range(6)
    )


def test_round_trip_object_to_module(ca6):
    base = GradedSpace(ca6.gamma, {1: (("b", 0, 0), ("b", 0, 1))})
    fr = free_object(ca6, base)
    again = K_functor(ca6.algebra(), K_inverse(ca6, fr))
    assert again.eq_data(fr)


def test_image_functor_is_monoidal(ca6, H6):
    w_reg = regular_module(H6)
    w_tri = trivial_module(H6)
    for wa, wb in ((w_reg, w_reg), (w_reg, w_tri), (w_tri, w_reg)):
        kw = K_functor(H6, module_tensor(H6, wa, wb))
        kk = equivariant_tensor(ca6, K_functor(H6, wa), K_functor(H6, wb))
        assert kw.eq_data(kk)


def test_image_functor_is_monoidal_dim8(ca8, H8):
    k8 = K_functor(H8, regular_module(H8))
    assert K_inverse(ca8, k8).validate().ok
    kw = K_functor(H8, module_tensor(H8, regular_module(H8), trivial_module(H8)))
    kk = equivariant_tensor(ca8, k8, K_functor(H8, trivial_module(H8)))
    assert kw.eq_data(kk)


def test_equivariant_json_round_trip(ca6):
    base = GradedSpace(ca6.gamma, {1: (("b", 0, 0), ("b", 0, 1))})
    fr = free_object(ca6, base)
    doc = fr.to_json()
    clone = equivariant_from_json(ca6, doc)
    assert clone.space.dims() == fr.space.dims()
    with pytest.raises(MalformedInput):
        equivariant_from_json(ca6, {"dims": {"0": 1}})


def test_graded_space_errors(ca6):
    gm = ca6.gamma
    with pytest.raises(MalformedInput):
        GradedSpace(gm, {7: (("x", 0, 0),)})
    with pytest.raises(InternalCheckFailed):
        GradedSpace(gm, {0: (("x", 0, 0), ("x", 0, 0))})


def test_graded_map_errors(ca6):
    gm = ca6.gamma
    one = Cyclotomic.one(1)
    x = GradedSpace(gm, {0: (("x", 0, 0),)})
    y = GradedSpace(gm, {0: (("y", 0, 0), ("y", 0, 1))})
    with pytest.raises(ShapeMismatch):
        GradedMap(x, y, {0: [[one]]})
    f = GradedMap(x, y, {0: [[one], [one]]})
    g = GradedMap(x, x, {0: [[one]]})
    with pytest.raises(ShapeMismatch):
        g.compose(f)
