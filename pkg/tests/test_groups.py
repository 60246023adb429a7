import pytest

from bicrossed.errors import (
    IndexOutOfRange,
    MalformedInput,
    NotAGroup,
    NotAHom,
    SizeBound,
)
from bicrossed.groups import (
    FiniteGroup,
    all_homomorphisms,
    cayley_color_matrix,
    enumerate_homs,
    group_cyclic,
    group_direct_product,
    group_from_table,
    group_product,
    group_symmetric,
    group_trivial,
    hom_validate,
    subgroup_generated,
)


def test_cyclic_group_basics():
    z6 = group_cyclic(6)
    assert z6.order == 6
    assert z6.mul(4, 5) == 3
    assert z6.inv(2) == 4
    assert z6.identity == 0
    assert z6.element_order(2) == 3
    assert z6.is_abelian()
    assert z6.validate().ok


def test_symmetric_group_composition_is_right_to_left():
    s3 = group_symmetric(3)
    lab = {s3.label(i): i for i in range(6)}
    # (1 2) then (2 3): x -> (2 3)((1 2)(x)) is the 3-cycle (1 3 2)
    assert s3.mul(lab["(2 3)"], lab["(1 2)"]) == lab["(1 3 2)"]
    assert s3.label(s3.identity) == "e"
    assert not s3.is_abelian()
    assert s3.validate().ok


def test_symmetric_group_size_cap():
    with pytest.raises(SizeBound):
        group_symmetric(7)


def test_direct_product_encoding():
    z2, z3 = group_cyclic(2), group_cyclic(3)
    p = group_direct_product(z2, z3)
    assert p.order == 6
    # (1, 2) * (1, 2) = (0, 1) under x * |B| + y encoding
    assert p.mul(1 * 3 + 2, 1 * 3 + 2) == 0 * 3 + 1
    assert group_product(z2, z3).table == p.table


def test_group_from_table_rejects_non_groups():
    with pytest.raises(NotAGroup):
        group_from_table([[0, 1], [1, 1]])
    with pytest.raises(MalformedInput):
        group_from_table([[0, 1]])
    # a left-translation table that is not associative
    bad = [[0, 1, 2], [1, 2, 0], [2, 1, 0]]
    with pytest.raises(NotAGroup):
        group_from_table(bad)


def test_group_json_round_trip():
    s3 = group_symmetric(3)
    clone = FiniteGroup.from_json(s3.to_json())
    assert clone.table == s3.table
    assert [clone.label(i) for i in range(6)] == [s3.label(i) for i in range(6)]


def test_subgroup_generated():
    s4 = group_symmetric(4)
    four_cycle = next(i for i in range(24) if s4.label(i) == "(1 2 3 4)")
    sub = subgroup_generated(s4, [four_cycle])
    assert len(sub.elements) == 4
    z6 = group_cyclic(6)
    assert list(subgroup_generated(z6, [2]).elements) == [0, 2, 4]
    assert list(subgroup_generated(z6, []).elements) == [0]


def test_hom_validate_accepts_and_rejects():
    z6, z3 = group_cyclic(6), group_cyclic(3)
    h = hom_validate(z6, z3, [0, 1, 2, 0, 1, 2])
    assert h(5) == 2
    with pytest.raises(NotAHom):
        hom_validate(z6, z3, [0, 1, 1, 0, 1, 1])
    with pytest.raises(NotAHom):
        # does not send identity to identity
        hom_validate(z3, z3, [1, 2, 0])
    with pytest.raises(IndexOutOfRange):
        hom_validate(z3, z3, [0, 3, 0])
    with pytest.raises(MalformedInput):
        hom_validate(z3, z3, [0, 1])


def test_hom_counts_match_known_values(s3):
    z2, z4 = group_cyclic(2), group_cyclic(4)
    assert len(all_homomorphisms(s3, s3)) == 10
    assert len(all_homomorphisms(s3, z4)) == 2
    assert len(all_homomorphisms(z2, s3)) == 4
    assert len(all_homomorphisms(z4, z2)) == 2
    assert [list(h.map) for h in enumerate_homs(s3, z4)] == all_homomorphisms(s3, z4)


def test_all_homomorphisms_are_sorted_and_valid(s3):
    maps = all_homomorphisms(s3, s3)
    assert maps == sorted(maps)
    for image in maps:
        hom_validate(s3, s3, image)


def test_trivial_group():
    e = group_trivial()
    assert e.order == 1 and e.mul(0, 0) == 0


def test_cayley_color_matrix_shape():
    z4 = group_cyclic(4)
    m = cayley_color_matrix(z4)
    assert len(m) == 4 and all(len(row) == 4 for row in m)
    flat = {v for row in m for v in row}
    assert all(0.0 <= v <= 1.0 for v in flat)
    assert len(flat) == 4
