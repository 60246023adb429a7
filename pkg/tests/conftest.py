import pytest

from bicrossed.cocycles import CocyclePair, trivial_cocycles
from bicrossed.crossed_cat import CrossedAction
from bicrossed.groups import (
    group_cyclic,
    group_direct_product,
    group_symmetric,
    group_trivial,
    subgroup_generated,
)
from bicrossed.hopf import build_bicrossed
from bicrossed.matched_pair import (
    from_factorization,
    matched_pair_conjugation,
    matched_pair_trivial,
)
from bicrossed.scalars import Cyclotomic, root_of_unity


@pytest.fixture(scope="session")
def s3():
    return group_symmetric(3)


@pytest.fixture(scope="session")
def mp6(s3):
    lab = {s3.label(i): i for i in range(6)}
    gsub = subgroup_generated(s3, [lab["(1 2)"]]).elements
    gammasub = subgroup_generated(s3, [lab["(1 2 3)"]]).elements
    return from_factorization(s3, gsub, gammasub)


@pytest.fixture(scope="session")
def cp6(mp6):
    return trivial_cocycles(mp6)


@pytest.fixture(scope="session")
def H6(mp6, cp6):
    return build_bicrossed(mp6, cp6)


@pytest.fixture(scope="session")
def ca6(mp6, cp6):
    ca = CrossedAction(mp6, cp6)
    ca.algebra()
    return ca


@pytest.fixture(scope="session")
def mp8():
    z2 = group_cyclic(2)
    return matched_pair_trivial(z2, group_direct_product(z2, z2))


@pytest.fixture(scope="session")
def cp8(mp8):
    one = Cyclotomic.one(4)
    minus = root_of_unity(4, 2)
    sigma = [[[one] * 2 for _ in range(2)] for _ in range(4)]
    tau = [[[one] * 4 for _ in range(4)] for _ in range(2)]
    for s in range(4):
        for t in range(4):
            if ((s % 2) * (t // 2)) % 2:
                tau[1][s][t] = minus
    return CocyclePair(mp8, 4, sigma, tau)


@pytest.fixture(scope="session")
def H8(mp8, cp8):
    return build_bicrossed(mp8, cp8)


@pytest.fixture(scope="session")
def ca8(mp8, cp8):
    return CrossedAction(mp8, cp8)


@pytest.fixture(scope="session")
def mp_z2_split():
    return matched_pair_trivial(group_trivial(), group_cyclic(2))


@pytest.fixture(scope="session")
def mp_conj_s3(s3):
    return matched_pair_conjugation(s3)
