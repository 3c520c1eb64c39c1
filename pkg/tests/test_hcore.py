import pytest

from hlattice.errors import HOverflowError, NotHMember
from hlattice.hcore import (
    Branch,
    HMember,
    LatticePoint,
    MemberClass,
    h_product,
    is_hmember,
    member_from_traeger,
    power_branch,
    quadrant_of,
    traeger_of,
)


@pytest.mark.parametrize(
    "s, branch, value",
    [(1, "+", 7), (0, "+", 1), (4, "-", 23), (0, "-", -1), (280, "+", 1681)],
)
def test_member_from_traeger(s, branch, value):
    m = member_from_traeger(s, branch)
    assert m.value == value
    assert (m.traeger, m.branch) == (s, Branch.parse(branch))


@pytest.mark.parametrize(
    "x, expected",
    [(7, (1, Branch.PLUS)), (1681, (280, Branch.PLUS)), (5, (1, Branch.MINUS)), (-5, (1, Branch.MINUS)), (-1, (0, Branch.MINUS)), (1, (0, Branch.PLUS))],
)
def test_traeger_of(x, expected):
    assert traeger_of(x) == expected


@pytest.mark.parametrize("x", [9, 0, 2, 3, 4, -3, 12])
def test_traeger_of_rejects_non_members(x):
    with pytest.raises(NotHMember):
        traeger_of(x)
    assert not is_hmember(x)


def test_member_classes():
    assert HMember.of(1).member_class is MemberClass.UNIT
    assert HMember.of(-1).member_class is MemberClass.UNIT
    assert HMember.of(-5).member_class is MemberClass.PRIME
    assert HMember.of(49).member_class is MemberClass.MULTIPLE


def test_inconsistent_coordinates_rejected():
    with pytest.raises(NotHMember):
        HMember(7, 2, Branch.PLUS)


@pytest.mark.parametrize("x, y, product", [(7, 7, 49), (-5, -5, 25), (-5, 7, -35), (5, 11, 55)])
def test_h_product(x, y, product):
    z = h_product(HMember.of(x), HMember.of(y))
    assert z.value == product
    assert (HMember.of(x) * HMember.of(y)).value == product


def test_product_branch_rule():
    assert (HMember.of(5) * HMember.of(11)).branch is Branch.PLUS
    assert (HMember.of(5) * HMember.of(7)).branch is Branch.MINUS
    assert (HMember.of(13) * HMember.of(7)).branch is Branch.PLUS


def test_product_overflow():
    big = HMember.of(6 * 10**12 + 1)
    with pytest.raises(HOverflowError):
        h_product(big, big)


@pytest.mark.parametrize("p, n, branch", [(-5, 2, Branch.PLUS), (-5, 3, Branch.MINUS), (7, 5, Branch.PLUS)])
def test_power_branch(p, n, branch):
    assert power_branch(HMember.of(p), n) is branch
    assert traeger_of(p**n)[1] is branch


@pytest.mark.parametrize("x, y, q", [(7, 13, 1), (-5, 7, 2), (-5, -11, 3), (7, -5, 4), (5, 1147, 2)])
def test_quadrant_of(x, y, q):
    pt = LatticePoint.of(x, y)
    assert quadrant_of(pt) == q == pt.quadrant
    assert pt.as_tuple() == (x, y)
