import pytest

from hyperembed.lattice import normal_subgroups
from hyperembed.permgroup import ValidationError, quotient
from hyperembed.sigma import (
    HallSet,
    SigmaPartition,
    complete_hall_sets,
    hall_subgroups,
    image_hall_set,
    is_sigma_full_of_sylow_type,
    is_sigma_primary,
    o_upper_pi,
    partitions_of,
    reduces_into,
    restrict_hall_set,
)


def test_parse_and_print():
    s = SigmaPartition.parse("3, 2 | 5|*")
    assert str(s) == "2,3|5|*"
    assert 7 in s.complement and 2 not in s.complement
    assert SigmaPartition.parse(str(s)) == s


@pytest.mark.parametrize("bad", ["2,4|*", "2|2", "*|2", "2||3", "x"])
def test_parse_rejects(bad):
    with pytest.raises(ValidationError):
        SigmaPartition.parse(bad)


def test_partitions_count():
    assert len(list(partitions_of(30))) == 5
    assert len(list(partitions_of(8))) == 1
    assert [str(s) for s in partitions_of(1)] == ["*"]


def test_sigma_of_and_primary(A4, A5):
    s = SigmaPartition.parse("2,3|*")
    assert is_sigma_primary(A4, s)
    assert not is_sigma_primary(A5, s)
    assert [str(b) for b in s.sigma_of(60)] == ["2,3", "*"]


def test_hall_sets_a5(A5):
    s = SigmaPartition.parse("2,3|*")
    assert len(hall_subgroups(A5, s.blocks[0])) == 5
    assert len(complete_hall_sets(A5, s)) == 30
    assert complete_hall_sets(A5, SigmaPartition.parse("2,5|*")) == []


def test_hall_sets_a4(A4):
    s = SigmaPartition.parse("2,3|*")
    halls = complete_hall_sets(A4, s)
    assert len(halls) == 1 and list(halls[0].members) == [A4.whole]
    assert len(complete_hall_sets(A4, SigmaPartition.parse("2|3|*"))) == 4


def test_hall_set_validation(A4):
    s = SigmaPartition.parse("2|3|*")
    C3 = A4.subgroup(["(0 1 2)"])
    with pytest.raises(ValidationError):
        HallSet.from_members(A4, s, [C3])
    with pytest.raises(ValidationError):
        HallSet.from_members(A4, s, [C3, A4.subgroup(["(0 1)(2 3)"])])


def test_sylow_type(A5, S4):
    s = SigmaPartition.parse("2,3|*")
    # S3 is a {2,3}-subgroup of A5 lying in no A4
    assert not is_sigma_full_of_sylow_type(A5, s)
    assert is_sigma_full_of_sylow_type(A5, s, "EC")
    assert is_sigma_full_of_sylow_type(A5, SigmaPartition.classical_for(60))
    assert is_sigma_full_of_sylow_type(S4, s)


def test_o_upper_pi(A4, S4):
    two = SigmaPartition.parse("2|*").blocks
    assert o_upper_pi(A4, two).order == 12
    three = SigmaPartition.parse("3|*").blocks
    assert o_upper_pi(A4, three).order == 4
    assert o_upper_pi(S4, two).order == 12


def test_reduction_and_images(S4):
    s = SigmaPartition.parse("2|3|*")
    hs = complete_hall_sets(S4, s)[0]
    for N in normal_subgroups(S4):
        if N.order > 1:
            assert reduces_into(hs, N)
            r = restrict_hall_set(hs, N, s)
            assert r.parent is N.group
        Q = quotient(S4, N)
        img = image_hall_set(hs, Q, s)
        assert img.parent is Q.group
