import random

import pytest

from hyperembed.lattice import normal_subgroups
from hyperembed.permgroup import ValidationError
from hyperembed.series import (
    center,
    chief_series_through,
    components,
    derived_subgroup,
    fitting_subgroup,
    generalized_fitting,
    hypercenter,
    is_hypercyclically_embedded,
    is_p_nilpotent,
    is_soluble,
    is_supersoluble,
    sylow_subgroup,
)


def test_chief_series_s4(S4):
    s = chief_series_through(S4, S4.whole)
    assert s.factor_orders() == [4, 3, 2]
    assert [f.cyclic for f in s.factors] == [False, True, True]


def test_chief_factors_independent_of_choices(group):
    G = group("C2xC2xC3")
    ref = sorted(chief_series_through(G, G.whole).factor_orders())
    for seed in range(4):
        assert sorted(chief_series_through(G, G.whole, random.Random(seed)).factor_orders()) == ref


def test_supersolubility(group):
    assert is_supersoluble(group("S3"))
    assert is_supersoluble(group("D8xC3"))
    assert not is_supersoluble(group("A4"))
    assert not is_supersoluble(group("SL(2,3)"))
    assert is_supersoluble(group("C7:C3"))


def test_hypercyclic_embedding(S4, A4):
    V4 = [N for N in normal_subgroups(S4) if N.order == 4][0]
    assert not is_hypercyclically_embedded(S4, V4)
    assert is_hypercyclically_embedded(S4, S4.trivial)
    with pytest.raises(ValidationError):
        is_hypercyclically_embedded(S4, S4.subgroup(["(0 1)"]))


def test_centres(Q8, A4, D8):
    assert center(Q8).order == 2
    assert hypercenter(Q8).order == 8
    assert hypercenter(A4).order == 1
    assert hypercenter(D8).order == 8


def test_derived_and_soluble(S4, A5):
    assert derived_subgroup(S4).order == 12
    assert is_soluble(S4) and not is_soluble(A5)


def test_p_nilpotent(A4, S3):
    assert not is_p_nilpotent(A4, 2)
    assert is_p_nilpotent(A4, 3)
    assert is_p_nilpotent(S3, 2) and not is_p_nilpotent(S3, 3)


def test_sylow(A5):
    for p, n in ((2, 4), (3, 3), (5, 5)):
        assert sylow_subgroup(A5, p).order == n


def test_fitting(A4, A5, S4):
    assert fitting_subgroup(A4).order == 4
    assert generalized_fitting(A4, A4.whole).order == 4
    assert generalized_fitting(A5, A5.whole).order == 60
    assert [L.order for L in components(A5)] == [60]
    assert fitting_subgroup(S4).order == 4
