import numpy as np
import pytest

from hyperembed.lattice import (
    all_subgroups,
    is_modular_subgroup,
    minimal_normal_subgroups,
    modular_mask,
    modularity_witness,
    normal_subgroups,
    subnormal_subgroups,
)
from hyperembed.permgroup import BudgetError, join
from oracles import lattice_by_joins, modular_bruteforce


def frozen(H):
    return frozenset(p.images for p in H.perms())


@pytest.mark.parametrize("name,size", [("A4", 10), ("S4", 30), ("A5", 59), ("Q8", 6), ("D8", 10),
                                       ("C2xC2xC2", 16), ("S3xS3", 60)])
def test_lattice_sizes(group, name, size):
    assert len(all_subgroups(group(name))) == size


def test_lattice_matches_oracle(group):
    for name in ("A4", "D12", "Q8xC3", "SL(2,3)"):
        G = group(name)
        lat = all_subgroups(G)
        assert {frozen(H) for H in lat} == lattice_by_joins(frozen(G.whole))


def test_ordering_and_tables(S4):
    lat = all_subgroups(S4)
    assert lat[0].order == 1 and lat[lat.top].order == 24
    assert list(lat.orders) == sorted(lat.orders)
    for i in range(len(lat)):
        for j in range(len(lat)):
            assert lat[lat.join(i, j)] == join(S4, [lat[i], lat[j]])
            assert lat[lat.meet(i, j)] == lat[i] & lat[j]


def test_normal_subgroups(A4, S4, A5):
    assert [N.order for N in normal_subgroups(A4)] == [1, 4, 12]
    assert [N.order for N in normal_subgroups(S4)] == [1, 4, 12, 24]
    assert [N.order for N in normal_subgroups(A5)] == [1, 60]
    lat = all_subgroups(S4)
    assert [lat[i] for i in lat.normal_indices()] == normal_subgroups(S4)


def test_subnormal_and_minimal_normal(S4):
    assert len(subnormal_subgroups(S4)) == 7
    assert [N.order for N in minimal_normal_subgroups(S4)] == [4]


def test_conjugacy_classes(A5):
    lat = all_subgroups(A5)
    sizes = sorted(len(c) for c in lat.conjugacy_classes())
    # 1, A5; 15 C2, 10 C3, 6 C5, 5 V4, 10 S3, 6 D10, 5 A4
    assert sizes == [1, 1, 5, 5, 6, 6, 10, 10, 15]


def test_modularity_a4(A4):
    lat = all_subgroups(A4)
    bad = sorted(int(lat[i].order) for i in np.flatnonzero(~modular_mask(A4)))
    assert bad == [2, 2, 2, 3, 3, 3, 3]
    H = next(H for H in lat if H.order == 2)
    w = modularity_witness(A4, H)
    assert w is not None and w.identity in (1, 2)


def test_modularity_matches_bruteforce(group):
    for name in ("A4", "D8", "S3", "Q8", "C3:C4"):
        G = group(name)
        lat = all_subgroups(G)
        subs = {frozen(H) for H in lat}
        for H, flag in zip(lat, modular_mask(G)):
            assert bool(flag) == modular_bruteforce(frozen(H), subs), (name, H)


def test_a5_only_trivial_modular(A5):
    assert int(modular_mask(A5).sum()) == 2


def test_q8_all_modular(Q8):
    assert modular_mask(Q8).all()


def test_caps(A5):
    with pytest.raises(BudgetError):
        all_subgroups(A5, cap=50)
    H = A5.subgroup(["(0 1 2)"])
    with pytest.raises(BudgetError):
        is_modular_subgroup(A5, H, cap=30)
    assert is_modular_subgroup(A5, A5.trivial, cap=30)
