import numpy as np
import pytest

from hyperembed.permgroup import (
    BudgetError,
    Permutation,
    ValidationError,
    centralizer,
    conjugate,
    core,
    from_generators,
    is_normal,
    join,
    normal_closure,
    normalizer,
    product_permutes,
    quotient,
    schreier_sims,
)
from oracles import closure, compose


def test_cycle_parsing_and_printing():
    p = Permutation.from_cycles("(0 1 2)(3 4)", 6)
    assert p.images == (1, 2, 0, 4, 3, 5)
    assert p.cycle_string() == "(0 1 2)(3 4)"
    assert p.order() == 6
    assert Permutation.from_cycles("()", 3).is_identity()


@pytest.mark.parametrize("bad", ["(0 1", "(0 0)", "(0 7)", "0 1)", "(a b)"])
def test_malformed_cycles_rejected(bad):
    with pytest.raises(ValidationError):
        Permutation.from_cycles(bad, 4)


def test_right_action_convention():
    a = Permutation.from_cycles("(0 1)", 3)
    b = Permutation.from_cycles("(1 2)", 3)
    # apply a then b: 0 -> 1 -> 2
    assert (a * b)(0) == 2
    assert (a * b).images == compose(a.images, b.images)


def test_inverse_and_power():
    p = Permutation.from_cycles("(0 1 2 3)", 4)
    assert (p * p.inverse()).is_identity()
    assert p ** 4 == Permutation.identity(4)
    assert p ** -1 == p.inverse()


def test_orders_of_standard_groups(A4, S4, A5, Q8):
    assert (A4.order, S4.order, A5.order, Q8.order) == (12, 24, 60, 8)


def test_membership(A4):
    assert Permutation.from_cycles("(0 1)(2 3)", 4) in A4
    assert Permutation.from_cycles("(0 1)", 4) not in A4


def test_schreier_sims_matches_closure(S4):
    gens = [g.images for g in S4.generators]
    base, _, transversals = schreier_sims(gens, 4)
    size = int(np.prod([len(t) for t in transversals]))
    assert size == len(closure(gens, 4)) == 24


def test_trivial_group_on_many_points():
    G = from_generators(23, [])
    assert G.order == 1 and G.trivial == G.whole


def test_identity_is_index_zero(A5):
    assert A5.element(0).is_identity()
    assert (A5.table[0] == np.arange(60)).all()


def test_table_is_a_group_table(A4):
    t = A4.table
    # every row and column is a permutation of the elements
    assert all(len(set(row)) == 12 for row in t)
    assert all(len(set(col)) == 12 for col in t.T)
    inv = A4.inverses
    assert (t[np.arange(12), inv] == 0).all()


def test_enumeration_cap():
    with pytest.raises(BudgetError):
        from_generators(8, ["(0 1 2 3 4 5 6 7)", "(0 1)"], cap=1000).table


def test_subgroup_ops(S4):
    D8 = S4.subgroup(["(0 1 2 3)", "(0 2)"])
    V4 = core(S4, D8)
    assert D8.order == 8 and V4.order == 4
    assert is_normal(S4, V4) and not is_normal(S4, D8)
    assert normal_closure(S4, S4.subgroup(["(0 1)"])).order == 24
    assert normalizer(S4, D8) == D8
    assert centralizer(S4, V4).order == 4


def test_conjugate_and_join(A5):
    C5 = A5.subgroup(["(0 1 2 3 4)"])
    assert normalizer(A5, C5).order == 10
    g = Permutation.from_cycles("(0 1 2)", 5)
    C5g = conjugate(C5, g)
    assert C5g.order == 5 and C5g != C5
    assert join(A5, [C5, C5g]).order == 60
    assert not product_permutes(A5, C5, C5g)


def test_quotient(S4):
    V4 = core(S4, S4.subgroup(["(0 1 2 3)", "(0 2)"]))
    Q = quotient(S4, V4)
    assert Q.group.order == 6 and not Q.group.is_abelian()
    A4 = S4.subgroup(["(0 1 2)", "(1 2 3)"])
    assert Q.image(A4).order == 3
    assert Q.preimage(Q.image(A4)) == A4


def test_quotient_needs_normal(S4):
    with pytest.raises(ValidationError):
        quotient(S4, S4.subgroup(["(0 1)"]))
