import numpy as np
import pytest

from hyperembed import embeddings as emb
from hyperembed.corpus import build_example_132
from hyperembed.lattice import all_subgroups
from hyperembed.sigma import HallSet, SigmaPartition, complete_hall_sets
from oracles import closure, compose, modular_bruteforce, permutes


def frozen(H):
    return frozenset(p.images for p in H.perms())


def inverse(g):
    out = [0] * len(g)
    for i, x in enumerate(g):
        out[x] = i
    return tuple(out)


def raw_core(Y, X):
    out = X
    for y in Y:
        out = out & frozenset(compose(compose(inverse(y), x), y) for x in X)
    return out


class RawOracle:
    """Every predicate straight from its definition, on sets of tuples."""

    def __init__(self, G, sigma):
        self.G = frozen(G.whole)
        self.degree = G.degree
        self.sigma = sigma
        self.subs = sorted({frozen(H) for H in all_subgroups(G)}, key=len)
        self.modular = {H: modular_bruteforce(H, set(self.subs)) for H in self.subs}
        self.subnormal = self._subnormal()

    def _primary(self, n):
        return self.sigma.is_primary_number(n)

    def _subnormal(self):
        reached = {self.G}
        frontier = [self.G]
        while frontier:
            nxt = []
            for Y in frontier:
                for X in self.subs:
                    if X in reached or not X <= Y:
                        continue
                    core = raw_core(Y, X)
                    if core == X or self._primary(len(Y) // len(core)):
                        reached.add(X)
                        nxt.append(X)
            frontier = nxt
        return reached

    def join(self, a, b):
        return closure(list(a) + list(b), self.degree)

    def h_perm(self, H, hall):
        return all(permutes(H, A) for A in hall)

    def m_h_perm(self, H, hall):
        return any(self.modular[A] and self.h_perm(B, hall) and self.join(A, B) == H
                   for A in self.subs if A <= H for B in self.subs if B <= H)

    def weakly(self, H, hall):
        for T in self.subnormal:
            if len(H) * len(T) != len(self.G) * len(H & T):
                continue
            for S in self.subs:
                if (H & T) <= S <= H and self.m_h_perm(S, hall):
                    return True
        return False


@pytest.mark.parametrize("name,spec", [("A4", "2|3|*"), ("A4", "2,3|*"), ("S3", "2|3|*"),
                                       ("D8", "2|*"), ("C3:C4", "2|3|*"), ("D12", "2|3|*")])
def test_masks_match_definitions(group, name, spec):
    G = group(name)
    sigma = SigmaPartition.parse(spec)
    oracle = RawOracle(G, sigma)
    lat = all_subgroups(G)
    sub = emb.sigma_subnormal_mask(G, sigma)
    assert {frozen(lat[i]) for i in np.flatnonzero(sub)} == oracle.subnormal
    for hs in complete_hall_sets(G, sigma):
        hall = [frozen(A) for A in hs.members]
        hp = emb.h_permutable_mask(G, hs)
        mp = emb.m_h_permutable_mask(G, hs)
        wp = emb.weakly_m_h_permutable_mask(G, hs, sigma)
        for i, H in enumerate(lat):
            fH = frozen(H)
            assert bool(hp[i]) == oracle.h_perm(fH, hall)
            assert bool(mp[i]) == oracle.m_h_perm(fH, hall)
            assert bool(wp[i]) == oracle.weakly(fH, hall)


def test_a5_facts(A5):
    sigma = SigmaPartition.parse("2,3|*")
    lat = all_subgroups(A5)
    assert [lat[i].order for i in np.flatnonzero(emb.sigma_subnormal_mask(A5, sigma))] == [1, 60]
    C5 = next(H for H in lat if H.order == 5)
    K = next(H for H in lat if H.order == 12)
    hs = HallSet.from_members(A5, sigma, [C5, K])
    assert emb.is_H_permutable(A5, C5, hs)
    assert emb.is_weakly_m_H_permutable(A5, C5, hs, sigma)
    assert not emb.is_sigma_permutable(A5, C5, sigma)
    assert not emb.is_weakly_m_sigma_permutable(A5, C5, sigma)
    w = emb.weakly_m_H_permutable_witness(A5, C5, hs, sigma)
    assert w.parts["T"].order == 60 and w.parts["S"] == C5
    assert w.validate(A5, C5, sigma=sigma, hall_set=hs)


def test_a4_classical_order_two(A4):
    sigma = SigmaPartition.parse("2|3|*")
    hs = complete_hall_sets(A4, sigma)[0]
    H = A4.subgroup(["(0 1)(2 3)"])
    assert not emb.is_weakly_m_H_permutable(A4, H, hs, sigma)
    assert emb.weakly_m_H_permutable_witness(A4, H, hs, sigma) is None
    assert not emb.is_c_normal(A4, H)


def test_a4_coarse_everything_weak(A4):
    sigma = SigmaPartition.parse("2,3|*")
    hs = complete_hall_sets(A4, sigma)[0]
    assert emb.h_permutable_mask(A4, hs).all()
    assert emb.weakly_m_h_permutable_mask(A4, hs, sigma).all()


def test_witnesses_validate(S4):
    sigma = SigmaPartition.parse("2|3|*")
    lat = all_subgroups(S4)
    for hs in complete_hall_sets(S4, sigma)[:3]:
        for H in lat:
            w = emb.weakly_m_H_permutable_witness(S4, H, hs, sigma)
            if w is not None:
                assert w.validate(S4, H, sigma=sigma, hall_set=hs)
            w = emb.m_H_permutable_witness(S4, H, hs)
            if w is not None:
                assert w.validate(S4, H, sigma=sigma, hall_set=hs)
        for H in lat:
            w = emb.sigma_permutable_witness(S4, H, sigma)
            if w is not None:
                assert w.validate(S4, H, sigma=sigma)


def test_sigma_subnormal_chain(S4):
    sigma = SigmaPartition.parse("2|3|*")
    H = S4.subgroup(["(0 1)(2 3)"])
    chain = emb.sigma_subnormal_chain(S4, H, sigma)
    assert chain[0] == H and chain[-1] == S4.whole


def test_c_normal(S3, S4):
    assert emb.is_c_normal(S3, S3.subgroup(["(0 1)"]))
    V4 = S4.subgroup(["(0 1)(2 3)", "(0 2)(1 3)"])
    assert emb.is_c_normal(S4, V4)
    w = emb.c_normal_witness(S3, S3.subgroup(["(0 1)"]))
    assert w.parts["T"].order == 3


def test_example_group_h_permutability():
    ex = build_example_132(5, 2, 7, 3)
    assert emb.is_H_permutable(ex.group, ex.B, ex.hall_set)
    assert not emb.is_H_permutable(ex.group, ex.H, ex.hall_set)
    assert emb.is_H_permutable(ex.group, ex.A, ex.hall_set) is False
