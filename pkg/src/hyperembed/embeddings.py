"""Subgroup embedding predicates over a sigma-partition and a complete Hall set.

Each predicate has a lattice-wide form (``*_mask``) that evaluates it for
every subgroup at once.  Masks are cached on the group per sigma or per Hall
set, since the theorem checks ask the same question for many subgroups.
The scalar forms and the ``*_witness`` functions sit on top of the masks.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .config import current
from .lattice import SubgroupLattice, all_subgroups, is_modular_subgroup, modular_mask
from .permgroup import (
    PermGroup,
    Subgroup,
    ValidationError,
    conjugate,
    core,
    is_normal,
    join,
    product_permutes,
)
from .sigma import HallSet, SigmaPartition, complete_hall_sets

__all__ = [
    "EmbeddingWitness",
    "is_sigma_subnormal",
    "sigma_subnormal_chain",
    "is_sigma_permutable",
    "is_H_permutable",
    "is_m_H_permutable",
    "is_weakly_m_H_permutable",
    "is_m_sigma_permutable",
    "is_weakly_m_sigma_permutable",
    "is_c_normal",
    "m_H_permutable_witness",
    "weakly_m_H_permutable_witness",
    "weakly_m_sigma_permutable_witness",
    "sigma_permutable_witness",
    "c_normal_witness",
    "sigma_subnormal_mask",
    "h_permutable_mask",
    "m_h_permutable_mask",
    "weakly_m_h_permutable_mask",
    "sigma_permutable_mask",
    "m_sigma_permutable_mask",
    "weakly_m_sigma_permutable_mask",
    "c_normal_mask",
]


def _lattice(G: PermGroup) -> SubgroupLattice:
    return all_subgroups(G, current().lattice_cap)


def _modular(G: PermGroup) -> np.ndarray:
    return modular_mask(G, current().modularity_cap)


def _cached(G: PermGroup, key, build):
    value = G.cache.get(key)
    if value is None:
        value = build()
        G.cache[key] = value
    return value


def _permutes(lat: SubgroupLattice) -> np.ndarray:
    """``P[x, y]`` iff subgroups x and y permute."""

    def build():
        o = lat.orders
        return o[lat.join_table] * o[lat.meet_table] == o[:, None] * o[None, :]

    return _cached(lat.group, "_permutes", build)


def _covers(lat: SubgroupLattice) -> np.ndarray:
    """``cover[h, t]`` iff ``G = HT`` as a set product."""

    def build():
        o = lat.orders
        return o[:, None] * o[None, :] == lat.group.order * o[lat.meet_table]

    return _cached(lat.group, "_covers", build)


# --- sigma-subnormality -------------------------------------------------------


def _sigma_subnormal(G: PermGroup, sigma: SigmaPartition):
    def build():
        lat = _lattice(G)
        L = len(lat)
        reached = np.zeros(L, dtype=bool)
        via = np.full(L, -1, dtype=np.int64)
        reached[lat.top] = True
        if len(sigma.sigma_of(G.order)) <= 1:
            # G itself is sigma-primary: one step from G reaches everything
            via[:] = lat.top
            via[lat.top] = -1
            reached[:] = True
            return reached, via
        primary: dict[int, bool] = {}

        def is_primary(m: int) -> bool:
            if m not in primary:
                primary[m] = sigma.is_primary_number(m)
            return primary[m]

        frontier = [lat.top]
        while frontier:
            nxt = []
            for y in frontier:
                cand = lat.contain[:, y] & ~reached
                if not cand.any():
                    continue
                cores = lat.cores_in(y)
                idx = np.flatnonzero(cand)
                quotient_orders = lat.orders[y] // lat.orders[cores[idx]]
                ok = lat.normal_in(y)[idx] | np.array([is_primary(int(q)) for q in quotient_orders], dtype=bool)
                for x in idx[ok]:
                    reached[x] = True
                    via[x] = y
                    nxt.append(int(x))
            frontier = nxt
        return reached, via

    return _cached(G, ("sigma_subnormal", sigma), build)


def sigma_subnormal_mask(G: PermGroup, sigma: SigmaPartition) -> np.ndarray:
    return _sigma_subnormal(G, sigma)[0]


def is_sigma_subnormal(G: PermGroup, A: Subgroup, sigma: SigmaPartition) -> bool:
    lat = _lattice(G)
    return bool(sigma_subnormal_mask(G, sigma)[lat.index_of(A)])


def sigma_subnormal_chain(G: PermGroup, A: Subgroup, sigma: SigmaPartition) -> list[Subgroup] | None:
    """A chain ``A = A_0 <= ... <= A_n = G`` witnessing sigma-subnormality."""
    lat = _lattice(G)
    reached, via = _sigma_subnormal(G, sigma)
    i = lat.index_of(A)
    if not reached[i]:
        return None
    chain = [lat[i]]
    while via[i] >= 0:
        i = int(via[i])
        chain.append(lat[i])
    return chain


# --- Hall-set permutability ---------------------------------------------------


def is_H_permutable(G: PermGroup, H: Subgroup, hall_set: HallSet) -> bool:
    """``HA = AH`` for every member ``A`` of ``hall_set``.

    Works directly on the elements, so it needs no subgroup lattice.
    """
    if hall_set.parent is not G:
        raise ValidationError("Hall set belongs to another group")
    return all(product_permutes(G, H, A) for A in hall_set.members)


def h_permutable_mask(G: PermGroup, hall_set: HallSet) -> np.ndarray:
    def build():
        lat = _lattice(G)
        P = _permutes(lat)
        cols = [lat.index_of(A) for A in hall_set.members]
        return P[:, cols].all(axis=1) if cols else np.ones(len(lat), dtype=bool)

    return _cached(G, ("h_perm", hall_set.key), build)


def _join_mask(lat: SubgroupLattice, first: np.ndarray, second: np.ndarray) -> np.ndarray:
    """Members expressible as ``<A, B>`` with ``first[A]`` and ``second[B]``."""
    J, C = lat.join_table, lat.contain
    out = np.zeros(len(lat), dtype=bool)
    for h in range(len(lat)):
        a = np.flatnonzero(first & C[:, h])
        b = np.flatnonzero(second & C[:, h])
        out[h] = bool((J[np.ix_(a, b)] == h).any())
    return out


def _join_witness(lat: SubgroupLattice, h: int, first: np.ndarray, second: np.ndarray):
    J, C = lat.join_table, lat.contain
    a = np.flatnonzero(first & C[:, h])
    b = np.flatnonzero(second & C[:, h])
    hits = np.argwhere(J[np.ix_(a, b)] == h)
    if hits.size == 0:
        return None
    i, j = hits[0]
    return int(a[i]), int(b[j])


def m_h_permutable_mask(G: PermGroup, hall_set: HallSet) -> np.ndarray:
    def build():
        return _join_mask(_lattice(G), _modular(G), h_permutable_mask(G, hall_set))

    return _cached(G, ("m_h_perm", hall_set.key), build)


def _weak_mask(lat: SubgroupLattice, subnormal: np.ndarray, good: np.ndarray) -> np.ndarray:
    """Members H with a sigma-subnormal T, ``G = HT``, and ``H n T <= S <= H`` for a good S."""
    C, M = lat.contain, lat.meet_table
    cover = _covers(lat)
    out = np.zeros(len(lat), dtype=bool)
    for h in range(len(lat)):
        ts = np.flatnonzero(subnormal & cover[h])
        if ts.size == 0:
            continue
        ok_s = good & C[:, h]
        out[h] = bool((C[M[h, ts]] & ok_s[None, :]).any())
    return out


def _weak_witness(lat: SubgroupLattice, h: int, subnormal: np.ndarray, good: np.ndarray):
    C, M = lat.contain, lat.meet_table
    cover = _covers(lat)
    ok_s = good & C[:, h]
    # smallest T first, then the largest admissible S
    for t in np.flatnonzero(subnormal & cover[h]):
        cands = np.flatnonzero(C[M[h, t]] & ok_s)
        if cands.size:
            return int(t), int(cands[-1])
    return None


def weakly_m_h_permutable_mask(G: PermGroup, hall_set: HallSet, sigma: SigmaPartition) -> np.ndarray:
    def build():
        return _weak_mask(_lattice(G), sigma_subnormal_mask(G, sigma), m_h_permutable_mask(G, hall_set))

    return _cached(G, ("weak_m_h_perm", hall_set.key, sigma), build)


# --- sigma-permutability ------------------------------------------------------


def _sigma_permutable(G: PermGroup, sigma: SigmaPartition):
    """Mask plus, per subgroup, the index of the first Hall set that works (or -1)."""

    def build():
        lat = _lattice(G)
        P = _permutes(lat)
        first = np.full(len(lat), -1, dtype=np.int64)
        for n, hs in enumerate(complete_hall_sets(G, sigma)):
            cols = sorted({c for A in hs.members for c in lat.class_of(lat.index_of(A))})
            ok = P[:, cols].all(axis=1) if cols else np.ones(len(lat), dtype=bool)
            first[(first < 0) & ok] = n
        return first >= 0, first

    return _cached(G, ("sigma_perm", sigma), build)


def sigma_permutable_mask(G: PermGroup, sigma: SigmaPartition) -> np.ndarray:
    return _sigma_permutable(G, sigma)[0]


def m_sigma_permutable_mask(G: PermGroup, sigma: SigmaPartition) -> np.ndarray:
    def build():
        return _join_mask(_lattice(G), _modular(G), sigma_permutable_mask(G, sigma))

    return _cached(G, ("m_sigma_perm", sigma), build)


def weakly_m_sigma_permutable_mask(G: PermGroup, sigma: SigmaPartition) -> np.ndarray:
    def build():
        return _weak_mask(_lattice(G), sigma_subnormal_mask(G, sigma), m_sigma_permutable_mask(G, sigma))

    return _cached(G, ("weak_m_sigma_perm", sigma), build)


def c_normal_mask(G: PermGroup) -> np.ndarray:
    def build():
        lat = _lattice(G)
        C, M = lat.contain, lat.meet_table
        cover = _covers(lat)
        normal = lat.normal_mask()
        cores = lat.cores_in(lat.top)
        out = np.zeros(len(lat), dtype=bool)
        for h in range(len(lat)):
            ts = np.flatnonzero(normal & cover[h])
            out[h] = bool(C[M[h, ts], cores[h]].any())
        return out

    return _cached(G, "c_normal", build)


# --- scalar predicates and witnesses ---------------------------------------------


@dataclass
class EmbeddingWitness:
    """Named subgroups proving an embedding predicate."""

    kind: str
    parts: dict = field(default_factory=dict)

    def validate(self, G: PermGroup, H: Subgroup, *, sigma: SigmaPartition | None = None,
                 hall_set: HallSet | None = None) -> bool:
        """Re-check the witness against the definition, without the cached masks."""
        p = self.parts
        if self.kind == "m-H-permutable":
            return (join(G, [p["A"], p["B"]]) == H and is_modular_subgroup(G, p["A"], current().modularity_cap)
                    and is_H_permutable(G, p["B"], hall_set))
        if self.kind == "m-sigma-permutable":
            return (join(G, [p["A"], p["B"]]) == H and is_modular_subgroup(G, p["A"], current().modularity_cap)
                    and _raw_sigma_permutable(G, p["B"], p["hall_set"]))
        if self.kind in ("weakly m-H-permutable", "weakly m-sigma-permutable"):
            T, S = p["T"], p["S"]
            inner = "m-H-permutable" if self.kind.endswith("H-permutable") else "m-sigma-permutable"
            sub = EmbeddingWitness(inner, {k: v for k, v in p.items() if k not in ("T", "S", "chain")})
            return (_raw_chain_ok(G, p["chain"], sigma) and p["chain"][0] == T
                    and H.order * T.order == G.order * (H & T).order
                    and (H & T) <= S <= H
                    and sub.validate(G, S, sigma=sigma, hall_set=hall_set))
        if self.kind == "sigma-permutable":
            return _raw_sigma_permutable(G, H, p["hall_set"])
        if self.kind == "sigma-subnormal":
            return p["chain"][0] == H and _raw_chain_ok(G, p["chain"], sigma)
        if self.kind == "c-normal":
            T = p["T"]
            return (is_normal(G, T) and H.order * T.order == G.order * (H & T).order
                    and (H & T) <= core(G, H))
        raise ValueError(f"unknown witness kind {self.kind!r}")


def _raw_sigma_permutable(G: PermGroup, H: Subgroup, hall_set: HallSet) -> bool:
    return all(product_permutes(G, H, conjugate(A, x)) for A in hall_set.members for x in range(G.order))


def _raw_core_in(Y: Subgroup, X: Subgroup) -> Subgroup:
    mask = X.mask.copy()
    for y in Y.elements:
        mask &= conjugate(X, int(y)).mask
    return Subgroup.from_mask(X.parent, mask)


def _raw_chain_ok(G: PermGroup, chain: list[Subgroup], sigma: SigmaPartition) -> bool:
    if chain[-1].order != G.order:
        return False
    for lo, hi in zip(chain, chain[1:]):
        if not lo <= hi:
            return False
        c = _raw_core_in(hi, lo)
        if c != lo and not sigma.is_primary_number(hi.order // c.order):
            return False
    return True


def is_m_H_permutable(G: PermGroup, H: Subgroup, hall_set: HallSet) -> bool:
    return bool(m_h_permutable_mask(G, hall_set)[_lattice(G).index_of(H)])


def m_H_permutable_witness(G: PermGroup, H: Subgroup, hall_set: HallSet) -> EmbeddingWitness | None:
    lat = _lattice(G)
    found = _join_witness(lat, lat.index_of(H), _modular(G), h_permutable_mask(G, hall_set))
    if found is None:
        return None
    return EmbeddingWitness("m-H-permutable", {"A": lat[found[0]], "B": lat[found[1]]})


def is_weakly_m_H_permutable(G: PermGroup, H: Subgroup, hall_set: HallSet, sigma: SigmaPartition) -> bool:
    return bool(weakly_m_h_permutable_mask(G, hall_set, sigma)[_lattice(G).index_of(H)])


def weakly_m_H_permutable_witness(G: PermGroup, H: Subgroup, hall_set: HallSet,
                                  sigma: SigmaPartition) -> EmbeddingWitness | None:
    lat = _lattice(G)
    found = _weak_witness(lat, lat.index_of(H), sigma_subnormal_mask(G, sigma), m_h_permutable_mask(G, hall_set))
    if found is None:
        return None
    T, S = lat[found[0]], lat[found[1]]
    inner = m_H_permutable_witness(G, S, hall_set)
    return EmbeddingWitness("weakly m-H-permutable",
                            {"T": T, "S": S, "chain": sigma_subnormal_chain(G, T, sigma), **inner.parts})


def is_sigma_permutable(G: PermGroup, H: Subgroup, sigma: SigmaPartition) -> bool:
    return bool(sigma_permutable_mask(G, sigma)[_lattice(G).index_of(H)])


def sigma_permutable_witness(G: PermGroup, H: Subgroup, sigma: SigmaPartition) -> EmbeddingWitness | None:
    lat = _lattice(G)
    _, first = _sigma_permutable(G, sigma)
    n = int(first[lat.index_of(H)])
    if n < 0:
        return None
    return EmbeddingWitness("sigma-permutable", {"hall_set": complete_hall_sets(G, sigma)[n]})


def is_m_sigma_permutable(G: PermGroup, H: Subgroup, sigma: SigmaPartition) -> bool:
    return bool(m_sigma_permutable_mask(G, sigma)[_lattice(G).index_of(H)])


def _m_sigma_parts(G: PermGroup, S: Subgroup, sigma: SigmaPartition) -> dict:
    lat = _lattice(G)
    a, b = _join_witness(lat, lat.index_of(S), _modular(G), sigma_permutable_mask(G, sigma))
    hs = sigma_permutable_witness(G, lat[b], sigma).parts["hall_set"]
    return {"A": lat[a], "B": lat[b], "hall_set": hs}


def is_weakly_m_sigma_permutable(G: PermGroup, H: Subgroup, sigma: SigmaPartition) -> bool:
    return bool(weakly_m_sigma_permutable_mask(G, sigma)[_lattice(G).index_of(H)])


def weakly_m_sigma_permutable_witness(G: PermGroup, H: Subgroup, sigma: SigmaPartition) -> EmbeddingWitness | None:
    lat = _lattice(G)
    found = _weak_witness(lat, lat.index_of(H), sigma_subnormal_mask(G, sigma), m_sigma_permutable_mask(G, sigma))
    if found is None:
        return None
    T, S = lat[found[0]], lat[found[1]]
    return EmbeddingWitness("weakly m-sigma-permutable",
                            {"T": T, "S": S, "chain": sigma_subnormal_chain(G, T, sigma),
                             **_m_sigma_parts(G, S, sigma)})


def is_c_normal(G: PermGroup, H: Subgroup) -> bool:
    return bool(c_normal_mask(G)[_lattice(G).index_of(H)])


def c_normal_witness(G: PermGroup, H: Subgroup) -> EmbeddingWitness | None:
    lat = _lattice(G)
    h = lat.index_of(H)
    cover = _covers(lat)
    core_h = lat.cores_in(lat.top)[h]
    for t in np.flatnonzero(lat.normal_mask() & cover[h]):
        if lat.contain[lat.meet(h, int(t)), core_h]:
            return EmbeddingWitness("c-normal", {"T": lat[int(t)]})
    return None
