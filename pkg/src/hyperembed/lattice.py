"""Subgroup lattices and lattice-level predicates.

The full lattice is enumerated by closing the set of cyclic subgroups under
joins.  Members are sorted by ``(order, key)`` so index ``0`` is the trivial
subgroup and the last index is the whole group; join and meet tables are
then read off the containment matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .permgroup import BudgetError, PermGroup, Subgroup, ValidationError, normal_closure

__all__ = [
    "LATTICE_CAP",
    "MODULARITY_CAP",
    "SubgroupLattice",
    "ModularityWitness",
    "all_subgroups",
    "normal_subgroups",
    "subnormal_subgroups",
    "minimal_normal_subgroups",
    "is_modular_subgroup",
    "modularity_witness",
    "modular_mask",
]

LATTICE_CAP = 512
MODULARITY_CAP = 200


class SubgroupLattice:
    """Every subgroup of ``group``, deduplicated and indexed."""

    def __init__(self, group: PermGroup, subgroups: list[Subgroup]):
        self.group = group
        self.subgroups = sorted(subgroups, key=Subgroup.sort_key)
        self.index = {s.key: i for i, s in enumerate(self.subgroups)}
        self.orders = np.array([s.order for s in self.subgroups], dtype=np.int64)
        masks = np.array([s.mask for s in self.subgroups], dtype=np.float32)
        overlap = masks @ masks.T
        #: ``contain[i, j]`` iff subgroup i is contained in subgroup j
        self.contain = np.rint(overlap).astype(np.int64) == self.orders[:, None]
        self.meet_orders = np.rint(overlap).astype(np.int64)
        self._join = None
        self._meet = None
        self._conj: dict[int, np.ndarray] = {}
        self._normal_in: dict[int, np.ndarray] = {}
        self._modular = None
        self._classes = None

    def __len__(self) -> int:
        return len(self.subgroups)

    def __iter__(self):
        return iter(self.subgroups)

    def __getitem__(self, i: int) -> Subgroup:
        return self.subgroups[i]

    @property
    def top(self) -> int:
        return len(self.subgroups) - 1

    def index_of(self, H: Subgroup) -> int:
        if H.parent is not self.group:
            raise ValidationError("subgroup of a different group")
        return self.index[H.key]

    @property
    def join_table(self) -> np.ndarray:
        if self._join is None:
            L = len(self)
            C = self.contain
            J = np.empty((L, L), dtype=np.int64)
            for i in range(L):
                upper = C[i][None, :] & C  # row j: upper bounds of {i, j}
                J[i] = np.argmax(upper, axis=1)  # smallest order first
            self._join = J
        return self._join

    @property
    def meet_table(self) -> np.ndarray:
        if self._meet is None:
            L = len(self)
            C = self.contain
            M = np.empty((L, L), dtype=np.int64)
            for i in range(L):
                lower = C[:, i][None, :] & C.T  # row j: lower bounds of {i, j}
                M[i] = L - 1 - np.argmax(lower[:, ::-1], axis=1)
            self._meet = M
        return self._meet

    def join(self, i: int, j: int) -> int:
        return int(self.join_table[i, j])

    def meet(self, i: int, j: int) -> int:
        return int(self.meet_table[i, j])

    def conjugation(self, g: int) -> np.ndarray:
        """Permutation of lattice indices induced by conjugation with element ``g``."""
        perm = self._conj.get(g)
        if perm is None:
            G = self.group
            cmap = G.conjugation_map(g)
            inv = np.empty_like(cmap)
            inv[cmap] = np.arange(G.order, dtype=cmap.dtype)
            masks = np.array([s.mask for s in self.subgroups])
            conj = masks[:, inv]
            packed = np.packbits(conj, axis=1)
            perm = np.array([self.index[row.tobytes()] for row in packed], dtype=np.int64)
            self._conj[g] = perm
        return perm

    def normal_in(self, y: int) -> np.ndarray:
        """Boolean vector: members that are normal subgroups of member ``y``."""
        vec = self._normal_in.get(y)
        if vec is None:
            vec = self.contain[:, y].copy()
            for g in self.subgroups[y].gens:
                vec &= self.conjugation(g) == np.arange(len(self))
            self._normal_in[y] = vec
        return vec

    def cores_in(self, y: int) -> np.ndarray:
        """``core_Y(X)`` for every member X (meaningful where X <= Y)."""
        cur = np.arange(len(self))
        gens = self.subgroups[y].gens
        if not gens:
            return cur
        M = self.meet_table
        perms = [self.conjugation(g) for g in gens]
        while True:
            nxt = cur
            for P in perms:
                nxt = M[nxt, P[nxt]]
            if (nxt == cur).all():
                return cur
            cur = nxt

    def normal_mask(self) -> np.ndarray:
        return self.normal_in(self.top)

    def normal_indices(self) -> list[int]:
        return [int(i) for i in np.flatnonzero(self.normal_mask())]

    def conjugacy_classes(self) -> list[list[int]]:
        """Orbits of the lattice under conjugation, each sorted, in index order."""
        if self._classes is None:
            self._classes = self._orbits()
        return self._classes

    def _orbits(self) -> list[list[int]]:
        perms = [self.conjugation(g) for g in self.subgroups[self.top].gens]
        label = np.full(len(self), -1)
        classes = []
        for i in range(len(self)):
            if label[i] >= 0:
                continue
            orbit = {i}
            frontier = [i]
            while frontier:
                nxt = []
                for x in frontier:
                    for P in perms:
                        y = int(P[x])
                        if y not in orbit:
                            orbit.add(y)
                            nxt.append(y)
                frontier = nxt
            for x in orbit:
                label[x] = len(classes)
            classes.append(sorted(orbit))
        return classes

    def class_of(self, i: int) -> list[int]:
        return next(c for c in self.conjugacy_classes() if i in c)

    def below(self, i: int) -> np.ndarray:
        return np.flatnonzero(self.contain[:, i])

    def above(self, i: int) -> np.ndarray:
        return np.flatnonzero(self.contain[i, :])


def _enumerate(G: PermGroup) -> list[Subgroup]:
    found: dict[bytes, Subgroup] = {}
    cyclic: list[Subgroup] = []
    for g in range(G.order):
        c = G.cyclic_subgroup(g)
        if c.key not in found:
            found[c.key] = c
            cyclic.append(c)
    work = list(cyclic)
    pos = 0
    while pos < len(work):
        S = work[pos]
        pos += 1
        for c in cyclic:
            if not (c.mask & ~S.mask).any():
                continue
            gens = list(S.gens) + list(c.gens)
            mask = G._extend(S.mask, gens)
            key = np.packbits(mask).tobytes()
            if key not in found:
                J = Subgroup(G, mask, gens)
                found[key] = J
                work.append(J)
    return list(found.values())


def all_subgroups(G: PermGroup, cap: int = LATTICE_CAP) -> SubgroupLattice:
    """The subgroup lattice of ``G``; cached on the group."""
    lat = G.cache.get("lattice")
    if lat is not None:
        return lat
    if G.order > cap:
        raise BudgetError(f"lattice cap {cap} exceeded by group of order {G.order}", cap)
    lat = SubgroupLattice(G, _enumerate(G))
    G.cache["lattice"] = lat
    return lat


def normal_subgroups(G: PermGroup) -> list[Subgroup]:
    """Normal subgroups, as joins of normal closures of single elements.

    Does not need the full lattice, so it also works above the lattice cap.
    """
    cached = G.cache.get("normal_subgroups")
    if cached is not None:
        return cached
    found: dict[bytes, Subgroup] = {}
    seen = np.zeros(G.order, dtype=bool)
    closures = []
    everything = np.arange(G.order)
    for g in range(G.order):
        if seen[g]:
            continue
        N = normal_closure(G, G.cyclic_subgroup(g))
        # conjugates of g have the same normal closure
        seen[G.table[G.table[G.inverses, g], everything]] = True
        if N.key not in found:
            found[N.key] = N
            closures.append(N)
    found.setdefault(G.trivial.key, G.trivial)
    work = list(found.values())
    pos = 0
    while pos < len(work):
        A = work[pos]
        pos += 1
        for B in closures:
            if not (B.mask & ~A.mask).any():
                continue
            mask = G._extend(A.mask, list(A.gens) + list(B.gens))
            key = np.packbits(mask).tobytes()
            if key not in found:
                N = Subgroup(G, mask, list(A.gens) + list(B.gens))
                found[key] = N
                work.append(N)
    result = sorted(found.values(), key=Subgroup.sort_key)
    G.cache["normal_subgroups"] = result
    return result


def subnormal_subgroups(G: PermGroup, cap: int = LATTICE_CAP) -> list[Subgroup]:
    lat = all_subgroups(G, cap)
    reached = np.zeros(len(lat), dtype=bool)
    reached[lat.top] = True
    frontier = [lat.top]
    while frontier:
        nxt = []
        for y in frontier:
            for x in np.flatnonzero(lat.normal_in(y) & ~reached):
                reached[x] = True
                nxt.append(int(x))
        frontier = nxt
    return [lat[i] for i in np.flatnonzero(reached)]


def minimal_normal_subgroups(G: PermGroup) -> list[Subgroup]:
    normals = [N for N in normal_subgroups(G) if N.order > 1]
    return [N for N in normals if not any(M < N for M in normals if M.order < N.order)]


@dataclass(frozen=True)
class ModularityWitness:
    """A violated modular identity: ``identity`` is ``1`` or ``2``."""

    identity: int
    first: Subgroup  # X for identity 1, Y for identity 2
    second: Subgroup  # Z


def _modularity_violation(lat: SubgroupLattice, h: int):
    J, M, C = lat.join_table, lat.meet_table, lat.contain
    L = len(lat)
    idx = np.arange(L)
    # <X, H n Z> = <X, H> n Z  for X <= Z
    lhs = J[idx[:, None], M[h][None, :]]
    rhs = M[J[:, h][:, None], idx[None, :]]
    bad = C & (lhs != rhs)
    if bad.any():
        x, z = np.argwhere(bad)[0]
        return 1, int(x), int(z)
    # <H, Y n Z> = <H, Y> n Z  for H <= Z
    lhs = J[h][M]
    rhs = M[J[h][:, None], idx[None, :]]
    bad = C[h][None, :] & (lhs != rhs)
    if bad.any():
        y, z = np.argwhere(bad)[0]
        return 2, int(y), int(z)
    return None


def _check_modularity_cap(G: PermGroup, cap: int) -> None:
    if G.order > cap:
        raise BudgetError(f"modularity cap {cap} exceeded by group of order {G.order}", cap)


def modularity_witness(G: PermGroup, H: Subgroup, cap: int = MODULARITY_CAP) -> ModularityWitness | None:
    """First violated identity for ``H``, or ``None`` if ``H`` is modular."""
    if H.order == 1 or H.order == G.order:
        return None
    _check_modularity_cap(G, cap)
    lat = all_subgroups(G)
    found = _modularity_violation(lat, lat.index_of(H))
    if found is None:
        return None
    kind, a, b = found
    return ModularityWitness(kind, lat[a], lat[b])


def is_modular_subgroup(G: PermGroup, H: Subgroup, cap: int = MODULARITY_CAP) -> bool:
    """Kurosh modularity of ``H`` in the subgroup lattice of ``G``."""
    return modularity_witness(G, H, cap) is None


def modular_mask(G: PermGroup, cap: int = MODULARITY_CAP) -> np.ndarray:
    """Boolean vector over the lattice marking the modular subgroups."""
    lat = all_subgroups(G)
    if lat._modular is None:
        _check_modularity_cap(G, cap)
        vec = np.ones(len(lat), dtype=bool)
        for h in range(1, lat.top):
            vec[h] = _modularity_violation(lat, h) is None
        lat._modular = vec
    return lat._modular
