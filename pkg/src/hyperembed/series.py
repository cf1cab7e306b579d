"""Chief series, hypercyclic embedding and related characteristic subgroups."""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .lattice import all_subgroups, normal_subgroups, subnormal_subgroups
from .permgroup import (
    PermGroup,
    Subgroup,
    ValidationError,
    is_normal,
    join,
    normal_closure,
    normalizer,
    quotient,
)
from .primes import is_prime, is_prime_power, part, prime_factors

__all__ = [
    "ChiefFactor",
    "ChiefSeries",
    "chief_series_through",
    "chief_series_between",
    "is_hypercyclically_embedded",
    "hypercenter",
    "center",
    "derived_subgroup",
    "is_soluble",
    "is_supersoluble",
    "is_p_nilpotent",
    "fitting_subgroup",
    "generalized_fitting",
    "components",
    "sylow_subgroup",
]


@dataclass(frozen=True)
class ChiefFactor:
    order: int
    cyclic: bool


@dataclass
class ChiefSeries:
    parent: PermGroup
    terms: list[Subgroup]

    @property
    def factors(self) -> list[ChiefFactor]:
        out = []
        for lo, hi in zip(self.terms, self.terms[1:]):
            k = hi.order // lo.order
            out.append(ChiefFactor(k, is_prime(k)))
        return out

    def factor_orders(self) -> list[int]:
        return [f.order for f in self.factors]

    def __len__(self) -> int:
        return max(0, len(self.terms) - 1)


def _require_normal(G: PermGroup, E: Subgroup) -> None:
    if E.parent is not G:
        raise ValidationError("subgroup of a different group")
    if not is_normal(G, E):
        raise ValidationError("expected a normal subgroup")


def chief_series_between(G: PermGroup, lower: Subgroup, upper: Subgroup,
                         rng: random.Random | None = None) -> ChiefSeries:
    """Chief series of ``G`` from ``lower`` up to ``upper`` (both normal, lower <= upper).

    Each step moves to a minimal normal subgroup of ``G`` strictly above the
    current term; ``rng`` picks among the candidates, otherwise the first in
    canonical order is taken.
    """
    _require_normal(G, lower)
    _require_normal(G, upper)
    if not lower <= upper:
        raise ValidationError("lower term is not contained in upper term")
    normals = [N for N in normal_subgroups(G) if N <= upper]
    terms = [lower]
    cur = lower
    while cur != upper:
        above = [N for N in normals if cur < N]
        minimal = [N for N in above if not any(M < N for M in above if M.order < N.order)]
        cur = rng.choice(minimal) if rng is not None else minimal[0]
        terms.append(cur)
    return ChiefSeries(G, terms)


def chief_series_through(G: PermGroup, E: Subgroup, rng: random.Random | None = None) -> ChiefSeries:
    """A chief series of ``G`` below ``E``, from ``1`` to ``E``."""
    return chief_series_between(G, G.trivial, E, rng)


def is_hypercyclically_embedded(G: PermGroup, E: Subgroup) -> bool:
    """Every chief factor of ``G`` below ``E`` has prime order."""
    _require_normal(G, E)
    if E.order == 1:
        return True
    key = ("hypercyclic", E.key)
    verdict = G.cache.get(key)
    if verdict is None:
        verdict = all(f.cyclic for f in chief_series_through(G, E).factors)
        G.cache[key] = verdict
    return verdict


def center(G: PermGroup) -> Subgroup:
    table = G.table
    ok = np.ones(G.order, dtype=bool)
    for g in G.whole.gens:
        ok &= table[:, g] == table[g, :]
    return Subgroup.from_mask(G, ok)


def hypercenter(G: PermGroup) -> Subgroup:
    """Terminal member of the upper central series."""
    cached = G.cache.get("hypercenter")
    if cached is not None:
        return cached
    table, inv = G.table, G.inverses
    gens = list(G.whole.gens)
    everything = np.arange(G.order)
    cur = np.zeros(G.order, dtype=bool)
    cur[0] = True
    while True:
        # g is central modulo cur iff [g, x] in cur for every generator x
        ok = np.ones(G.order, dtype=bool)
        for x in gens:
            comm = table[table[inv[everything], inv[x]], table[everything, x]]
            ok &= cur[comm]
        if (ok == cur).all():
            break
        cur = ok
    Z = Subgroup.from_mask(G, cur)
    G.cache["hypercenter"] = Z
    return Z


def derived_subgroup(G: PermGroup) -> Subgroup:
    cached = G.cache.get("derived")
    if cached is None:
        table, inv = G.table, G.inverses
        gens = list(G.whole.gens)
        # G' is the normal closure of the commutators of generators
        comms = {int(table[table[inv[a], inv[b]], table[a, b]]) for a in gens for b in gens}
        cached = normal_closure(G, G.subgroup(sorted(comms)))
        G.cache["derived"] = cached
    return cached


def is_soluble(G: PermGroup) -> bool:
    H = G
    while H.order > 1:
        D = derived_subgroup(H)
        if D.order == H.order:
            return False
        H = D.group
    return True


def is_supersoluble(G: PermGroup) -> bool:
    return is_hypercyclically_embedded(G, G.whole)


def sylow_subgroup(G: PermGroup, p: int) -> Subgroup:
    """One Sylow ``p``-subgroup, grown inside successive normalizers."""
    target = part(G.order, [p])
    orders = G.element_orders()
    p_elements = np.array([is_prime_power(int(o), p) for o in orders])
    P = G.trivial
    while P.order < target:
        # N(P)/P has order divisible by p while P is not Sylow
        N = normalizer(G, P)
        g = next(int(x) for x in N.elements if p_elements[x] and not P.mask[x])
        P = join(G, [P, G.cyclic_subgroup(g)])
    return P


def is_p_nilpotent(G: PermGroup, p: int) -> bool:
    """``G`` has a normal subgroup of order ``|G|_{p'}`` (true when ``p`` does not divide ``|G|``)."""
    m = G.order // part(G.order, [p])
    return any(N.order == m for N in normal_subgroups(G))


def _largest_normal_p_subgroup(E: PermGroup, p: int) -> Subgroup:
    best = E.trivial
    for N in normal_subgroups(E):
        if is_prime_power(N.order, p) and N.order > best.order:
            best = N
    return best


def fitting_subgroup(E: PermGroup) -> Subgroup:
    parts = [_largest_normal_p_subgroup(E, p) for p in prime_factors(E.order)]
    return join(E, parts)


def _is_simple(G: PermGroup) -> bool:
    return G.order > 1 and len(normal_subgroups(G)) == 2


def components(E: PermGroup) -> list[Subgroup]:
    """Subnormal quasisimple subgroups of ``E`` (empty for soluble ``E``)."""
    if is_soluble(E):
        return []
    out = []
    for L in subnormal_subgroups(E):
        if L.order == 1:
            continue
        LG = L.group
        if derived_subgroup(LG).order != LG.order:
            continue
        Z = center(LG)
        if _is_simple(quotient(LG, Z).group):
            out.append(L)
    return out


def _in_parent(G: PermGroup, E: Subgroup, S: Subgroup) -> Subgroup:
    """Map a subgroup of ``E.group`` back to a subgroup of ``G``."""
    emb = E.embedding()
    mask = np.zeros(G.order, dtype=bool)
    mask[emb[S.elements]] = True
    return Subgroup(G, mask, [int(emb[g]) for g in S.gens])


def generalized_fitting(G: PermGroup, E: Subgroup) -> Subgroup:
    """``F*(E) = F(E) E(E)`` as a subgroup of ``G``."""
    _require_normal(G, E)
    key = ("fstar", E.key)
    cached = G.cache.get(key)
    if cached is not None:
        return cached
    EG = E.group
    parts = [fitting_subgroup(EG)] + components(EG)
    F = join(EG, parts)
    result = _in_parent(G, E, F)
    G.cache[key] = result
    return result


def fitting_in(G: PermGroup, E: Subgroup) -> Subgroup:
    """``F(E)`` as a subgroup of ``G``."""
    return _in_parent(G, E, fitting_subgroup(E.group))
