"""Partitions of the primes, Hall subgroups for their blocks, complete Hall sets."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np
from sympy.utilities.iterables import multiset_partitions

from .lattice import all_subgroups
from .permgroup import PermGroup, Quotient, Subgroup, ValidationError
from .primes import is_prime, part, prime_factors

__all__ = [
    "Block",
    "SigmaPartition",
    "HallSet",
    "is_pi_number",
    "is_sigma_primary",
    "hall_subgroups",
    "complete_hall_sets",
    "is_sigma_full_of_sylow_type",
    "o_upper_pi",
    "reduces_into",
    "restrict_hall_set",
    "image_hall_set",
    "partitions_of",
]


@dataclass(frozen=True)
class Block:
    """One block of a partition of the primes.

    The complement block stores the primes it excludes.
    """

    primes: frozenset
    complement: bool = False

    def __contains__(self, p: int) -> bool:
        return (p not in self.primes) if self.complement else (p in self.primes)

    def part(self, n: int) -> int:
        """The block-part of ``n``."""
        return part(n, [p for p in prime_factors(n) if p in self])

    def meets(self, n: int) -> bool:
        return any(p in self for p in prime_factors(n))

    def __str__(self) -> str:
        return "*" if self.complement else ",".join(map(str, sorted(self.primes)))


@dataclass(frozen=True)
class SigmaPartition:
    """Disjoint prime blocks plus the implicit block of all remaining primes."""

    blocks: tuple

    def __init__(self, blocks: Iterable[Iterable[int]]):
        cleaned = []
        seen: set[int] = set()
        for b in blocks:
            b = frozenset(int(p) for p in b)
            if not b:
                raise ValidationError("empty block in sigma partition")
            for p in b:
                if not is_prime(p):
                    raise ValidationError(f"{p} is not a prime")
            if b & seen:
                raise ValidationError(f"blocks overlap in {sorted(b & seen)}")
            seen |= b
            cleaned.append(b)
        cleaned.sort(key=min)
        object.__setattr__(self, "blocks", tuple(Block(b) for b in cleaned))

    @classmethod
    def parse(cls, text: str) -> "SigmaPartition":
        """Parse ``"2,3|*"``, ``"2|3|5"`` and similar; ``*`` names the complement."""
        parts = [t.strip() for t in text.split("|")]
        blocks = []
        for i, t in enumerate(parts):
            if t == "*":
                if i != len(parts) - 1:
                    raise ValidationError("'*' must be the last block")
                continue
            if not t:
                raise ValidationError(f"empty block in {text!r}")
            try:
                blocks.append([int(x) for x in t.split(",")])
            except ValueError:
                raise ValidationError(f"bad prime list {t!r} in {text!r}") from None
        return cls(blocks)

    @classmethod
    def classical_for(cls, n: int) -> "SigmaPartition":
        """Every prime dividing ``n`` in its own block."""
        return cls([[p] for p in prime_factors(n)])

    @property
    def complement(self) -> Block:
        return Block(frozenset().union(*(b.primes for b in self.blocks)), True)

    @property
    def all_blocks(self) -> tuple:
        return self.blocks + (self.complement,)

    def block_of(self, p: int) -> Block:
        for b in self.blocks:
            if p in b:
                return b
        return self.complement

    def sigma_of(self, n: int) -> list[Block]:
        """Blocks meeting ``pi(n)``, in partition order."""
        return [b for b in self.all_blocks if b.meets(n)]

    def is_primary_number(self, n: int) -> bool:
        return len(self.sigma_of(n)) <= 1

    def padded(self, extra: Iterable[int]) -> "SigmaPartition":
        return SigmaPartition([b.primes for b in self.blocks] + [list(extra)])

    def __str__(self) -> str:
        return "|".join([str(b) for b in self.blocks] + ["*"])

    def __repr__(self) -> str:
        return f"SigmaPartition({str(self)!r})"


def partitions_of(n: int) -> Iterator[SigmaPartition]:
    """All set partitions of ``pi(n)`` (the complement block stays empty on ``pi(n)``)."""
    primes = prime_factors(n)
    if not primes:
        yield SigmaPartition([])
        return
    for blocks in multiset_partitions(primes):
        yield SigmaPartition(blocks)


def _as_blocks(Pi) -> list[Block]:
    out = []
    for b in Pi:
        out.append(b if isinstance(b, Block) else Block(frozenset(b)))
    return out


def is_pi_number(n: int, Pi) -> bool:
    """``pi(n)`` lies in the union of the blocks of ``Pi``."""
    blocks = _as_blocks(Pi)
    return all(any(p in b for b in blocks) for p in prime_factors(n))


def is_sigma_primary(G: PermGroup, sigma: SigmaPartition) -> bool:
    return len(sigma.sigma_of(G.order)) <= 1


@dataclass(frozen=True)
class HallSet:
    """One Hall ``sigma_i``-subgroup per block of ``sigma(G)``; trivial members are not stored."""

    parent: PermGroup
    blocks: tuple
    members: tuple

    def __post_init__(self):
        for b, H in zip(self.blocks, self.members):
            if H.parent is not self.parent:
                raise ValidationError("Hall set member of another group")
            if H.order != b.part(self.parent.order) or H.order == 1:
                raise ValidationError(f"{H} is not a Hall {b}-subgroup")
        if len(self.blocks) != len(self.members):
            raise ValidationError("one member per block required")

    @property
    def key(self) -> tuple:
        return tuple(H.key for H in self.members)

    def __eq__(self, other) -> bool:
        return isinstance(other, HallSet) and other.parent is self.parent and other.key == self.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def member_for(self, block: Block) -> Subgroup:
        return self.members[self.blocks.index(block)]

    @classmethod
    def from_members(cls, G: PermGroup, sigma: SigmaPartition, members: Iterable[Subgroup]) -> "HallSet":
        """Assign each nontrivial member to its block; missing blocks raise."""
        by_block = {}
        for H in members:
            if H.order == 1:
                continue
            bs = sigma.sigma_of(H.order)
            if len(bs) != 1:
                raise ValidationError(f"{H} is not a sigma-primary subgroup")
            if bs[0] in by_block:
                raise ValidationError(f"two members for block {bs[0]}")
            by_block[bs[0]] = H
        blocks = tuple(sigma.sigma_of(G.order))
        if set(by_block) != set(blocks):
            raise ValidationError("members do not cover sigma(G)")
        return cls(G, blocks, tuple(by_block[b] for b in blocks))


def hall_subgroups(G: PermGroup, block: Block) -> list[Subgroup]:
    target = block.part(G.order)
    if target == 1:
        return [G.trivial]
    lat = all_subgroups(G)
    return [lat[i] for i in np.flatnonzero(lat.orders == target)]


def complete_hall_sets(G: PermGroup, sigma: SigmaPartition) -> list[HallSet]:
    key = ("hall_sets", sigma)
    cached = G.cache.get(key)
    if cached is not None:
        return cached
    blocks = tuple(sigma.sigma_of(G.order))
    if len(blocks) <= 1:
        result = [HallSet(G, blocks, (G.whole,) if blocks else ())]
    else:
        choices = [hall_subgroups(G, b) for b in blocks]
        result = [HallSet(G, blocks, combo) for combo in itertools.product(*choices)]
    G.cache[key] = result
    return result


def _k_orbit(lat, start: int, gens) -> set[int]:
    perms = [lat.conjugation(g) for g in gens]
    orbit = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for x in frontier:
            for P in perms:
                y = int(P[x])
                if y not in orbit:
                    orbit.add(y)
                    nxt.append(y)
        frontier = nxt
    return orbit


def is_sigma_full_of_sylow_type(G: PermGroup, sigma: SigmaPartition, d_property: str = "full") -> bool:
    """Every subgroup is a ``D_{sigma_i}``-group for every block of ``sigma(G)``.

    ``d_property="full"`` demands existence, conjugacy and dominance of the
    Hall subgroups; ``"EC"`` drops dominance.
    """
    if d_property not in ("full", "EC"):
        raise ValidationError(f"unknown d-property mode {d_property!r}")
    key = ("sylow_type", sigma, d_property)
    cached = G.cache.get(key)
    if cached is not None:
        return cached
    lat = all_subgroups(G)
    C = lat.contain
    verdict = True
    for block in sigma.sigma_of(G.order):
        in_block = np.array([all(p in block for p in prime_factors(int(o))) for o in lat.orders])
        for k in range(len(lat)):
            K = lat[k]
            target = block.part(K.order)
            if target == 1:
                continue
            below = C[:, k]
            halls = np.flatnonzero(below & (lat.orders == target))
            if halls.size == 0:
                verdict = False
                break
            if len(_k_orbit(lat, int(halls[0]), K.gens)) != halls.size:
                verdict = False
                break
            if d_property == "full":
                small = np.flatnonzero(below & in_block)
                if not C[np.ix_(small, halls)].any(axis=1).all():
                    verdict = False
                    break
        if not verdict:
            break
    G.cache[key] = verdict
    return verdict


def o_upper_pi(G: PermGroup, Pi) -> Subgroup:
    """Subgroup generated by all elements whose order avoids the primes of ``Pi``."""
    blocks = _as_blocks(Pi)
    orders = G.element_orders()
    good = [g for g in range(G.order)
            if not any(p in b for p in prime_factors(int(orders[g])) for b in blocks)]
    return G.subgroup(good)


def reduces_into(hall_set: HallSet, E: Subgroup) -> bool:
    """Each ``member n E`` is a Hall subgroup of ``E`` for its block."""
    if E.parent is not hall_set.parent:
        raise ValidationError("Hall set and subgroup have different parents")
    for block, H in zip(hall_set.blocks, hall_set.members):
        if int((H.mask & E.mask).sum()) != block.part(E.order):
            return False
    return True


def restrict_hall_set(hall_set: HallSet, E: Subgroup, sigma: SigmaPartition) -> HallSet:
    """``E n H`` as a complete Hall set of ``E.group``."""
    if not reduces_into(hall_set, E):
        raise ValidationError("Hall set does not reduce into the subgroup")
    EG = E.group
    emb = E.embedding()
    members = []
    for H in hall_set.members:
        inside = H.mask[emb]
        if inside.sum() > 1:
            members.append(Subgroup.from_mask(EG, inside))
    return HallSet.from_members(EG, sigma, members)


def image_hall_set(hall_set: HallSet, Q: Quotient, sigma: SigmaPartition) -> HallSet:
    """``HN/N`` for every member, as a complete Hall set of ``Q.group``."""
    members = [Q.image(H) for H in hall_set.members]
    return HallSet.from_members(Q.group, sigma, [M for M in members if M.order > 1])
