"""Permutation groups backed by a base and strong generating set.

Every group handled here is small enough to enumerate, so a group carries
two views of itself: the Schreier-Sims certificate (order, membership) and
an indexed element list with a dense multiplication table.  Subgroups are
boolean masks over the parent's element indices.

Permutations act on the right: ``(g * h)[i] == h[g[i]]``.
"""

from __future__ import annotations

import itertools
import re
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "ValidationError",
    "BudgetError",
    "Permutation",
    "PermGroup",
    "Subgroup",
    "Quotient",
    "from_generators",
    "contains",
    "join",
    "normal_closure",
    "core",
    "normalizer",
    "centralizer",
    "conjugate",
    "product_permutes",
    "quotient",
    "ENUMERATION_CAP",
]

#: Largest group order for which elements are enumerated and tabulated.
ENUMERATION_CAP = 5000


class ValidationError(ValueError):
    """Malformed input: non-bijections, degree mismatches, non-normal kernels."""


class BudgetError(RuntimeError):
    """A configured size cap was exceeded."""

    def __init__(self, message: str, cap: int | None = None):
        super().__init__(message)
        self.cap = cap


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class Permutation:
    """A bijection of ``{0, ..., degree - 1}`` stored as its image tuple."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        if not images:
            raise ValidationError("a permutation needs degree >= 1")
        if sorted(images) != list(range(len(images))):
            raise ValidationError(f"not a bijection: {images}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, text: str, degree: int) -> "Permutation":
        """Parse zero-based cycle notation such as ``"(0 1 2)(3 4)"``.

        Points may be separated by spaces or commas; ``"()"`` or an empty
        string is the identity.
        """
        stripped = text.replace(" ", "").replace(",", "")
        if stripped.count("(") != stripped.count(")"):
            raise ValidationError(f"unbalanced parentheses in {text!r}")
        leftover = _CYCLE_RE.sub("", text).strip()
        if leftover:
            raise ValidationError(f"unparsable cycle text {text!r}")
        images = list(range(degree))
        seen: set[int] = set()
        for body in _CYCLE_RE.findall(text):
            tokens = [t for t in re.split(r"[\s,]+", body.strip()) if t]
            try:
                points = [int(t) for t in tokens]
            except ValueError:
                raise ValidationError(f"non-integer point in {text!r}") from None
            for p in points:
                if not 0 <= p < degree:
                    raise ValidationError(f"point {p} outside degree {degree}")
                if p in seen:
                    raise ValidationError(f"point {p} repeated in {text!r}")
                seen.add(p)
            for a, b in zip(points, points[1:] + points[:1]):
                images[a] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.degree != self.degree:
            raise ValidationError("degree mismatch")
        o = other.images
        return Permutation(o[i] for i in self.images)

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(inv)

    __invert__ = inverse

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for i in range(self.degree):
            if i in seen or self.images[i] == i:
                continue
            cyc = [i]
            seen.add(i)
            j = self.images[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def order(self) -> int:
        from math import lcm

        return lcm(1, *(len(c) for c in self.cycles()))

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()!r}, degree={self.degree})"


# --- Schreier-Sims on raw image tuples ------------------------------------


def _mul(p: tuple, q: tuple) -> tuple:
    return tuple(q[i] for i in p)


def _inv(p: tuple) -> tuple:
    r = [0] * len(p)
    for i, x in enumerate(p):
        r[x] = i
    return tuple(r)


def _orbit_transversal(point: int, gens: list[tuple], ident: tuple) -> dict[int, tuple]:
    trans = {point: ident}
    frontier = [point]
    while frontier:
        nxt = []
        for x in frontier:
            u = trans[x]
            for s in gens:
                y = s[x]
                if y not in trans:
                    trans[y] = _mul(u, s)
                    nxt.append(y)
        frontier = nxt
    return trans


def schreier_sims(gens: Sequence[tuple], degree: int):
    """Deterministic Schreier-Sims.

    Returns ``(base, strong_gens_per_level, transversals)``.  New base
    points are always the smallest point moved by the element that forces
    the extension, so the result depends only on the generator sequence.
    """
    ident = tuple(range(degree))
    gens = [g for g in gens if g != ident]
    base: list[int] = []
    for g in gens:
        if all(g[b] == b for b in base):
            base.append(next(i for i in range(degree) if g[i] != i))
    S = [[g for g in gens if all(g[b] == b for b in base[:i])] for i in range(len(base))]
    T = [_orbit_transversal(base[i], S[i], ident) for i in range(len(base))]

    def strip(h: tuple, start: int):
        for j in range(start, len(base)):
            u = T[j].get(h[base[j]])
            if u is None:
                return h, j
            h = _mul(h, _inv(u))
        return h, len(base)

    i = len(base) - 1
    while i >= 0:
        extended = False
        for beta, u_beta in list(T[i].items()):
            for x in list(S[i]):
                img = x[beta]
                h = _mul(_mul(u_beta, x), _inv(T[i][img]))
                if h == ident:
                    continue
                res, j = strip(h, i + 1)
                if j < len(base) or res != ident:
                    if j == len(base):
                        base.append(next(p for p in range(degree) if res[p] != p))
                        S.append([])
                        T.append({base[-1]: ident})
                    for level in range(i + 1, j + 1):
                        S[level].append(res)
                        T[level] = _orbit_transversal(base[level], S[level], ident)
                    i = j
                    extended = True
                    break
            if extended:
                break
        if not extended:
            i -= 1
    return base, S, T


# --- groups ---------------------------------------------------------------


class PermGroup:
    """A finite permutation group (``GroupHandle``).

    Construct with :func:`from_generators`.  The BSGS is computed eagerly;
    the element list and the multiplication table are built on first use.
    """

    def __init__(self, degree: int, generators: Sequence[Permutation], *, cap: int | None = None):
        self.degree = degree
        for g in generators:
            if g.degree != degree:
                raise ValidationError(f"generator {g} does not have degree {degree}")
        self.generators: tuple[Permutation, ...] = tuple(dict.fromkeys(generators))
        raw = [g.images for g in self.generators]
        self.base, self._strong, self._transversals = schreier_sims(raw, degree)
        order = 1
        for t in self._transversals:
            order *= len(t)
        self.order = order
        cap = ENUMERATION_CAP if cap is None else cap
        if order > cap:
            raise BudgetError(f"group order {order} exceeds the enumeration cap {cap}", cap)
        self._elements: np.ndarray | None = None
        self._table: np.ndarray | None = None
        self._codes = None
        self.cache: dict = {}

    def __repr__(self) -> str:
        name = self.cache.get("name")
        label = f" {name}" if name else ""
        return f"<PermGroup{label} order={self.order} degree={self.degree}>"

    def __len__(self) -> int:
        return self.order

    @property
    def strong_generators(self) -> list[Permutation]:
        seen = dict.fromkeys(s for level in self._strong for s in level)
        return [Permutation(s) for s in seen]

    @property
    def basic_orbit_lengths(self) -> list[int]:
        return [len(t) for t in self._transversals]

    def contains(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            raise ValidationError(f"degree mismatch: {g.degree} vs {self.degree}")
        h = g.images
        for b, trans in zip(self.base, self._transversals):
            u = trans.get(h[b])
            if u is None:
                return False
            h = _mul(h, _inv(u))
        return all(i == x for i, x in enumerate(h))

    def __contains__(self, g: Permutation) -> bool:
        return self.contains(g)

    # element-level view

    @property
    def elements(self) -> np.ndarray:
        """Element image arrays, shape ``(order, degree)``, sorted lexicographically."""
        if self._elements is None:
            levels = [list(t.values()) for t in self._transversals]
            ident = tuple(range(self.degree))
            elems = set()
            for combo in itertools.product(*reversed(levels)):
                p = ident
                for u in combo:
                    p = _mul(p, u)
                elems.add(p)
            arr = np.array(sorted(elems), dtype=np.int32).reshape(len(elems), self.degree)
            self._elements = arr
        return self._elements

    def element(self, index: int) -> Permutation:
        return Permutation(self.elements[index].tolist())

    def _encode(self, images: np.ndarray) -> np.ndarray:
        """Integer codes of elements from their images at the base points."""
        if not self.base:
            return np.zeros(images.shape[:-1], dtype=np.int64)
        sub = images[..., self.base].astype(np.int64)
        if self.degree ** len(self.base) < 2**62:
            radix = self.degree ** np.arange(len(self.base), dtype=np.int64)
            return sub @ radix
        # fall back to dense relabelling of the base-image rows
        flat = sub.reshape(-1, len(self.base))
        _, inverse = np.unique(flat, axis=0, return_inverse=True)
        return inverse.reshape(sub.shape[:-1]).astype(np.int64)

    def _code_index(self):
        if self._codes is None:
            if self.base and self.degree ** len(self.base) >= 2**62:
                lookup = {tuple(row[self.base]): i for i, row in enumerate(self.elements.tolist())}
                self._codes = ("dict", lookup)
            else:
                codes = self._encode(self.elements)
                order = np.argsort(codes)
                self._codes = ("sorted", codes[order], order)
        return self._codes

    def index_array(self, images: np.ndarray) -> np.ndarray:
        """Element indices of image rows that are known to lie in the group."""
        images = np.asarray(images)
        idx = self._code_index()
        if idx[0] == "dict":
            lookup = idx[1]
            flat = images.reshape(-1, self.degree)
            out = np.array([lookup[tuple(r[self.base])] for r in flat.tolist()], dtype=np.int32)
            return out.reshape(images.shape[:-1])
        _, sorted_codes, order = idx
        codes = self._encode(images)
        pos = np.searchsorted(sorted_codes, codes)
        return order[pos].astype(np.int32)

    def index_of(self, g: Permutation) -> int:
        if not self.contains(g):
            raise ValidationError(f"{g} is not an element of {self}")
        return int(self.index_array(np.array(g.images, dtype=np.int32)))

    @property
    def identity_index(self) -> int:
        return 0  # identity is lexicographically smallest

    @property
    def table(self) -> np.ndarray:
        """``table[g, h]`` is the index of ``g * h``."""
        if self._table is None:
            E = self.elements
            n = self.order
            table = np.empty((n, n), dtype=np.int32)
            block = max(1, 400_000 // max(1, n * max(1, len(self.base))))
            base = self.base
            for start in range(0, n, block):
                gb = E[start:start + block]
                if base:
                    # (g*h)[b] = h[g[b]]
                    imgs = E[:, gb[:, base]]  # (h, g, k)
                    idx = self.index_array_base(np.transpose(imgs, (1, 0, 2)))
                else:
                    idx = np.zeros((len(gb), n), dtype=np.int32)
                table[start:start + block] = idx
            self._table = table
        return self._table

    def index_array_base(self, base_images: np.ndarray) -> np.ndarray:
        """Like :meth:`index_array` but from images of the base points only."""
        idx = self._code_index()
        if idx[0] == "dict":
            lookup = idx[1]
            flat = base_images.reshape(-1, len(self.base))
            out = np.array([lookup[tuple(r)] for r in flat.tolist()], dtype=np.int32)
            return out.reshape(base_images.shape[:-1])
        _, sorted_codes, order = idx
        radix = self.degree ** np.arange(len(self.base), dtype=np.int64)
        codes = base_images.astype(np.int64) @ radix
        return order[np.searchsorted(sorted_codes, codes)].astype(np.int32)

    @property
    def inverses(self) -> np.ndarray:
        inv = self.cache.get("_inverses")
        if inv is None:
            inv = np.argmin(self.table, axis=1).astype(np.int32)
            self.cache["_inverses"] = inv
        return inv

    def element_orders(self) -> np.ndarray:
        orders = self.cache.get("_element_orders")
        if orders is None:
            n = self.order
            orders = np.zeros(n, dtype=np.int64)
            power = np.arange(n, dtype=np.int32)
            k = 1
            while (orders == 0).any():
                done = (power == 0) & (orders == 0)
                orders[done] = k
                power = self.table[power, np.arange(n)]
                k += 1
            self.cache["_element_orders"] = orders
        return orders

    def conjugation_map(self, g: int) -> np.ndarray:
        """Permutation of element indices ``x -> g^-1 x g``."""
        inv = self.inverses
        return self.table[self.table[inv[g], :], g]

    # subgroup constructors

    def _closure(self, gens: Sequence[int], start: np.ndarray | None = None) -> np.ndarray:
        table = self.table
        members = np.zeros(self.order, dtype=bool) if start is None else start.copy()
        members[0] = True
        gens = np.unique(np.asarray(list(gens), dtype=np.int32))
        if gens.size == 0:
            return members
        frontier = np.flatnonzero(members)
        while frontier.size:
            prod = table[np.ix_(frontier, gens)].ravel()
            new = np.unique(prod[~members[prod]])
            members[new] = True
            frontier = new
        return members

    def _extend(self, mask: np.ndarray, gens: Sequence[int]) -> np.ndarray:
        """``<S, gens>`` for a subgroup mask ``S``, grown one right coset ``Sy`` at a time."""
        table = self.table
        base = np.flatnonzero(mask)
        members = mask.copy()
        gens = np.unique(np.asarray(list(gens), dtype=np.int32))
        reps = [0]
        i = 0
        while i < len(reps):
            r = reps[i]
            i += 1
            for y in table[r, gens].tolist():
                if not members[y]:
                    members[table[base, y]] = True
                    reps.append(y)
        return members

    def subgroup(self, gens: Iterable) -> "Subgroup":
        """Subgroup generated by permutations, cycle strings or element indices."""
        idx = []
        for g in gens:
            if isinstance(g, str):
                g = Permutation.from_cycles(g, self.degree)
            if isinstance(g, Permutation):
                idx.append(self.index_of(g))
            else:
                idx.append(int(g))
        return Subgroup.from_mask(self, self._closure(idx), idx)

    @property
    def whole(self) -> "Subgroup":
        w = self.cache.get("_whole")
        if w is None:
            gens = [self.index_of(g) for g in self.generators]
            w = Subgroup(self, np.ones(self.order, dtype=bool), gens)
            self.cache["_whole"] = w
        return w

    @property
    def trivial(self) -> "Subgroup":
        t = self.cache.get("_trivial")
        if t is None:
            m = np.zeros(self.order, dtype=bool)
            m[0] = True
            t = Subgroup(self, m, [])
            self.cache["_trivial"] = t
        return t

    def cyclic_subgroup(self, g: int) -> "Subgroup":
        return Subgroup.from_mask(self, self._closure([g]), [g])

    def is_abelian(self) -> bool:
        gens = [self.index_of(g) for g in self.generators]
        t = self.table
        return all(t[a, b] == t[b, a] for a in gens for b in gens)


def _mask_key(mask: np.ndarray) -> bytes:
    return np.packbits(mask).tobytes()


class Subgroup:
    """A subgroup of a fixed parent group (``SubgroupRef``).

    Equality and hashing use the canonical key, the packed membership mask.
    """

    __slots__ = ("parent", "mask", "key", "order", "gens", "_elements", "_group")

    def __init__(self, parent: PermGroup, mask: np.ndarray, gens: Sequence[int]):
        self.parent = parent
        self.mask = mask
        self.mask.setflags(write=False)
        self.key = _mask_key(mask)
        self.order = int(mask.sum())
        self.gens = tuple(int(g) for g in gens)
        self._elements = None
        self._group = None

    @classmethod
    def from_mask(cls, parent: PermGroup, mask: np.ndarray, gens: Sequence[int] | None = None) -> "Subgroup":
        if gens is None:
            gens = _generators_from_mask(parent, mask)
        return cls(parent, mask, gens)

    @property
    def elements(self) -> np.ndarray:
        if self._elements is None:
            self._elements = np.flatnonzero(self.mask)
        return self._elements

    def perms(self) -> list[Permutation]:
        return [self.parent.element(i) for i in self.elements]

    def generator_perms(self) -> list[Permutation]:
        return [self.parent.element(i) for i in self.gens]

    @property
    def group(self) -> PermGroup:
        """This subgroup as a stand-alone :class:`PermGroup`."""
        if self._group is None:
            gens = self.generator_perms() or [Permutation.identity(self.parent.degree)]
            self._group = from_generators(self.parent.degree, gens)
        return self._group

    def embedding(self) -> np.ndarray:
        """Parent index of each element of :attr:`group`."""
        return self.parent.index_array(self.group.elements)

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_whole(self) -> bool:
        return self.order == self.parent.order

    def __contains__(self, g) -> bool:
        if isinstance(g, Permutation):
            if not self.parent.contains(g):
                return False
            g = self.parent.index_of(g)
        return bool(self.mask[g])

    def __le__(self, other: "Subgroup") -> bool:
        _same_parent(self, other)
        return self.order <= other.order and not (self.mask & ~other.mask).any()

    def __lt__(self, other: "Subgroup") -> bool:
        return self.order < other.order and self <= other

    def __and__(self, other: "Subgroup") -> "Subgroup":
        _same_parent(self, other)
        return Subgroup.from_mask(self.parent, self.mask & other.mask)

    def __eq__(self, other) -> bool:
        return isinstance(other, Subgroup) and other.parent is self.parent and other.key == self.key

    def __hash__(self) -> int:
        return hash(self.key)

    def sort_key(self):
        return (self.order, self.key)

    def __repr__(self) -> str:
        gens = ", ".join(p.cycle_string() for p in self.generator_perms())
        return f"<Subgroup order={self.order} gens=[{gens}]>"


def _same_parent(a: Subgroup, b: Subgroup) -> None:
    if a.parent is not b.parent:
        raise ValidationError("subgroups belong to different parent groups")


def _generators_from_mask(parent: PermGroup, mask: np.ndarray) -> list[int]:
    """A small generating set: greedily add elements of largest order."""
    elems = np.flatnonzero(mask)
    if elems.size <= 1:
        return []
    orders = parent.element_orders()[elems]
    ranked = elems[np.lexsort((elems, -orders))]
    gens: list[int] = []
    cur = np.zeros(parent.order, dtype=bool)
    cur[0] = True
    target = int(mask.sum())
    for g in ranked:
        if cur[g]:
            continue
        gens.append(int(g))
        cur = parent._closure([int(x) for x in gens], cur)
        if cur.sum() == target:
            break
    return gens


# --- operations ---------------------------------------------------------------


def from_generators(degree: int, gens: Iterable, *, cap: int | None = None) -> PermGroup:
    """Group generated by ``gens`` on ``{0..degree-1}``.

    Generators may be :class:`Permutation` objects, image sequences or
    cycle strings.
    """
    perms = []
    for g in gens:
        if isinstance(g, Permutation):
            p = g
        elif isinstance(g, str):
            p = Permutation.from_cycles(g, degree)
        else:
            p = Permutation(g)
        if p.degree != degree:
            raise ValidationError(f"generator {p} does not have degree {degree}")
        perms.append(p)
    return PermGroup(degree, perms, cap=cap)


def contains(G: PermGroup, g: Permutation) -> bool:
    return G.contains(g)


def join(parent: PermGroup, parts: Iterable[Subgroup]) -> Subgroup:
    """Smallest subgroup of ``parent`` containing every part."""
    parts = list(parts)
    for p in parts:
        if p.parent is not parent:
            raise ValidationError("join of subgroups with mixed parents")
    if not parts:
        return parent.trivial
    if len(parts) == 1:
        return parts[0]
    parts.sort(key=lambda s: -s.order)
    start = parts[0].mask.copy()
    gens = list(parts[0].gens)
    for p in parts[1:]:
        if not (p.mask & ~start).any():
            continue
        gens.extend(p.gens)
        start = parent._closure(gens, start)
    return Subgroup.from_mask(parent, start)


def conjugate(H: Subgroup, g: int | Permutation) -> Subgroup:
    """``H^g = g^-1 H g``."""
    G = H.parent
    if isinstance(g, Permutation):
        g = G.index_of(g)
    cmap = G.conjugation_map(g)
    mask = np.zeros(G.order, dtype=bool)
    mask[cmap[H.elements]] = True
    return Subgroup(G, mask, [int(cmap[x]) for x in H.gens])


def _generator_indices(G: PermGroup) -> list[int]:
    return list(G.whole.gens)


def is_normal(parent: PermGroup, H: Subgroup) -> bool:
    for g in _generator_indices(parent):
        cmap = parent.conjugation_map(g)
        if not H.mask[cmap[list(H.gens)]].all():
            return False
    return True


def normal_closure(parent: PermGroup, H: Subgroup) -> Subgroup:
    """Smallest normal subgroup of ``parent`` containing ``H``."""
    mask = H.mask.copy()
    gens = list(H.gens)
    maps = [parent.conjugation_map(g) for g in _generator_indices(parent)]
    changed = True
    while changed:
        changed = False
        for cmap in maps:
            imgs = cmap[np.asarray(gens, dtype=np.int64)] if gens else np.array([], dtype=np.int64)
            new = [int(x) for x in imgs if not mask[x]]
            if new:
                gens.extend(new)
                mask = parent._closure(gens, mask)
                changed = True
    return Subgroup.from_mask(parent, mask)


def core(parent: PermGroup, H: Subgroup) -> Subgroup:
    """Largest normal subgroup of ``parent`` inside ``H``."""
    mask = H.mask.copy()
    maps = [parent.conjugation_map(g) for g in _generator_indices(parent)]
    # fixpoint of mask <- mask & (mask)^g over generators
    while True:
        new = mask.copy()
        for cmap in maps:
            conj = np.zeros_like(mask)
            conj[cmap[np.flatnonzero(new)]] = True
            new &= conj
        if (new == mask).all():
            break
        mask = new
    return Subgroup.from_mask(parent, mask)


def normalizer(parent: PermGroup, H: Subgroup) -> Subgroup:
    gens = np.asarray(H.gens, dtype=np.int64)
    table, inv = parent.table, parent.inverses
    mask = np.zeros(parent.order, dtype=bool)
    if gens.size == 0:
        mask[:] = True
        return parent.whole
    g = np.arange(parent.order)
    # x normalizes H iff x^-1 h x in H for each generator h
    ok = np.ones(parent.order, dtype=bool)
    for h in gens:
        conj = table[table[inv[g], h], g]
        ok &= H.mask[conj]
    return Subgroup.from_mask(parent, ok)


def centralizer(parent: PermGroup, H: Subgroup) -> Subgroup:
    table = parent.table
    ok = np.ones(parent.order, dtype=bool)
    for h in H.gens:
        ok &= table[:, h] == table[h, :]
    return Subgroup.from_mask(parent, ok)


def product_permutes(parent: PermGroup, H: Subgroup, K: Subgroup) -> bool:
    """True iff ``HK = KH``, i.e. ``|<H,K>| * |H n K| == |H| * |K|``."""
    _same_parent(H, K)
    if H <= K or K <= H:
        return True
    J = join(parent, [H, K])
    meet = int((H.mask & K.mask).sum())
    return J.order * meet == H.order * K.order


class Quotient:
    """``G/N`` realised as the action of ``G`` on the right cosets of ``N``."""

    def __init__(self, parent: PermGroup, kernel: Subgroup):
        if kernel.parent is not parent:
            raise ValidationError("kernel belongs to another group")
        if not is_normal(parent, kernel):
            raise ValidationError("quotient by a non-normal subgroup")
        self.parent = parent
        self.kernel = kernel
        table = parent.table
        n = parent.order
        coset_of = np.full(n, -1, dtype=np.int64)
        reps = []
        kern = kernel.elements
        for x in range(n):
            if coset_of[x] < 0:
                coset_of[table[kern, x]] = len(reps)
                reps.append(x)
        self.coset_of = coset_of
        self.representatives = np.asarray(reps, dtype=np.int64)
        m = len(reps)
        # column g is the coset permutation induced by g
        action = coset_of[table[self.representatives, :]]
        gens = [Permutation(action[:, g].tolist()) for g in parent.whole.gens]
        self.group = from_generators(m, gens or [Permutation.identity(m)])
        self.map = self.group.index_array(np.ascontiguousarray(action.T))

    def image(self, H: Subgroup) -> Subgroup:
        Q = self.group
        mask = np.zeros(Q.order, dtype=bool)
        mask[self.map[H.elements]] = True
        return Subgroup(Q, mask, sorted({int(self.map[g]) for g in H.gens if self.map[g] != 0}))

    def preimage(self, K: Subgroup) -> Subgroup:
        mask = K.mask[self.map]
        return Subgroup.from_mask(self.parent, mask)

    def __call__(self, g: int | Permutation) -> Permutation:
        if isinstance(g, Permutation):
            g = self.parent.index_of(g)
        return self.group.element(int(self.map[g]))


def quotient(parent: PermGroup, N: Subgroup) -> Quotient:
    return Quotient(parent, N)
