"""Group builders, the worked example groups, and catalog files.

Products are always realised on disjoint unions of the factors' point sets,
never as regular representations, so degrees stay small.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .permgroup import ENUMERATION_CAP, BudgetError, PermGroup, Permutation, Subgroup, ValidationError, conjugate, from_generators
from .primes import is_prime, multiplicative_order
from .sigma import HallSet, SigmaPartition

__all__ = [
    "cyclic",
    "dihedral",
    "symmetric",
    "alternating",
    "quaternion8",
    "elementary_abelian",
    "abelian",
    "direct_product",
    "semidirect",
    "linear_group",
    "build_named",
    "build_example_132",
    "Example132",
    "parse_group",
    "CatalogEntry",
    "CatalogError",
    "parse_catalog",
    "load_catalog",
    "dump_catalog",
    "default_corpus",
    "NAMED_GROUPS",
]


def _named(G: PermGroup, name: str) -> PermGroup:
    G.cache["name"] = name
    return G


def _perm_from_map(mapping: Sequence[int]) -> Permutation:
    return Permutation(mapping)


def cyclic(n: int) -> PermGroup:
    if n < 1:
        raise ValidationError("cyclic group order must be positive")
    if n == 1:
        return _named(from_generators(1, []), "C1")
    return _named(from_generators(n, [_perm_from_map([(i + 1) % n for i in range(n)])]), f"C{n}")


def dihedral(order: int) -> PermGroup:
    """Dihedral group of the given order (``D8`` has order 8)."""
    if order < 4 or order % 2:
        raise ValidationError("dihedral order must be even and at least 4")
    n = order // 2
    if n == 2:
        return _named(from_generators(4, ["(0 1)", "(2 3)"]), "D4")
    rot = [(i + 1) % n for i in range(n)]
    ref = [(-i) % n for i in range(n)]
    return _named(from_generators(n, [rot, ref]), f"D{order}")


def symmetric(n: int) -> PermGroup:
    if n < 1:
        raise ValidationError("degree must be positive")
    if n == 1:
        return _named(from_generators(1, []), "S1")
    if n == 2:
        return _named(from_generators(2, ["(0 1)"]), "S2")
    cycle = [(i + 1) % n for i in range(n)]
    return _named(from_generators(n, [cycle, "(0 1)"]), f"S{n}")


def alternating(n: int) -> PermGroup:
    if n < 1:
        raise ValidationError("degree must be positive")
    if n < 3:
        return _named(from_generators(n, []), f"A{n}")
    gens = [Permutation.from_cycles(f"(0 1 {k})", n) for k in range(2, n)]
    return _named(from_generators(n, gens), f"A{n}")


def quaternion8() -> PermGroup:
    """``Q8`` acting regularly on its eight elements."""
    return _named(from_generators(8, ["(0 1 2 3)(4 5 6 7)", "(0 4 2 6)(1 7 3 5)"]), "Q8")


def _disjoint(groups: Sequence[PermGroup]) -> tuple[int, list[Permutation]]:
    degree = sum(G.degree for G in groups)
    gens = []
    offset = 0
    for G in groups:
        for g in G.generators:
            images = list(range(degree))
            for i, x in enumerate(g.images):
                images[offset + i] = offset + x
            gens.append(Permutation(images))
        offset += G.degree
    return degree, gens


def direct_product(*groups: PermGroup) -> PermGroup:
    if not groups:
        return cyclic(1)
    degree, gens = _disjoint(groups)
    name = "x".join(G.cache.get("name", "?") for G in groups)
    return _named(from_generators(degree, gens), name)


def elementary_abelian(p: int, k: int) -> PermGroup:
    if not is_prime(p) or k < 1:
        raise ValidationError("need a prime p and k >= 1")
    G = direct_product(*[cyclic(p) for _ in range(k)])
    return _named(G, f"E{p}^{k}")


def abelian(*orders: int) -> PermGroup:
    return direct_product(*[cyclic(n) for n in orders])


def semidirect(n: int, m: int, a: int | None = None) -> PermGroup:
    """``C_n : C_m`` with the generator of ``C_m`` acting as ``x -> a x``.

    Acts on ``n + m`` points: affine maps on ``Z_n`` glued to a regular ``C_m``.
    When ``a`` is omitted the unit of largest order dividing ``m`` is used.
    """
    if a is None:
        a = _best_unit(n, m)
    if np.gcd(a, n) != 1 or pow(a, m, n) != 1 % n:
        raise ValidationError(f"x -> {a}x does not define an action of C{m} on C{n}")
    deg = n + m
    shift = list(range(deg))
    for i in range(n):
        shift[i] = (i + 1) % n
    act = list(range(deg))
    for i in range(n):
        act[i] = (a * i) % n
    for j in range(m):
        act[n + j] = n + (j + 1) % m
    return _named(from_generators(deg, [shift, act]), f"C{n}:C{m}")


def _best_unit(n: int, m: int) -> int:
    best, best_order = 1, 1
    for a in range(2, n):
        if np.gcd(a, n) != 1:
            continue
        k = multiplicative_order(a, n)
        if m % k == 0 and k > best_order:
            best, best_order = a, k
    return best


def _vectors(q: int, d: int) -> list[tuple[int, ...]]:
    return [tuple(v) for v in itertools.product(range(q), repeat=d)]


def linear_group(matrices: Sequence[Sequence[Sequence[int]]], q: int, *, affine: bool = False) -> PermGroup:
    """Matrix group over ``F_q`` (``q`` prime) acting on vectors.

    Linear groups act on the nonzero vectors; with ``affine=True`` the
    translations by basis vectors are added and all vectors are used.
    """
    d = len(matrices[0])
    vecs = _vectors(q, d)
    if not affine:
        vecs = [v for v in vecs if any(v)]
    index = {v: i for i, v in enumerate(vecs)}
    gens = []
    for Mx in matrices:
        Mx = np.array(Mx) % q
        gens.append(Permutation([index[tuple(int(x) for x in (Mx @ np.array(v)) % q)] for v in vecs]))
    if affine:
        for k in range(d):
            e = np.zeros(d, dtype=int)
            e[k] = 1
            gens.append(Permutation([index[tuple(int(x) for x in (np.array(v) + e) % q)] for v in vecs]))
    return from_generators(len(vecs), gens)


NAMED_GROUPS = ("cyclic", "dihedral", "symmetric", "alternating", "quaternion8",
                "elementary_abelian", "direct_product", "semidirect")


def build_named(kind: str, *params) -> PermGroup:
    builders = {
        "cyclic": cyclic,
        "dihedral": dihedral,
        "symmetric": symmetric,
        "alternating": alternating,
        "quaternion8": quaternion8,
        "elementary_abelian": elementary_abelian,
        "direct_product": direct_product,
        "semidirect": semidirect,
    }
    try:
        builder = builders[kind]
    except KeyError:
        raise ValidationError(f"unknown group kind {kind!r}") from None
    try:
        return builder(*params)
    except TypeError as exc:
        raise ValidationError(f"bad parameters for {kind}: {exc}") from None


# --- the mixed example group ----------------------------------------------------


@dataclass
class Example132:
    """``(Q : C_p) x (C_r : C_t)`` with its named subgroups."""

    p: int
    q: int
    r: int
    t: int
    d: int
    group: PermGroup
    Q: Subgroup
    Cp: Subgroup
    V: Subgroup
    Cr: Subgroup
    A: Subgroup
    T: Subgroup
    B: Subgroup
    sigma: SigmaPartition
    hall_set: HallSet

    @property
    def H(self) -> Subgroup:
        from .permgroup import join

        return join(self.group, [self.A, self.B])


def _companion_of_order(p: int, q: int, d: int) -> np.ndarray:
    """Companion matrix over ``F_q`` of a degree-``d`` factor of the ``p``-th cyclotomic polynomial."""
    ident = np.eye(d, dtype=np.int64)
    for coeffs in itertools.product(range(q), repeat=d):
        if coeffs[0] == 0:
            continue
        # f(x) = x^d + c_{d-1} x^{d-1} + ... + c_0; f(1) != 0 excludes the trivial eigenvalue
        if (1 + sum(coeffs)) % q == 0:
            continue
        Cm = np.zeros((d, d), dtype=np.int64)
        Cm[1:, :-1] = np.eye(d - 1, dtype=np.int64)
        Cm[:, -1] = [(-c) % q for c in coeffs]
        P = ident.copy()
        for _ in range(p):
            P = (P @ Cm) % q
        if (P == ident).all():
            return Cm
    raise ValidationError(f"no element of order {p} in GL({d}, {q})")


def build_example_132(p: int, q: int, r: int, t: int, *, require_q_divides: bool = True) -> Example132:
    """``G = (Q : C_p) x (C_r : C_t)`` with ``Q`` a faithful simple ``F_q C_p``-module.

    ``require_q_divides`` enforces ``q | p - 1`` as in the original example;
    the construction itself only needs ``q != p``.
    """
    for x in (p, q, r, t):
        if not is_prime(x):
            raise ValidationError(f"{x} is not prime")
    if len({p, q, r, t}) != 4:
        raise ValidationError("p, q, r, t must be distinct")
    if require_q_divides and (p - 1) % q:
        raise ValidationError(f"q={q} does not divide p-1={p - 1}")
    if (r - 1) % t:
        raise ValidationError(f"t={t} does not divide r-1={r - 1}")
    d = multiplicative_order(q, p)
    order = q ** d * p * r * t
    if order > ENUMERATION_CAP:
        raise BudgetError(f"example group of order {order} exceeds the enumeration cap", ENUMERATION_CAP)
    Cm = _companion_of_order(p, q, d)
    vecs = _vectors(q, d)
    index = {v: i for i, v in enumerate(vecs)}
    n1 = len(vecs)
    deg = n1 + r

    def on_module(f) -> list[int]:
        images = list(range(deg))
        for i, v in enumerate(vecs):
            images[i] = index[f(np.array(v))]
        return images

    translations = []
    for k in range(d):
        e = np.zeros(d, dtype=np.int64)
        e[k] = 1
        translations.append(Permutation(on_module(lambda v, e=e: tuple(int(x) for x in (v + e) % q))))
    linear = Permutation(on_module(lambda v: tuple(int(x) for x in (Cm @ v) % q)))

    a = next(x for x in range(2, r) if multiplicative_order(x, r) == t)
    shift = list(range(deg))
    mult = list(range(deg))
    for i in range(r):
        shift[n1 + i] = n1 + (i + 1) % r
        mult[n1 + i] = n1 + (a * i) % r
    shift, mult = Permutation(shift), Permutation(mult)

    G = _named(from_generators(deg, translations + [linear, shift, mult]), f"ex132({p},{q},{r},{t})")
    Q = G.subgroup(translations)
    Cp = G.subgroup([linear])
    V = G.subgroup(translations + [linear])
    Cr = G.subgroup([shift])
    A = G.subgroup([mult])
    T = conjugate(A, shift)
    B = G.subgroup([translations[0]])
    sigma = SigmaPartition([[p, q], [r]])
    hall = HallSet.from_members(G, sigma, [V, Cr, T])
    return Example132(p, q, r, t, d, G, Q, Cp, V, Cr, A, T, B, sigma, hall)


# --- group expressions ------------------------------------------------------------

_ATOM_RE = re.compile(
    r"""^(?:
        (?P<kind>[CDSAQ])(?P<n>\d+)
      | E(?P<ep>\d+)\^(?P<ek>\d+)
      | C(?P<sn>\d+):C(?P<sm>\d+)
      | (?P<lin>SL|GL)\(2,3\)
      | ex132\((?P<args>[\d,\s]+)\)
    )$""",
    re.VERBOSE,
)


def _atom(text: str) -> PermGroup:
    m = _ATOM_RE.match(text.strip())
    if not m:
        raise ValidationError(f"unknown group expression {text!r}")
    if m.group("kind"):
        kind, n = m.group("kind"), int(m.group("n"))
        if kind == "C":
            return cyclic(n)
        if kind == "D":
            return dihedral(n)
        if kind == "S":
            return symmetric(n)
        if kind == "A":
            return alternating(n)
        if n != 8:
            raise ValidationError("only Q8 is available")
        return quaternion8()
    if m.group("ep"):
        return elementary_abelian(int(m.group("ep")), int(m.group("ek")))
    if m.group("sn"):
        return semidirect(int(m.group("sn")), int(m.group("sm")))
    if m.group("lin"):
        mats = [[[1, 1], [0, 1]], [[0, 1], [2, 0]]]
        if m.group("lin") == "GL":
            mats.append([[2, 0], [0, 1]])
        return _named(linear_group(mats, 3), f"{m.group('lin')}(2,3)")
    args = [int(x) for x in m.group("args").split(",")]
    if len(args) != 4:
        raise ValidationError("ex132 takes four primes")
    return build_example_132(*args).group


def parse_group(text: str) -> PermGroup:
    """Build a group from an expression like ``A4``, ``D8xC3``, ``C7:C3`` or ``ex132(5,2,7,3)``."""
    text = text.strip()
    if text.startswith("ex132"):
        return _atom(text)
    factors = [f for f in re.split(r"x(?![^()]*\))", text)]
    if len(factors) == 1:
        return _atom(factors[0])
    G = direct_product(*[_atom(f) for f in factors])
    return _named(G, text)


# --- catalog files ----------------------------------------------------------------


class CatalogError(ValueError):
    def __init__(self, message: str, line: int | None = None, name: str | None = None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line
        self.name = name


@dataclass
class CatalogEntry:
    name: str
    degree: int
    generators: list[str]
    expected_order: int | None = None
    tags: list[str] = field(default_factory=list)
    line: int | None = None

    def build(self) -> PermGroup:
        try:
            G = from_generators(self.degree, [Permutation.from_cycles(g, self.degree) for g in self.generators])
        except ValidationError as exc:
            raise CatalogError(f"{self.name}: {exc}", self.line, self.name) from None
        if self.expected_order is not None and G.order != self.expected_order:
            raise CatalogError(f"{self.name}: order {G.order} != expected {self.expected_order}",
                               self.line, self.name)
        return _named(G, self.name)

    def to_line(self) -> str:
        fields_ = [self.name, str(self.degree), ", ".join(self.generators),
                   "" if self.expected_order is None else str(self.expected_order)]
        if self.tags:
            fields_.append(" ".join(self.tags))
        return "; ".join(fields_).rstrip("; ").rstrip()


def _split_generators(text: str) -> list[str]:
    gens, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            gens.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    if "".join(cur).strip():
        gens.append("".join(cur).strip())
    return [g for g in gens if g]


def parse_catalog(text: str) -> list[CatalogEntry]:
    """Parse ``name; degree; gen1, gen2, ...; [expected_order]; [tags]`` lines."""
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split(";")]
        if len(parts) < 3 or len(parts) > 5:
            raise CatalogError(f"expected 3 to 5 ';'-separated fields, got {len(parts)}", lineno)
        name = parts[0]
        try:
            degree = int(parts[1])
        except ValueError:
            raise CatalogError(f"bad degree {parts[1]!r}", lineno, name) from None
        gens = _split_generators(parts[2])
        for g in gens:
            if g.count("(") != g.count(")") or not g.startswith("("):
                raise CatalogError(f"malformed cycle {g!r}", lineno, name)
        expected = None
        if len(parts) > 3 and parts[3]:
            try:
                expected = int(parts[3])
            except ValueError:
                raise CatalogError(f"bad expected order {parts[3]!r}", lineno, name) from None
        tags = parts[4].replace(",", " ").split() if len(parts) > 4 else []
        entries.append(CatalogEntry(name, degree, gens, expected, tags, lineno))
    return entries


def load_catalog(path: str | Path) -> list[tuple[CatalogEntry, PermGroup]]:
    text = Path(path).read_text(encoding="utf-8")
    return [(e, e.build()) for e in parse_catalog(text)]


def dump_catalog(groups: Iterable[tuple[str, PermGroup]]) -> str:
    lines = []
    for name, G in groups:
        gens = [g.cycle_string() for g in G.generators]
        lines.append(CatalogEntry(name, G.degree, gens, G.order).to_line())
    return "\n".join(lines) + "\n"


# --- default corpus -----------------------------------------------------------------

_NONABELIAN = [
    "S3", "D8", "Q8", "C3:C4", "A4", "D12", "C7:C3", "C5:C4", "S4", "SL(2,3)", "A4xC2",
    "D8xC3", "S3xC3", "S3xC5", "S3xS3", "C3:C8", "C9:C6", "Q8xC3", "GL(2,3)", "A5",
    "C11:C5", "C13:C3", "C13:C4", "A4xC3", "S3xC2xC2", "D8xC2", "Q8xC2", "S3xC4",
    "C7:C6", "C5:C4xC3", "S3xC7",
]

# only included when the order cap admits them (oracle and modularity checks go to 200)
_LARGER = ["S5", "A5xC2", "S4xC5", "SL(2,3)xC5", "A4xS3", "C7:C3xS3", "GL(2,3)xC3", "C13:C12",
           "S4xS3", "D8xA4", "Q8xS3", "C11:C10xC2", "E2^3xS3xC3", "C3:C8xC5"]

_ABELIAN = [
    (2, 2), (2, 4), (2, 2, 2), (3, 3), (2, 6), (4, 4), (2, 8), (2, 2, 2, 2), (3, 6),
    (3, 9), (5, 5), (2, 2, 3, 3), (2, 2, 5), (2, 10), (4, 12), (2, 2, 7), (6, 6), (3, 3, 3),
    (2, 2, 2, 3), (2, 4, 4), (7, 7), (3, 12), (2, 2, 2, 5),
]


def default_corpus(max_order: int = 100) -> list[tuple[str, PermGroup]]:
    """Named groups used by the sweeps, in a fixed order, restricted to ``max_order``."""
    out: list[tuple[str, PermGroup]] = []
    seen: set[str] = set()

    def add(name: str, build):
        if name in seen:
            return
        seen.add(name)
        G = build()
        if G.order <= max_order:
            out.append((name, _named(G, name)))

    for n in range(1, max_order + 1):
        add(f"C{n}", lambda n=n: cyclic(n))
    for order in range(4, max_order + 1, 2):
        add(f"D{order}", lambda order=order: dihedral(order))
    for orders in _ABELIAN:
        if int(np.prod(orders)) <= max_order:
            add("x".join(f"C{k}" for k in orders), lambda orders=orders: abelian(*orders))
    for name in _NONABELIAN + (_LARGER if max_order > 100 else []):
        add(name, lambda name=name: parse_group(name))
    return out
