"""Hypothesis gates, verdicts, lemma suites and corpus sweeps.

A verdict is one of

* ``vacuous``: the group has no complete Hall set for the partition;
* ``hypothesis_fails``: Hall sets exist but the gate closes for every one;
* ``holds``: the gate opens for at least one Hall set and the conclusion is true;
* ``counterexample``: the gate opens and the conclusion fails, confirmed on a
  freshly rebuilt copy of the group.

``instances`` counts the subgroups the cyclic-subgroup clause of the gate
actually quantified over; a ``holds`` with ``instances > 0`` is non-vacuous.
"""

from __future__ import annotations

import json
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Sequence

import numpy as np

from .config import Config, current, using
from .embeddings import (
    _lattice,
    is_sigma_subnormal,
    m_h_permutable_mask,
    sigma_subnormal_mask,
    weakly_m_h_permutable_mask,
)
from .lattice import modular_mask, normal_subgroups
from .permgroup import (
    BudgetError,
    PermGroup,
    Permutation,
    Subgroup,
    ValidationError,
    core,
    from_generators,
    is_normal,
    normal_closure,
    quotient,
)
from .primes import is_prime, is_prime_power, part, prime_factors
from .series import (
    chief_series_between,
    chief_series_through,
    generalized_fitting,
    hypercenter,
    is_hypercyclically_embedded,
    is_p_nilpotent,
    is_supersoluble,
)
from .sigma import (
    HallSet,
    SigmaPartition,
    complete_hall_sets,
    image_hall_set,
    is_sigma_full_of_sylow_type,
    o_upper_pi,
    partitions_of,
    reduces_into,
    restrict_hall_set,
)

__all__ = [
    "SCHEMA",
    "STATUSES",
    "TARGETS",
    "Verdict",
    "SweepReport",
    "GateResult",
    "describe",
    "theorem15_hypothesis",
    "verify_theorem15",
    "verify_prop31",
    "verify_prop32",
    "verify_cor41",
    "lemma_suite",
    "sweep",
    "cases_for",
    "ExampleResult",
    "reproduce_examples",
]

SCHEMA = 1
STATUSES = ("hypothesis_fails", "vacuous", "holds", "counterexample")
TARGETS = ("theorem15", "prop31", "prop32", "cor41")


def describe(H: Subgroup) -> dict:
    """JSON-friendly handle for a subgroup."""
    return {"order": H.order, "gens": [p.cycle_string() for p in H.generator_perms()]}


@dataclass
class Verdict:
    target: str
    group: str
    sigma: str
    status: str
    subject: dict | None = None
    witnesses: dict = field(default_factory=dict)
    instances: int = 0
    seconds: float = 0.0

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    @property
    def non_vacuous(self) -> bool:
        return self.status == "holds" and self.instances > 0

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "target": self.target,
            "group": self.group,
            "sigma": self.sigma,
            "subject": self.subject,
            "status": self.status,
            "instances": self.instances,
            "witnesses": self.witnesses,
        }
        if timing:
            out["seconds"] = round(self.seconds, 6)
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "Verdict":
        return cls(d["target"], d["group"], d["sigma"], d["status"], d.get("subject"),
                   d.get("witnesses", {}), d.get("instances", 0), d.get("seconds", 0.0))


@dataclass
class SweepReport:
    target: str
    verdicts: list[Verdict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def counts(self) -> dict:
        c = {s: 0 for s in STATUSES}
        for v in self.verdicts:
            c[v.status] += 1
        return c

    @property
    def counterexamples(self) -> list[Verdict]:
        return [v for v in self.verdicts if v.status == "counterexample"]

    @property
    def non_vacuous_holds(self) -> int:
        return sum(v.non_vacuous for v in self.verdicts)

    def merge(self, other: "SweepReport") -> "SweepReport":
        return SweepReport(self.target, self.verdicts + other.verdicts,
                           self.notes + other.notes, self.seconds + other.seconds)

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "schema": SCHEMA,
            "target": self.target,
            "cases": len(self.verdicts),
            "counts": self.counts,
            "non_vacuous_holds": self.non_vacuous_holds,
            "notes": list(self.notes),
            "verdicts": [v.to_dict(timing) for v in self.verdicts],
        }
        if timing:
            out["seconds"] = round(self.seconds, 6)
        return out

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "SweepReport":
        d = json.loads(text)
        if d.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {d.get('schema')!r}")
        return cls(d["target"], [Verdict.from_dict(v) for v in d["verdicts"]],
                   list(d.get("notes", [])), d.get("seconds", 0.0))

    def to_text(self) -> str:
        rows = [("group", "sigma", "subject", "status", "inst")]
        for v in self.verdicts:
            subj = "" if v.subject is None else str(v.subject.get("order", ""))
            rows.append((v.group, v.sigma, subj, v.status, str(v.instances)))
        widths = [max(len(r[i]) for r in rows) for i in range(5)]
        lines = ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows]
        c = self.counts
        lines.append("")
        lines.append(f"target={self.target} cases={len(self.verdicts)} "
                     + " ".join(f"{k}={c[k]}" for k in STATUSES)
                     + f" non_vacuous_holds={self.non_vacuous_holds}")
        lines.extend(f"note: {n}" for n in self.notes)
        return "\n".join(lines)


# --- gate machinery -------------------------------------------------------------


@dataclass
class GateResult:
    ok: bool
    reason: str | None = None
    instances: int = 0
    failing: Subgroup | None = None

    def __bool__(self) -> bool:
        return self.ok


def _name(G: PermGroup) -> str:
    return G.cache.get("name") or f"group{G.order}"


def _cyclic_mask(G: PermGroup) -> np.ndarray:
    cached = G.cache.get("cyclic_mask")
    if cached is None:
        lat = _lattice(G)
        orders = G.element_orders()
        cached = np.array([int(orders[s.elements].max()) == s.order for s in lat])
        G.cache["cyclic_mask"] = cached
    return cached


def _abelian(S: Subgroup) -> bool:
    el = S.elements
    t = S.parent.table[np.ix_(el, el)]
    return bool((t == t.T).all())


def _sylow2_nonabelian(G: PermGroup, E: Subgroup) -> bool:
    lat = _lattice(G)
    target = part(E.order, [2])
    if target < 8:
        return False
    inside = np.flatnonzero(lat.contain[:, lat.index_of(E)] & (lat.orders == target))
    return not _abelian(lat[int(inside[0])])


def _members_supersoluble(G: PermGroup, hall_set: HallSet) -> GateResult:
    for H in hall_set.members:
        key = ("supersoluble", H.key)
        ok = G.cache.get(key)
        if ok is None:
            ok = is_supersoluble(H.group)
            G.cache[key] = ok
        if not ok:
            return GateResult(False, f"member of order {H.order} is not supersoluble", failing=H)
    return GateResult(True)


def _common_gate(G: PermGroup, sigma: SigmaPartition, hall_set: HallSet) -> GateResult:
    if not is_sigma_full_of_sylow_type(G, sigma, current().d_property):
        return GateResult(False, "not sigma-full of Sylow type")
    return _members_supersoluble(G, hall_set)


def _targets(G: PermGroup, containers: Sequence[int], order4: bool) -> np.ndarray:
    """Lattice indices of cyclic subgroups of prime order (and order 4 when allowed)
    lying in some container; order-4 ones only outside the hypercenter."""
    lat = _lattice(G)
    if not containers:
        return np.zeros(0, dtype=np.int64)
    inside = lat.contain[:, list(containers)].any(axis=1)
    prime = np.array([is_prime(int(o)) for o in lat.orders])
    mask = inside & _cyclic_mask(G) & prime
    if order4:
        Z = hypercenter(G)
        not_in_z = np.array([not (s <= Z) for s in lat])
        mask |= inside & _cyclic_mask(G) & (lat.orders == 4) & not_in_z
    return np.flatnonzero(mask)


def _weak_gate(G: PermGroup, sigma: SigmaPartition, hall_set: HallSet, targets: np.ndarray) -> GateResult:
    if targets.size == 0:
        return GateResult(True, instances=0)
    weak = weakly_m_h_permutable_mask(G, hall_set, sigma)
    bad = targets[~weak[targets]]
    if bad.size:
        H = _lattice(G)[int(bad[0])]
        return GateResult(False, f"cyclic subgroup of order {H.order} is not weakly m-H-permutable",
                          int(targets.size), H)
    return GateResult(True, instances=int(targets.size))


def _hall_containers(G: PermGroup, E: Subgroup, sigma: SigmaPartition) -> list[int]:
    """Non-cyclic Hall sigma_i-subgroups of ``E`` for every block of sigma(E)."""
    lat = _lattice(G)
    below = lat.contain[:, lat.index_of(E)]
    cyc = _cyclic_mask(G)
    out = []
    for block in sigma.sigma_of(E.order):
        halls = np.flatnonzero(below & (lat.orders == block.part(E.order)))
        if current().representatives_only:
            halls = halls[:1]
        out.extend(int(v) for v in halls if not cyc[v])
    return out


def theorem15_hypothesis(G: PermGroup, E: Subgroup, sigma: SigmaPartition, hall_set: HallSet) -> GateResult:
    """The gate of the hypercyclic-embedding theorem for one Hall set."""
    if E.order == 1:
        return GateResult(True, "E is trivial")
    gate = _common_gate(G, sigma, hall_set)
    if not gate:
        return gate
    containers = _hall_containers(G, E, sigma)
    return _weak_gate(G, sigma, hall_set, _targets(G, containers, _sylow2_nonabelian(G, E)))


# --- verdict assembly ----------------------------------------------------------------


def _rebuild(G: PermGroup) -> PermGroup:
    G2 = from_generators(G.degree, G.generators)
    if "name" in G.cache:
        G2.cache["name"] = G.cache["name"]
    return G2


def _transfer(G2: PermGroup, H: Subgroup) -> Subgroup:
    return G2.subgroup(H.generator_perms())


def _transfer_hall(G2: PermGroup, sigma: SigmaPartition, hs: HallSet) -> HallSet:
    return HallSet.from_members(G2, sigma, [_transfer(G2, H) for H in hs.members])


def _run(target: str, G: PermGroup, sigma: SigmaPartition, subject: Subgroup | None,
         gate: Callable[[PermGroup, HallSet], GateResult],
         conclusion: Callable[[PermGroup], bool],
         recheck: Callable[[PermGroup, HallSet], tuple[bool, bool]]) -> Verdict:
    start = time.perf_counter()
    subj = describe(subject) if subject is not None else None
    verdict = Verdict(target, _name(G), str(sigma), "vacuous", subj)
    hall_sets = complete_hall_sets(G, sigma)
    if not hall_sets:
        verdict.witnesses = {"reason": "no complete Hall set"}
    else:
        passed, first_fail = [], None
        for n, hs in enumerate(hall_sets):
            g = gate(G, hs)
            if g:
                passed.append((n, hs, g))
            elif first_fail is None:
                first_fail = (n, hs, g)
        if not passed:
            n, hs, g = first_fail
            verdict.status = "hypothesis_fails"
            verdict.instances = g.instances
            verdict.witnesses = {"hall_set_index": n, "hall_set": [describe(H) for H in hs.members],
                                 "reason": g.reason}
            if g.failing is not None:
                verdict.witnesses["failing"] = describe(g.failing)
        elif conclusion(G):
            n, hs, g = max(passed, key=lambda t: t[2].instances)
            verdict.status = "holds"
            verdict.instances = g.instances
            verdict.witnesses = {"hall_set_index": n, "hall_set": [describe(H) for H in hs.members],
                                 "hall_sets_passing": len(passed), "hall_sets_total": len(hall_sets)}
        else:
            n, hs, g = passed[0]
            G2 = _rebuild(G)
            hyp, concl = recheck(G2, _transfer_hall(G2, sigma, hs))
            if not hyp or concl:
                raise RuntimeError(f"{target} on {_name(G)} under {sigma}: counterexample did not re-validate")
            verdict.status = "counterexample"
            verdict.instances = g.instances
            verdict.witnesses = {"hall_set_index": n, "hall_set": [describe(H) for H in hs.members]}
    verdict.seconds = time.perf_counter() - start
    return verdict


def _check_normal(G: PermGroup, E: Subgroup) -> None:
    if E.parent is not G or not is_normal(G, E):
        raise ValidationError("expected a normal subgroup of G")


def _series_cyclic(G: PermGroup, E: Subgroup) -> bool:
    """Conclusion recomputed along a randomly chosen chief series."""
    if E.order == 1:
        return True
    return all(f.cyclic for f in chief_series_through(G, E, random.Random(0)).factors)


def verify_theorem15(G: PermGroup, E: Subgroup, sigma: SigmaPartition) -> Verdict:
    """Is ``E`` hypercyclically embedded whenever the gate opens?"""
    _check_normal(G, E)
    if E.order == 1:
        return Verdict("theorem15", _name(G), str(sigma), "holds", describe(E),
                       {"reason": "E is trivial"})

    def recheck(G2, hs2):
        E2 = _transfer(G2, E)
        return bool(theorem15_hypothesis(G2, E2, sigma, hs2)), _series_cyclic(G2, E2)

    return _run("theorem15", G, sigma, E,
                lambda G_, hs: theorem15_hypothesis(G_, E, sigma, hs),
                lambda G_: is_hypercyclically_embedded(G_, E), recheck)


def _prop31_gate(G: PermGroup, sigma: SigmaPartition, hs: HallSet) -> GateResult:
    gate = _common_gate(G, sigma, hs)
    if not gate:
        return gate
    p = min(prime_factors(G.order))
    order4 = p == 2 and _sylow2_nonabelian(G, G.whole)
    lat = _lattice(G)
    targets = _targets(G, [lat.top], False)
    targets = targets[lat.orders[targets] == p]
    if order4:
        extra = _targets(G, [lat.top], True)
        targets = np.union1d(targets, extra[lat.orders[extra] == 4])
    return _weak_gate(G, sigma, hs, targets)


def verify_prop31(G: PermGroup, sigma: SigmaPartition) -> Verdict:
    """Is ``G`` p-nilpotent for the smallest prime p whenever the gate opens?"""
    if G.order == 1:
        return Verdict("prop31", _name(G), str(sigma), "holds", None, {"reason": "trivial group"})
    p = min(prime_factors(G.order))

    def recheck(G2, hs2):
        return bool(_prop31_gate(G2, sigma, hs2)), is_p_nilpotent(G2, p)

    v = _run("prop31", G, sigma, None, lambda G_, hs: _prop31_gate(G_, sigma, hs),
             lambda G_: is_p_nilpotent(G_, p), recheck)
    v.witnesses["p"] = p
    return v


def _prop32_gate(G: PermGroup, P: Subgroup, sigma: SigmaPartition, hs: HallSet) -> GateResult:
    if not any(P <= H for H in hs.members):
        return GateResult(False, "P lies in no member of the Hall set")
    gate = _common_gate(G, sigma, hs)
    if not gate:
        return gate
    lat = _lattice(G)
    order4 = P.order % 8 == 0 and is_prime_power(P.order, 2) and not _abelian(P)
    return _weak_gate(G, sigma, hs, _targets(G, [lat.index_of(P)], order4))


def verify_prop32(G: PermGroup, P: Subgroup, sigma: SigmaPartition) -> Verdict:
    """Is the normal p-subgroup ``P`` hypercyclically embedded whenever the gate opens?"""
    _check_normal(G, P)
    if P.order == 1:
        return Verdict("prop32", _name(G), str(sigma), "holds", describe(P), {"reason": "P is trivial"})
    if not is_prime_power(P.order):
        raise ValidationError("P must be a p-subgroup")

    def recheck(G2, hs2):
        P2 = _transfer(G2, P)
        return bool(_prop32_gate(G2, P2, sigma, hs2)), _series_cyclic(G2, P2)

    return _run("prop32", G, sigma, P, lambda G_, hs: _prop32_gate(G_, P, sigma, hs),
                lambda G_: is_hypercyclically_embedded(G_, P), recheck)


def _cor41_gate(G: PermGroup, E: Subgroup, sigma: SigmaPartition, hs: HallSet) -> GateResult:
    key = ("quotient_supersoluble", E.key)
    if key not in G.cache:
        G.cache[key] = is_supersoluble(quotient(G, E).group)
    if not G.cache[key]:
        return GateResult(False, "G/E is not supersoluble")
    gate = _common_gate(G, sigma, hs)
    if not gate:
        return gate
    F = generalized_fitting(G, E)
    if F.order == 1:
        return GateResult(True)
    containers = _hall_containers(G, F, sigma)
    return _weak_gate(G, sigma, hs, _targets(G, containers, _sylow2_nonabelian(G, E)))


def verify_cor41(G: PermGroup, E: Subgroup, sigma: SigmaPartition) -> Verdict:
    """Is ``G`` supersoluble whenever ``G/E`` is and the gate on ``F*(E)`` opens?"""
    _check_normal(G, E)

    def recheck(G2, hs2):
        E2 = _transfer(G2, E)
        return bool(_cor41_gate(G2, E2, sigma, hs2)), _series_cyclic(G2, G2.whole)

    return _run("cor41", G, sigma, E, lambda G_, hs: _cor41_gate(G_, E, sigma, hs),
                lambda G_: is_supersoluble(G_), recheck)


# --- lemma suite --------------------------------------------------------------------


class _Tally:
    def __init__(self, name: str):
        self.name = name
        self.instances = 0
        self.violations: list[dict] = []

    def check(self, ok: bool, **witness) -> None:
        self.instances += 1
        if not ok and len(self.violations) < 5:
            self.violations.append({k: describe(v) if isinstance(v, Subgroup) else v
                                    for k, v in witness.items()})
        elif not ok:
            self.violations.append({})

    def verdict(self, G: PermGroup, sigma: SigmaPartition, seconds: float) -> Verdict:
        if self.violations:
            status = "counterexample"
        elif self.instances == 0:
            status = "vacuous"
        else:
            status = "holds"
        witnesses = {"violations": len(self.violations), "examples": [v for v in self.violations if v]}
        return Verdict(f"lemma{self.name}", _name(G), str(sigma), status, None, witnesses,
                       self.instances, seconds)


def _in_sub(E: Subgroup, H: Subgroup) -> Subgroup:
    """``H <= E`` as a subgroup of ``E.group``."""
    return Subgroup.from_mask(E.group, H.mask[E.embedding()])


def _quotients(G: PermGroup) -> list:
    cached = G.cache.get("quotients")
    if cached is None:
        cached = [(N, quotient(G, N)) for N in normal_subgroups(G)]
        G.cache["quotients"] = cached
    return cached


def _pi_subsets(sigma: SigmaPartition, n: int) -> list[tuple]:
    blocks = sigma.sigma_of(n)
    return [c for k in range(1, len(blocks) + 1) for c in combinations(blocks, k)]


def _lemma21(G: PermGroup, sigma: SigmaPartition, tallies: dict) -> None:
    lat = _lattice(G)
    sub = sigma_subnormal_mask(G, sigma)
    A_idx = np.flatnonzero(sub)
    t1, t2, t3 = tallies["2.1(1)"], tallies["2.1(2)"], tallies["2.1(3)"]
    for k, K in enumerate(lat):
        KG = K.group
        sub_K = sigma_subnormal_mask(KG, sigma)
        latK = _lattice(KG)
        for a in A_idx:
            AK = _in_sub(K, lat[lat.meet(int(a), k)])
            t1.check(bool(sub_K[latK.index_of(AK)]), A=lat[int(a)], K=K)
    for N, Q in _quotients(G):
        sub_Q = sigma_subnormal_mask(Q.group, sigma)
        latQ = _lattice(Q.group)
        for a in A_idx:
            img = Q.image(lat[int(a)])
            t2.check(bool(sub_Q[latQ.index_of(img)]), A=lat[int(a)], N=N)
    for Pi in _pi_subsets(sigma, G.order):
        target = o_upper_pi(G, Pi)
        for a in A_idx:
            A = lat[int(a)]
            index = G.order // A.order
            if not all(any(p in b for b in Pi) for p in prime_factors(index)):
                continue
            inner = o_upper_pi(A.group, Pi)
            mask = np.zeros(G.order, dtype=bool)
            mask[A.embedding()[inner.elements]] = True
            mapped = Subgroup.from_mask(G, mask)
            t3.check(mapped == target, A=A, Pi=[str(b) for b in Pi])


def _lemma22_23(G: PermGroup, sigma: SigmaPartition, tallies: dict) -> None:
    lat = _lattice(G)
    normal = lat.normal_mask()
    for hs in complete_hall_sets(G, sigma):
        m = m_h_permutable_mask(G, hs)
        w = weakly_m_h_permutable_mask(G, hs, sigma)
        m_idx, w_idx = np.flatnonzero(m), np.flatnonzero(w)
        # 2.2(1), 2.3(3), 2.3(4): quotients
        for N, Q in _quotients(G):
            hsQ = image_hall_set(hs, Q, sigma)
            mQ = m_h_permutable_mask(Q.group, hsQ)
            wQ = weakly_m_h_permutable_mask(Q.group, hsQ, sigma)
            latQ = _lattice(Q.group)
            for h in m_idx:
                tallies["2.2(1)"].check(bool(mQ[latQ.index_of(Q.image(lat[int(h)]))]), H=lat[int(h)], R=N)
            for h in w_idx:
                H = lat[int(h)]
                img = int(latQ.index_of(Q.image(H)))
                if N <= H:
                    tallies["2.3(3)"].check(bool(wQ[img]), H=H, N=N)
                if math.gcd(H.order, N.order) == 1:
                    tallies["2.3(4)"].check(bool(wQ[img]), H=H, N=N)
        # 2.2(2), 2.2(3), 2.3(1), 2.3(2): restriction to E
        for e, E in enumerate(lat):
            if E.order == 1:
                continue
            reduces = reduces_into(hs, E)
            if normal[e]:
                tallies["2.2(3)"].check(reduces, E=E)
            if not reduces:
                continue
            hsE = restrict_hall_set(hs, E, sigma)
            mE = m_h_permutable_mask(E.group, hsE)
            wE = weakly_m_h_permutable_mask(E.group, hsE, sigma)
            latE = _lattice(E.group)
            below = lat.contain[:, e]
            for h in m_idx[below[m_idx]]:
                ok = bool(mE[latE.index_of(_in_sub(E, lat[int(h)]))])
                tallies["2.2(2)"].check(ok, H=lat[int(h)], E=E)
                if normal[e]:
                    tallies["2.2(3)"].check(ok, H=lat[int(h)], E=E)
            for h in w_idx[below[w_idx]]:
                ok = bool(wE[latE.index_of(_in_sub(E, lat[int(h)]))])
                tallies["2.3(1)"].check(ok, H=lat[int(h)], E=E)
                if normal[e]:
                    tallies["2.3(2)"].check(ok, H=lat[int(h)], E=E)
        # 2.2(4): joins of m-H-permutable subgroups
        J = lat.join_table
        if m_idx.size:
            joined = J[np.ix_(m_idx, m_idx)]
            ok = m[joined]
            for i, j in zip(*np.nonzero(~ok)):
                tallies["2.2(4)"].check(False, H=lat[int(m_idx[i])], K=lat[int(m_idx[j])])
            tallies["2.2(4)"].instances += int(ok.sum())


def _lemma24(G: PermGroup, tally: _Tally) -> None:
    lat = _lattice(G)
    o = lat.orders
    J, M = lat.join_table, lat.meet_table
    P = o[J] * o[M] == o[:, None] * o[None, :]
    halls = [h for h in range(len(lat)) if math.gcd(int(o[h]), G.order // int(o[h])) == 1]
    idx = np.arange(len(lat))
    for h in halls:
        for k in np.flatnonzero(P[h]):
            ns = idx[P[h] & P[k]]
            hk = J[h, k]
            lhs = o[M[ns, hk]]
            nh, nk = M[ns, h], M[ns, k]
            rhs = o[nh] * o[nk] // o[M[nh, nk]]
            ok = lhs == rhs
            tally.instances += int(ok.sum())
            for n in ns[~ok]:
                tally.check(False, H=lat[h], K=lat[int(k)], N=lat[int(n)])


def _lemma25(G: PermGroup, tally: _Tally) -> None:
    lat = _lattice(G)
    for h in np.flatnonzero(modular_mask(G, current().modularity_cap)):
        H = lat[int(h)]
        lo, hi = core(G, H), normal_closure(G, H)
        series = chief_series_between(G, lo, hi)
        tally.check(all(f.cyclic for f in series.factors), H=H)


LEMMAS = ("2.1(1)", "2.1(2)", "2.1(3)", "2.2(1)", "2.2(2)", "2.2(3)", "2.2(4)",
          "2.3(1)", "2.3(2)", "2.3(3)", "2.3(4)", "2.4", "2.5")


def lemma_suite(G: PermGroup, sigma: SigmaPartition) -> SweepReport:
    """Instantiate each preliminary lemma exhaustively over the lattice of ``G``."""
    start = time.perf_counter()
    tallies = {name: _Tally(name) for name in LEMMAS}
    report = SweepReport("lemmas")
    stage_times = {}
    for stage, run in (("2.1", lambda: _lemma21(G, sigma, tallies)),
                       ("2.2", lambda: _lemma22_23(G, sigma, tallies)),
                       ("2.4", lambda: _lemma24(G, tallies["2.4"])),
                       ("2.5", lambda: _lemma25(G, tallies["2.5"]))):
        t0 = time.perf_counter()
        try:
            run()
        except BudgetError as exc:
            report.notes.append(f"{_name(G)} {sigma} lemma {stage}: {exc}")
        stage_times[stage] = time.perf_counter() - t0
    for name in LEMMAS:
        report.verdicts.append(tallies[name].verdict(G, sigma, stage_times.get(name[:3], 0.0)))
    report.seconds = time.perf_counter() - start
    return report


# --- sweeps --------------------------------------------------------------------------


def cases_for(G: PermGroup, target: str) -> list[tuple[SigmaPartition, Subgroup | None]]:
    """Deterministically ordered (sigma, subject) pairs for one group."""
    if target not in TARGETS:
        raise ValidationError(f"unknown target {target!r}")
    out = []
    for sigma in partitions_of(G.order):
        if target == "prop31":
            out.append((sigma, None))
            continue
        for N in normal_subgroups(G):
            if target == "prop32" and not is_prime_power(N.order) and N.order != 1:
                continue
            out.append((sigma, N))
    return out


def _verify_one(G: PermGroup, target: str, sigma: SigmaPartition, subject: Subgroup | None) -> Verdict:
    if target == "theorem15":
        return verify_theorem15(G, subject, sigma)
    if target == "prop31":
        return verify_prop31(G, sigma)
    if target == "prop32":
        return verify_prop32(G, subject, sigma)
    return verify_cor41(G, subject, sigma)


def _sweep_group(G: PermGroup, target: str) -> SweepReport:
    report = SweepReport(target)
    start = time.perf_counter()
    try:
        for sigma, subject in cases_for(G, target):
            report.verdicts.append(_verify_one(G, target, sigma, subject))
    except BudgetError as exc:
        report.notes.append(f"{_name(G)}: {exc}")
    report.seconds = time.perf_counter() - start
    return report


def _sweep_task(args) -> SweepReport:
    name, degree, gens, target, config = args
    G = from_generators(degree, [Permutation(g) for g in gens])
    G.cache["name"] = name
    with using(config):
        return _sweep_group(G, target)


def sweep(corpus: Iterable[tuple[str, PermGroup]], target: str, *, max_order: int | None = None,
          workers: int | None = None) -> SweepReport:
    """Run one target over every group of the corpus; cases are ordered by corpus then sigma then E."""
    if target not in TARGETS:
        raise ValidationError(f"unknown target {target!r}")
    config = current()
    cap = config.sweep_order_cap if max_order is None else max_order
    workers = config.workers if workers is None else workers
    groups = [(name, G) for name, G in corpus if G.order <= cap]
    start = time.perf_counter()
    report = SweepReport(target)
    if workers > 1 and len(groups) > 1:
        tasks = [(name, G.degree, [g.images for g in G.generators], target, config) for name, G in groups]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_sweep_task, tasks):
                report = report.merge(part)
    else:
        for name, G in groups:
            G.cache.setdefault("name", name)
            report = report.merge(_sweep_group(G, target))
    report.seconds = time.perf_counter() - start
    return report


# --- worked examples -------------------------------------------------------------------


@dataclass
class ExampleResult:
    name: str
    passed: bool
    checks: dict
    seconds: float

    def to_dict(self, timing: bool = False) -> dict:
        out = {"name": self.name, "passed": self.passed, "checks": self.checks}
        if timing:
            out["seconds"] = round(self.seconds, 6)
        return out


def _example_a4() -> dict:
    from .corpus import alternating
    from .embeddings import h_permutable_mask
    from .lattice import all_subgroups, is_modular_subgroup

    G = alternating(4)
    sigma = SigmaPartition.parse("2,3|*")
    halls = complete_hall_sets(G, sigma)
    hs = halls[0]
    lat = all_subgroups(G)
    return {
        "unique_hall_set_is_G": len(halls) == 1 and list(hs.members) == [G.whole],
        "ten_subgroups": len(lat) == 10,
        "all_H_permutable": bool(h_permutable_mask(G, hs).all()),
        "all_weakly_m_H_permutable": bool(weakly_m_h_permutable_mask(G, hs, sigma).all()),
        "order_2_not_modular": all(not is_modular_subgroup(G, H) for H in lat if H.order == 2),
    }


def _example_132() -> dict:
    from .corpus import build_example_132
    from .embeddings import is_H_permutable

    ex = build_example_132(5, 2, 7, 3)
    G = ex.group
    return {
        "order_1680": G.order == 1680,
        "T_differs_from_A": ex.T != ex.A,
        "A_meets_V_trivially": (ex.A & ex.V).order == 1,
        "B_H_permutable": is_H_permutable(G, ex.B, ex.hall_set),
        "AxB_not_H_permutable": not is_H_permutable(G, ex.H, ex.hall_set),
    }


def _example_a5() -> dict:
    from .corpus import alternating
    from .embeddings import (
        is_H_permutable,
        is_sigma_permutable,
        is_weakly_m_H_permutable,
        is_weakly_m_sigma_permutable,
    )
    from .lattice import all_subgroups

    G = alternating(5)
    sigma = SigmaPartition.parse("2,3|*")
    lat = all_subgroups(G)
    C5 = next(H for H in lat if H.order == 5)
    K = next(H for H in lat if H.order == 12)
    hs = HallSet.from_members(G, sigma, [C5, K])
    sub = [H.order for H, ok in zip(lat, sigma_subnormal_mask(G, sigma)) if ok]
    return {
        "sigma_subnormal_is_1_and_G": sub == [1, 60],
        "H_permutable": is_H_permutable(G, C5, hs),
        "weakly_m_H_permutable": is_weakly_m_H_permutable(G, C5, hs, sigma),
        "not_sigma_permutable": not is_sigma_permutable(G, C5, sigma),
        "not_weakly_m_sigma_permutable": not is_weakly_m_sigma_permutable(G, C5, sigma),
    }


EXAMPLES = (("A4 with sigma 2,3|*", _example_a4),
            ("(Q:C5)x(C7:C3), order 1680", _example_132),
            ("A5 with sigma 2,3|*", _example_a5))


def reproduce_examples() -> list[ExampleResult]:
    out = []
    for name, run in EXAMPLES:
        start = time.perf_counter()
        checks = run()
        out.append(ExampleResult(name, all(checks.values()), checks, time.perf_counter() - start))
    return out
