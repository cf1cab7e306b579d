"""Command-line front end.

Exit codes: 0 all checks pass, 1 counterexample or failed assertion,
2 usage or parse error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

import numpy as np

from . import embeddings as emb
from .config import CONFIG_ENV, Config, load_config, using
from .corpus import CatalogError, _split_generators, default_corpus, load_catalog, parse_group
from .harness import SCHEMA, TARGETS, SweepReport, describe, lemma_suite, reproduce_examples, sweep
from .harness import cases_for, _verify_one
from .lattice import all_subgroups, modular_mask, modularity_witness
from .permgroup import BudgetError, PermGroup, Permutation, ValidationError, is_normal
from .sigma import SigmaPartition, complete_hall_sets, partitions_of

__all__ = ["main", "run", "resolve_group", "build_parser"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def resolve_group(spec: str, catalog: str | None = None) -> PermGroup:
    """A catalog file path (``file`` or ``file::name``), a corpus name, or a builder expression."""
    path, _, name = spec.partition("::")
    if os.path.isfile(path):
        entries = load_catalog(path)
        if name:
            for e, G in entries:
                if e.name == name:
                    return G
            raise ValidationError(f"no entry {name!r} in {path}")
        if len(entries) != 1:
            raise ValidationError(f"{path} has {len(entries)} entries; use {path}::NAME")
        return entries[0][1]
    if catalog:
        for e, G in load_catalog(catalog):
            if e.name == spec:
                return G
    for corpus_name, G in default_corpus():
        if corpus_name == spec:
            return G
    return parse_group(spec)


def _sigmas(G: PermGroup, text: str | None) -> list[SigmaPartition]:
    return [SigmaPartition.parse(text)] if text else list(partitions_of(G.order))


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps({"schema": SCHEMA, "command": args.command, **payload}, indent=2))
    else:
        print(text)


def _table(rows: list[tuple]) -> str:
    rows = [tuple(str(c) for c in r) for r in rows]
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows)


def _fmt(v) -> str:
    if v is None:
        return "n/a"
    return "true" if v else "false"


# --- subcommands ---------------------------------------------------------------------


def cmd_props(args) -> int:
    G = resolve_group(args.group, args.catalog)
    sigma = SigmaPartition.parse(args.sigma)
    gens = [Permutation.from_cycles(g, G.degree) for g in _split_generators(args.subgroup)]
    for g in gens:
        if g not in G:
            raise ValidationError(f"{g.cycle_string()} is not in the group")
    H = G.subgroup(gens)
    halls = complete_hall_sets(G, sigma) if G.order <= args.config.lattice_cap else None
    budget = False
    values: dict[str, bool | None] = {}
    hs = None
    if halls is not None:
        if not halls:
            raise ValidationError(f"no complete Hall set for sigma {sigma}")
        if not 0 <= args.hall < len(halls):
            raise ValidationError(f"--hall must be in [0, {len(halls) - 1}]")
        hs = halls[args.hall]
    values["normal"] = is_normal(G, H)

    def guarded(name, fn):
        nonlocal budget
        try:
            values[name] = bool(fn())
        except BudgetError:
            values[name] = None
            budget = True

    guarded("modular", lambda: modularity_witness(G, H, args.config.modularity_cap) is None)
    guarded("sigma-subnormal", lambda: emb.is_sigma_subnormal(G, H, sigma))
    if hs is not None:
        guarded("H-permutable", lambda: emb.is_H_permutable(G, H, hs))
        guarded("m-H-permutable", lambda: emb.is_m_H_permutable(G, H, hs))
        guarded("weakly-m-H-permutable", lambda: emb.is_weakly_m_H_permutable(G, H, hs, sigma))
    else:
        for name in ("H-permutable", "m-H-permutable", "weakly-m-H-permutable"):
            values[name] = None
        budget = True
    guarded("sigma-permutable", lambda: emb.is_sigma_permutable(G, H, sigma))
    guarded("m-sigma-permutable", lambda: emb.is_m_sigma_permutable(G, H, sigma))
    guarded("weakly-m-sigma-permutable", lambda: emb.is_weakly_m_sigma_permutable(G, H, sigma))
    guarded("c-normal", lambda: emb.is_c_normal(G, H))
    payload = {
        "group": {"spec": args.group, "order": G.order, "degree": G.degree},
        "sigma": str(sigma),
        "hall_set": None if hs is None else {"index": args.hall, "members": [describe(M) for M in hs.members]},
        "subgroup": describe(H),
        "properties": values,
    }
    text = _table([("property", "value")] + [(k, _fmt(v)) for k, v in values.items()])
    text = f"group {args.group} (order {G.order}), sigma {sigma}, subgroup order {H.order}\n" + text
    _emit(args, payload, text)
    return EXIT_BUDGET if budget else EXIT_OK


def cmd_examples(args) -> int:
    results = reproduce_examples()
    payload = {"examples": [r.to_dict() for r in results]}
    lines = []
    for r in results:
        lines.append(f"{'PASS' if r.passed else 'FAIL'}  {r.name}")
        lines.extend(f"      {k}: {_fmt(v)}" for k, v in r.checks.items() if not v)
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def _report_exit(report: SweepReport) -> int:
    if report.counterexamples:
        return EXIT_FAIL
    if report.notes:
        return EXIT_BUDGET
    return EXIT_OK


def cmd_verify(args) -> int:
    G = resolve_group(args.group, args.catalog)
    sigmas = _sigmas(G, args.sigma)
    subject = None
    if args.subject:
        subject = G.subgroup([Permutation.from_cycles(g, G.degree) for g in _split_generators(args.subject)])
    report = SweepReport(args.target)
    try:
        for sigma, E in cases_for(G, args.target):
            if sigma not in sigmas:
                continue
            if subject is not None and E is not None and E != subject:
                continue
            report.verdicts.append(_verify_one(G, args.target, sigma, E))
        if subject is not None and args.target != "prop31" and not report.verdicts:
            raise ValidationError("subject is not a valid normal subgroup for this target")
    except BudgetError as exc:
        report.notes.append(str(exc))
    _emit(args, report.to_dict(), report.to_text())
    return _report_exit(report)


def cmd_sweep(args) -> int:
    corpus = load_catalog(args.catalog) if args.catalog else default_corpus(args.max_order)
    groups = [(e.name, G) for e, G in corpus] if args.catalog else corpus
    report = sweep(groups, args.target, max_order=args.max_order)
    _emit(args, report.to_dict(), report.to_text())
    return _report_exit(report)


def cmd_lemmas(args) -> int:
    G = resolve_group(args.group, args.catalog)
    report = SweepReport("lemmas")
    for sigma in _sigmas(G, args.sigma):
        report = report.merge(lemma_suite(G, sigma))
    _emit(args, report.to_dict(), report.to_text())
    return _report_exit(report)


def cmd_lattice(args) -> int:
    G = resolve_group(args.group, args.catalog)
    lat = all_subgroups(G, args.config.lattice_cap)
    normal = lat.normal_mask()
    try:
        modular = modular_mask(G, args.config.modularity_cap)
    except BudgetError:
        modular = None
    classes = {i: n for n, c in enumerate(lat.conjugacy_classes()) for i in c}
    strict = lat.contain & ~np.eye(len(lat), dtype=bool)
    covers = strict & ((strict.astype(np.int64) @ strict.astype(np.int64)) == 0)
    rows = [("index", "order", "class", "normal", "modular", "generators")]
    entries = []
    for i, H in enumerate(lat):
        mod = None if modular is None else bool(modular[i])
        gens = [p.cycle_string() for p in H.generator_perms()]
        rows.append((i, H.order, classes[i], _fmt(bool(normal[i])), _fmt(mod), " ".join(gens) or "()"))
        entries.append({"index": i, "order": H.order, "class": classes[i], "normal": bool(normal[i]),
                        "modular": mod, "gens": gens,
                        "maximal_in": [int(j) for j in np.flatnonzero(covers[i])]})
    payload = {"group": {"spec": args.group, "order": G.order, "degree": G.degree},
               "size": len(lat), "subgroups": entries}
    _emit(args, payload, f"{len(lat)} subgroups of {args.group} (order {G.order})\n" + _table(rows))
    return EXIT_OK if modular is not None else EXIT_BUDGET


# --- plumbing ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--config", help=f"JSON config file (default: ${CONFIG_ENV})")
    common.add_argument("--format", choices=("text", "json"), default=None)
    common.add_argument("--catalog", help="catalog file for group names and sweeps")
    common.add_argument("--lattice-cap", type=int)
    common.add_argument("--modularity-cap", type=int)
    common.add_argument("--workers", type=int)
    common.add_argument("--d-property", choices=("full", "EC"))
    common.add_argument("--representatives-only", action="store_true", default=None)

    parser = _Parser(prog="hyperembed", description="Embedding properties of subgroups of small permutation groups.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("props", parents=[common], help="evaluate every predicate for one subgroup")
    p.add_argument("group")
    p.add_argument("--sigma", required=True)
    p.add_argument("--hall", type=int, default=0)
    p.add_argument("--subgroup", required=True, help='generators, e.g. "(0 1)(2 3), (0 1 2)"')
    p.set_defaults(func=cmd_props)

    p = sub.add_parser("examples", parents=[common], help="reproduce the three worked examples")
    p.set_defaults(func=cmd_examples)

    p = sub.add_parser("verify", parents=[common], help="check one statement on one group")
    p.add_argument("target", choices=TARGETS)
    p.add_argument("group")
    p.add_argument("--sigma")
    p.add_argument("--subject", help="generators of E (or P); default: every normal subgroup")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", parents=[common], help="run one statement over the corpus")
    p.add_argument("--max-order", type=int, default=None)
    p.add_argument("--target", choices=TARGETS, required=True)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("lemmas", parents=[common], help="exhaustive lemma checks on one group")
    p.add_argument("group")
    p.add_argument("--sigma")
    p.set_defaults(func=cmd_lemmas)

    p = sub.add_parser("lattice", parents=[common], help="dump the subgroup lattice")
    p.add_argument("group")
    p.set_defaults(func=cmd_lattice)
    return parser


def _config_for(args) -> Config:
    cfg = load_config(args.config)
    overrides = {
        "lattice_cap": args.lattice_cap,
        "modularity_cap": args.modularity_cap,
        "workers": args.workers,
        "d_property": args.d_property,
        "representatives_only": args.representatives_only,
        "output": args.format,
    }
    if getattr(args, "max_order", None) is not None:
        overrides["sweep_order_cap"] = args.max_order
    return cfg.updated(**{k: v for k, v in overrides.items() if v is not None})


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        args.config = _config_for(args)
        args.format = args.config.output
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        print(f"error: bad configuration: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        with using(args.config):
            return args.func(args)
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValidationError, CatalogError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main(argv: Sequence[str] | None = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
