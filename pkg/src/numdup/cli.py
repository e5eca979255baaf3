"""Command-line interface.

Exit codes: 0 success, 1 usage or input error, 2 mathematical mismatch
between routes that must agree (a bug signal).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import classify, construct, oracle
from .duplication import DuplicationSpec, auto_translate, default_b, duplicate
from .errors import InternalMismatch, NumdupError
from .ideals import enumerate_normalized_ideals, ideal_from_generators
from .semigroup import NumericalSemigroup, parse_generators


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        raise UsageError(message)


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _csv(values) -> str:
    return ",".join(map(str, values))


def _semigroup(text: str) -> NumericalSemigroup:
    return NumericalSemigroup.from_generators(parse_generators(text))


def _emit(args: argparse.Namespace, payload: Any, rows: list[tuple[str, Any]]) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        width = max(len(k) for k, _ in rows)
        for key, value in rows:
            print(f"{key:<{width}}  {value}")


def _spec(args: argparse.Namespace, s: NumericalSemigroup) -> DuplicationSpec:
    e = ideal_from_generators(s, parse_generators(args.ideal))
    b = args.b if args.b is not None else default_b(s)
    return DuplicationSpec(s, e, b, args.translate)


def report_dict(s: NumericalSemigroup, spec: DuplicationSpec) -> dict[str, Any]:
    """Classification of one duplication in the stable JSON layout."""
    e = spec.resolved_ideal()
    t = duplicate(spec)
    rep = classify.full_report(s, e, spec.b)
    return {
        "semigroup": list(s.min_gens),
        "ideal": list(e.min_gens),
        "b": spec.b,
        "duplication": list(t.min_gens),
        "frobenius": t.frobenius,
        "genus": t.genus,
        "type": rep.type_formula,
        "gorenstein": rep.gorenstein,
        "almost_gorenstein": rep.almost_gorenstein,
        "complete_intersection": rep.complete_intersection,
        "type_routes": {"formula": rep.type_formula, "ag": rep.type_ag, "direct": t.type()},
        "z": rep.z,
        "ring_witness": list(rep.ring_witness.min_gens) if rep.ring_witness else None,
        "bounds_ok": rep.bounds_ok,
    }


def cmd_info(args: argparse.Namespace) -> int:
    s = _semigroup(args.sgp)
    m = s.multiplicity
    payload = {
        "min_gens": list(s.min_gens),
        "gaps": list(s.gaps),
        "frobenius": s.frobenius,
        "genus": s.genus,
        "multiplicity": m,
        "apery": list(s.apery(m)),
        "pseudo_frobenius": list(s.pseudo_frobenius()),
        "type": s.type(),
        "symmetric": s.is_symmetric(),
        "almost_symmetric": s.is_almost_symmetric(),
        "complete_intersection": classify.is_ci_semigroup(s),
    }
    rows = [
        ("min_gens", _csv(s.min_gens)),
        ("gaps", _csv(s.gaps) or "-"),
        ("frobenius", s.frobenius),
        ("genus", s.genus),
        ("multiplicity", m),
        (f"apery({m})", _csv(payload["apery"])),
        ("pseudo_frobenius", _csv(payload["pseudo_frobenius"]) or "-"),
        ("type", payload["type"]),
        ("symmetric", _yn(payload["symmetric"])),
        ("almost_symmetric", _yn(payload["almost_symmetric"])),
        ("complete_intersection", _yn(payload["complete_intersection"])),
    ]
    _emit(args, payload, rows)
    return 0


def cmd_dup(args: argparse.Namespace) -> int:
    s = _semigroup(args.sgp)
    spec = _spec(args, s)
    e = spec.resolved_ideal()
    t = duplicate(spec)
    payload = {
        "semigroup": list(s.min_gens), "ideal": list(e.min_gens), "b": spec.b,
        "translate": spec.translate_policy, "duplication": list(t.min_gens),
        "frobenius": t.frobenius, "genus": t.genus,
    }
    rows = [
        ("semigroup", _csv(s.min_gens)),
        ("ideal", _csv(e.min_gens)),
        ("b", spec.b),
        ("translate", spec.translate_policy),
        ("generators", _csv(t.min_gens)),
        ("frobenius", t.frobenius),
        ("genus", t.genus),
    ]
    _emit(args, payload, rows)
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    s = _semigroup(args.sgp)
    spec = _spec(args, s)
    payload = report_dict(s, spec)
    routes = payload["type_routes"]
    rows = [
        ("semigroup", _csv(payload["semigroup"])),
        ("ideal", _csv(payload["ideal"])),
        ("b", payload["b"]),
        ("translate", spec.translate_policy),
        ("duplication", _csv(payload["duplication"])),
        ("frobenius", payload["frobenius"]),
        ("genus", payload["genus"]),
        ("type", payload["type"]),
        ("type_routes", f"formula={routes['formula']} ag={routes['ag']} direct={routes['direct']}"),
        ("gorenstein", _yn(payload["gorenstein"])),
        ("almost_gorenstein", _yn(payload["almost_gorenstein"])),
        ("complete_intersection", _yn(payload["complete_intersection"])),
        ("z", payload["z"]),
        ("ring_witness", _csv(payload["ring_witness"]) if payload["ring_witness"] else "-"),
        ("bounds_ok", _yn(payload["bounds_ok"])),
    ]
    _emit(args, payload, rows)
    if args.cross_check:
        agreement = oracle.verify_duplication(s, spec.resolved_ideal(), spec.b)
        if agreement.mismatches:
            print(json.dumps(agreement.to_dict(), indent=2), file=sys.stderr)
            return 2
        print(f"cross-check: agree ({len(agreement.checks)} properties)", file=sys.stderr)
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    s = _semigroup(args.sgp)
    b = args.b if args.b is not None else default_b(s)
    rows = []
    for normalized in enumerate_normalized_ideals(s):
        e = auto_translate(s, normalized)
        entry = report_dict(s, DuplicationSpec(s, e, b))
        entry["normalized_ideal"] = list(normalized.min_gens)
        rows.append(entry)
    rows.sort(key=lambda r: r["type"])
    if args.format == "json":
        print(json.dumps(rows, indent=2))
        return 0
    print("\t".join(["normalized_ideal", "ideal", "b", "type", "gorenstein",
                     "almost_gorenstein", "complete_intersection", "duplication"]))
    for r in rows:
        print("\t".join([_csv(r["normalized_ideal"]), _csv(r["ideal"]), str(r["b"]), str(r["type"]),
                         _yn(r["gorenstein"]), _yn(r["almost_gorenstein"]),
                         _yn(r["complete_intersection"]), _csv(r["duplication"])]))
    return 0


def cmd_construct(args: argparse.Namespace) -> int:
    s = _semigroup(args.sgp)
    b = default_b(s)
    if args.all:
        family = construct.ag_family(s)
    else:
        a = _semigroup(args.overring)
        e = construct.ideal_from_overring(s, a)
        family = [(a, e, 2 * (s.genus - a.genus) + 1)]
    rows = []
    for a, e, expected in family:
        t = duplicate(DuplicationSpec(s, e, b))
        rows.append({
            "overring": list(a.min_gens), "ideal": list(e.min_gens), "b": b,
            "expected_type": expected, "formula_type": classify.dup_type_formula(s, e),
            "direct_type": t.type(), "almost_gorenstein": classify.is_ag_conditions(s, e),
        })
    if args.format == "json":
        print(json.dumps(rows, indent=2))
    else:
        print("\t".join(["overring", "ideal", "b", "expected_type", "formula_type",
                         "direct_type", "almost_gorenstein"]))
        for r in rows:
            print("\t".join([_csv(r["overring"]), _csv(r["ideal"]), str(r["b"]),
                             str(r["expected_type"]), str(r["formula_type"]),
                             str(r["direct_type"]), _yn(r["almost_gorenstein"])]))
    bad = [r for r in rows if not (r["almost_gorenstein"]
                                   and r["expected_type"] == r["formula_type"] == r["direct_type"])]
    return 2 if bad else 0


def cmd_verify(args: argparse.Namespace) -> int:
    summary = oracle.sweep(args.genus_max, args.b_count, args.ideal_limit, jobs=args.jobs)
    payload = summary.to_dict()
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        hist = " ".join(f"{k}:{v}" for k, v in payload["type_histogram"].items())
        rows = [
            ("genus_max", summary.genus_max),
            ("b_count", summary.b_count),
            ("ideal_limit", summary.ideal_limit if summary.ideal_limit is not None else "-"),
            ("semigroups", summary.semigroups),
            ("ideals", summary.ideals),
            ("duplications", summary.duplications),
            ("mismatches", len(summary.mismatches)),
            ("type_histogram", hist),
            ("runtime_s", f"{summary.runtime:.2f}"),
        ]
        _emit(args, payload, rows)
        for m in summary.mismatches[:20]:
            print(json.dumps(m), file=sys.stderr)
    return 2 if summary.mismatches else 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="numdup", description="Numerical duplications and their classification.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_format(p: argparse.ArgumentParser, choices=("table", "json")) -> None:
        p.add_argument("--format", choices=choices, default=choices[0])

    def add_dup_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--sgp", required=True, help="generators, e.g. 4,5,11")
        p.add_argument("--ideal", required=True, help="ideal generators, e.g. 5,8")
        p.add_argument("--b", type=int, default=None, help="odd element of S (default: least)")
        p.add_argument("--translate", choices=("auto", "none"), default="auto")

    p = sub.add_parser("info", help="invariants of a semigroup")
    p.add_argument("--sgp", required=True)
    add_format(p)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("dup", help="build a duplication")
    add_dup_args(p)
    add_format(p)
    p.set_defaults(func=cmd_dup)

    p = sub.add_parser("classify", help="classify a duplication")
    add_dup_args(p)
    p.add_argument("--cross-check", action="store_true", help="compare with direct computation")
    add_format(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("enumerate", help="classify the duplication of every ideal up to translation")
    p.add_argument("--sgp", required=True)
    p.add_argument("--b", type=int, default=None)
    add_format(p, ("tsv", "json"))
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("construct", help="almost Gorenstein family from intermediate semigroups")
    p.add_argument("--sgp", required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--overring", help="generators of A with S <= A <= M - M")
    group.add_argument("--all", action="store_true")
    add_format(p, ("tsv", "json"))
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="corpus sweep against direct computation")
    p.add_argument("--genus-max", type=int, required=True)
    p.add_argument("--b-count", type=int, default=2)
    p.add_argument("--ideal-limit", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    add_format(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except InternalMismatch as exc:
        print(f"error: InternalMismatch: {exc}", file=sys.stderr)
        return 2
    except (NumdupError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
