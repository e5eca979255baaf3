"""Ground truth computed on the duplication semigroup itself, plus corpus sweeps.

The ``direct_*`` functions look only at the semigroup handed to them and use
plain set arithmetic, independent of the bit-table code in
``numdup.semigroup``. Nothing here feeds back into ``numdup.classify``.
"""

from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any

from . import classify
from .duplication import DuplicationSpec, auto_translate, duplicate, valid_b_values
from .errors import BudgetExceeded
from .ideals import RelativeIdeal, canonical_ideal, enumerate_normalized_ideals
from .semigroup import NumericalSemigroup, enumerate_by_genus

SWEEP_GENUS_BUDGET = 10


def _elements(t: NumericalSemigroup) -> set[int]:
    return {x for x in range(t.frobenius + 2) if t.contains(x)}


def direct_type(t: NumericalSemigroup) -> int:
    f = t.frobenius
    if f == -1:
        return 1
    members = _elements(t)
    nonzero = [m for m in members if m]
    pf = [x for x in range(1, f + 1)
          if x not in members and all(x + m in members or x + m > f for m in nonzero)]
    return len(pf)


def direct_symmetric(t: NumericalSemigroup) -> bool:
    f = t.frobenius
    members = _elements(t)
    return all((x in members) != (f - x in members) for x in range(f + 1))


def direct_canonical(t: NumericalSemigroup) -> set[int]:
    """Members of K(T) in [0, F]; everything above F belongs too."""
    f = t.frobenius
    members = _elements(t)
    return {x for x in range(f + 1) if f - x not in members}


def direct_almost_symmetric(t: NumericalSemigroup) -> bool:
    f = t.frobenius
    members = _elements(t)
    nonzero = [m for m in members if m]
    return all(k + m in members or k + m > f
               for k in direct_canonical(t) for m in nonzero)


@dataclass
class AgreementReport:
    semigroup: tuple[int, ...]
    ideal: tuple[int, ...]
    b: int
    checks: dict[str, dict[str, Any]]

    @property
    def mismatches(self) -> list[str]:
        return [name for name, routes in self.checks.items()
                if len({repr(v) for v in routes.values()}) > 1]

    @property
    def verdict(self) -> str:
        return "mismatch" if self.mismatches else "agree"

    def to_dict(self) -> dict[str, Any]:
        return {
            "semigroup": list(self.semigroup),
            "ideal": list(self.ideal),
            "b": self.b,
            "checks": {k: {r: _jsonable(v) for r, v in routes.items()}
                       for k, routes in self.checks.items()},
            "verdict": self.verdict,
            "mismatches": self.mismatches,
        }


def _jsonable(v: Any) -> Any:
    if isinstance(v, tuple):
        return [_jsonable(x) for x in v]
    return v


def verify_duplication(s: NumericalSemigroup, e: RelativeIdeal, b: int,
                       report: classify.ClassificationReport | None = None) -> AgreementReport:
    """Compare theorem routes on (S, E) with direct values on the duplication."""
    spec = DuplicationSpec(s, e, b)
    e = spec.resolved_ideal()
    t = duplicate(spec)
    if report is None:
        report = classify.full_report(s, e, b)
    ring_ag, _ = classify.is_ag_ring_route(s, e)

    d_type = direct_type(t)
    d_as = direct_almost_symmetric(t)
    type_routes = {"theorem": report.type_formula, "direct": d_type}
    if report.type_ag is not None:
        type_routes["ring"] = report.type_ag

    model = classify.dup_canonical_model(s, e, b).normalize()
    f = t.frobenius
    model_view = (model.max_gap(), tuple(x for x in range(f + 2) if model.contains(x)))
    k_t = direct_canonical(t)
    direct_view = (f, tuple(x for x in range(f + 2) if x in k_t or x > f))

    checks = {
        "type": type_routes,
        "gorenstein": {"theorem": report.gorenstein, "direct": direct_symmetric(t)},
        "almost_gorenstein": {"theorem": report.almost_gorenstein, "ring": ring_ag, "direct": d_as},
        "complete_intersection": {"theorem": report.complete_intersection,
                                  "direct": classify.is_ci_semigroup(t)},
        "canonical_model": {"theorem": model_view, "direct": direct_view},
        "frobenius": {"theorem": 2 * e.max_gap() + b, "direct": f},
        "type_bound": {"theorem": report.bounds_ok,
                       "direct": (not d_as) or (d_type % 2 == 1 and d_type <= 2 * s.type() + 1)},
    }
    return AgreementReport(s.min_gens, e.min_gens, b, checks)


@dataclass
class SweepSummary:
    genus_max: int
    b_count: int
    ideal_limit: int | None
    semigroups: int = 0
    ideals: int = 0
    duplications: int = 0
    mismatches: list[dict[str, Any]] = field(default_factory=list)
    type_histogram: Counter = field(default_factory=Counter)
    runtime: float = 0.0

    def merge(self, other: "SweepSummary") -> None:
        self.semigroups += other.semigroups
        self.ideals += other.ideals
        self.duplications += other.duplications
        self.mismatches.extend(other.mismatches)
        self.type_histogram.update(other.type_histogram)

    def to_dict(self, runtime: bool = True) -> dict[str, Any]:
        out = {
            "genus_max": self.genus_max,
            "b_count": self.b_count,
            "ideal_limit": self.ideal_limit,
            "semigroups": self.semigroups,
            "ideals": self.ideals,
            "duplications": self.duplications,
            "mismatches": self.mismatches,
            "type_histogram": {str(k): self.type_histogram[k] for k in sorted(self.type_histogram)},
        }
        if runtime:
            out["runtime"] = round(self.runtime, 3)
        return out


def _sweep_one(args: tuple[NumericalSemigroup, int, int | None]) -> SweepSummary:
    s, b_count, ideal_limit = args
    part = SweepSummary(genus_max=-1, b_count=b_count, ideal_limit=ideal_limit, semigroups=1)
    bs = valid_b_values(s, b_count)
    for n, normalized in enumerate(enumerate_normalized_ideals(s)):
        if ideal_limit is not None and n >= ideal_limit:
            break
        e = auto_translate(s, normalized)
        part.ideals += 1
        report = classify.full_report(s, e, bs[0])
        seen = {}
        for b in bs:
            ag = verify_duplication(s, e, b, report)
            part.duplications += 1
            part.type_histogram[ag.checks["type"]["direct"]] += 1
            if ag.mismatches:
                part.mismatches.append(ag.to_dict())
            seen[b] = tuple(ag.checks[k]["direct"] for k in
                            ("type", "gorenstein", "almost_gorenstein", "complete_intersection"))
        if len(set(seen.values())) > 1:
            part.mismatches.append({
                "semigroup": list(s.min_gens), "ideal": list(e.min_gens),
                "property": "b_independence", "direct": {str(b): list(v) for b, v in seen.items()},
            })
    return part


def corpus(genus_max: int) -> list[NumericalSemigroup]:
    return list(enumerate_by_genus(genus_max))


def sweep(genus_max: int, b_count: int = 2, ideal_limit: int | None = None,
          jobs: int = 1, budget: int = SWEEP_GENUS_BUDGET) -> SweepSummary:
    """Run verify_duplication over every semigroup of genus <= genus_max,
    every normalized ideal (shifted into S) and the b_count smallest odd b."""
    if genus_max > budget:
        raise BudgetExceeded(f"genus_max {genus_max} exceeds sweep budget {budget}")
    start = time.perf_counter()
    summary = SweepSummary(genus_max=genus_max, b_count=b_count, ideal_limit=ideal_limit)
    work = [(s, b_count, ideal_limit) for s in enumerate_by_genus(genus_max)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_sweep_one, work, chunksize=4))
    else:
        parts = [_sweep_one(w) for w in work]
    for part in parts:
        summary.merge(part)
    summary.runtime = time.perf_counter() - start
    return summary


def canonical_model_agrees(s: NumericalSemigroup, e: RelativeIdeal, b: int) -> bool:
    t = duplicate(DuplicationSpec(s, e, b))
    return classify.dup_canonical_model(s, e, b).normalize() == canonical_ideal(t).normalize()
