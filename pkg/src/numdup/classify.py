"""Decision procedures for duplications, read off (S, E) alone.

Every function here works on the base semigroup and the ideal; none of
them builds the duplication except ``dup_canonical_model``, which needs it
as the ambient of its result. Ground truth computed on the duplication
itself lives in ``numdup.oracle``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .duplication import DuplicationSpec, duplicate
from .errors import ImproperSemigroup, InternalMismatch, NotAlmostGorenstein
from .ideals import (
    RelativeIdeal,
    ambient_ideal,
    canonical_ideal,
    ideal_from_members,
    lambda_between,
    maximal_ideal,
    semigroup_as_ideal,
)
from .semigroup import NumericalSemigroup


@dataclass(frozen=True)
class ClassificationReport:
    gorenstein: bool
    almost_gorenstein: bool
    complete_intersection: bool
    type_formula: int
    type_ag: int | None
    z: int
    ring_witness: NumericalSemigroup | None
    bounds_ok: bool

    def __post_init__(self) -> None:
        if self.gorenstein and not self.almost_gorenstein:
            raise InternalMismatch("Gorenstein but not almost Gorenstein")
        if self.complete_intersection and not self.gorenstein:
            raise InternalMismatch("complete intersection but not Gorenstein")
        if self.almost_gorenstein and self.type_ag != self.type_formula:
            raise InternalMismatch(f"type routes differ: {self.type_formula} vs {self.type_ag}")


def is_gorenstein_dup(s: NumericalSemigroup, e: RelativeIdeal) -> bool:
    return e.is_translate_of(canonical_ideal(s))


def dup_type_formula(s: NumericalSemigroup, e: RelativeIdeal) -> int:
    """|((E-E) & (S-M)) minus S| + |(E-M) minus E|."""
    if s.is_naturals():
        return 1
    whole, m = ambient_ideal(s), maximal_ideal(s)
    first = e.colon(e).intersect(whole.colon(m))
    second = e.colon(m)
    return lambda_between(first, whole) + lambda_between(second, e)


def _dual_and_z(e: RelativeIdeal) -> tuple[RelativeIdeal, int]:
    d = e.dual()
    return d, d.min()


def is_ag_conditions(s: NumericalSemigroup, e: RelativeIdeal) -> bool:
    """E + E' = z + E and z + M = M + E', where E' is the dual and z = min(E')."""
    d, z = _dual_and_z(e)
    m = maximal_ideal(s)
    return e.add(d) == e.translate(z) and m.translate(z) == m.add(d)


def ring_witness(s: NumericalSemigroup, e: RelativeIdeal) -> NumericalSemigroup | None:
    """E' - z as a numerical semigroup, or None when it is not additively closed."""
    d, z = _dual_and_z(e)
    w = d.translate(-z)
    if not ambient_ideal(s).issubset(w):
        raise InternalMismatch(f"S is not inside {w}")
    if not w.add(w).issubset(w):
        return None
    top = w.max_gap() + 1
    return NumericalSemigroup._from_mask(top, w.mask(0, top))


def is_ag_ring_route(s: NumericalSemigroup, e: RelativeIdeal) -> tuple[bool, NumericalSemigroup | None]:
    w = ring_witness(s, e)
    if w is None:
        return False, None
    if not semigroup_as_ideal(s, w).issubset(semigroup_as_ideal(s, s.m_minus_m())):
        return False, None
    return True, w


def dup_type_ag(s: NumericalSemigroup, e: RelativeIdeal) -> int:
    """2|(E' - z) minus S| + 1, cross-checked against 2|K minus (z + E)| + 1."""
    if not is_ag_conditions(s, e):
        raise NotAlmostGorenstein(f"duplication of {e} is not almost Gorenstein")
    d, z = _dual_and_z(e)
    whole = ambient_ideal(s)
    via_ring = 2 * lambda_between(d.translate(-z), whole) + 1
    via_canonical = 2 * lambda_between(canonical_ideal(s), e.translate(z)) + 1
    if via_ring != via_canonical:
        raise InternalMismatch(f"type lengths differ: {via_ring} vs {via_canonical}")
    return via_ring


def classify_max_ideal_dup(s: NumericalSemigroup) -> tuple[bool, int | None]:
    if s.is_naturals():
        raise ImproperSemigroup("the maximal ideal statement needs S different from N")
    ag = s.is_almost_symmetric()
    if is_ag_conditions(s, maximal_ideal(s)) != ag:
        raise InternalMismatch(f"maximal-ideal route disagrees with almost symmetry of {s}")
    return ag, (2 * s.type() + 1 if ag else None)


def dup_canonical_model(s: NumericalSemigroup, e: RelativeIdeal, b: int) -> RelativeIdeal:
    """Values of the canonical ideal of the duplication built from (E', K).

    Even part 2(E' - z), odd part 2(K - z) + b, as an ideal of the duplication.
    """
    spec = DuplicationSpec(s, e, b)
    e = spec.resolved_ideal()
    t = duplicate(spec)
    d, z = _dual_and_z(e)
    k = canonical_ideal(s)
    lo = min(2 * (d.min() - z), 2 * (k.min() - z) + b)
    hi = max(2 * (d.max_gap() + 1 - z), 2 * (k.max_gap() + 1 - z) + b)

    def member(x: int) -> bool:
        if x % 2 == 0:
            return d.contains(x // 2 + z)
        return k.contains((x - b) // 2 + z)

    return ideal_from_members(t, lo, hi, member)


@lru_cache(maxsize=None)
def _gluing(gens: tuple[int, ...]) -> bool:
    if gens == (1,):
        return True
    first, rest = gens[0], gens[1:]
    # first generator always goes to the left block so each split is tried once
    for k in range(len(rest)):
        for picked in combinations(rest, k):
            left = (first,) + picked
            right = tuple(g for g in rest if g not in picked)
            d1, d2 = math.gcd(*left), math.gcd(*right)
            if math.gcd(d1, d2) != 1:
                continue
            s1 = NumericalSemigroup.from_generators(g // d1 for g in left)
            s2 = NumericalSemigroup.from_generators(g // d2 for g in right)
            if not (s2.contains(d1) and s1.contains(d2)):
                continue
            if is_ci_semigroup(s1) and is_ci_semigroup(s2):
                return True
    return False


def is_ci_semigroup(s: NumericalSemigroup, prefilter: bool = True) -> bool:
    """Complete intersection test by recursive gluing of the minimal generators.

    With ``prefilter`` the search is skipped for non-symmetric S, which are
    never complete intersections.
    """
    if prefilter and not s.is_symmetric():
        return False
    return _gluing(s.min_gens)


def is_ci_dup(s: NumericalSemigroup, e: RelativeIdeal) -> bool:
    return is_ci_semigroup(s) and e.is_principal()


def full_report(s: NumericalSemigroup, e: RelativeIdeal, b: int) -> ClassificationReport:
    e = DuplicationSpec(s, e, b).resolved_ideal()
    _, z = _dual_and_z(e)
    ag = is_ag_conditions(s, e)
    type_formula = dup_type_formula(s, e)
    type_ag = dup_type_ag(s, e) if ag else None
    bounds_ok = (not ag) or (type_formula % 2 == 1 and 1 <= type_formula <= 2 * s.type() + 1)
    return ClassificationReport(
        gorenstein=is_gorenstein_dup(s, e),
        almost_gorenstein=ag,
        complete_intersection=is_ci_dup(s, e),
        type_formula=type_formula,
        type_ag=type_ag,
        z=z,
        ring_witness=ring_witness(s, e),
        bounds_ok=bounds_ok,
    )
