"""Almost Gorenstein duplications from semigroups between S and M - M."""

from __future__ import annotations

from itertools import combinations

from .duplication import auto_translate
from .errors import NotIntegralShift, NotIntermediate
from .ideals import RelativeIdeal, canonical_ideal, semigroup_as_ideal
from .semigroup import NumericalSemigroup


def intermediate_semigroups(s: NumericalSemigroup) -> list[NumericalSemigroup]:
    """All additively closed V with S <= V <= M - M.

    Such V are S plus a subset of PF(S); subsets are tried by size, then
    lexicographically, so S comes first and M - M last.
    """
    pf = s.pseudo_frobenius()
    out = []
    for k in range(len(pf) + 1):
        for extra in combinations(pf, k):
            members = set(s.small_elements()) | set(extra)
            if all(x + y in members or x + y > s.frobenius for x in extra for y in members):
                out.append(NumericalSemigroup.from_gaps(set(s.gaps) - set(extra)))
    return out


def ideal_from_overring(s: NumericalSemigroup, a: NumericalSemigroup,
                        r: int | None = None) -> RelativeIdeal:
    """r + (K - A), with r the least integral shift unless given."""
    if a not in intermediate_semigroups(s):
        raise NotIntermediate(f"{a} is not between {s} and {s.m_minus_m()}")
    return _overring_ideal(s, a, r)


def _overring_ideal(s: NumericalSemigroup, a: NumericalSemigroup, r: int | None) -> RelativeIdeal:
    dual = canonical_ideal(s).colon(semigroup_as_ideal(s, a))
    if r is None:
        return auto_translate(s, dual)
    shifted = dual.translate(r)
    if not shifted.is_integral():
        raise NotIntegralShift(f"{r} + {dual} is not contained in {s}")
    return shifted


def ag_family(s: NumericalSemigroup) -> list[tuple[NumericalSemigroup, RelativeIdeal, int]]:
    """(A, E, expected type 2|A minus S| + 1) for every intermediate A."""
    out = []
    for a in intermediate_semigroups(s):
        out.append((a, _overring_ideal(s, a, None), 2 * (s.genus - a.genus) + 1))
    return out
