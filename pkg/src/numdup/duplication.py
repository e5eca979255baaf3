"""Numerical duplication: the semigroup 2S together with 2E + b."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AmbientMismatch, BNotInS, EvenB, IdealNotIntegral, Overflow
from .ideals import RelativeIdeal, ambient_ideal
from .semigroup import INT63, NumericalSemigroup

TRANSLATE_POLICIES = ("none", "auto")


@dataclass(frozen=True)
class DuplicationSpec:
    """Parameters (S, E, b) of a duplication.

    Only a = 0 is modelled; b must be an odd element of S and E must lie
    inside S (or be shifted there when ``translate_policy == "auto"``).
    """

    base: NumericalSemigroup
    ideal: RelativeIdeal
    b: int
    translate_policy: str = "auto"

    def __post_init__(self) -> None:
        if self.translate_policy not in TRANSLATE_POLICIES:
            raise ValueError(f"translate_policy must be one of {TRANSLATE_POLICIES}")
        if self.ideal.ambient != self.base:
            raise AmbientMismatch(f"ideal lives over {self.ideal.ambient}, not {self.base}")
        if self.b % 2 == 0:
            raise EvenB(f"b = {self.b} must be odd")
        if not self.base.contains(self.b):
            raise BNotInS(f"b = {self.b} is not in {self.base}")

    def resolved_ideal(self) -> RelativeIdeal:
        """The ideal actually duplicated (after auto-translation)."""
        if self.ideal.is_integral():
            return self.ideal
        if self.translate_policy == "none":
            raise IdealNotIntegral(f"{self.ideal} is not contained in {self.base}")
        return auto_translate(self.base, self.ideal)


def duplicate(spec: DuplicationSpec) -> NumericalSemigroup:
    s, b = spec.base, spec.b
    e = spec.resolved_ideal()
    # E + E + b inside S, so that the odd part times itself lands in 2S
    for x in e.min_gens:
        for y in e.min_gens:
            assert s.contains(x + y + b), (x, y, b)
    hi = 2 * (e.max_gap() + 1) + b
    if hi > INT63:
        raise Overflow(f"duplication conductor {hi} does not fit in 63 bits")
    mask = 0
    for x in range(hi):
        if x % 2 == 0:
            hit = s.contains(x // 2)
        else:
            hit = x >= b and e.contains((x - b) // 2)
        if hit:
            mask |= 1 << x
    return NumericalSemigroup._from_mask(hi, mask)


def numerical_duplication(s: NumericalSemigroup, e: RelativeIdeal, b: int | None = None,
                          translate_policy: str = "auto") -> NumericalSemigroup:
    """Shorthand for ``duplicate(DuplicationSpec(...))``; b defaults to the least odd element."""
    if b is None:
        b = default_b(s)
    return duplicate(DuplicationSpec(s, e, b, translate_policy))


def valid_b_values(s: NumericalSemigroup, count: int) -> list[int]:
    """The ``count`` smallest odd elements of S."""
    if count < 1:
        raise ValueError("count must be >= 1")
    out = []
    x = 1
    while len(out) < count:
        if s.contains(x):
            out.append(x)
        x += 2
    return out


def default_b(s: NumericalSemigroup) -> int:
    return valid_b_values(s, 1)[0]


def auto_translate(s: NumericalSemigroup, e: RelativeIdeal) -> RelativeIdeal:
    """Shift E by the least r >= 0 with r + E inside S."""
    whole = ambient_ideal(s)
    bound = s.frobenius + 1 - e.min()
    for r in range(max(bound, 0) + 1):
        if all(s.contains(r + g) for g in e.min_gens):
            shifted = e.translate(r)
            assert shifted.issubset(whole)
            return shifted
    raise AssertionError(f"no integral shift of {e} up to {bound}")
