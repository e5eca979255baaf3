"""Relative ideals of a numerical semigroup.

A relative ideal E of S is a subset of Z, bounded below, with E + S inside
E. It is finitely generated: E is the union of g + S over its minimal
generators g, which are pairwise S-incomparable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from . import _bits
from .errors import AmbientMismatch, EmptyGenerators, NotAnIdeal, NotNested
from .semigroup import NumericalSemigroup


@dataclass(frozen=True)
class RelativeIdeal:
    ambient: NumericalSemigroup
    min_gens: tuple[int, ...]
    _offset: int = field(compare=False, repr=False)
    _cond: int = field(compare=False, repr=False)
    _table: int = field(compare=False, repr=False)

    @classmethod
    def _from_mask(cls, s: NumericalSemigroup, lo: int, hi: int, mask: int,
                   check: bool = False) -> "RelativeIdeal":
        offset, cond, table = _bits.normalize(lo, hi, mask)
        top = cond + s.min_gens[-1]
        members = _bits.window(offset, cond, table, offset, top)
        full = (1 << (top - offset)) - 1
        shifted = 0
        for n in s.min_gens:
            shifted |= (members << n) & full
        if check and shifted & ~members:
            raise NotAnIdeal("member set is not stable under adding S")
        gens = tuple(_bits.bits_of(members & ~shifted, offset))
        return cls(s, gens, offset, cond, table)

    # -- membership ---------------------------------------------------------

    def contains(self, z: int) -> bool:
        if z < self._offset:
            return False
        if z >= self._cond:
            return True
        return bool((self._table >> (z - self._offset)) & 1)

    __contains__ = contains

    def mask(self, lo: int, hi: int) -> int:
        return _bits.window(self._offset, self._cond, self._table, lo, hi)

    def min(self) -> int:
        return self._offset

    def max_gap(self) -> int:
        return self._cond - 1

    def small_elements(self) -> tuple[int, ...]:
        """Members in ``[min, max_gap + 1]``."""
        return tuple(_bits.bits_of(self.mask(self._offset, self._cond + 1), self._offset))

    def is_principal(self) -> bool:
        return len(self.min_gens) == 1

    def is_integral(self) -> bool:
        return self.issubset(ambient_ideal(self.ambient))

    def _span(self, other: "RelativeIdeal") -> tuple[int, int]:
        _same_ambient(self, other)
        return min(self._offset, other._offset), max(self._cond, other._cond)

    def issubset(self, other: "RelativeIdeal") -> bool:
        lo, hi = self._span(other)
        return self.mask(lo, hi) & ~other.mask(lo, hi) == 0

    def __le__(self, other: "RelativeIdeal") -> bool:
        return self.issubset(other)

    # -- arithmetic ---------------------------------------------------------

    def add(self, other: "RelativeIdeal") -> "RelativeIdeal":
        """E + F."""
        _same_ambient(self, other)
        lo = self._offset + other._offset
        hi = self._cond + other._offset
        mask = 0
        for f in other.min_gens:
            mask |= self.mask(lo - f, hi - f)
        return RelativeIdeal._from_mask(self.ambient, lo, hi, mask)

    __add__ = add

    def colon(self, other: "RelativeIdeal") -> "RelativeIdeal":
        """E - F = {z : z + F inside E}."""
        _same_ambient(self, other)
        lo = self._offset - other._offset
        hi = self._cond - other._offset
        mask = (1 << max(hi - lo, 0)) - 1
        for f in other.min_gens:
            mask &= self.mask(lo + f, hi + f)
        return RelativeIdeal._from_mask(self.ambient, lo, hi, mask)

    def intersect(self, other: "RelativeIdeal") -> "RelativeIdeal":
        lo, hi = self._span(other)
        return RelativeIdeal._from_mask(self.ambient, lo, hi, self.mask(lo, hi) & other.mask(lo, hi))

    def dual(self) -> "RelativeIdeal":
        return canonical_ideal(self.ambient).colon(self)

    def translate(self, r: int) -> "RelativeIdeal":
        return RelativeIdeal(self.ambient, tuple(g + r for g in self.min_gens),
                             self._offset + r, self._cond + r, self._table)

    def normalize(self) -> "RelativeIdeal":
        return self.translate(-self._offset)

    def is_translate_of(self, other: "RelativeIdeal") -> bool:
        _same_ambient(self, other)
        return self.normalize() == other.normalize()

    def gens_str(self) -> str:
        return ",".join(map(str, self.min_gens))

    def __str__(self) -> str:
        return f"{{{self.gens_str()}}}+{self.ambient}"


def _same_ambient(a: RelativeIdeal, b: RelativeIdeal) -> None:
    if a.ambient != b.ambient:
        raise AmbientMismatch(f"ideals over {a.ambient} and {b.ambient}")


def ideal_from_generators(s: NumericalSemigroup, gens: Iterable[int]) -> RelativeIdeal:
    gens = sorted(set(int(g) for g in gens))
    if not gens:
        raise EmptyGenerators("ideal needs at least one generator")
    lo, hi = gens[0], gens[-1] + s.frobenius + 1
    mask = 0
    for g in gens:
        mask |= s.mask(lo - g, hi - g)
    return RelativeIdeal._from_mask(s, lo, hi, mask)


def ideal_from_members(s: NumericalSemigroup, lo: int, hi: int,
                       member: Callable[[int], bool]) -> RelativeIdeal:
    """Ideal whose members in ``[lo, hi)`` are given by ``member``; all z >= hi belong.

    Raises NotAnIdeal when the resulting set is not S-stable.
    """
    mask = 0
    for i, z in enumerate(range(lo, hi)):
        if member(z):
            mask |= 1 << i
    return RelativeIdeal._from_mask(s, lo, hi, mask, check=True)


def ambient_ideal(s: NumericalSemigroup) -> RelativeIdeal:
    """S viewed as an ideal of itself."""
    return RelativeIdeal(s, (0,), 0, s.frobenius + 1, s.mask(0, s.frobenius + 1))


def maximal_ideal(s: NumericalSemigroup) -> RelativeIdeal:
    return ideal_from_generators(s, s.min_gens)


def semigroup_as_ideal(s: NumericalSemigroup, over: NumericalSemigroup) -> RelativeIdeal:
    """An oversemigroup S <= A viewed as a relative ideal of S."""
    hi = over.frobenius + 1
    result = RelativeIdeal._from_mask(s, 0, hi, over.mask(0, hi), check=True)
    if not ambient_ideal(s).issubset(result):
        raise NotAnIdeal(f"{over} does not contain {s}")
    return result


def canonical_ideal(s: NumericalSemigroup) -> RelativeIdeal:
    """K(S) = {x : F - x not in S}, normalized so that S <= K <= N."""
    width = s.frobenius + 1
    return RelativeIdeal._from_mask(s, 0, width, s.canonical_mask())


def lambda_between(x: RelativeIdeal, y: RelativeIdeal) -> int:
    """|X minus Y| for Y inside X."""
    lo, hi = x._span(y)
    xm, ym = x.mask(lo, hi), y.mask(lo, hi)
    if ym & ~xm:
        raise NotNested(f"{y} is not contained in {x}")
    return bin(xm & ~ym).count("1")


def enumerate_normalized_ideals(s: NumericalSemigroup) -> Iterator[RelativeIdeal]:
    """Every ideal E with min(E) = 0 and S <= E <= N, once each.

    E is S together with a gap subset T closed under adding M; the subsets
    come out in lexicographic order of their sorted tuples.
    """
    gaps = s.gaps
    index = {g: i for i, g in enumerate(gaps)}
    # up[i]: bitmask (over gap indices) of the gaps in gaps[i] + S
    up = []
    for g in gaps:
        m = 0
        for h in gaps:
            if h >= g and s.contains(h - g):
                m |= 1 << index[h]
        up.append(m)
    base = s.mask(0, s.frobenius + 1)

    def build(chosen: int) -> RelativeIdeal:
        mask = base
        for i in _bits.bits_of(chosen):
            mask |= 1 << gaps[i]
        return RelativeIdeal._from_mask(s, 0, s.frobenius + 1, mask)

    def walk(chosen: int, required: int, last: int) -> Iterator[RelativeIdeal]:
        if required & ~chosen == 0:
            yield build(chosen)
        for j in range(last + 1, len(gaps)):
            # a required gap below j that was skipped can never be added
            if required & ~chosen & ((1 << j) - 1):
                break
            yield from walk(chosen | (1 << j), required | up[j], j)

    yield from walk(0, 0, -1)
