"""Numerical semigroups and their classical invariants."""

from __future__ import annotations

import heapq
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from . import _bits
from .errors import BudgetExceeded, EmptyGenerators, GcdNotOne, NotMember, Overflow

INT63 = (1 << 63) - 1
GENUS_BUDGET = 20


@dataclass(frozen=True)
class NumericalSemigroup:
    """A cofinite additive submonoid of the nonnegative integers.

    Equality and hashing use the minimal generating set only. Membership
    below the conductor is a bit table (bit ``x`` set iff ``x`` is in S);
    everything above the Frobenius number is a member.
    """

    min_gens: tuple[int, ...]
    frobenius: int = field(compare=False)
    _table: int = field(compare=False, repr=False)

    @classmethod
    def from_generators(cls, gens: Iterable[int]) -> "NumericalSemigroup":
        gens = sorted(set(int(g) for g in gens))
        if not gens:
            raise EmptyGenerators("generator list is empty")
        if gens[0] <= 0:
            raise ValueError(f"generators must be positive, got {gens[0]}")
        if 2 * gens[-1] > INT63:
            raise Overflow(f"generator {gens[-1]} does not fit in 63 bits after doubling")
        if math.gcd(*gens) != 1:
            raise GcdNotOne(f"gcd{tuple(gens)} = {math.gcd(*gens)}; complement would be infinite")
        m = gens[0]
        ap = _apery_dijkstra(m, gens[1:])
        frob = max(ap) - m
        if 2 * (frob + m) > INT63:
            raise Overflow(f"Frobenius number {frob} too large")
        digits = ["1" if x >= ap[x % m] else "0" for x in range(frob + 1)]
        table = int("".join(reversed(digits)), 2) if digits else 0
        return cls._from_table(frob, table)

    @classmethod
    def from_gaps(cls, gaps: Iterable[int]) -> "NumericalSemigroup":
        """Build S from its gap set, checking additive closure."""
        gaps = sorted(set(gaps))
        if gaps and gaps[0] <= 0:
            raise ValueError("gaps must be positive integers")
        frob = gaps[-1] if gaps else -1
        gapmask = 0
        for g in gaps:
            gapmask |= 1 << g
        table = ((1 << (frob + 1)) - 1) & ~gapmask
        for s in _bits.bits_of(table):
            if s and (table << s) & gapmask:
                raise ValueError(f"not closed under addition: {s} + S meets a gap")
        return cls._from_table(frob, table)

    @classmethod
    def naturals(cls) -> "NumericalSemigroup":
        return cls((1,), -1, 0)

    @classmethod
    def _from_mask(cls, hi: int, mask: int) -> "NumericalSemigroup":
        # mask covers [0, hi); everything >= hi is a member
        offset, cond, table = _bits.normalize(0, hi, mask)
        assert offset == 0, "0 must be a member"
        return cls._from_table(cond - 1, table)

    @classmethod
    def _from_table(cls, frob: int, table: int) -> "NumericalSemigroup":
        return cls(_minimal_generators(frob, table), frob, table)

    # -- membership ---------------------------------------------------------

    def contains(self, z: int) -> bool:
        if z < 0:
            return False
        if z > self.frobenius:
            return True
        return bool((self._table >> z) & 1)

    __contains__ = contains

    def mask(self, lo: int, hi: int) -> int:
        """Bit ``i`` set iff ``lo + i`` is in S, for ``lo <= lo + i < hi``."""
        return _bits.window(0, self.frobenius + 1, self._table, lo, hi)

    @property
    def conductor(self) -> int:
        return self.frobenius + 1

    @property
    def multiplicity(self) -> int:
        return self.min_gens[0]

    @property
    def embedding_dimension(self) -> int:
        return len(self.min_gens)

    @property
    def gaps(self) -> tuple[int, ...]:
        full = (1 << (self.frobenius + 1)) - 1
        return tuple(_bits.bits_of(full & ~self._table))

    @property
    def genus(self) -> int:
        return (self.frobenius + 1) - bin(self._table).count("1")

    def small_elements(self) -> tuple[int, ...]:
        """Members in ``[0, frobenius + 1]``."""
        return tuple(_bits.bits_of(self.mask(0, self.frobenius + 2)))

    def is_naturals(self) -> bool:
        return self.frobenius == -1

    # -- invariants ---------------------------------------------------------

    def apery(self, n: int) -> tuple[int, ...]:
        """Apéry set of ``n``, sorted ascending."""
        if n <= 0 or not self.contains(n):
            raise NotMember(f"{n} is not a nonzero element of {self}")
        out = []
        for r in range(n):
            x = r
            while not self.contains(x):
                x += n
            out.append(x)
        return tuple(sorted(out))

    def _closed_under_gens(self, lo: int, hi: int) -> int:
        # bit i set iff lo + i + g is in S for every minimal generator g
        ok = (1 << (hi - lo)) - 1
        for g in self.min_gens:
            ok &= self.mask(lo + g, hi + g)
        return ok

    def pseudo_frobenius(self) -> tuple[int, ...]:
        if self.is_naturals():
            return ()
        hi = self.frobenius + 1
        gapmask = ((1 << hi) - 1) & ~self._table
        return tuple(_bits.bits_of(gapmask & self._closed_under_gens(0, hi)))

    def type(self) -> int:
        if self.is_naturals():
            return 1
        return len(self.pseudo_frobenius())

    def is_symmetric(self) -> bool:
        f = self.frobenius
        return all(self.contains(f - x) for x in self.gaps)

    def canonical_mask(self) -> int:
        """Bits over ``[0, F + 1)`` of K(S) = {x : F - x not in S}."""
        width = self.frobenius + 1
        return ((1 << width) - 1) & ~_bits.reverse(self._table, width)

    def is_almost_symmetric(self) -> bool:
        width = self.frobenius + 1
        if width == 0:
            return True
        k = self.canonical_mask()
        return k & ~self._closed_under_gens(0, width) == 0

    def m_minus_m(self) -> "NumericalSemigroup":
        """The semigroup {z >= 0 : z + M is inside M}, i.e. S together with PF(S)."""
        if self.is_naturals():
            return self
        table = self._table
        for x in self.pseudo_frobenius():
            table |= 1 << x
        return NumericalSemigroup._from_mask(self.frobenius + 1, table)

    def effective_generators(self) -> tuple[int, ...]:
        return tuple(g for g in self.min_gens if g > self.frobenius)

    def remove_generator(self, g: int) -> "NumericalSemigroup":
        """S minus one minimal generator larger than the Frobenius number."""
        if g not in self.effective_generators():
            raise ValueError(f"{g} is not an effective generator of {self}")
        mask = self.mask(0, g + 1) & ~(1 << g)
        return NumericalSemigroup._from_table(g, mask)

    def gens_str(self) -> str:
        return ",".join(map(str, self.min_gens))

    def __str__(self) -> str:
        return f"<{self.gens_str()}>"


def _apery_dijkstra(m: int, others: list[int]) -> list[int]:
    # shortest paths on residues mod m, edge weights = generators
    dist = [0] + [None] * (m - 1)
    heap = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if d != dist[r]:
            continue
        for g in others:
            nd = d + g
            nr = nd % m
            if dist[nr] is None or nd < dist[nr]:
                dist[nr] = nd
                heapq.heappush(heap, (nd, nr))
    return dist


def _minimal_generators(frob: int, table: int) -> tuple[int, ...]:
    if frob == -1:
        return (1,)

    def member(x: int) -> bool:
        return x > frob or (x >= 0 and bool((table >> x) & 1))

    m = 1
    while not member(m):
        m += 1
    ap = []
    for r in range(1, m):
        x = r
        while not member(x):
            x += m
        ap.append(x)
    ap.sort()
    gens = [m]
    for i, w in enumerate(ap):
        if not any(member(w - v) for v in ap[:i]):
            gens.append(w)
    return tuple(sorted(gens))


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    return NumericalSemigroup.from_generators(gens)


def parse_generators(text: str) -> list[int]:
    """Parse ``"4,5,11"`` (spaces tolerated)."""
    parts = [p.strip() for p in text.split(",")]
    if not any(parts):
        raise EmptyGenerators("generator list is empty")
    try:
        return [int(p) for p in parts if p]
    except ValueError:
        raise ValueError(f"cannot parse generator list {text!r}") from None


def enumerate_by_genus(g_max: int) -> Iterator[NumericalSemigroup]:
    """Every numerical semigroup of genus <= g_max, genus by genus.

    Walks the tree whose children are obtained by removing effective
    generators, in increasing order.
    """
    if g_max > GENUS_BUDGET:
        raise BudgetExceeded(f"genus {g_max} exceeds budget {GENUS_BUDGET}")
    if g_max < 0:
        return
    level = deque([NumericalSemigroup.naturals()])
    for genus in range(g_max + 1):
        nxt: deque[NumericalSemigroup] = deque()
        for s in level:
            yield s
            if genus < g_max:
                nxt.extend(s.remove_generator(g) for g in s.effective_generators())
        level = nxt
