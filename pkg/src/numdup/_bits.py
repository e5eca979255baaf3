"""Cofinite subsets of the integers packed into Python ints.

A cofinite-above set is stored as ``(offset, cond, table)``: nothing below
``offset`` is a member, everything from ``cond`` on is a member, and bit
``i`` of ``table`` says whether ``offset + i`` is a member for
``offset <= offset + i < cond``.  The table never has bits at or above
``cond - offset``.
"""

from __future__ import annotations


def window(offset: int, cond: int, table: int, lo: int, hi: int) -> int:
    """Membership mask of ``[lo, hi)``: bit ``i`` set iff ``lo + i`` is a member."""
    n = hi - lo
    if n <= 0:
        return 0
    full = (1 << n) - 1
    shift = lo - offset
    part = table >> shift if shift >= 0 else table << -shift
    k = cond - lo
    if k <= 0:
        tail = full
    elif k >= n:
        tail = 0
    else:
        tail = full ^ ((1 << k) - 1)
    return (part & full) | tail


def normalize(lo: int, hi: int, mask: int) -> tuple[int, int, int]:
    """Turn a window mask (everything >= hi a member) into ``(offset, cond, table)``."""
    n = hi - lo
    full = (1 << n) - 1 if n > 0 else 0
    mask &= full
    if mask == 0:
        return hi, hi, 0
    offset = lo + ((mask & -mask).bit_length() - 1)
    gaps = ~mask & full
    cond = max(offset, lo + gaps.bit_length())
    table = (mask >> (offset - lo)) & ((1 << (cond - offset)) - 1)
    return offset, cond, table


def bits_of(mask: int, base: int = 0) -> list[int]:
    """Positions of set bits, shifted by ``base``."""
    out = []
    while mask:
        low = mask & -mask
        out.append(base + low.bit_length() - 1)
        mask ^= low
    return out


def reverse(mask: int, width: int) -> int:
    if width <= 0:
        return 0
    return int(format(mask, f"0{width}b")[::-1], 2)
