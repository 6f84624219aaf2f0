"""Small helpers for vertex sets stored as int bitmasks."""

from __future__ import annotations

from typing import Iterable, Iterator

# bit 62 is the highest that keeps masks positive in a signed 64-bit word
MAX_VERTICES = 63


def bit(v: int) -> int:
    return 1 << v


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_list(mask: int) -> list[int]:
    return list(iter_bits(mask))


def to_tuple(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


def popcount(mask: int) -> int:
    return mask.bit_count()


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def full_mask(n: int) -> int:
    return (1 << n) - 1


def as_mask(s: int | Iterable[int]) -> int:
    """Accept either a bitmask or an iterable of vertex ids."""
    if isinstance(s, int):
        return s
    return mask_of(s)


def lex_key(mask: int) -> tuple[int, ...]:
    """Sort key putting vertex sets in lexicographic order of their sorted members."""
    return to_tuple(mask)
