"""Index subsets of ``range(n)`` stored as Python ints (bit i = element i)."""

from __future__ import annotations

from typing import Iterable, Iterator


def from_indices(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        if i < 0:
            raise ValueError(f"negative index {i}")
        mask |= 1 << i
    return mask


def indices(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def full(n: int) -> int:
    return (1 << n) - 1


def size(mask: int) -> int:
    return bin(mask).count("1")


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def sort_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Canonical order: by size, then lexicographically by sorted indices."""
    return size(mask), indices(mask)


def lex_key(mask: int) -> tuple[int, ...]:
    return indices(mask)
