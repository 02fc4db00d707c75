"""Vertex sets as Python integers (bit i set means vertex i is present)."""

from __future__ import annotations

from typing import Iterable, Iterator, Union

VertexLike = Union[int, Iterable[int]]


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def as_mask(vs: VertexLike) -> int:
    """Accept either a ready bitmask or an iterable of vertex indices."""
    if isinstance(vs, int):
        return vs
    return mask_of(vs)


def iter_bits(m: int) -> Iterator[int]:
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def members(m: int) -> list[int]:
    return list(iter_bits(m))


def lowest(m: int) -> int:
    """Index of the least vertex in a non-empty mask."""
    return (m & -m).bit_length() - 1


def popcount(m: int) -> int:
    return m.bit_count()
