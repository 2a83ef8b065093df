"""Linear algebra over F_2 with vectors packed into Python ints."""

from __future__ import annotations

from typing import Iterable, Sequence


class Basis:
    """Incrementally maintained row-echelon basis (pivot = highest set bit)."""

    def __init__(self, vectors: Iterable[int] = ()):
        self.pivots: dict[int, int] = {}
        for v in vectors:
            self.add(v)

    def reduce(self, v: int) -> int:
        while v:
            top = v.bit_length() - 1
            row = self.pivots.get(top)
            if row is None:
                return v
            v ^= row
        return 0

    def add(self, v: int) -> bool:
        """Insert ``v``; return True when it enlarged the span."""
        v = self.reduce(v)
        if not v:
            return False
        self.pivots[v.bit_length() - 1] = v
        return True

    def __contains__(self, v: int) -> bool:
        return self.reduce(v) == 0

    @property
    def rank(self) -> int:
        return len(self.pivots)


def rank(vectors: Iterable[int]) -> int:
    return Basis(vectors).rank


def kernel(images: Sequence[int]) -> list[int]:
    """Basis of the kernel of the map sending basis vector ``e_k`` to ``images[k]``.

    Kernel vectors are returned as bitmasks over the domain indices.
    """
    pivots: dict[int, tuple[int, int]] = {}
    out = []
    for k, img in enumerate(images):
        combo = 1 << k
        while img:
            top = img.bit_length() - 1
            hit = pivots.get(top)
            if hit is None:
                pivots[top] = (img, combo)
                break
            img ^= hit[0]
            combo ^= hit[1]
        else:
            out.append(combo)
    return out


def apply(combo: int, images: Sequence[int]) -> int:
    """Image of a domain bitmask under the map given by ``images``."""
    out = 0
    k = 0
    while combo:
        if combo & 1:
            out ^= images[k]
        combo >>= 1
        k += 1
    return out
