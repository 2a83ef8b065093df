"""Correction terms of p/q surgeries.

Labels ``i`` in Z_p follow the surgery-formula identification, under which the
unknot's surgery values come from the Ozsvath-Szabo recursion

    d(S^3_{p/q}(U), i) = -1/4 + (2i + 1 - p - q)^2 / (4pq) - d(S^3_{q/r}(U), j)

with ``r = p mod q``, ``j = i mod q`` and the base case ``p = 1`` giving 0.
Only positive surgery coefficients are supported.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence


class LabelError(ValueError):
    pass


def _check_surgery(p: int, q: int) -> None:
    if p < 1 or q < 1:
        raise ValueError(f"only positive surgery coefficients are supported, got {p}/{q}")
    if gcd(p, q) != 1:
        raise ValueError(f"{p}/{q} is not in lowest terms")


@lru_cache(maxsize=None)
def _lens_d(p: int, q: int, i: int) -> Fraction:
    if p == 1:
        return Fraction(0)
    r, j = p % q, i % q
    head = Fraction(-1, 4) + Fraction((2 * i + 1 - p - q) ** 2, 4 * p * q)
    return head - _lens_d(q, r, j)


def lens_d(p: int, q: int, i: int) -> Fraction:
    """d(S^3_{p/q}(U), t_i) for a label ``0 <= i < p``."""
    _check_surgery(p, q)
    if not 0 <= i < p:
        raise LabelError(f"label {i} outside Z_{p}")
    return _lens_d(p, q, i)


def conjugate_label(p: int, q: int, i: int) -> int:
    """Label of the conjugate Spin^c structure, i -> q - 1 - i mod p."""
    return (q - 1 - i) % p


def vk_indices(p: int, q: int, i: int) -> tuple[int, int]:
    return i // q, (p + q - 1 - i) // q


def niwu_d(p: int, q: int, i: int, vs: Sequence[int]) -> Fraction:
    """d(S^3_{p/q}(K), t_i) from the V-sequence of K."""
    lo, hi = vk_indices(p, q, i)
    need = max(lo, hi)
    if need >= len(vs):
        raise ValueError(f"V-sequence too short: need V_{need}, have {len(vs)} values")
    return lens_d(p, q, i) - 2 * max(vs[lo], vs[hi])


def spin_label(p: int, q: int) -> int:
    """Label of the spin structure: the integer among (q-1)/2, (p+q-1)/2, mod p."""
    _check_surgery(p, q)
    if p % 2 == 0:
        raise ValueError("spin label is only defined here for odd p")
    a2, b2 = q - 1, p + q - 1
    x = a2 // 2 if a2 % 2 == 0 else b2 // 2
    return x % p


def translate_s_to_t(p: int, q: int, m: int) -> int:
    """Label of s_{m mu} = s_0 + m mu-hat.

    Since t_j = t_i + (j - i) q* mu-hat with q q* = 1 mod p, one step of
    mu-hat moves the label by q.
    """
    return (spin_label(p, q) + m * q) % p
