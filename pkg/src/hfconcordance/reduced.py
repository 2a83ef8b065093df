"""Reduced complexes of L-space knots and the fast V_k computation.

The reduced complex of an L-space knot is a single F[U]-tower ``a, Ua, U^2a, ...``
in gradings ``0, -2, -4, ...``; all the information sits in the Alexander
level ``A(U^i a)``.  A :class:`Tower` stores that function.  Tensoring with
CFK^-(-T(2,5)) again yields a tower whose generator in grading ``-2i`` has
level ``max(2 + A(i+2), A(i+1), A(i) - 2)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .staircase import validate_list


@dataclass(frozen=True)
class Tower:
    """``levels[i]`` is the filtration of the grading ``-2i`` generator for
    ``i < len(levels)``; past the end the level drops by exactly 1 per step."""

    levels: tuple[int, ...]

    def __post_init__(self):
        if not self.levels:
            raise ValueError("a tower needs at least one level")

    @property
    def eventually_linear_from(self) -> int:
        return len(self.levels) - 1

    def filt(self, i: int) -> int:
        if i < 0:
            raise ValueError("U-power must be nonnegative")
        last = len(self.levels) - 1
        if i <= last:
            return self.levels[i]
        return self.levels[last] - (i - last)


def reduce_staircase(steps: Sequence[int]) -> Tower:
    """Alexander levels of the reduced complex of the staircase ``steps``.

    For ``a_1+..+a_i <= j < a_1+..+a_{i+1}`` the level of ``U^j x`` is
    ``a_1+..+a_{n-i} - j``; from the genus on it is ``-j``.
    """
    steps = validate_list(steps)
    n = len(steps)
    prefix = [0]
    for a in steps:
        prefix.append(prefix[-1] + a)
    g = prefix[-1]
    levels = []
    for i in range(n):
        for j in range(prefix[i], prefix[i + 1]):
            levels.append(prefix[n - i] - j)
    levels.append(-g)
    return Tower(tuple(levels))


def family_filtration_2Jn(n: int, i: int) -> int:
    """Closed-form levels of the reduced complex of K_n # K_n.

    Branches are tried in order, so at n = 1 where ranges touch the earlier
    branch wins.
    """
    if n < 1 or i < 0:
        raise ValueError("need n >= 1 and i >= 0")
    if i <= 2 * n - 2:
        return 8 * n - 2 - 4 * i
    fixed = {2 * n - 1: 3, 2 * n: 0, 2 * n + 1: -1, 2 * n + 2: -3, 2 * n + 3: -4}
    if i in fixed:
        return fixed[i]
    if 2 * n + 4 <= i <= 8 * n - 2:
        return 2 * n - i - 2 - (i - 2 * n - 4) // 3
    return -i


# CFK^-(-T(2,5)): cycle generators x1, x3, x5 with (Alexander level, U-shift
# placing them in grading -2i alongside U^i a).
MIRROR_T25 = ((2, 2), (0, 1), (-2, 0))


def tensor_with_mirror_t25(r: Tower) -> Tower:
    """Tower of H_*(r ⊗ CFK^-(-T(2,5))).

    Grading ``-2i`` is generated by ``U^{i+2}a x1 + U^{i+1}a x3 + U^i a x5``,
    whose level is the max of the three summands' levels.
    """
    def level(i):
        return max(off + r.filt(i + shift) for off, shift in MIRROR_T25)

    # once r is linear, so is the result
    n = r.eventually_linear_from + 1
    return Tower(tuple(level(i) for i in range(n + 1)))


def fast_vk(tower: Tower, k: int) -> int:
    """V_k = -1/2 (top grading whose tower generator has level <= k)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    i = 0
    while tower.filt(i) > k:
        i += 1
    return i


def fast_vs(tower: Tower, kmax: int) -> list[int]:
    return [fast_vk(tower, k) for k in range(kmax + 1)]
