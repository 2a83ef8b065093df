"""Staircase lists and shapes of L-space knots.

A staircase list is a tuple of positive ints ``(a_1, ..., a_n)``; its shape
pairs each step with its mirror step, ``((a_1, a_n), (a_2, a_{n-1}), ...)``.
Two shapes are riffled (order-preserving interleaving) and the riffle is
*compatible* when every element and its opposite successor (the next
element from the other list) satisfy

    successor.first >= element.first  and  successor.second <= element.second.

The riffle is *strictly* compatible when the same inequalities hold between
an element and every later element of the other list, not just the first.

Only a strictly compatible riffle is used to build the representative
staircase of K # J (its list is read off as the first coordinates).  The
plain condition is too weak for that: for (1) and (1, 1, 2, 1) the riffle
L R R R R is compatible, yet the staircase it produces has V_1 = 3 while the
tensor product has V_1 = 2.  Strict riffles always give a symmetric shape
and reproduce V_k of the tensor product on every pair of total genus <= 8.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Iterable, Optional, Sequence

from .laurent import LaurentPoly

LEFT, RIGHT = "L", "R"

Pair = tuple[int, int]


class NotLSpacePolynomial(ValueError):
    """The polynomial cannot be the Alexander polynomial of an L-space knot."""


class IncompatibleShapes(ValueError):
    """No compatible riffle exists; fall back to the full tensor product."""


def validate_list(steps: Iterable[int]) -> tuple[int, ...]:
    steps = tuple(int(a) for a in steps)
    if not steps:
        raise ValueError("a staircase list must be nonempty")
    if any(a < 1 for a in steps):
        raise ValueError(f"staircase steps must be positive: {steps}")
    return steps


def genus(steps: Sequence[int]) -> int:
    return sum(steps)


def staircase_from_alexander(f: LaurentPoly) -> tuple[int, ...]:
    """Read the staircase list off an L-space Alexander polynomial.

    ``a_i`` is the gap between the (2i-1)th and 2i-th exponents.
    """
    f = LaurentPoly(f.coeffs, 0)
    terms = f.terms()
    if not terms:
        raise NotLSpacePolynomial("zero polynomial")
    if any(abs(c) != 1 for _, c in terms):
        raise NotLSpacePolynomial("coefficients must all be +-1")
    if any(c != (-1) ** k for k, (_, c) in enumerate(terms)):
        raise NotLSpacePolynomial("signs must alternate starting with +1")
    if not f.is_symmetric():
        raise NotLSpacePolynomial("polynomial is not symmetric")
    if len(terms) == 1:
        raise NotLSpacePolynomial("trivial polynomial has no staircase")
    exps = [e for e, _ in terms]
    return tuple(exps[2 * i + 1] - exps[2 * i] for i in range(len(exps) // 2))


def alexander_from_staircase(steps: Sequence[int]) -> LaurentPoly:
    """Graded Euler characteristic of the staircase complex, normalized.

    Odd generators x_{2i+1} count +1 and even generators -1 at their
    Alexander grading j - i.
    """
    steps = validate_list(steps)
    n = len(steps)
    prefix = [0]
    for a in steps:
        prefix.append(prefix[-1] + a)
    g = prefix[-1]
    terms: dict[int, int] = {}
    for i in range(n + 1):
        a_odd = prefix[n - i] - prefix[i]
        terms[a_odd + g] = terms.get(a_odd + g, 0) + 1
    for i in range(1, n + 1):
        a_even = prefix[n - i + 1] - prefix[i]
        terms[a_even + g] = terms.get(a_even + g, 0) - 1
    return LaurentPoly.from_dict(terms)


def shape(steps: Sequence[int]) -> tuple[Pair, ...]:
    steps = tuple(steps)
    n = len(steps)
    return tuple((steps[i], steps[n - 1 - i]) for i in range(n))


def list_from_shape(sh: Sequence[Pair]) -> tuple[int, ...]:
    return tuple(p[0] for p in sh)


@dataclass(frozen=True)
class Riffle:
    left: tuple[Pair, ...]
    right: tuple[Pair, ...]
    tags: tuple[str, ...]

    @property
    def merged(self) -> tuple[tuple[str, Pair], ...]:
        out = []
        it = {LEFT: iter(self.left), RIGHT: iter(self.right)}
        for tag in self.tags:
            out.append((tag, next(it[tag])))
        return tuple(out)

    @property
    def pairs(self) -> tuple[Pair, ...]:
        return tuple(p for _, p in self.merged)

    def restrict(self, tag: str) -> tuple[Pair, ...]:
        return tuple(p for t, p in self.merged if t == tag)


def _dominates(later: Pair, earlier: Pair) -> bool:
    return later[0] >= earlier[0] and later[1] <= earlier[1]


def is_compatible_riffle(riffle: Riffle, strict: bool = False) -> bool:
    """Check the opposite-successor condition element by element.

    With ``strict`` every later element of the other list must dominate,
    not only the opposite successor.
    """
    merged = riffle.merged
    for k, (tag, pair) in enumerate(merged):
        later = [p for t, p in merged[k + 1:] if t != tag]
        if not strict:
            later = later[:1]
        if not all(_dominates(p, pair) for p in later):
            return False
    return True


def _extremes(pairs: Sequence[Pair]) -> Optional[Pair]:
    if not pairs:
        return None
    return max(p[0] for p in pairs), min(p[1] for p in pairs)


def find_compatible_riffle(
    left: Sequence[Pair], right: Sequence[Pair], strict: bool = False
) -> Optional[Riffle]:
    """Lexicographically smallest compatible riffle (LEFT before RIGHT), or None.

    Plain mode: the elements still waiting for their opposite successor form
    the current run from one side; only the run's largest first coordinate
    and smallest second coordinate matter, so those go in the memo state.
    Strict mode: a new element must dominate everything already taken from
    the other side, which depends only on how far each list has advanced.
    """
    left, right = tuple(left), tuple(right)
    n, m = len(left), len(right)
    sides = {LEFT: left, RIGHT: right}

    def step(state, tag):
        i, j, side, hi_first, lo_second = state
        k = i if tag == LEFT else j
        if k >= len(sides[tag]):
            return None
        pair = sides[tag][k]
        i2, j2 = (i + 1, j) if tag == LEFT else (i, j + 1)
        if strict:
            taken = right[:j] if tag == LEFT else left[:i]
            bound = _extremes(taken)
            if bound is not None and not _dominates(pair, bound):
                return None
            return (i2, j2, None, 0, 0)
        if side == tag:
            return (i2, j2, tag, max(hi_first, pair[0]), min(lo_second, pair[1]))
        if side is not None and not _dominates(pair, (hi_first, lo_second)):
            return None
        return (i2, j2, tag, pair[0], pair[1])

    @lru_cache(maxsize=None)
    def feasible(state) -> bool:
        i, j = state[0], state[1]
        if i == n and j == m:
            return True
        return any(
            (nxt := step(state, tag)) is not None and feasible(nxt) for tag in (LEFT, RIGHT)
        )

    state = (0, 0, None, 0, 0)
    if not feasible(state):
        return None
    tags = []
    while state[0] < n or state[1] < m:
        for tag in (LEFT, RIGHT):
            nxt = step(state, tag)
            if nxt is not None and feasible(nxt):
                tags.append(tag)
                state = nxt
                break
    return Riffle(left, right, tuple(tags))


def representative_staircase(left: Sequence[int], right: Sequence[int]) -> tuple[int, ...]:
    """Staircase list of the staircase summand of the connected sum.

    Uses the smallest strictly compatible riffle; raises IncompatibleShapes
    when there is none, in which case V_k must come from the tensor product.
    """
    left, right = validate_list(left), validate_list(right)
    riffle = find_compatible_riffle(shape(left), shape(right), strict=True)
    if riffle is None:
        raise IncompatibleShapes(f"shapes of {left} and {right} admit no strictly compatible riffle")
    out = list_from_shape(riffle.pairs)
    if shape(out) != riffle.pairs:
        raise AssertionError(f"riffled shape {riffle.pairs} is not symmetric")
    return out


def representative_sum(lists: Iterable[Sequence[int]]) -> tuple[int, ...]:
    """Left fold of :func:`representative_staircase` over several summands."""
    lists = [validate_list(x) for x in lists]
    if not lists:
        raise ValueError("need at least one staircase")
    return reduce(representative_staircase, lists)


def family_list(n: int) -> tuple[int, ...]:
    """Staircase of K_n: (1 x n, 2, 3 x (n-1))."""
    return (1,) * n + (2,) + (3,) * (n - 1)


def family_sum_list(n: int) -> tuple[int, ...]:
    """Representative staircase of K_n # K_n: (1 x 2n, 2, 2, 3 x (2n-2))."""
    return (1,) * (2 * n) + (2, 2) + (3,) * (2 * n - 2)
