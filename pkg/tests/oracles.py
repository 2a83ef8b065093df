"""Independent reference computations shared by the tests."""

import itertools

from hfconcordance import reduced
from hfconcordance.staircase import Riffle


def compositions(g):
    if g == 0:
        yield ()
        return
    for a in range(1, g + 1):
        for rest in compositions(g - a):
            yield (a,) + rest


def all_lists(max_genus):
    return [c for g in range(1, max_genus + 1) for c in compositions(g)]


def all_riffles(left, right):
    n, m = len(left), len(right)
    for pos in itertools.combinations(range(n + m), n):
        tags = ["R"] * (n + m)
        for p in pos:
            tags[p] = "L"
        yield Riffle(tuple(left), tuple(right), tuple(tags))


def staircase_v(steps, k):
    """V_k of a single staircase, extended to k < 0 by V_{-k} = V_k + k."""
    if k < 0:
        return staircase_v(steps, -k) - k
    return reduced.fast_vk(reduced.reduce_staircase(steps), k)


def sum_vs(lists, kmax):
    """V_k of a sum of L-space knots as the min-convolution of the summands' V.

    Only valid for two summands here; that is all the tests need.
    """
    a, b = lists
    span = sum(a) + sum(b) + kmax + 2
    return [
        min(staircase_v(a, k1) + staircase_v(b, k - k1) for k1 in range(-span, span + 1))
        for k in range(kmax + 1)
    ]
