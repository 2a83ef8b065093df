import random

import pytest
from hypothesis import given, settings, strategies as st

from hfconcordance import cfk
from hfconcordance.cfk import (
    UNIT,
    FilteredComplex,
    Generator,
    NotKnotLike,
    brute_force_vk,
    brute_force_vs,
    homology_f2,
    mirror,
    staircase_complex,
    tensor,
)
from hfconcordance.staircase import alexander_from_staircase

from .oracles import staircase_v

lists = st.lists(st.integers(1, 3), min_size=1, max_size=3).map(tuple)


def coords(c):
    return {g.name: (g.alg, g.alexander, g.maslov) for g in c.generators}


def test_trefoil_complex_normalized():
    c = staircase_complex((1,)).normalized()
    x, y, z = c.generators
    assert [(g.alg, g.alexander) for g in (x, y, z)] == [(0, 1), (0, 0), (0, -1)]
    # dy = U x + z
    assert sorted(c.arrows) == [(1, 0, 1), (1, 2, 0)]


def test_t45_generator_positions():
    c = staircase_complex((1, 2, 3))
    assert len(c) == 7
    g = coords(c)
    assert g["x1"][:2] == (0, 6)
    assert g["x7"][:2] == (6, 0)
    assert {name: m for name, (_, _, m) in g.items()} == {
        "x1": 0, "x2": 1, "x3": 0, "x4": 1, "x5": 0, "x6": 1, "x7": 0,
    }


def test_dump_format():
    assert staircase_complex((1,)).dump() == (
        "x1 0 1 0\nx2 1 1 1\nx3 0 0 1\nx2 -> x1 * U^0\nx2 -> x3 * U^0\n"
    )


def test_mirror_of_t25():
    m = mirror(staircase_complex((1, 1))).normalized()
    odd = [g for g in m.generators if g.maslov % 2 == 0]
    assert sorted(g.alexander for g in odd) == [-2, 0, 2]


@given(lists)
def test_mirror_is_an_involution(steps):
    c = staircase_complex(steps)
    assert mirror(mirror(c)) == c


@given(lists)
def test_graded_euler_is_alexander_polynomial(steps):
    f = alexander_from_staircase(steps)
    g = sum(steps)
    got = staircase_complex(steps).graded_euler()
    assert got == {e - g: c for e, c in f.terms()}


def test_tensor_unit_and_size():
    a = staircase_complex((1,))
    assert tensor(a, UNIT).generators == tuple(
        Generator(g.name + "|1", g.maslov, g.alexander, g.alg) for g in a.generators
    )
    b = staircase_complex((1, 2))
    t = tensor(a, b)
    assert len(t) == 15
    t.validate()


def test_tensor_dimensions_multiply():
    a, b = staircase_complex((1,)), staircase_complex((1, 2))
    t = tensor(a, b)
    for m in range(-6, 3):
        dims = homology_f2(t, [m]).dims[m]
        assert dims == (1 if m <= 0 and m % 2 == 0 else 0)


@given(lists, lists)
@settings(max_examples=30, deadline=None)
def test_tensor_satisfies_d_squared_zero(a, b):
    tensor(staircase_complex(a), mirror(staircase_complex(b))).validate()


def test_validate_catches_bad_complexes():
    gens = (Generator("a", 1, 0), Generator("b", 0, 1))
    with pytest.raises(ValueError):
        FilteredComplex(gens, ((0, 1, 0),))  # raises the Alexander filtration
    gens = (Generator("a", 0, 0), Generator("b", 0, 0))
    with pytest.raises(ValueError):
        FilteredComplex(gens, ((0, 1, 0),))  # wrong grading shift


def test_acyclic_complex_is_not_knot_like():
    gens = (Generator("a", 1, 0), Generator("b", 0, 0))
    c = FilteredComplex(gens, ((0, 1, 0),))
    with pytest.raises(NotKnotLike):
        brute_force_vk(c, 0)


def test_homology_of_trefoil_subcomplexes():
    c = staircase_complex((1,))
    data = homology_f2(c, [0, -2, -4, -1])
    assert data.dims == {0: 1, -2: 1, -4: 1, -1: 0}
    # C{i<=0, j<=0} misses the top class and hits the one below
    data = homology_f2(c, [0, -2], k=0)
    assert data.inclusion_rank == {0: 0, -2: 1}


def test_trefoil_v0_by_hand():
    assert brute_force_vs(staircase_complex((1,)), 2) == [1, 0, 0]
    assert brute_force_vk(UNIT, 0) == 0


def test_mirror_trefoil_has_zero_v():
    assert brute_force_vs(mirror(staircase_complex((1,))), 2) == [0, 0, 0]


def test_negative_k_rejected():
    with pytest.raises(ValueError):
        brute_force_vk(staircase_complex((1,)), -1)


def random_instances(count, max_genus, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        g = rng.randint(1, max_genus)
        steps, left = [], g
        while left:
            a = rng.randint(1, min(3, left))
            steps.append(a)
            left -= a
        out.append(tuple(steps))
    return out


@pytest.mark.parametrize("steps", random_instances(200, 8, seed=1))
def test_v_is_decreasing_by_at_most_one(steps):
    vs = brute_force_vs(staircase_complex(steps), sum(steps) + 1)
    assert vs == [staircase_v(steps, k) for k in range(len(vs))]
    assert all(0 <= a - b <= 1 for a, b in zip(vs, vs[1:]))
    assert vs[-1] == 0


def test_v_subadditive_on_random_pairs():
    rng = random.Random(2)
    pool = random_instances(60, 4, seed=3)
    for _ in range(40):
        a, b = rng.choice(pool), rng.choice(pool)
        va = brute_force_vs(staircase_complex(a), sum(a))
        vb = brute_force_vs(staircase_complex(b), sum(b))
        vab = brute_force_vs(tensor(staircase_complex(a), staircase_complex(b)), sum(a) + sum(b))
        for k, x in enumerate(va):
            for j, y in enumerate(vb):
                assert vab[k + j] <= x + y
