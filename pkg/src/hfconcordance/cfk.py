"""Bifiltered chain complexes over F_2[U, U^-1] and brute-force V_k.

A complex is given by finitely many generators; each generator ``g`` sits at
``(alg, alexander)`` in the (i, j)-plane with Maslov grading ``maslov``, and
its translate ``U^s g`` sits at ``(alg - s, alexander - s)`` in grading
``maslov - 2s``.  An arrow ``(src, dst, p)`` means ``U^p dst`` occurs in the
differential of ``src``.

V_k is computed one Maslov grading at a time.  For a fixed grading each
generator contributes at most one translate to C{i <= 0}, so every chain
group in play is finite and no truncation of the U-action is needed.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Optional, Sequence

from . import f2
from .staircase import validate_list


class NotKnotLike(ValueError):
    """H_*(C{i <= 0}) is not a single F[U]-tower topped in grading 0."""


class TruncationInsufficient(RuntimeError):
    pass


@dataclass(frozen=True)
class Generator:
    name: str
    maslov: int
    alexander: int
    alg: int = 0


@dataclass(frozen=True)
class FilteredComplex:
    generators: tuple[Generator, ...]
    arrows: tuple[tuple[int, int, int], ...] = field(default=())
    check: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        if self.check:
            self.validate()

    def __len__(self):
        return len(self.generators)

    @cached_property
    def out_arrows(self) -> list[list[tuple[int, int]]]:
        out: list[list[tuple[int, int]]] = [[] for _ in self.generators]
        for s, d, p in self.arrows:
            out[s].append((d, p))
        return out

    def validate(self) -> None:
        gens = self.generators
        for s, d, p in self.arrows:
            a, b = gens[s], gens[d]
            if b.maslov - 2 * p != a.maslov - 1:
                raise ValueError(f"arrow {a.name} -> {b.name} does not drop M by 1")
            if b.alg - p > a.alg or b.alexander - p > a.alexander:
                raise ValueError(f"arrow {a.name} -> {b.name} goes up or right")
        # d^2 = 0 over F_2
        for s in range(len(gens)):
            hits: dict[tuple[int, int], int] = defaultdict(int)
            for d, p in self.out_arrows[s]:
                for d2, p2 in self.out_arrows[d]:
                    hits[(d2, p + p2)] ^= 1
            if any(hits.values()):
                raise ValueError(f"d^2 != 0 starting from {gens[s].name}")

    def normalized(self) -> FilteredComplex:
        """Replace each generator by its translate in the column i = 0."""
        gens = [
            Generator(g.name, g.maslov - 2 * g.alg, g.alexander - g.alg, 0) for g in self.generators
        ]
        arrows = [(s, d, p + self.generators[s].alg - self.generators[d].alg) for s, d, p in self.arrows]
        return FilteredComplex(tuple(gens), tuple(arrows))

    def dump(self) -> str:
        lines = [f"{g.name} {g.maslov} {g.alexander} {g.alg}" for g in self.generators]
        for s, d, p in self.arrows:
            lines.append(f"{self.generators[s].name} -> {self.generators[d].name} * U^{p}")
        return "\n".join(lines) + "\n"

    def graded_euler(self) -> dict[int, int]:
        """Σ (-1)^M t^(A - i) over generators; the Alexander polynomial of a knot complex."""
        out: dict[int, int] = defaultdict(int)
        for g in self.generators:
            out[g.alexander - g.alg] += -1 if g.maslov % 2 else 1
        return {a: c for a, c in out.items() if c}


def staircase_complex(steps: Sequence[int]) -> FilteredComplex:
    """The staircase S_(a_1..a_n) with generators x1..x{2n+1} at their (i, j) levels."""
    steps = validate_list(steps)
    n = len(steps)
    prefix = [0]
    for a in steps:
        prefix.append(prefix[-1] + a)
    gens = []
    for idx in range(1, 2 * n + 2):
        if idx % 2:
            i = (idx - 1) // 2
            coords = (prefix[i], prefix[n - i])
            m = 0
        else:
            i = idx // 2
            coords = (prefix[i], prefix[n - i + 1])
            m = 1
        gens.append(Generator(f"x{idx}", m, coords[1], coords[0]))
    arrows = []
    for i in range(1, n + 1):
        even = 2 * i - 1  # 0-based index of x_{2i}
        arrows.append((even, even - 1, 0))
        arrows.append((even, even + 1, 0))
    return FilteredComplex(tuple(gens), tuple(arrows))


def mirror(c: FilteredComplex) -> FilteredComplex:
    """Dual complex: negate gradings and filtrations, reverse every arrow."""
    gens = tuple(Generator(g.name, -g.maslov, -g.alexander, -g.alg) for g in c.generators)
    arrows = tuple((d, s, p) for s, d, p in c.arrows)
    return FilteredComplex(gens, arrows)


UNIT = FilteredComplex((Generator("1", 0, 0, 0),))


def tensor(a: FilteredComplex, b: FilteredComplex, sep: str = "|") -> FilteredComplex:
    nb = len(b)
    gens = tuple(
        Generator(f"{x.name}{sep}{y.name}", x.maslov + y.maslov, x.alexander + y.alexander, x.alg + y.alg)
        for x in a.generators
        for y in b.generators
    )
    arrows = []
    for s, d, p in a.arrows:
        for j in range(nb):
            arrows.append((s * nb + j, d * nb + j, p))
    for s, d, p in b.arrows:
        for i in range(len(a)):
            arrows.append((i * nb + s, i * nb + d, p))
    arrows.sort()
    return FilteredComplex(gens, tuple(arrows), check=False)


def tensor_all(complexes: Sequence[FilteredComplex]) -> FilteredComplex:
    return reduce(tensor, complexes) if complexes else UNIT


# -- homology -------------------------------------------------------------


def _shift(g: Generator, grading: int) -> Optional[int]:
    diff = g.maslov - grading
    if diff % 2:
        return None
    return diff // 2


def degree_basis(c: FilteredComplex, grading: int, k: Optional[int] = None) -> list[int]:
    """Generators whose translate of the given grading lies in C{i<=0} (and j<=k)."""
    out = []
    for idx, g in enumerate(c.generators):
        s = _shift(g, grading)
        if s is None or g.alg - s > 0:
            continue
        if k is not None and g.alexander - s > k:
            continue
        out.append(idx)
    return out


def boundary_images(c: FilteredComplex, grading: int, basis: Sequence[int]) -> list[int]:
    """Boundaries of the grading-``grading`` translates, as bitmasks over generator index."""
    out = []
    for idx in basis:
        v = 0
        for d, _p in c.out_arrows[idx]:
            v ^= 1 << d
        out.append(v)
    return out


@dataclass
class HomologyData:
    dims: dict[int, int]
    inclusion_rank: dict[int, int] = field(default_factory=dict)


def _homology_at(c: FilteredComplex, grading: int, k: Optional[int]) -> tuple[int, int]:
    full = degree_basis(c, grading)
    above = degree_basis(c, grading + 1)
    boundaries = f2.Basis(boundary_images(c, grading + 1, above))
    cycles = f2.kernel(boundary_images(c, grading, full))
    dim = len(cycles) - boundaries.rank
    if k is None:
        return dim, dim
    sub = degree_basis(c, grading, k)
    sub_cycles = []
    for combo in f2.kernel(boundary_images(c, grading, sub)):
        v, pos = 0, 0
        while combo:
            if combo & 1:
                v |= 1 << sub[pos]
            combo >>= 1
            pos += 1
        sub_cycles.append(v)
    span = f2.Basis(boundaries.pivots.values())
    image = sum(span.add(z) for z in sub_cycles)
    return dim, image


def homology_f2(c: FilteredComplex, gradings, k: Optional[int] = None) -> HomologyData:
    """Dimensions of H_M(C{i<=0}) and, given ``k``, the rank of the map induced by
    C{i<=0, j<=k} -> C{i<=0} in each requested grading."""
    data = HomologyData({})
    for m in gradings:
        dim, image = _homology_at(c, m, k)
        data.dims[m] = dim
        if k is not None:
            data.inclusion_rank[m] = image
    return data


def top_grading(c: FilteredComplex) -> int:
    """Largest grading with a nonzero chain group in C{i<=0}."""
    return max(g.maslov - 2 * g.alg for g in c.generators)


def search_floor(c: FilteredComplex, k: int) -> int:
    """Below this grading every translate in C{i<=0} already has j <= k.

    Never above 0, where the tower starts."""
    return min(0, min(2 * (k - g.alexander) + g.maslov for g in c.generators) - 2)


def verify_tower(c: FilteredComplex, floor: int) -> None:
    top = top_grading(c)
    for m in range(max(top, 1), floor - 1, -1):
        dim, _ = _homology_at(c, m, None)
        want = 1 if (m <= 0 and m % 2 == 0) else 0
        if dim != want:
            raise NotKnotLike(f"H_{m}(C{{i<=0}}) has dimension {dim}, expected {want}")


def brute_force_vk(c: FilteredComplex, k: int, verify: bool = True) -> int:
    """V_k by direct homology of C{i<=0, j<=k} -> C{i<=0}."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    floor = search_floor(c, k)
    if verify:
        verify_tower(c, floor)
    m = 0
    while m >= floor:
        _, image = _homology_at(c, m, k)
        if image:
            return -m // 2
        m -= 2
    raise TruncationInsufficient(f"no tower class found down to grading {floor}")


def brute_force_vs(c: FilteredComplex, kmax: int) -> list[int]:
    """[V_0, ..., V_kmax], verifying the tower once."""
    verify_tower(c, search_floor(c, 0))
    return [brute_force_vk(c, k, verify=False) for k in range(kmax + 1)]
