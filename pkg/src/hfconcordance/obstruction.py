"""The d-bar obstruction for the links L_n.

The double branched cover Z_n of L_n is 9/4-surgery on J_n # J_n^r, whose
knot Floer complex agrees with that of 2J_n.  V_k(2J_n) is computed on the
staircase side after a chain of nu+-equivalence substitutions.  Those are
taken as given, not computed; :func:`substitution_chain` spells them out and
every report carries the chain.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import cfk, dinv, reduced
from .laurent import family_alexander
from .linking import Z_N_FORM, CyclicLinkingForm
from .staircase import family_list, family_sum_list, representative_staircase, staircase_from_alexander

SURGERY = (9, 4)
MIRROR_LIST = (1, 1)  # T(2,5), entering mirrored
BRUTE_FORCE_MAX_N = 2


class OracleMismatch(RuntimeError):
    """Two independent routes to the same quantity disagree."""


def substitution_chain(n: int) -> tuple[str, ...]:
    return (
        f"J_{n} = ({n}D)_(2,{4 * n - 1}) # -T(2,{4 * n - 1}) # {2 * (n - 1)}D, D = Whitehead double of T(2,3)",
        f"{n}D ~ T(2,{2 * n + 1}); mD ~ mT(2,3) ~ T(2,2m+1)  [Whitehead doubles of T(2,3)]",
        f"({n}D)_(2,{4 * n - 1}) ~ K_{n} = T(2,{2 * n + 1};2,{4 * n - 1})  [cabling preserves nu+-equivalence]",
        f"J_{n} ~ K_{n} # -T(2,3)  [nu+-equivalence is additive]",
        f"2J_{n} ~ 2K_{n} # -T(2,5)",
        f"J_{n} # J_{n}^r has CFK^inf of 2J_{n}  [reversal invariance]",
        f"V_k(2J_{n}) = V_k(2K_{n} # -T(2,5))  [nu+-equivalent knots share V_k]",
        f"2K_{n} ~ staircase {family_sum_list(n)}  [compatible riffle]",
    )


@dataclass(frozen=True)
class FamilyInstance:
    n: int
    knot_list: tuple[int, ...]
    rep_staircase: tuple[int, ...]
    mirror_factor: tuple[int, ...] = MIRROR_LIST
    p: int = SURGERY[0]
    q: int = SURGERY[1]
    linking: CyclicLinkingForm = Z_N_FORM
    provenance: tuple[str, ...] = ()

    @property
    def genus(self) -> int:
        return sum(self.rep_staircase)


@dataclass
class ObstructionReport:
    n: int
    V0: int
    V1: int
    metabolizer_generator: int
    dbar_values: dict[int, Fraction]
    verdict_trivial_alex: bool
    d_spin: Fraction
    v_sequence: list[int] = field(default_factory=list)
    provenance: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "V0": self.V0,
            "V1": self.V1,
            "metabolizer_generator": self.metabolizer_generator,
            "dbar_values": {str(m): str(v) for m, v in sorted(self.dbar_values.items())},
            "verdict_trivial_alex": self.verdict_trivial_alex,
            "d_spin": str(self.d_spin),
            "v_sequence": list(self.v_sequence),
            "provenance": list(self.provenance),
        }

    @classmethod
    def from_dict(cls, d: dict) -> ObstructionReport:
        return cls(
            n=d["n"],
            V0=d["V0"],
            V1=d["V1"],
            metabolizer_generator=d["metabolizer_generator"],
            dbar_values={int(m): Fraction(v) for m, v in d["dbar_values"].items()},
            verdict_trivial_alex=d["verdict_trivial_alex"],
            d_spin=Fraction(d["d_spin"]),
            v_sequence=list(d["v_sequence"]),
            provenance=tuple(d["provenance"]),
        )


def build_family(n: int) -> FamilyInstance:
    if n < 1:
        raise ValueError("n must be positive")
    knot = staircase_from_alexander(family_alexander(n))
    if knot != family_list(n):
        raise OracleMismatch(f"staircase of K_{n} is {knot}, expected {family_list(n)}")
    rep = representative_staircase(knot, knot)
    if rep != family_sum_list(n):
        raise OracleMismatch(f"representative staircase {rep} != {family_sum_list(n)}")
    return FamilyInstance(n, knot, rep, provenance=substitution_chain(n))


def family_tower(inst: FamilyInstance) -> reduced.Tower:
    return reduced.tensor_with_mirror_t25(reduced.reduce_staircase(inst.rep_staircase))


def family_complex(inst: FamilyInstance) -> cfk.FilteredComplex:
    """Full tensor product of the representative staircase with CFK(-T(2,5))."""
    return cfk.tensor(
        cfk.staircase_complex(inst.rep_staircase),
        cfk.mirror(cfk.staircase_complex(inst.mirror_factor)),
    )


def v_sequence(inst: FamilyInstance, kmax: int, check_oracle: Optional[bool] = None) -> list[int]:
    """V_0..V_kmax of 2J_n; also by brute force when ``check_oracle`` (default: n <= 2)."""
    vs = reduced.fast_vs(family_tower(inst), kmax)
    if check_oracle is None:
        check_oracle = inst.n <= BRUTE_FORCE_MAX_N
    if check_oracle:
        slow = cfk.brute_force_vs(family_complex(inst), kmax)
        if slow != vs:
            raise OracleMismatch(f"n={inst.n}: reduced path {vs} != tensor path {slow}")
    return vs


def compute_v01(inst: FamilyInstance) -> tuple[int, int]:
    vs = v_sequence(inst, 1)
    return vs[0], vs[1]


def _kmax(p: int, q: int) -> int:
    return (p + q - 1) // q


def dbar_over_metabolizer(
    inst: FamilyInstance, vs: Optional[Sequence[int]] = None, metabolizer: Optional[int] = None
) -> dict[int, Fraction]:
    """d-bar(Z_n, s_m) for each m in the metabolizer."""
    p, q = inst.p, inst.q
    if vs is None:
        vs = v_sequence(inst, _kmax(p, q))
    if metabolizer is None:
        mets = inst.linking.metabolizers()
        if not mets:
            raise ValueError("linking form has no metabolizer")
        metabolizer = mets[0]
    spin = dinv.spin_label(p, q)
    d0 = dinv.niwu_d(p, q, spin, vs)
    out = {}
    for m in sorted(inst.linking.subgroup(metabolizer)):
        label = dinv.translate_s_to_t(p, q, m)
        out[m] = dinv.niwu_d(p, q, label, vs) - d0
    return out


def verdicts(inst: FamilyInstance, vs: Optional[Sequence[int]] = None) -> ObstructionReport:
    """Evaluate d-bar over every metabolizer.

    The link is obstructed from being concordant to a link with trivial
    Alexander polynomial when no metabolizer has all d-bar values zero.
    """
    p, q = inst.p, inst.q
    kmax = _kmax(p, q)
    if vs is None:
        vs = v_sequence(inst, kmax)
    vs = list(vs)
    if any(b > a or b < a - 1 for a, b in zip(vs, vs[1:])):
        raise OracleMismatch(f"V-sequence {vs} violates V_k - 1 <= V_(k+1) <= V_k")
    mets = inst.linking.metabolizers()
    if not mets:
        raise ValueError("linking form has no metabolizer")
    per_met = {m: dbar_over_metabolizer(inst, vs, m) for m in mets}
    obstructed = all(any(v != 0 for v in vals.values()) for vals in per_met.values())
    gen = mets[0]
    spin = dinv.spin_label(p, q)
    return ObstructionReport(
        n=inst.n,
        V0=vs[0],
        V1=vs[1],
        metabolizer_generator=gen,
        dbar_values=per_met[gen],
        verdict_trivial_alex=obstructed,
        d_spin=dinv.niwu_d(p, q, spin, vs),
        v_sequence=vs,
        provenance=inst.provenance,
    )


def obstruct(n: int) -> ObstructionReport:
    return verdicts(build_family(n))
