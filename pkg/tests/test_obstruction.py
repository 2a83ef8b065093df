from fractions import Fraction

import pytest

from hfconcordance.linking import CyclicLinkingForm
from hfconcordance.obstruction import (
    ObstructionReport,
    build_family,
    compute_v01,
    dbar_over_metabolizer,
    obstruct,
    v_sequence,
    verdicts,
)


def test_family_instance():
    inst = build_family(2)
    assert inst.knot_list == (1, 1, 2, 3)
    assert inst.rep_staircase == (1, 1, 1, 1, 2, 2, 3, 3)
    assert inst.provenance
    with pytest.raises(ValueError):
        build_family(0)


@pytest.mark.parametrize("n", [1, 2])
def test_v_sequence_checked_by_brute_force(n):
    inst = build_family(n)
    assert v_sequence(inst, 3, check_oracle=True)[:2] == [2 * n, 2 * n - 1]


@pytest.mark.parametrize("n", range(1, 7))
def test_report(n):
    inst = build_family(n)
    assert compute_v01(inst) == (2 * n, 2 * n - 1)
    rep = obstruct(n)
    assert rep.metabolizer_generator == 3
    assert rep.dbar_values == {0: 0, 3: -2, 6: -2}
    assert rep.verdict_trivial_alex
    assert rep.d_spin == -(4 * n - 2)


def test_vanishing_v_is_not_obstructed():
    inst = build_family(1)
    rep = verdicts(inst, vs=[0, 0, 0, 0])
    assert not rep.verdict_trivial_alex
    assert set(rep.dbar_values.values()) == {0}


def test_conjugate_labels_agree():
    vals = dbar_over_metabolizer(build_family(3))
    assert vals[3] == vals[6]


def test_bad_v_sequence_rejected():
    from hfconcordance.obstruction import OracleMismatch

    with pytest.raises(OracleMismatch):
        verdicts(build_family(1), vs=[2, 0, 0, 0])


def test_no_metabolizer():
    from dataclasses import replace

    inst = replace(build_family(1), linking=CyclicLinkingForm(5, Fraction(1, 5)))
    with pytest.raises(ValueError):
        dbar_over_metabolizer(inst)


def test_report_round_trip():
    rep = obstruct(2)
    again = ObstructionReport.from_dict(rep.to_dict())
    assert again.to_dict() == rep.to_dict()
    assert again.d_spin == rep.d_spin
