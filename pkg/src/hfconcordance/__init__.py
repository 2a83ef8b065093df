"""Heegaard Floer concordance invariants of L-space knots and their connected
sums: staircases, V_k, surgery d-invariants, and the d-bar obstruction for the
links L_n."""

__version__ = "0.1.0"

from .laurent import LaurentPoly, cable_alexander, family_alexander, substitute_power, torus_alexander
from .staircase import (
    IncompatibleShapes,
    NotLSpacePolynomial,
    find_compatible_riffle,
    representative_staircase,
    shape,
    staircase_from_alexander,
)
from .cfk import FilteredComplex, brute_force_vk, mirror, staircase_complex, tensor
from .reduced import Tower, fast_vk, family_filtration_2Jn, reduce_staircase, tensor_with_mirror_t25
from .dinv import lens_d, niwu_d, spin_label, translate_s_to_t
from .linking import CyclicLinkingForm
from .obstruction import ObstructionReport, build_family, compute_v01, dbar_over_metabolizer, verdicts
