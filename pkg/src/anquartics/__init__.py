"""Exact tooling for the two cones of invariant quartics of type A.

Classify a*p2^2 + b*p4 against the nonnegativity and sums-of-squares
cones on the zero-sum hyperplane, with exact rational witnesses and
machine-verifiable square certificates.
"""

from .exactpoly import (
    InvariantQuartic,
    PowerSumQuartic,
    SparsePoly,
    evaluate,
    expand,
    invariant_part,
    power_sum,
    reduce_mod_p1,
    to_power_sum,
    y_to_x,
)
from .halfdeg import alpha, beta, p4_max_int, p4_min_int, phi, two_value_point
from .cones import (
    Membership,
    Position,
    classify,
    cones_equal,
    extremal_rays,
    gap_witness,
    global_psd,
    psd_position,
    psd_range,
    sos_coordinates,
    sos_generators,
)
from .certify import Certificate, cert_S1, cert_S2, cert_for, cert_global, verify
from .reynolds import lemma_sym_closed_form, reynolds, verify_lemma_sym

__version__ = "0.1.0"

__all__ = [
    "InvariantQuartic",
    "PowerSumQuartic",
    "SparsePoly",
    "evaluate",
    "expand",
    "invariant_part",
    "power_sum",
    "reduce_mod_p1",
    "to_power_sum",
    "y_to_x",
    "alpha",
    "beta",
    "p4_max_int",
    "p4_min_int",
    "phi",
    "two_value_point",
    "Membership",
    "Position",
    "classify",
    "cones_equal",
    "extremal_rays",
    "gap_witness",
    "global_psd",
    "psd_position",
    "psd_range",
    "sos_coordinates",
    "sos_generators",
    "Certificate",
    "cert_S1",
    "cert_S2",
    "cert_for",
    "cert_global",
    "verify",
    "lemma_sym_closed_form",
    "reynolds",
    "verify_lemma_sym",
    "__version__",
]
