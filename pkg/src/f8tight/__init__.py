"""Exact counting and enumeration of tight contact structures on surgeries
on the figure-eight knot."""

from .cfrac import Form, NegContinuedFraction, eval_cfrac, neg_cfrac, phi, psi, reverse_cfrac
from .classification import (
    ClassificationResult,
    ContactStructureCert,
    CountKind,
    Geometry,
    SteinTag,
    TightCount,
    UTTag,
    classify,
    enumerate_structures,
    geometry_of,
    in_classified_range,
    involution,
    tight_count,
    universal_tightness_tag,
)
from .slope import (
    INFINITY,
    ZERO,
    Direction,
    Openness,
    Slope,
    SlopeArc,
    UnimodularMatrix,
    apply_unimodular,
    det,
    in_arc,
    is_farey_adjacent,
    neighbors_in_arc,
    orientation,
    parse_slope,
    reduce,
)
from .surgery_enum import (
    ChernCertificate,
    Family,
    LegendrianChain,
    LegendrianComponent,
    StabilizationTuple,
    chern_certificate,
    choice_count,
    ding_geiges,
    phi_family_tuples,
    smooth_framing_check,
    stabilization_tuples,
)
from .tight_counts import (
    BasicSliceChain,
    SignSequence,
    SolidTorusSpec,
    basic_slice_count,
    descent_path,
    enumerate_sign_sequences,
    factorization_matrix,
    solid_torus_count,
    solid_torus_spec,
)
from .torus_dynamics import (
    AttachSide,
    BypassMove,
    SlopeWindow,
    ThickeningPath,
    bypass_step,
    has_boundary_parallel_bypass,
    slopes_in_window,
    thicken_path,
)

__all__ = [
    "AttachSide",
    "BasicSliceChain",
    "BypassMove",
    "ChernCertificate",
    "ClassificationResult",
    "ContactStructureCert",
    "CountKind",
    "Direction",
    "Family",
    "Form",
    "Geometry",
    "INFINITY",
    "LegendrianChain",
    "LegendrianComponent",
    "NegContinuedFraction",
    "Openness",
    "SignSequence",
    "Slope",
    "SlopeArc",
    "SlopeWindow",
    "SolidTorusSpec",
    "StabilizationTuple",
    "SteinTag",
    "ThickeningPath",
    "TightCount",
    "UTTag",
    "UnimodularMatrix",
    "ZERO",
    "apply_unimodular",
    "basic_slice_count",
    "bypass_step",
    "chern_certificate",
    "choice_count",
    "classify",
    "descent_path",
    "det",
    "ding_geiges",
    "enumerate_sign_sequences",
    "enumerate_structures",
    "eval_cfrac",
    "factorization_matrix",
    "geometry_of",
    "has_boundary_parallel_bypass",
    "in_arc",
    "in_classified_range",
    "involution",
    "is_farey_adjacent",
    "neg_cfrac",
    "neighbors_in_arc",
    "orientation",
    "parse_slope",
    "phi",
    "phi_family_tuples",
    "psi",
    "reduce",
    "reverse_cfrac",
    "slopes_in_window",
    "smooth_framing_check",
    "solid_torus_count",
    "solid_torus_spec",
    "stabilization_tuples",
    "thicken_path",
    "tight_count",
    "universal_tightness_tag",
]
