"""
CurveModuli - exact computations on the determinantal parameterization of
the universal plane curve, its singular locus and the R-bundles over it.
"""

from .blowup import (
    Automorphism,
    NormalDirection,
    PhiMatrix,
    is_r_bundle,
    normal_direction,
    phi,
    r_bundle_equivalent,
    support_curve,
)
from .exactalg import BiForm, DElement, Form
from .fibration import (
    GroupElement,
    HilbertPoly,
    MatrixA,
    act,
    dimension_report,
    hilbert_from_resolution,
    local_section,
    nu,
    same_fiber,
    stability_inequality,
)
from .plane import Curve, CurvePointPair, Point, common_zero, make_pair
from .singularlocus import (
    Normalization,
    TangentVector,
    is_singular_sheaf,
    normalize,
    residue,
    tangent_contains,
)

__all__ = [
    "Form",
    "BiForm",
    "DElement",
    "Point",
    "Curve",
    "CurvePointPair",
    "make_pair",
    "common_zero",
    "MatrixA",
    "GroupElement",
    "HilbertPoly",
    "nu",
    "local_section",
    "act",
    "same_fiber",
    "hilbert_from_resolution",
    "dimension_report",
    "stability_inequality",
    "TangentVector",
    "Normalization",
    "is_singular_sheaf",
    "tangent_contains",
    "normalize",
    "residue",
    "PhiMatrix",
    "NormalDirection",
    "Automorphism",
    "phi",
    "is_r_bundle",
    "support_curve",
    "normal_direction",
    "r_bundle_equivalent",
]
