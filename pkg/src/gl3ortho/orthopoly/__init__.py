"""Orthogonal polynomial families living in graded components of A^alpha."""

from .family1 import (
    OrthoFamily1,
    closed_form_ratio,
    difference_apply_1var,
    difference_operator_1var,
    eigenvalue_1var,
    extract_poly1,
    f1_operator,
    f1_via_ad,
    f1_via_recurrence,
    family1,
    form_plus,
    gram_schmidt_plus,
    literal_eigenvalue_1var,
    plus_support_size,
    proportionality,
    resolve_lower_parameters,
)
from .hypergeom import HypergeomParams, hahn_params, hahn_poly, hyper3f2_poly, pochhammer
from .family2 import (
    WEYL_GROUP,
    OrthoFamily2,
    WeylElement,
    f2_via_ad,
    family2,
    form_full,
    leading_exponent,
    leading_exponent_h1_e33,
    weyl_transport,
)
from .casimir import (
    casimir_eigencheck,
    casimir_element,
    difference_apply_2var,
    erratum_table,
    gt_correspondence_check,
)
