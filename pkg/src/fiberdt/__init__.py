"""fiberdt: exact generating series and invariants for curve-fibered 3-folds.

The package computes, in exact integer and rational arithmetic:

* Hodge-polynomial and Euler generating series for Hilbert schemes of points
  on a surface, for nested Hilbert schemes, and for the one-extra-point
  ideal-sheaf moduli spaces of a 3-fold fibered in curves over the surface;
* the Donaldson-Thomas numbers attached to those moduli spaces in the
  trivial-canonical setting (they vanish, and the code verifies it);
* truncated Hom-space dimensions for monomial-ideal local models, exhibiting
  the tangent-space dimension jump at an embedded doubled point.

Every analytic formula is paired with an independent brute-force route
(partition enumeration at the Euler level, direct integer convolution for
specializations, re-substitution for linear solves).
"""

from .geometry import (
    FibrationSpec,
    HodgeDiamond,
    InvalidDiamond,
    K_TRIVIAL_SURFACE_NAMES,
    curve_diamond,
    registry_lookup,
    registry_names,
    surface_names,
    surface_with_euler_number,
)
from .formulas import (
    dt_invariant,
    hilbert_euler,
    hilbert_euler_direct,
    hilbert_euler_series,
    hilbert_hodge_series,
    ideal_sheaf_euler,
    ideal_sheaf_euler_direct,
    ideal_sheaf_euler_sequence,
    ideal_sheaf_hodge_series,
    moduli_dimension,
    nested_euler_direct,
    nested_hodge_series,
)
from .localhom import (
    HomSolution,
    LINE_IDEAL,
    LINE_WITH_EMBEDDED_POINT_IDEAL,
    MonomialIdeal,
    POINT_IDEAL,
    TruncatedQuotient,
    hom_dimension,
    standard_monomials,
    syzygy_pairs,
    tangent_jump_report,
    verify_hom_solution,
)
from .oracles import (
    Partition,
    addable_boxes,
    colored_partitions_count,
    nested_colored_count,
    partitions_ascending,
    partitions_of,
)
from .polyseries import BivariatePolynomial, TruncatedSeries, series_factor, series_product

__version__ = "0.1.0"

__all__ = [
    "BivariatePolynomial",
    "TruncatedSeries",
    "series_factor",
    "series_product",
    "HodgeDiamond",
    "InvalidDiamond",
    "FibrationSpec",
    "curve_diamond",
    "registry_lookup",
    "registry_names",
    "surface_names",
    "surface_with_euler_number",
    "K_TRIVIAL_SURFACE_NAMES",
    "hilbert_hodge_series",
    "hilbert_euler_series",
    "hilbert_euler",
    "nested_hodge_series",
    "ideal_sheaf_hodge_series",
    "ideal_sheaf_euler_sequence",
    "ideal_sheaf_euler",
    "moduli_dimension",
    "dt_invariant",
    "hilbert_euler_direct",
    "nested_euler_direct",
    "ideal_sheaf_euler_direct",
    "Partition",
    "partitions_of",
    "partitions_ascending",
    "addable_boxes",
    "colored_partitions_count",
    "nested_colored_count",
    "MonomialIdeal",
    "TruncatedQuotient",
    "HomSolution",
    "standard_monomials",
    "syzygy_pairs",
    "hom_dimension",
    "verify_hom_solution",
    "tangent_jump_report",
    "LINE_IDEAL",
    "LINE_WITH_EMBEDDED_POINT_IDEAL",
    "POINT_IDEAL",
    "__version__",
]
