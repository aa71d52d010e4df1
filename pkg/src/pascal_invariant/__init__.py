"""Exact projective geometry for characteristic numbers of plane curves,
Pascal-type theorems and singular spline spaces."""
from .curves import (
    BinaryForm,
    Degenerate,
    HomCurve,
    char_number,
    char_ratio_curve_line,
    char_ratio_points,
    conic_through_six,
    curve_beyond_frame,
    evaluate,
    fit_curves,
    frame_ratio_product,
    is_flex,
    restrict_to_line,
    tangent_line,
)
from .exact import RatMatrix, Rational, mat_det, mat_nullspace, mat_rank, solve_exact
from .pascal import (
    CriterionError,
    HexConfig,
    NinePointConfig,
    char_map,
    conic_tangency_residuals_collinear,
    flexes_collinear,
    pascal_mapping,
    pascal_type_cubic,
    pascal_type_general,
    phi_hexagon,
    residual_tangent_collinear,
    verify_pascal,
)
from .projective import (
    GeometryError,
    ProjLine,
    ProjPoint,
    TriFrame,
    collinear,
    concurrent,
    decompose,
    dual,
    join,
    meet,
)
from .spline import MSConfig, ms_geometric_check, product_criterion, s10_dim, spline_dim

__version__ = "0.1.0"
