"""Deep holes of generalized Reed-Solomon codes over prime fields."""

from deephole.algebra import (
    FieldElement,
    NewtonForm,
    Poly,
    ff_inv,
    lagrange_interpolate,
    newton_compose,
    newton_decompose,
    poly_eval,
)
from deephole.errors import DeepHoleError
from deephole.grs import (
    GrsCode,
    Matrix,
    degree_bounds,
    encode,
    error_distance,
    generator_matrix,
    is_deep_hole,
    is_mds,
)

__version__ = "0.1.0"

__all__ = [
    "DeepHoleError",
    "FieldElement",
    "GrsCode",
    "Matrix",
    "NewtonForm",
    "Poly",
    "degree_bounds",
    "encode",
    "error_distance",
    "ff_inv",
    "generator_matrix",
    "is_deep_hole",
    "is_mds",
    "lagrange_interpolate",
    "newton_compose",
    "newton_decompose",
    "poly_eval",
]
