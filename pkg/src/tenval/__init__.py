"""Exact SL(n) covariant tensor valuations on convex polytopes containing the origin."""

from .linalg import Matrix, as_rational, vector
from .polytope import (
    GeometryError,
    InvalidDoublePyramid,
    NotFullDimensional,
    OriginNotInterior,
    Polytope,
    UnsupportedDimension,
    boundary_triangulation,
    box,
    crosspolytope,
    double_pyramid,
    facets,
    from_vertices,
    interval,
    linear_image,
    make_family,
    polar,
    pyramid_family,
    simplex,
    straight_double_pyramid,
    support,
    surface_area_measure,
    volume,
)
from .symtensor import (
    SymTensor,
    from_product_basis,
    gl_action,
    middle_term_coordinate,
    product_basis,
    power,
    shear_coords_reference,
    sym_product,
    vandermonde_sum,
)
from .valuations import (
    ValuationDescriptor,
    double_pyramid_closed_form,
    evaluate,
    lp_surface_tensor,
    m_coeff,
    moment_tensor,
    mrs,
    mrs_rho,
)

__version__ = "0.1.0"

__all__ = [
    "as_rational",
    "boundary_triangulation",
    "box",
    "crosspolytope",
    "double_pyramid",
    "double_pyramid_closed_form",
    "evaluate",
    "facets",
    "from_product_basis",
    "from_vertices",
    "GeometryError",
    "gl_action",
    "interval",
    "InvalidDoublePyramid",
    "linear_image",
    "lp_surface_tensor",
    "m_coeff",
    "make_family",
    "Matrix",
    "middle_term_coordinate",
    "moment_tensor",
    "mrs",
    "mrs_rho",
    "NotFullDimensional",
    "OriginNotInterior",
    "polar",
    "Polytope",
    "power",
    "product_basis",
    "pyramid_family",
    "shear_coords_reference",
    "simplex",
    "straight_double_pyramid",
    "support",
    "surface_area_measure",
    "sym_product",
    "SymTensor",
    "UnsupportedDimension",
    "ValuationDescriptor",
    "vandermonde_sum",
    "vector",
    "volume",
]
