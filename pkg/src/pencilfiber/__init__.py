"""Exact invariants of plane line arrangements with double and triple points:
monodromy eigenspaces of the Milnor fiber, reduced-pencil decompositions,
resonance components, and cube Catalan equations over function fields."""

from .eisenstein import EisensteinNumber, ParseError, parse_eisenstein, OMEGA, OMEGA2, MU3
from .forms import (
    HomForm,
    UniPoly,
    product_of_linear_forms,
    restrict_to_line,
    squarefree_cube_split,
    squarefree_decomposition,
    uni_gcd,
)
from .arrangement import (
    Arrangement,
    CombinatorialType,
    IncidencePoint,
    Line,
    MultiplicityError,
    combinatorial_type,
    intersection_points,
    point_census,
    proj_transform,
    validate_multiplicities,
)
from .milnor import MilnorReport, milnor_report, monodromy_char_poly, superabundance
from .pencils import PencilDecomposition, find_pencils, is_composed_of_reduced_pencil, pencil_count
from .resonance import (
    OSDegree2,
    build_os2,
    component_isotropy_check,
    pencil_basis,
    resonance_kernel_dim,
    triple_point_basis,
    wedge,
)
from .catalan import (
    DescentObstruction,
    MWPointCoords,
    QuasiToricRelation,
    base_solution,
    descend_step,
    doubling_step,
    generate_solutions,
    pullback_solution,
    relations_equivalent,
    verify_relation,
)

__all__ = [
    "Arrangement",
    "CombinatorialType",
    "DescentObstruction",
    "EisensteinNumber",
    "HomForm",
    "IncidencePoint",
    "Line",
    "MWPointCoords",
    "MilnorReport",
    "MultiplicityError",
    "MU3",
    "OMEGA",
    "OMEGA2",
    "OSDegree2",
    "ParseError",
    "PencilDecomposition",
    "QuasiToricRelation",
    "UniPoly",
    "base_solution",
    "build_os2",
    "combinatorial_type",
    "component_isotropy_check",
    "descend_step",
    "doubling_step",
    "find_pencils",
    "generate_solutions",
    "intersection_points",
    "is_composed_of_reduced_pencil",
    "milnor_report",
    "monodromy_char_poly",
    "parse_eisenstein",
    "pencil_basis",
    "pencil_count",
    "point_census",
    "product_of_linear_forms",
    "proj_transform",
    "pullback_solution",
    "relations_equivalent",
    "resonance_kernel_dim",
    "restrict_to_line",
    "squarefree_cube_split",
    "squarefree_decomposition",
    "superabundance",
    "triple_point_basis",
    "uni_gcd",
    "validate_multiplicities",
    "verify_relation",
    "wedge",
]
