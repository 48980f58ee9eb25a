"""Exact tangency curve counts for the plane relative to a smooth cubic.

The package solves, degree by degree and entirely in exact rational
arithmetic, for the two-point tangency counts N(a, b), the
point-constrained three-point counts, and the punctured counts of
rational plane curves relative to a smooth cubic curve.  Each degree is
seeded by one configured slab coefficient and then pinned down by the
linear equations that associativity of a graded tangency ring imposes.
"""

from .errors import (
    BoundMismatchError,
    CubicGWError,
    GradingError,
    InconsistentSystemError,
    NonlinearTermError,
    SlabConfigError,
    TableCommitError,
    UnderdeterminedSystemError,
    UnsolvedDegreeError,
)
from .exact import (
    LinForm,
    Rational,
    TruncSeries,
    UnknownId,
    format_rational,
    rational,
)
from .puncture import punctured_invariant, punctured_table
from .ring import (
    ThetaElement,
    element_to_json_dict,
    format_element,
    mul,
    mul_basis,
    theta,
)
from .seeds import (
    SlabCoefficients,
    default_slab_table,
    load_slab_file,
    seed_bottom,
    seed_top,
)
from .solver import (
    Equation,
    SolveReport,
    compute_up_to,
    compute_up_to_with_reports,
    generate_equations,
    solve_degree,
    verify_two_point_relations,
)
from .table import (
    ConcreteMode,
    InvariantTable,
    SymbolicMode,
    degree_unknown_ids,
    degree_zero_three_point,
    three_point_ids,
    two_point_ids,
    vanishes,
)

__version__ = "0.1.0"

__all__ = [
    "BoundMismatchError",
    "ConcreteMode",
    "CubicGWError",
    "Equation",
    "GradingError",
    "InconsistentSystemError",
    "InvariantTable",
    "LinForm",
    "NonlinearTermError",
    "Rational",
    "SlabCoefficients",
    "SlabConfigError",
    "SolveReport",
    "SymbolicMode",
    "TableCommitError",
    "ThetaElement",
    "TruncSeries",
    "UnderdeterminedSystemError",
    "UnknownId",
    "UnsolvedDegreeError",
    "compute_up_to",
    "compute_up_to_with_reports",
    "default_slab_table",
    "degree_unknown_ids",
    "degree_zero_three_point",
    "element_to_json_dict",
    "format_element",
    "format_rational",
    "generate_equations",
    "load_slab_file",
    "mul",
    "mul_basis",
    "punctured_invariant",
    "punctured_table",
    "rational",
    "seed_bottom",
    "seed_top",
    "solve_degree",
    "theta",
    "three_point_ids",
    "two_point_ids",
    "vanishes",
    "verify_two_point_relations",
]
