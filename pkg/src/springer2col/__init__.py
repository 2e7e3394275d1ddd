"""Singular components of Springer fibers for nilpotent maps with u^2 = 0.

The combinatorial side (tableaux, window counts, the membership test and
the singularity classifier) is checked against an exact linear-algebra
oracle built on the same Jordan basis.
"""

from .certificates import Certificate, MoveStep, chain_to_tbar, membership_chain, validate_certificate
from .criterion import (
    ComponentReport,
    MembershipVerdict,
    PairInvariantTable,
    TangentSpace,
    centralizer_dim_formula,
    classify,
    component_dimension,
    flag_stabilizer_dim_combinatorial,
    flag_stabilizer_dim_rowstandard,
    is_member,
    s_table_of_component,
    s_table_of_rowstandard,
    tangent_dimension,
)
from .errors import (
    DegenerateSampleError,
    InternalError,
    ParseError,
    ProofViolationError,
    ShapeError,
    Springer2ColError,
    ValidityError,
)
from .tableaux import (
    RowStandardTableau,
    StandardTableau,
    TwoColumnShape,
    enumerate_row_standard,
    enumerate_standard,
    make_shape,
    parse_tableau,
    switch_entries,
    t_bar,
    t_star,
    x_set,
)

__version__ = "0.1.0"
