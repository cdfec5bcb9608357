"""Dimensions of families of Gorenstein quotients of codimension two CM algebras.

Everything is computed from the Betti degrees of the base: a codimension two
CM quotient B = R/I of R = k[x_0..x_n] with minimal resolution
0 -> (+) R(-n2_j) -> (+) R(-n1_i) -> I -> 0.
"""

from .codim2 import Codim2Data
from .errors import (
    ConstructionMuMismatch,
    HilbertBurchViolation,
    InconsistentProfile,
    Indeterminate,
    InvalidDegreeData,
    MinimalityViolation,
    NotArtinian,
    SchemaError,
    UnsupportedConstruction,
    WrongMu,
    is_known,
)
from .families import (
    ConstructionSpec,
    FamilyReport,
    Kind,
    RegimeFlags,
    family_dim_canonical_section,
    family_dim_h1_mu4,
    family_dim_h1_mu5,
    family_dim_nb,
    family_report,
)
from .graded import DimExpr, FreeModule, dim_polyring, evaluate, h_vector, hilbert_polynomial, series_oracle
from .report import JobInput, JobReport, emit, parse_input, run
from .resolution import (
    ResolutionSpec,
    artinian_profile,
    check_self_dual,
    hilbert_function_crosscheck,
    mapping_cone_resolution,
    minimality_flag,
    scheme_profile,
)

__version__ = "0.1.0"
