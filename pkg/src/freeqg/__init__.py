"""Exact representation-theoretic combinatorics of the free quantum groups A_u(F) and A_o(F)."""

from .errors import (
    DimensionError,
    FreeQGError,
    GuardrailError,
    NotOAdmissibleError,
    SingularMatrixError,
    WordParseError,
)
from .exact import ExactMatrix, GaussianRational
from .fixed_vectors import (
    FixedVector,
    fixed_dim,
    gram,
    haar_projector,
    validate_o_matrix,
    w_span_dim,
    w_vector,
    z_basis,
)
from .fock import fock_moment, semicircular_moment
from .fusion import (
    FusionElement,
    J_expand,
    J_inverse,
    catalan_closed,
    dim_o,
    dim_u,
    fuse,
    fuse_elements,
    fuse_o,
    generalized_catalan,
    involute_element,
    star_moment,
    tau,
)
from .pairings import ColoredPairing, Pairing, enumerate_colored, enumerate_plain
from .words import E, Letter, Word, format_word, involute, parse, splits

__version__ = "0.1.0"
