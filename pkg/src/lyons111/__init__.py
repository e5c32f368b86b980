"""Exact construction of the 111-dimensional representation of the sporadic
Lyons group over the field with five elements, with machine verification of
the structural claims that pin it down: generator relations, configuration
groups, torus tables, the torus normalizer, the invariant form, minimal
invariant subspaces, and the character decomposition."""

from ._backend import backend_name
from .apartment import Line, Plane, Point, WeylElem, parse_line, parse_point
from .closure import ClosureCapExceeded, GroupClosure, closure_enumerate
from .generators import CalibrationError, GeneratorBundle
from .gf5 import (
    Mat,
    MatrixFormatError,
    Subspace,
    det,
    dirsum,
    element_order,
    exp5,
    fixed_space,
    format_matrix,
    identity,
    inv,
    kernel,
    kron,
    log5,
    nilpotency_index,
    orth_complement,
    parse_matrix,
    rref,
    span_closure,
)
from .verifier import SUITE_NAMES, Session

__version__ = "0.1.0"

__all__ = [
    "CalibrationError",
    "ClosureCapExceeded",
    "GeneratorBundle",
    "GroupClosure",
    "Line",
    "Mat",
    "MatrixFormatError",
    "Plane",
    "Point",
    "SUITE_NAMES",
    "Session",
    "Subspace",
    "WeylElem",
    "backend_name",
    "closure_enumerate",
    "det",
    "dirsum",
    "element_order",
    "exp5",
    "fixed_space",
    "format_matrix",
    "identity",
    "inv",
    "kernel",
    "kron",
    "log5",
    "nilpotency_index",
    "orth_complement",
    "parse_line",
    "parse_matrix",
    "parse_point",
    "rref",
    "span_closure",
    "__version__",
]
