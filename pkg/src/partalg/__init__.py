"""Exact computations in partition algebras: diagrams, Jucys-Murphy elements,
identity verification and the tensor space representation."""

from .algebra import AlgebraElement, commutator, p, p_half, product, s
from .diagrams import (
    CompositionResult,
    SetPartitionDiagram,
    canonicalize,
    compose,
    embed,
    enumerate_diagrams,
    generator,
    involute,
    is_half,
    parse_diagram,
)
from .errors import (
    CapExceededError,
    IndexOutOfRangeError,
    MalformedPartitionError,
    PartitionAlgebraError,
    RankMismatchError,
    UnknownSuiteError,
)
from .jucys_murphy import HalfIndex, JMCache
from .poly import IntPolynomial
from .relations import SUITE_NAMES, verify_all, verify_suite
from .report import Check, VerificationReport
from .tensor import RepConfig, SparseOperator, rep_operator, verify_tensor_suite

__all__ = [
    "AlgebraElement", "commutator", "p", "p_half", "product", "s",
    "CompositionResult", "SetPartitionDiagram", "canonicalize", "compose", "embed",
    "enumerate_diagrams", "generator", "involute", "is_half", "parse_diagram",
    "CapExceededError", "IndexOutOfRangeError", "MalformedPartitionError",
    "PartitionAlgebraError", "RankMismatchError", "UnknownSuiteError",
    "HalfIndex", "JMCache", "IntPolynomial", "SUITE_NAMES", "verify_all", "verify_suite",
    "Check", "VerificationReport", "RepConfig", "SparseOperator", "rep_operator",
    "verify_tensor_suite",
]
