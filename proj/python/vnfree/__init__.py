"""Exact free products of tracial von Neumann algebras.

The heavy lifting lives in the compiled extension ``vnfree._vnfree``; this
package re-exports its public surface.
"""

from ._vnfree import (
    Algebra,
    Error,
    ExtrapolationRejected,
    FreeProductResult,
    HypothesisViolation,
    ParseError,
    TypeMismatchError,
    compress,
    eval_json,
    evaluate,
    fdim,
    free_product,
    group_algebra,
    verify,
)

__all__ = [
    "Algebra",
    "Error",
    "ExtrapolationRejected",
    "FreeProductResult",
    "HypothesisViolation",
    "ParseError",
    "TypeMismatchError",
    "compress",
    "eval_json",
    "evaluate",
    "fdim",
    "free_product",
    "group_algebra",
    "verify",
]

__version__ = "0.1.0"
