"""Exact planar algebra evaluation over Q(delta)."""

from ._core import (
    EXIT_BUDGET_EXCEEDED,
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_VERIFICATION_FAILED,
    HopfAlgebra,
    HopfError,
    InputError,
    duality,
    evaluate,
    evaluate_file,
    run,
    tilings,
)

__all__ = [
    "EXIT_BUDGET_EXCEEDED",
    "EXIT_INPUT_ERROR",
    "EXIT_OK",
    "EXIT_VERIFICATION_FAILED",
    "HopfAlgebra",
    "HopfError",
    "InputError",
    "duality",
    "evaluate",
    "evaluate_file",
    "run",
    "tilings",
]
