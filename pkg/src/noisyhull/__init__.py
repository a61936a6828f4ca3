"""Noisy-primitive convex hull algorithms with simulated work/span costs."""

from .costmodel import CostMeter, CostReport, TaskCtx, parallel_for, tick
from .noise import (
    CalibrationTable,
    NoiseModel,
    binomial_majority_error,
    calibrate_repetitions,
    majority_vote,
    noisy_bool,
    noisy_orient2d,
)
from .toolkit import FailTarget, noisy_binary_search, noisy_max_find, noisy_sort
from .walk import UpperHull, WalkBudget, run_pushdown_walk, upper_tangent_walk

__all__ = [
    "CostMeter",
    "CostReport",
    "TaskCtx",
    "parallel_for",
    "tick",
    "CalibrationTable",
    "NoiseModel",
    "binomial_majority_error",
    "calibrate_repetitions",
    "majority_vote",
    "noisy_bool",
    "noisy_orient2d",
    "FailTarget",
    "noisy_binary_search",
    "noisy_max_find",
    "noisy_sort",
    "UpperHull",
    "WalkBudget",
    "run_pushdown_walk",
    "upper_tangent_walk",
]

__version__ = "0.1.0"
