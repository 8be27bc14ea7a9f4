"""Harmonic analysis on bounded Vilenkin groups."""

from ._vilenkin import (
    Group,
    GridFunction,
    VilenkinError,
    Weights,
    anchor_catalogue,
    anchor_of,
    character,
    convolve,
    counterexample,
    fourier_coeff,
    grid_from_json,
    grid_to_json,
    hardy_quasinorm,
    inverse_transform,
    kernel,
    lebesgue_bounds,
    lebesgue_constant,
    mean,
    random_function,
    suite_names,
    transform,
    verify,
)

__all__ = [
    "Group",
    "GridFunction",
    "VilenkinError",
    "Weights",
    "anchor_catalogue",
    "anchor_of",
    "character",
    "convolve",
    "counterexample",
    "fourier_coeff",
    "grid_from_json",
    "grid_to_json",
    "hardy_quasinorm",
    "inverse_transform",
    "kernel",
    "lebesgue_bounds",
    "lebesgue_constant",
    "mean",
    "random_function",
    "suite_names",
    "transform",
    "verify",
]
