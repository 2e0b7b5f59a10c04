"""Degree-penalized graph embeddings and scale-free property reconstruction."""

from ._core import (
    ConvergenceError,
    Error,
    Graph,
    ParseError,
    classify,
    degree_correlations,
    embed_spectral,
    embed_walker,
    fit_power_law,
    generate_pa,
    link_prediction,
    reconstruct_degrees,
    run_cli,
    sphere_bounds,
    sweep_epsilon,
    transition_distribution,
)

__all__ = [
    "ConvergenceError",
    "Error",
    "Graph",
    "ParseError",
    "classify",
    "degree_correlations",
    "embed_spectral",
    "embed_walker",
    "fit_power_law",
    "generate_pa",
    "link_prediction",
    "reconstruct_degrees",
    "run_cli",
    "sphere_bounds",
    "sweep_epsilon",
    "transition_distribution",
]
