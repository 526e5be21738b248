"""Differentially private graph-based path publishing."""

from ._gpath import (
    attack,
    generate_map,
    publish,
    reconstruct,
    run_experiment,
    total_budget,
)

__all__ = [
    "attack",
    "generate_map",
    "publish",
    "reconstruct",
    "run_experiment",
    "total_budget",
]
