"""Symmetric divergence measures, their differences, and bound certificates."""

import json

from ._core import (
    SymdivError,
    __version__,
    csiszar,
    difference,
    difference_second_derivative,
    evaluate,
    generator_second_derivative,
    measure_ids,
    normalize,
    sample_pair,
    validate,
)
from . import _core


def compute(p, q, measures="all", smoothing_epsilon=0.0):
    """Measure values for raw weights p and q, keyed by measure id."""
    p = normalize(p, smoothing_epsilon)
    q = normalize(q, smoothing_epsilon)
    ids = measure_ids() if measures == "all" else list(measures)
    return {m: evaluate(m, p, q) for m in ids}


def audit(seed, pairs, n_min=2, n_max=64, skew=1e6, chains="all"):
    """Runs the chain audit and returns the report as a dict."""
    if isinstance(chains, (list, tuple)):
        chains = ",".join(chains)
    return json.loads(_core._audit_json(seed, pairs, n_min, n_max, skew, chains))


def bounds(ratio="all", grid_min=1e-8, grid_max=1e8, points=200001):
    """Certifies sharp ratio constants and returns the report as a dict."""
    return json.loads(_core._bounds_json(ratio, grid_min, grid_max, points))


__all__ = [
    "SymdivError",
    "__version__",
    "audit",
    "bounds",
    "compute",
    "csiszar",
    "difference",
    "difference_second_derivative",
    "evaluate",
    "generator_second_derivative",
    "measure_ids",
    "normalize",
    "sample_pair",
    "validate",
]
