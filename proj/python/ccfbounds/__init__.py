"""Lower and upper posterior expectations of common-cause failure rates."""

import json

from ._core import (
    ConfigError,
    DimensionError,
    DomainError,
    Error,
    InfeasibleError,
    gj_bounds,
    posterior_mean_theta,
    qj_bounds,
    qt_bounds,
    theta_bounds,
    truncated_reciprocal,
)
from . import _core

__all__ = [
    "ConfigError",
    "DimensionError",
    "DomainError",
    "Error",
    "InfeasibleError",
    "analyze",
    "gj_bounds",
    "posterior_mean_theta",
    "qj_bounds",
    "qt_bounds",
    "reproduce",
    "theta_bounds",
    "truncated_reciprocal",
]


def analyze(config):
    """Run an analysis. `config` is a dict in the JSON config schema."""
    return json.loads(_core.analyze_json(json.dumps(config)))


def reproduce(case, taylor_order=None, tolerance=None):
    """Run a built-in case ("kelly-atwood" or "network")."""
    return json.loads(_core.reproduce_json(case, taylor_order, tolerance))
