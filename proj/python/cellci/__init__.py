"""Complete-intersection decision for inner 2-minor ideals of collections of cells.

Cells are given as iterables of (i, j) lower-left corners. The compiled core
does all the work; `analyze` and `check_theorem` wrap its JSON reports into
dictionaries.
"""

import json as _json

from ._core import (
    BudgetExhausted,
    TheoremViolation,
    __version__,
    analyze_json,
    check_theorem_json,
    decide,
    enumerate_connected,
    generators,
    groebner,
    height,
    inner_intervals,
    is_chessboard,
    lattice_rank,
    mu,
    render,
)

__all__ = [
    "BudgetExhausted",
    "TheoremViolation",
    "__version__",
    "analyze",
    "check_theorem",
    "decide",
    "enumerate_connected",
    "generators",
    "groebner",
    "height",
    "inner_intervals",
    "is_chessboard",
    "lattice_rank",
    "mu",
    "render",
]


def analyze(cells, budget=1_000_000):
    """Full analysis report (mu, height, lattice rank, certificate) as a dict."""
    return _json.loads(analyze_json(cells, budget))


def check_theorem(max_rank):
    """Exhaustively check is_chessboard == (mu == height) up to max_rank."""
    return _json.loads(check_theorem_json(max_rank))
