"""Crossword fill: exact and approximate solvers, reductions, and a CLI."""

from .core import (
    EMPTY,
    Alphabet,
    Dictionary,
    Grid,
    Instance,
    Slot,
    XwordError,
    assignment_key,
    classify_graph,
    evaluate,
    grid_graph,
    validate_grid,
)
from .exact import BudgetExceeded, PreconditionViolated, ReuseRequired, SolveResult, decide, oracle, solve
from .io import parse_instance, parse_solution, render, write_instance, write_solution

__version__ = "0.1.0"
