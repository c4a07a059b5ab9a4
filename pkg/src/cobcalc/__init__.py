"""Exact-arithmetic calculator for formal group laws, Chern numbers and
graded ideal checks in the rationalized complex cobordism ring."""

from .context import Context, get_context, default_cap
from .ring import GradedRing, GradedPoly, mu_ring
from .series import Series1, BiSeries, biseries_divide
from .fgl import FormalGroupLaw, mishchenko_log, universal_fgl, Substitution, specialize_fgl
from .chern import ChernEngine
from .errors import (
    CobcalcError,
    ConfigError,
    ConstructionError,
    DomainError,
    EliminationError,
    NotDivisibleError,
)

__version__ = "0.1.0"

__all__ = [
    "Context",
    "get_context",
    "default_cap",
    "GradedRing",
    "GradedPoly",
    "mu_ring",
    "Series1",
    "BiSeries",
    "biseries_divide",
    "FormalGroupLaw",
    "mishchenko_log",
    "universal_fgl",
    "Substitution",
    "specialize_fgl",
    "ChernEngine",
    "CobcalcError",
    "ConfigError",
    "ConstructionError",
    "DomainError",
    "EliminationError",
    "NotDivisibleError",
    "__version__",
]
