"""Exact real-weighted automata: linear representations, crisp-deterministic
automata and automata with vector states, plus the conversions between them."""

from .cdwa import Cdwa
from .derivative import derivative_automaton, observability_basis, prefix_closure
from .linalg import Matrix, Vector
from .nerode import NerodeResult, Status, nerode
from .wavs import LinearityReport, Wavs, linearity_check
from .wfa import Wfa
from .words import Alphabet

__all__ = [
    "Alphabet",
    "Cdwa",
    "LinearityReport",
    "Matrix",
    "NerodeResult",
    "Status",
    "Vector",
    "Wavs",
    "Wfa",
    "derivative_automaton",
    "linearity_check",
    "nerode",
    "observability_basis",
    "prefix_closure",
]
