"""Real grid homology of strongly invertible knots."""

from .corpus import corpus_get, corpus_names
from .diagram import Diagram, DiagramError, load_diagram, parse_diagram, validate
from .homology import BigradedDims, UModule
from .invariants import alexander_polynomial, knot_invariants, verify_diagram_suite

__all__ = [
    "BigradedDims", "Diagram", "DiagramError", "UModule", "alexander_polynomial", "corpus_get",
    "corpus_names", "knot_invariants", "load_diagram", "parse_diagram", "validate",
    "verify_diagram_suite",
]
