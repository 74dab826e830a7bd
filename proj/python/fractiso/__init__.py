"""Fractional isomorphism of graphs and hypergraphs.

Everything is exact: rationals come back as fractions.Fraction, and an
infinite fractional parameter (a vertex in no hyperedge) as math.inf.
"""

from ._fractiso import *  # noqa: F401,F403
from ._fractiso import GuardError, Hypergraph, InputError

__all__ = [name for name in dir() if not name.startswith("_")]
