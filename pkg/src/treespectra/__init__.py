"""Eigenvalue conditions for degree-bounded spanning trees, with exact
combinatorial cross-checks on exhaustively enumerated small graphs."""

__version__ = "0.1.0"
