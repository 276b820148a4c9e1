"""Exact graded Lie rings of pure braid and pure mapping class groups of the sphere."""

__version__ = "0.1.0"
