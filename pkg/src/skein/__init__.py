"""Exact symmetric-function, determinant and ideal computations for colored link homology."""
__version__ = "0.1.0"
