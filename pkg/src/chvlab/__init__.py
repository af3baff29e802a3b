"""Exact verification of multivariate Cayley-Hamilton identities."""

__version__ = "0.1.0"
