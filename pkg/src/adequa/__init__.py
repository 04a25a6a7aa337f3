"""Hyperbolicity certificates for semi-adequate link diagrams."""

__version__ = "0.1.0"
