"""Finite (m,n)-semihyperrings: construction and exhaustive verification."""

__version__ = "0.1.0"
