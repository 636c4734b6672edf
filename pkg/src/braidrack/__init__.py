"""Racks, braid-group actions on tuples, monodromy images and the
factorization statistics they predict, computed exactly at small sizes."""

__version__ = "0.1.0"
