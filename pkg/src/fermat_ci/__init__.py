"""Exact invariants of Fermat-type complete intersections and brute-force
checks of their automorphism and cohomology claims."""

__version__ = "0.1.0"
