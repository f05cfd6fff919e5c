"""Root counting, root finding and parameter-space geometry for harmonic trinomials."""

__version__ = "0.1.0"
