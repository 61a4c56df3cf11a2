"""wordmaplab: exact, oracle-checked statistics for factorization families,
power-map fibers, and word-map distributions on small finite groups."""

__version__ = "0.1.0"
