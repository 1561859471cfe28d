"""c-differential uniformity of power maps over GF(p^m)."""

__version__ = "0.1.0"
