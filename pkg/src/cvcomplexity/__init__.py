"""cvcomplexity - Phase-space complexity of single-mode continuous-variable states."""

__version__ = "0.1.0"
