"""Integral fillings of the six-box hexatangle: classification of unknots and
independent verification by diagram invariants, braids and surgery homology."""

from .filling import BOXES, OPPOSITE, HexFilling, Unfilled

__version__ = "0.1.0"

__all__ = ["BOXES", "OPPOSITE", "HexFilling", "Unfilled", "__version__"]
