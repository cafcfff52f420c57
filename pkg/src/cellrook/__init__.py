"""Rook polynomials, switching rook polynomials and h-polynomials of collections of cells."""

from .grid import CellCollection, canonical, format_collection, parse, rectangle
from .hilbert import h_polynomial
from .polynomial import IntPolynomial
from .rook import rook_number, rook_polynomial
from .switch import switching_rook_polynomial

__all__ = [
    "CellCollection",
    "IntPolynomial",
    "canonical",
    "format_collection",
    "h_polynomial",
    "parse",
    "rectangle",
    "rook_number",
    "rook_polynomial",
    "switching_rook_polynomial",
]

__version__ = "0.1.0"
