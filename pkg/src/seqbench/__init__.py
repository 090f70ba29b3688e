"""Indexed sequence containers (linked, array, block-array) and their benchmarks."""

from .core import OracleList, UnderflowError
from .structures import STRUCTURE_IDS, footprint_bytes, make_sequence

__version__ = "0.1.0"
