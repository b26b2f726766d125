"""Partitions of the hypercube Q_d into subcubes: counting, bounds, encoding, constructions."""

from .codec import DecodeError, Encoding, decode, encode
from .counting import KNOWN_VALUES, count_partitions, count_pm_permanent, iter_partitions
from .cube import DimSet, Subcube, Vertex
from .partition import Partition, is_irreducible, is_tight, spectrum, validate

__version__ = "0.1.0"

__all__ = [
    "DecodeError",
    "DimSet",
    "Encoding",
    "KNOWN_VALUES",
    "Partition",
    "Subcube",
    "Vertex",
    "count_partitions",
    "count_pm_permanent",
    "decode",
    "encode",
    "is_irreducible",
    "is_tight",
    "iter_partitions",
    "spectrum",
    "validate",
]
