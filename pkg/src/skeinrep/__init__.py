"""Exact computations in Temperley-Lieb skein categories and quantum sl2
representations: Kauffman bracket evaluation, Jones-Wenzl projectors, ribbon
structure, and the diagram-to-representation functor with isomorphism
verification at generic and root-of-unity parameters."""

from .scalars import (
    GENERIC,
    GenericMode,
    Mode,
    PoleError,
    RootMode,
    ScalarCyclotomic,
    ScalarGeneric,
    format_scalar,
    parse_mode,
    parse_scalar,
    specialize,
)

__all__ = [
    "GENERIC",
    "GenericMode",
    "Mode",
    "PoleError",
    "RootMode",
    "ScalarCyclotomic",
    "ScalarGeneric",
    "format_scalar",
    "parse_mode",
    "parse_scalar",
    "specialize",
]

__version__ = "0.1.0"
