"""Exact cyclic continuants, extremal arrangements and singular cyclic words."""

from ._cycont import (
    DomainError,
    ParseError,
    canonicalize,
    cf_value,
    christoffel,
    classify,
    construct,
    continuant,
    cyclic_continuant,
    enumerate_class,
    exchange_graph,
    is_balanced,
    is_singular,
    search,
    xi,
)

__all__ = [
    "DomainError",
    "ParseError",
    "canonicalize",
    "cf_value",
    "christoffel",
    "classify",
    "construct",
    "continuant",
    "cyclic_continuant",
    "enumerate_class",
    "exchange_graph",
    "is_balanced",
    "is_singular",
    "search",
    "xi",
]
