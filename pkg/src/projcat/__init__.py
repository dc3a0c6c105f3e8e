"""Exact computations in categories of finitely generated projective modules."""

from .rings import GF, INTEGER_RING, QQ, RingConfig, ZZ, parse_ring_shorthand, triangular

__all__ = [
    "RingConfig",
    "INTEGER_RING",
    "triangular",
    "parse_ring_shorthand",
    "ZZ",
    "QQ",
    "GF",
]
