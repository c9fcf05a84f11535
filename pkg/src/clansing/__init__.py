"""(p,q)-clans, their closure order, and exact slice ideals of orbit closures."""

from .clans import Clan, enumerate_clans, length, parse
from .ideal import generators, point_satisfies, rank_conditions
from .order import covers, hasse, interval, leq, leq_rank_oracle, transpositions
from .patterns import find_interval_embeddings, includes, interval_contains, mcgovern_smooth, phi
from .slice import base_point, generic_matrix, inverse, w_alpha
from .analysis import maxsing, smooth_at, variety_dimension, verify_interval_iso

__all__ = [
    "Clan", "parse", "enumerate_clans", "length",
    "generators", "point_satisfies", "rank_conditions",
    "covers", "hasse", "interval", "leq", "leq_rank_oracle", "transpositions",
    "includes", "interval_contains", "find_interval_embeddings", "mcgovern_smooth", "phi",
    "base_point", "generic_matrix", "inverse", "w_alpha",
    "maxsing", "smooth_at", "variety_dimension", "verify_interval_iso",
]

__version__ = "0.1.0"
