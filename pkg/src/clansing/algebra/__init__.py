"""Exact polynomial arithmetic and Groebner bases over the rationals."""

from .groebner import (
    DEFAULT_BUDGET,
    GroebnerBasis,
    buchberger,
    contains,
    dimension,
    linear_part_rank_at_origin,
    normal_form,
    radical_member,
    rank_of_rows,
)
from .polynomial import ORDERS, Polynomial, Ring, parse_polynomial

__all__ = [
    "DEFAULT_BUDGET", "GroebnerBasis", "buchberger", "contains", "dimension",
    "linear_part_rank_at_origin", "normal_form", "radical_member", "rank_of_rows",
    "ORDERS", "Polynomial", "Ring", "parse_polynomial",
]
