"""Necklace and Lyndon word ranking, irreducible polynomial indexing, BCH matrices."""

from .counting import (
    count_lyndon,
    count_lyndon_below,
    count_necklaces,
    count_necklaces_below,
    count_words_below_period_dividing,
    count_words_below_period_exact,
    divisors,
    mobius,
)
from .indexing import (
    TOO_LARGE,
    RankResult,
    index_lyndon,
    index_necklace,
    reverse_index_lyndon,
    reverse_index_necklace,
)
from .words import (
    BinWord,
    NkString,
    bin_decode,
    bin_encode,
    fundamental_period,
    min_rotation,
    orbit_below,
    rotate,
)

__version__ = "0.1.0"

__all__ = [
    "BinWord",
    "NkString",
    "RankResult",
    "TOO_LARGE",
    "bin_decode",
    "bin_encode",
    "count_lyndon",
    "count_lyndon_below",
    "count_necklaces",
    "count_necklaces_below",
    "count_words_below_period_dividing",
    "count_words_below_period_exact",
    "divisors",
    "fundamental_period",
    "index_lyndon",
    "index_necklace",
    "min_rotation",
    "mobius",
    "orbit_below",
    "rotate",
    "reverse_index_lyndon",
    "reverse_index_necklace",
]
