"""Permutation statistics, code bijections and exhaustive equidistribution checks."""

from .perm import (
    PositionSet, as_perm, complement, des, ides, iligne, imaj, inv, inverse,
    ligne, maj, parse_perm, format_perm, restrict_geq, restrict_leq, reverse,
)
from .codes import (
    delta, ic, ic_inv, invcode, invcode_inv, label_slots, lc, lc_inv, majcode,
    majcode_inv, mc, mc_inv, sort_word,
)
from .setstats import el_set, eul, eul_set

__version__ = "0.1.0"

__all__ = [
    "PositionSet", "as_perm", "complement", "des", "ides", "iligne", "imaj", "inv",
    "inverse", "ligne", "maj", "parse_perm", "format_perm", "restrict_geq",
    "restrict_leq", "reverse", "delta", "ic", "ic_inv", "invcode", "invcode_inv",
    "label_slots", "lc", "lc_inv", "majcode", "majcode_inv", "mc", "mc_inv",
    "sort_word", "el_set", "eul", "eul_set",
]
