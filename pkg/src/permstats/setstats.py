"""Integral ``eul`` and the set-valued statistics Eul and El on code words."""

from __future__ import annotations

from typing import Sequence

from .codes import check_subdiagonal, check_subexcedent, majcode_inv, mc_inv
from .perm import PositionSet, ligne

__all__ = ["eul", "eul_set", "el_set"]


def eul(w: Sequence[int]) -> int:
    """
    Left fold over a subexcedent word: the running value grows by one exactly
    when the next digit exceeds it.

    >>> eul((0, 1, 2, 3))
    3
    >>> eul((0, 0, 2, 0, 2))
    2
    """
    w = check_subexcedent(w)
    if not w:
        raise ValueError("eul is undefined on the empty word")
    e = 0
    for d in w[1:]:
        if d >= e + 1:
            e += 1
    return e


def eul_set(w: Sequence[int]) -> PositionSet:
    """Eul(w): the descent set of the permutation whose majcode is w."""
    return ligne(majcode_inv(check_subexcedent(w)))


def el_set(w: Sequence[int]) -> PositionSet:
    """El(w): the descent set of the permutation whose mc-code is w."""
    return ligne(mc_inv(check_subdiagonal(w)))
