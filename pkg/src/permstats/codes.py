"""
Code bijections between S_n and words of bounded digits.

Subexcedent words (0 <= d_i <= i-1) are the codomain of ``invcode`` and
``majcode``; subdiagonal words (0 <= d_i <= n-i) are the codomain of ``lc``,
``ic`` and ``mc``. The reversal ``perm.reverse`` swaps the two families, and
``delta`` complements a subexcedent word digit-wise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .perm import Perm, Word, complement, inverse, maj, reverse

__all__ = [
    "is_subexcedent", "is_subdiagonal", "check_subexcedent", "check_subdiagonal",
    "parse_code", "format_code",
    "invcode", "invcode_inv", "majcode", "majcode_inv",
    "lc", "lc_inv", "ic", "ic_inv", "mc", "mc_inv", "mc_inv_via_majcode",
    "delta", "sort_word",
    "SlotLabeling", "slot_descents", "label_slots", "insert_at_slot",
]


def is_subexcedent(w: Sequence[int]) -> bool:
    return all(0 <= d <= i for i, d in enumerate(w))


def is_subdiagonal(w: Sequence[int]) -> bool:
    n = len(w)
    return all(0 <= d <= n - i for i, d in enumerate(w, start=1))


def check_subexcedent(w: Sequence[int]) -> Word:
    w = tuple(w)
    if not is_subexcedent(w):
        raise ValueError(f"{format_code(w)} is not subexcedent")
    return w


def check_subdiagonal(w: Sequence[int]) -> Word:
    w = tuple(w)
    if not is_subdiagonal(w):
        raise ValueError(f"{format_code(w)} is not subdiagonal")
    return w


def parse_code(text: str) -> Word:
    """``"002135573"`` or ``"0,0,2,10,..."``; no range validation here."""
    text = text.strip()
    if any(sep in text for sep in " ,\t"):
        return tuple(int(t) for t in text.replace(",", " ").split())
    if not text.isdigit():
        raise ValueError(f"cannot parse code word {text!r}")
    return tuple(int(ch) for ch in text)


def format_code(w: Sequence[int]) -> str:
    if all(0 <= d <= 9 for d in w):
        return "".join(map(str, w))
    return ",".join(map(str, w))


def sort_word(w: Sequence[int]) -> Word:
    return tuple(sorted(w))


def delta(w: Sequence[int]) -> Word:
    """Digit-wise complement (i-1) - d_i of a subexcedent word."""
    w = check_subexcedent(w)
    return tuple(i - d for i, d in enumerate(w))


# ---- Lehmer code and its relatives ----

def invcode(p: Perm) -> Word:
    """d_i = number of letters left of position i that are larger than x_i."""
    return tuple(sum(1 for y in p[:i] if y > x) for i, x in enumerate(p))


def invcode_inv(w: Sequence[int]) -> Perm:
    w = check_subexcedent(w)
    n = len(w)
    # letters still unplaced are exactly {x_1..x_i}; x_i is the (i-d_i)-th smallest
    pool = list(range(1, n + 1))
    out = [0] * n
    for i in range(n, 0, -1):
        out[i - 1] = pool.pop(i - w[i - 1] - 1)
    return tuple(out)


def lc(p: Perm) -> Word:
    """d_i = number of letters right of position i that are smaller than x_i."""
    return tuple(sum(1 for y in p[i + 1:] if y < x) for i, x in enumerate(p))


def lc_inv(w: Sequence[int]) -> Perm:
    w = check_subdiagonal(w)
    # lc = r . invcode . r . c
    return complement(reverse(invcode_inv(reverse(w))))


def ic(p: Perm) -> Word:
    return lc(inverse(p))


def ic_inv(w: Sequence[int]) -> Perm:
    w = check_subdiagonal(w)
    # ic = r . delta . invcode . r . i
    return inverse(reverse(invcode_inv(delta(reverse(w)))))


# ---- maj-increment codes ----

def majcode(p: Perm) -> Word:
    """d_i = maj(p restricted to letters <= i) - maj(p restricted to letters <= i-1)."""
    n = len(p)
    out = []
    prev = 0
    for i in range(1, n + 1):
        cur = maj([x for x in p if x <= i])
        out.append(cur - prev)
        prev = cur
    return tuple(out)


def mc(p: Perm) -> Word:
    """d_i = maj(letters >= i) - maj(letters >= i+1); digits telescope to maj(p)."""
    n = len(p)
    out = [0] * n
    prev = 0
    for i in range(n, 0, -1):
        cur = maj([x for x in p if x >= i])
        out[i - 1] = cur - prev
        prev = cur
    return tuple(out)


@dataclass(frozen=True)
class SlotLabeling:
    """
    Labels of the len(w)+1 insertion slots of a word w, left to right.

    ``labels[s-1]`` is the label of slot s, i.e. the gap between w_{s-1} and
    w_s with 0-valued sentinels at both ends. ``descents`` counts descent
    slots (the rightmost slot always is one).
    """
    labels: tuple[int, ...]
    descents: int

    def slot_of(self, label: int) -> int:
        return self.labels.index(label) + 1

    def is_descent(self, slot: int) -> bool:
        return self.labels[slot - 1] < self.descents


def slot_descents(w: Sequence[int]) -> list[bool]:
    """Descent flag for each slot 1..len(w)+1 of the 0-padded word."""
    padded = [0, *w, 0]
    m = len(w) + 1
    return [s == m or padded[s - 1] > padded[s] for s in range(1, m + 1)]


def label_slots(w: Sequence[int]) -> SlotLabeling:
    """
    Label the slots so that inserting a new maximum into slot s raises maj by
    exactly the label of s: descents get 0..k-1 right to left, rises get
    k..m-1 left to right.
    """
    flags = slot_descents(w)
    k = sum(flags)
    labels = [0] * len(flags)
    nxt = 0
    for s in reversed(range(len(flags))):
        if flags[s]:
            labels[s] = nxt
            nxt += 1
    for s in range(len(flags)):
        if not flags[s]:
            labels[s] = nxt
            nxt += 1
    return SlotLabeling(tuple(labels), k)


def insert_at_slot(w: Sequence[int], slot: int, letter: int) -> Word:
    return (*w[:slot - 1], letter, *w[slot - 1:])


def majcode_inv(w: Sequence[int]) -> Perm:
    """Insert 1, 2, ..., n one at a time, letter i into the slot labelled d_i."""
    w = check_subexcedent(w)
    if not w:
        return ()
    out: tuple[int, ...] = (1,)
    for i in range(2, len(w) + 1):
        slot = label_slots(out).slot_of(w[i - 1])
        out = insert_at_slot(out, slot, i)
    return out


def mc_inv(w: Sequence[int]) -> Perm:
    """
    Top-down insertion: letters n, n-1, ..., 1, letter i placed in the unique
    slot of the current word where it raises maj by d_i.
    """
    w = check_subdiagonal(w)
    n = len(w)
    out: tuple[int, ...] = ()
    base = 0
    for i in range(n, 0, -1):
        target = base + w[i - 1]
        hits = [s for s in range(1, len(out) + 2) if maj(insert_at_slot(out, s, i)) == target]
        if len(hits) != 1:
            raise AssertionError(f"maj increments not unique inserting {i} into {out}")
        out = insert_at_slot(out, hits[0], i)
        base = target
    return out


def mc_inv_via_majcode(w: Sequence[int]) -> Perm:
    """Inverse of mc = r . delta . majcode . c, i.e. c . majcode_inv . delta . r."""
    w = check_subdiagonal(w)
    return complement(majcode_inv(delta(reverse(w))))
