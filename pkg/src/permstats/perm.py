"""
Permutations of {1..n} in one-line notation, integer words, and the classical
descent statistics.

Permutations are plain tuples of ints (``(9, 3, 5, 7, 2, 1, 4, 6, 8)``);
positions are 1-based in every returned value. Statistics accept arbitrary
integer words, not only permutations.

>>> maj((9, 3, 5, 7, 2, 1, 4, 6, 8))
10
>>> str(ligne((9, 3, 5, 7, 2, 1, 4, 6, 8)))
'145'
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Perm", "Word", "PositionSet",
    "as_perm", "is_perm", "parse_perm", "format_perm",
    "descent_positions", "des", "maj", "inv",
    "ligne", "iligne", "ides", "imaj",
    "inverse", "complement", "reverse",
    "restrict_leq", "restrict_geq", "identity",
]

Word = tuple[int, ...]
Perm = tuple[int, ...]


@dataclass(frozen=True, order=True)
class PositionSet:
    """A subset of {1..n-1}, remembering the ambient n."""
    positions: tuple[int, ...]
    n: int

    def __post_init__(self):
        ps = tuple(self.positions)
        if any(b <= a for a, b in zip(ps, ps[1:])):
            ps = tuple(sorted(set(ps)))
        for p in ps:
            if not 1 <= p <= self.n - 1:
                raise ValueError(f"position {p} outside 1..{self.n - 1}")
        object.__setattr__(self, "positions", ps)

    @classmethod
    def of(cls, positions: Iterable[int], n: int) -> "PositionSet":
        return cls(tuple(sorted(set(positions))), n)

    @classmethod
    def parse(cls, text: str, n: int) -> "PositionSet":
        """Inverse of ``str``: ``"13"``, ``"1,3"`` or ``"-"`` for the empty set."""
        text = text.strip()
        if text in ("-", "", "∅", "ε"):
            return cls((), n)
        if "," in text or " " in text:
            return cls.of((int(t) for t in text.replace(",", " ").split()), n)
        if not text.isdigit():
            raise ValueError(f"cannot parse position set {text!r}")
        return cls.of((int(ch) for ch in text), n)

    def complement(self) -> "PositionSet":
        return PositionSet(tuple(p for p in range(1, self.n) if p not in self.positions), self.n)

    def __iter__(self) -> Iterator[int]:
        return iter(self.positions)

    def __len__(self) -> int:
        return len(self.positions)

    def __contains__(self, p) -> bool:
        return p in self.positions

    def __str__(self) -> str:
        if not self.positions:
            return "-"
        if self.n <= 9:
            return "".join(map(str, self.positions))
        return ",".join(map(str, self.positions))


def is_perm(seq: Sequence[int]) -> bool:
    return sorted(seq) == list(range(1, len(seq) + 1))


def as_perm(seq: Iterable[int]) -> Perm:
    """Validate and freeze a one-line permutation of {1..n}."""
    p = tuple(int(x) for x in seq)
    if not is_perm(p):
        raise ValueError(f"{p} is not a permutation of 1..{len(p)}")
    return p


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def parse_perm(text: str) -> Perm:
    """
    Read a permutation written either with separators (``"12 5 9 ..."``,
    ``"3,1,4,2"``) or, for n <= 9, as a compact digit string (``"3142"``).
    """
    text = text.strip()
    if any(sep in text for sep in " ,\t"):
        return as_perm(int(t) for t in text.replace(",", " ").split())
    if not text.isdigit():
        raise ValueError(f"cannot parse permutation {text!r}")
    return as_perm(int(ch) for ch in text)


def format_perm(p: Sequence[int], compact: bool = False) -> str:
    if compact:
        if len(p) > 9:
            raise ValueError("compact form needs n <= 9")
        return "".join(map(str, p))
    return " ".join(map(str, p))


# ---- statistics on general words ----

def descent_positions(w: Sequence[int]) -> tuple[int, ...]:
    return tuple(i for i in range(1, len(w)) if w[i - 1] > w[i])


def des(w: Sequence[int]) -> int:
    return sum(1 for i in range(1, len(w)) if w[i - 1] > w[i])


def maj(w: Sequence[int]) -> int:
    return sum(i for i in range(1, len(w)) if w[i - 1] > w[i])


def inv(w: Sequence[int]) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def ligne(w: Sequence[int]) -> PositionSet:
    """Descent set of ``w`` as a PositionSet over n = len(w)."""
    return PositionSet(descent_positions(w), len(w))


# ---- dihedral operators ----

def inverse(p: Sequence[int]) -> Perm:
    inv_p = [0] * len(p)
    for i, x in enumerate(p, start=1):
        inv_p[x - 1] = i
    return tuple(inv_p)


def complement(p: Sequence[int]) -> Perm:
    n = len(p)
    return tuple(n + 1 - x for x in p)


def reverse(w: Sequence[int]) -> tuple[int, ...]:
    return tuple(reversed(w))


def iligne(p: Sequence[int]) -> PositionSet:
    return ligne(inverse(p))


def ides(p: Sequence[int]) -> int:
    return des(inverse(p))


def imaj(p: Sequence[int]) -> int:
    return maj(inverse(p))


# ---- restrictions ----

def restrict_leq(p: Sequence[int], i: int) -> Perm:
    """Erase the letters i+1..n; the result lies in S_i."""
    if not 0 <= i <= len(p):
        raise ValueError(f"restriction index {i} outside 0..{len(p)}")
    return tuple(x for x in p if x <= i)


def restrict_geq(p: Sequence[int], i: int) -> Word:
    """Erase the letters smaller than i (i = n+1 leaves the empty word)."""
    if not 1 <= i <= len(p) + 1:
        raise ValueError(f"restriction index {i} outside 1..{len(p) + 1}")
    return tuple(x for x in p if x >= i)
