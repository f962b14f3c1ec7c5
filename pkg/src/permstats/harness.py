"""
Exhaustive enumeration of S_n, statistic tuples, and exact multiset
comparison of their distributions.

Statistic values are serialised to strings before counting (position sets as
``"13"``/``"-"``, code words as digit strings), so a Distribution is a plain
Counter of string tuples and can be merged across workers with ``+``.
"""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice, permutations
from typing import Callable, Iterator, Sequence

from .codes import format_code, ic, invcode, lc, majcode, mc, sort_word
from .perm import Perm, PositionSet, des, ides, iligne, imaj, inv, ligne, maj
from .setstats import el_set, eul, eul_set

__all__ = [
    "MAX_N", "STATISTICS", "resolve", "enumerate_sn", "perms_in_rank_range",
    "eval_tuple", "Distribution", "distribution", "Comparison", "compare_distributions",
]

MAX_N = 10


def _sc(p):
    from .table import sc_code
    return sc_code(p)


STATISTICS: dict[str, Callable[[Perm], object]] = {
    "des": des,
    "maj": maj,
    "inv": inv,
    "ides": ides,
    "imaj": imaj,
    "ligne": ligne,
    "iligne": iligne,
    "invcode": invcode,
    "majcode": majcode,
    "lc": lc,
    "ic": ic,
    "mc": mc,
    "sort∘mc": lambda p: sort_word(mc(p)),
    "sort∘ic": lambda p: sort_word(ic(p)),
    "eul∘invcode": lambda p: eul(invcode(p)),
    "eul_set∘majcode": lambda p: eul_set(majcode(p)),
    "eul_set∘invcode": lambda p: eul_set(invcode(p)),
    "el∘mc": lambda p: el_set(mc(p)),
    "el∘ic": lambda p: el_set(ic(p)),
    "sc": _sc,
    "sort∘sc": lambda p: sort_word(_sc(p)),
    "el∘sc": lambda p: el_set(_sc(p)),
}


def resolve(name: str) -> str:
    """Canonical registry name; ``.`` may stand in for ``∘``."""
    key = name.strip().replace(".", "∘")
    if key not in STATISTICS:
        raise KeyError(f"unknown statistic {name!r}")
    return key


def render(value) -> str:
    if isinstance(value, PositionSet):
        return str(value)
    if isinstance(value, tuple):
        return format_code(value)
    return str(value)


def eval_tuple(p: Perm, specs: Sequence[str]) -> tuple[str, ...]:
    if not specs:
        raise ValueError("at least one statistic is required")
    return tuple(render(STATISTICS[resolve(s)](p)) for s in specs)


def _check_n(n: int):
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must be in 1..{MAX_N}, got {n}")


def enumerate_sn(n: int) -> Iterator[Perm]:
    """All of S_n in lexicographic order."""
    _check_n(n)
    return permutations(range(1, n + 1))


def perms_in_rank_range(n: int, lo: int, hi: int) -> Iterator[Perm]:
    """Permutations of lexicographic rank lo <= r < hi."""
    return islice(enumerate_sn(n), lo, hi)


@dataclass
class Distribution:
    counts: Counter = field(default_factory=Counter)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def __add__(self, other: "Distribution") -> "Distribution":
        return Distribution(self.counts + other.counts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Distribution) and self.counts == other.counts


def _count(n: int, specs: tuple[str, ...], lo: int, hi: int) -> Distribution:
    fns = [STATISTICS[resolve(s)] for s in specs]
    c: Counter = Counter()
    for p in perms_in_rank_range(n, lo, hi):
        c[tuple(render(f(p)) for f in fns)] += 1
    return Distribution(c)


def distribution(n: int, specs: Sequence[str], perms=None, workers: int = 1) -> Distribution:
    """
    Count statistic tuples over ``perms`` (default: all of S_n). With
    ``workers > 1`` the rank range is split into contiguous chunks.
    """
    specs = tuple(resolve(s) for s in specs)
    if perms is not None:
        fns = [STATISTICS[s] for s in specs]
        return Distribution(Counter(tuple(render(f(p)) for f in fns) for p in perms))
    _check_n(n)
    total = math.factorial(n)
    if workers <= 1:
        return _count(n, specs, 0, total)
    step = -(-total // workers)
    bounds = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(_count, [n] * len(bounds), [specs] * len(bounds),
                         [b[0] for b in bounds], [b[1] for b in bounds])
        return sum(parts, Distribution())


@dataclass
class Comparison:
    n: int
    lhs: tuple[str, ...]
    rhs: tuple[str, ...]
    equal: bool
    witness: tuple[str, ...] | None = None
    lhs_count: int = 0
    rhs_count: int = 0

    def describe(self) -> str:
        if self.equal:
            return f"n={self.n}: EQUAL"
        return (f"n={self.n}: UNEQUAL at ({', '.join(self.witness)}): "
                f"lhs={self.lhs_count} rhs={self.rhs_count}")


def compare_distributions(n: int, lhs: Sequence[str], rhs: Sequence[str],
                          perms=None, workers: int = 1) -> Comparison:
    """
    Decide whether two statistic tuples are equidistributed on S_n (or on
    ``perms``). On failure the witness is the lexicographically least tuple
    whose two counts differ.
    """
    if len(lhs) != len(rhs):
        raise ValueError("statistic tuples must have the same arity")
    if perms is not None:
        perms = list(perms)
    a = distribution(n, lhs, perms, workers).counts
    b = distribution(n, rhs, perms, workers).counts
    lhs, rhs = tuple(map(resolve, lhs)), tuple(map(resolve, rhs))
    diff = sorted(k for k in a.keys() | b.keys() if a[k] != b[k])
    if not diff:
        return Comparison(n, lhs, rhs, True)
    w = diff[0]
    return Comparison(n, lhs, rhs, False, w, a[w], b[w])
