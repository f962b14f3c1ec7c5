"""
Constructive transformations on permutations that preserve or complement the
descent set, plus shifted shuffles and descent classes.

Every map here is total only on the inputs where its construction is known to
work; anything else raises ``ValueError`` rather than being silently extended.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterator, Sequence

from .codes import (
    delta, ic, ic_inv, insert_at_slot, label_slots, majcode, majcode_inv,
    mc, mc_inv, slot_descents, sort_word,
)
from .perm import Perm, PositionSet, identity, iligne, ligne, restrict_geq

__all__ = [
    "Composition", "compositions",
    "lemma4_violations", "lemma4_tau",
    "lemma5_sort_prefix", "lemma5_iterates", "is_shuffle_with_identity",
    "lemma7_phi", "in_shuffle_class",
    "theorem2_map", "theorem2_insert_step", "theorem2_target_by_labels",
    "theorem2_map_incremental",
    "shifted_shuffle", "shuffle_of_identities",
    "descent_class", "descent_class_by_filter",
]


@dataclass(frozen=True)
class Composition:
    parts: tuple[int, ...]

    def __post_init__(self):
        if any(k < 1 for k in self.parts):
            raise ValueError(f"composition parts must be positive: {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def partial_sums(self) -> PositionSet:
        acc, out = 0, []
        for k in self.parts[:-1]:
            acc += k
            out.append(acc)
        return PositionSet(tuple(out), self.n)

    @classmethod
    def from_positions(cls, positions: PositionSet) -> "Composition":
        cuts = (0, *positions.positions, positions.n)
        return cls(tuple(b - a for a, b in zip(cuts, cuts[1:])))


def compositions(n: int) -> Iterator[Composition]:
    """All 2^(n-1) compositions of n >= 1 (just the empty one for n = 0)."""
    if n == 0:
        yield Composition(())
        return
    for r in range(n):
        for cuts in combinations(range(1, n), r):
            yield Composition.from_positions(PositionSet(cuts, n))


# ---- prefix rotation ----

def lemma4_violations(p: Perm, k: int) -> list[str]:
    """Names of the conditions C1..C4 that fail for (p, k)."""
    n = len(p)
    if not 2 <= k <= n:
        return ["C1", "C2", "C3", "C4"] if not 1 <= k <= n else ["C2"]
    d = mc(p)
    bad = []
    if any(d[i] > d[i + 1] for i in range(k - 2)):
        bad.append("C1")
    if not d[k - 2] > d[k - 1]:
        bad.append("C2")
    if not d[k - 1] <= d[0]:
        bad.append("C3")
    pos = {x: i for i, x in enumerate(p)}
    if any(pos[i] > pos[k] for i in range(1, k)):
        bad.append("C4")
    return bad


def lemma4_tau(p: Perm, k: int) -> Perm:
    """
    Move the k-th mc digit in front of the first k-1 ones without changing the
    descent set: letters < k shift up by one, k becomes 1, then the maximal
    run of small letters (<= k) around the new 1 is sorted.
    """
    bad = lemma4_violations(p, k)
    if bad:
        raise ValueError(f"conditions {', '.join(bad)} fail for k={k}")
    t = [x if x > k else (x + 1 if x < k else 1) for x in p]
    at = t.index(1)
    lo = at
    while lo > 0 and t[lo - 1] <= k:
        lo -= 1
    hi = at + 1
    while hi < len(t) and t[hi] <= k:
        hi += 1
    t[lo:hi] = sorted(t[lo:hi])
    return tuple(t)


# ---- prefix sorting ----

def is_shuffle_with_identity(p: Perm, k: int) -> bool:
    small = [x for x in p if x <= k]
    return small == list(range(1, k + 1))


def lemma5_iterates(p: Perm, k: int) -> list[Perm]:
    """
    tau_1, ..., tau_k where tau_i has mc-code sort(d_1..d_i) d_{i+1}..d_n.
    Each step either leaves the permutation alone (d_i already on top) or is
    one prefix rotation.
    """
    if not 1 <= k <= len(p) or not is_shuffle_with_identity(p, k):
        raise ValueError(f"letters 1..{k} must appear in increasing order")
    taus = [p]
    cur = p
    for i in range(2, k + 1):
        code = mc(cur)
        if code[i - 1] < max(code[:i - 1]):
            cur = lemma4_tau(cur, i)
        taus.append(cur)
    return taus


def lemma5_sort_prefix(p: Perm, k: int) -> Perm:
    if not 1 <= k <= len(p) or not is_shuffle_with_identity(p, k):
        raise ValueError(f"letters 1..{k} must appear in increasing order")
    d = mc(p)
    return mc_inv(sort_word(d[:k]) + d[k:])


# ---- shifted shuffles and descent classes ----

def shifted_shuffle(alpha: Sequence[int], beta: Sequence[int]) -> list[Perm]:
    """All interleavings of alpha with beta shifted above it, in lex order."""
    k, l = len(alpha), len(beta)
    shifted = [y + k for y in beta]
    out = []
    for slots in combinations(range(k + l), k):
        word, a, b = [], iter(alpha), iter(shifted)
        chosen = set(slots)
        for pos in range(k + l):
            word.append(next(a) if pos in chosen else next(b))
        out.append(tuple(word))
    return sorted(out)


def shuffle_of_identities(comp: Composition) -> list[Perm]:
    """id_{k_1} shuffled with id_{k_2}, ..., id_{k_r}, folded left to right."""
    acc: list[Perm] = [()]
    for k in comp.parts:
        acc = [s for alpha in acc for s in shifted_shuffle(alpha, identity(k))]
    return sorted(acc)


def in_shuffle_class(p: Perm, comp: Composition) -> bool:
    return len(p) == comp.n and set(iligne(p)) <= set(comp.partial_sums())


def descent_class_by_filter(n: int, positions: PositionSet, strict: bool = False) -> list[Perm]:
    target = set(positions)
    out = []
    for p in permutations(range(1, n + 1)):
        got = set(iligne(p))
        if (got == target) if strict else (got <= target):
            out.append(p)
    return out


def descent_class(n: int, positions: PositionSet, strict: bool = False) -> list[Perm]:
    """
    Permutations whose inverse descent set is contained in (or, with
    ``strict``, equal to) ``positions``. The containment class is built as a
    shuffle of identities; the strict class by signed inclusion-exclusion
    over subsets of ``positions``.
    """
    if positions.n != n:
        raise ValueError(f"position set lives in S_{positions.n}, not S_{n}")
    if not strict:
        return shuffle_of_identities(Composition.from_positions(positions))
    signed: Counter = Counter()
    ps = positions.positions
    for r in range(len(ps) + 1):
        sign = (-1) ** (len(ps) - r)
        for sub in combinations(ps, r):
            for p in shuffle_of_identities(Composition.from_positions(PositionSet(sub, n))):
                signed[p] += sign
    assert all(c in (0, 1) for c in signed.values())
    return sorted(p for p, c in signed.items() if c == 1)


# ---- the bijection behind the triple equidistribution ----

def lemma7_phi(p: Perm, comp: Composition) -> Perm:
    """
    Recursive map on id_{k_1} shuffled with ... id_{k_r}: peel off the k_1
    smallest letters, sort their mc digits, and rebuild through Ic with the
    image of the remaining (standardised) letters.
    """
    if not in_shuffle_class(p, comp):
        raise ValueError(f"{p} is not in the shuffle class of {comp.parts}")
    if not comp.parts:
        return ()
    k = comp.parts[0]
    head = sort_word(mc(p)[:k])
    beta = tuple(x - k for x in restrict_geq(p, k + 1))
    rest = lemma7_phi(beta, Composition(comp.parts[1:]))
    return ic_inv(head + ic(rest))


# ---- descent-set complement ----

def theorem2_map(p: Perm) -> Perm:
    """The permutation whose majcode is the delta-complement of p's."""
    return majcode_inv(delta(majcode(p)))


def _check_complementary(sp: Perm, tp: Perm):
    if len(sp) != len(tp):
        raise ValueError("permutations of different orders")
    if ligne(tp) != ligne(sp).complement():
        raise ValueError(f"{tp} does not have the complementary descent set of {sp}")


def theorem2_insert_step(sp: Perm, tp: Perm, s: int) -> int:
    """
    Given sp, tp of order n-1 with complementary descent sets and the slot s
    where n goes into sp, return the slot t where n must go into tp.

    A rise s jumps to the next rise on its right (the rightmost rise jumps to
    the last slot); a descent s jumps to the previous descent on its left (the
    leftmost descent jumps to the first slot).
    """
    _check_complementary(sp, tp)
    m = len(sp) + 1
    if not 1 <= s <= m:
        raise ValueError(f"slot {s} outside 1..{m}")
    flags = slot_descents(sp)
    if not flags[s - 1]:
        rises = [j for j in range(s + 1, m + 1) if not flags[j - 1]]
        return rises[0] if rises else m
    descents = [j for j in range(1, s) if flags[j - 1]]
    return descents[-1] if descents else 1


def theorem2_target_by_labels(sp: Perm, tp: Perm, s: int) -> int:
    """Same slot as ``theorem2_insert_step``, found through d(t) = n-1-c(s)."""
    _check_complementary(sp, tp)
    m = len(sp) + 1
    c = label_slots(sp)
    return label_slots(tp).slot_of(m - 1 - c.labels[s - 1])


def theorem2_map_incremental(p: Perm) -> Perm:
    """Build the image of p letter by letter with ``theorem2_insert_step``."""
    n = len(p)
    if n == 0:
        return ()
    sp: Perm = (1,)
    tp: Perm = (1,)
    for m in range(2, n + 1):
        nxt = tuple(x for x in p if x <= m)
        t = theorem2_insert_step(sp, tp, nxt.index(m) + 1)
        sp, tp = nxt, insert_at_slot(tp, t, m)
    return tp
