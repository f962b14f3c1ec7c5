"""
Registry of exhaustive checks. Each check walks every n in 1..max_n and
returns on the first counterexample it meets.
"""

from __future__ import annotations

import math
import time
from collections import Counter
from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Callable

from . import codes
from .bijections import (
    compositions, descent_class, descent_class_by_filter, in_shuffle_class,
    is_shuffle_with_identity, lemma4_tau, lemma4_violations, lemma5_iterates,
    lemma5_sort_prefix, lemma7_phi, shifted_shuffle, shuffle_of_identities,
    theorem2_map, theorem2_map_incremental, theorem2_target_by_labels,
    theorem2_insert_step,
)
from .codes import (
    delta, ic, ic_inv, insert_at_slot, invcode, invcode_inv, label_slots, lc,
    lc_inv, majcode, majcode_inv, mc, mc_inv, mc_inv_via_majcode, sort_word,
)
from .harness import compare_distributions
from .perm import (
    PositionSet, complement, format_perm, iligne, inv, inverse,
    ligne, maj, reverse,
)
from .setstats import el_set, eul, eul_set
from .table import emit_table, fixture_text, load_golden_fixture

__all__ = ["Check", "Outcome", "CHECKS", "run_check", "run_suite", "maj_polynomial", "mahonian_product"]


@dataclass
class Outcome:
    passed: bool
    witness: str | None = None
    note: str | None = None


@dataclass(frozen=True)
class Check:
    id: str
    summary: str
    default_n: int | None  # None: fixed at n = 4
    fn: Callable[[int], Outcome]
    extended_n: int | None = None


def _perms(n):
    return permutations(range(1, n + 1))


def _fmt(p) -> str:
    return format_perm(p, compact=len(p) <= 9)


def subexcedent_words(n):
    return product(*(range(i) for i in range(1, n + 1)))


def subdiagonal_words(n):
    return product(*(range(n - i + 1) for i in range(1, n + 1)))


# ---- equidistributions ----

def _equi(lhs, rhs):
    def fn(max_n):
        for n in range(1, max_n + 1):
            cmp = compare_distributions(n, lhs, rhs)
            if not cmp.equal:
                return Outcome(False, cmp.describe())
        return Outcome(True)
    return fn


def mahonian_product(n: int) -> list[int]:
    """Coefficients of (1)(1+q)(1+q+q^2)...(1+q+...+q^(n-1))."""
    coeffs = [1]
    for j in range(1, n + 1):
        out = [0] * (len(coeffs) + j - 1)
        for a, c in enumerate(coeffs):
            for b in range(j):
                out[a + b] += c
        coeffs = out
    return coeffs


def maj_polynomial(n: int) -> list[int]:
    counts = Counter(maj(p) for p in _perms(n))
    return [counts[k] for k in range(n * (n - 1) // 2 + 1)]


def check_genpoly(max_n):
    for n in range(1, max_n + 1):
        got, want = maj_polynomial(n), mahonian_product(n)
        if got != want:
            return Outcome(False, f"n={n}: maj coefficients {got} != product {want}")
        if got != got[::-1]:
            return Outcome(False, f"n={n}: {got} is not palindromic")
    return Outcome(True)


def check_neg_vector(max_n):
    for n in range(1, max_n + 1):
        cmp = compare_distributions(n, ["iligne", "majcode"], ["ligne", "invcode"])
        if not cmp.equal:
            return Outcome(True, cmp.describe(), note=f"minimal n = {n}")
    return Outcome(False, f"no witness up to n={max_n}")


def check_sc_pair(_):
    cmp = compare_distributions(4, ["iligne", "sort∘mc"], ["iligne", "sort∘sc"])
    return Outcome(cmp.equal, None if cmp.equal else cmp.describe())


def check_sc_triple(_):
    cmp = compare_distributions(4, ["iligne", "sort∘mc", "el∘mc"], ["iligne", "sort∘sc", "el∘sc"])
    if cmp.equal:
        return Outcome(False, "Sc triple unexpectedly equidistributed")
    w = cmp.witness
    rows = []
    for r in load_golden_fixture():
        key_mc = (str(iligne(r.sigma)), codes.format_code(sort_word(r.mc)), str(r.el_mc))
        key_sc = (str(iligne(r.sigma)), codes.format_code(sort_word(r.sc)), str(r.el_sc))
        if w in (key_mc, key_sc):
            rows.append("\t".join(r.cells()))
    return Outcome(True, cmp.describe() + " rows: " + " | ".join(rows))


def check_golden(_):
    rows = load_golden_fixture()
    out = emit_table(rows)
    if out != fixture_text():
        for a, b in zip(out.splitlines(), fixture_text().splitlines()):
            if a != b:
                return Outcome(False, f"emitted {a!r} vs fixture {b!r}")
        return Outcome(False, "line count differs")
    return Outcome(True, note=f"{len(rows)} rows")


# ---- descent-set complement ----

def check_r2_from_r3(max_n):
    for n in range(1, max_n + 1):
        for p in _perms(n):
            t = theorem2_map(p)
            if ligne(t) != ligne(p).complement():
                return Outcome(False, f"{_fmt(p)} -> {_fmt(t)}: Ligne {ligne(t)} vs {ligne(p)}")
            if theorem2_map(t) != p:
                return Outcome(False, f"{_fmt(p)}: map is not an involution")
    return Outcome(True)


def check_theorem2_st(max_n):
    for n in range(1, max_n + 1):
        for p in _perms(n):
            if theorem2_map_incremental(p) != theorem2_map(p):
                return Outcome(False, f"{_fmt(p)}: slot rules disagree with code route")
        if n < 2:
            continue
        # slot relations between a pair of order n-1 and the inserted letter n
        for sp in _perms(n - 1):
            tp = theorem2_map(sp)
            c, d = label_slots(sp).labels, label_slots(tp).labels
            if c[-1] != 0 or d[-1] != 0 or any(c[i] + d[i] != n for i in range(n - 1)):
                return Outcome(False, f"{_fmt(sp)}/{_fmt(tp)}: label sums {c} {d}")
            for s in range(1, n + 1):
                t = theorem2_insert_step(sp, tp, s)
                if t != theorem2_target_by_labels(sp, tp, s) or d[t - 1] != n - 1 - c[s - 1]:
                    return Outcome(False, f"{_fmt(sp)} slot {s}: t={t}")
                sigma = insert_at_slot(sp, s, n)
                if theorem2_map(sigma) != insert_at_slot(tp, t, n):
                    return Outcome(False, f"{_fmt(sigma)}: step target {t} is wrong")
    return Outcome(True)


# ---- code identities ----

def check_digit_sums(max_n):
    for n in range(1, max_n + 1):
        for p in _perms(n):
            m, i = maj(p), inv(p)
            sums = {"majcode": (sum(majcode(p)), m), "mc": (sum(mc(p)), m),
                    "invcode": (sum(invcode(p)), i), "lc": (sum(lc(p)), i), "ic": (sum(ic(p)), i)}
            for name, (got, want) in sums.items():
                if got != want:
                    return Outcome(False, f"{_fmt(p)}: sum {name} = {got}, expected {want}")
    return Outcome(True)


def check_lemma8(max_n):
    for n in range(1, max_n + 1):
        for p in _perms(n):
            if mc(p) != reverse(delta(majcode(complement(p)))):
                return Outcome(False, f"{_fmt(p)}: mc != r.delta.majcode.c")
            if ic(p) != reverse(delta(invcode(reverse(inverse(p))))):
                return Outcome(False, f"{_fmt(p)}: ic != r.delta.invcode.r.i")
    return Outcome(True)


def check_r7(max_n):
    for n in range(1, max_n + 1):
        for p in _perms(n):
            if invcode(reverse(p)) != delta(invcode(p)):
                a, b = codes.format_code(invcode(reverse(p))), codes.format_code(delta(invcode(p)))
                return Outcome(False, f"{_fmt(p)}: invcode(r p) = {a} but delta invcode(p) = {b}")
    return Outcome(True)


def check_r7_complement(max_n):
    for n in range(1, max_n + 1):
        for p in _perms(n):
            if invcode(complement(p)) != delta(invcode(p)):
                return Outcome(False, f"{_fmt(p)}: invcode(c p) != delta invcode(p)")
    return Outcome(True)


def check_lemma9(max_n):
    for n in range(1, max_n + 1):
        for d in subdiagonal_words(n):
            if el_set(d) != eul_set(delta(reverse(d))).complement():
                return Outcome(False, f"d={codes.format_code(d)}")
    return Outcome(True)


def check_lemma10(max_n):
    for n in range(1, max_n + 1):
        for d in subdiagonal_words(n):
            if el_set(d) != eul_set(reverse(d)):
                return Outcome(False, f"d={codes.format_code(d)}")
    return Outcome(True)


def check_eul_card(max_n):
    for n in range(1, max_n + 1):
        for w in subexcedent_words(n):
            if len(eul_set(w)) != eul(w):
                return Outcome(False, f"w={codes.format_code(w)}: #Eul={len(eul_set(w))} eul={eul(w)}")
    return Outcome(True)


def check_roundtrips(max_n):
    pairs = [("invcode", invcode, invcode_inv, subexcedent_words),
             ("majcode", majcode, majcode_inv, subexcedent_words),
             ("lc", lc, lc_inv, subdiagonal_words),
             ("ic", ic, ic_inv, subdiagonal_words),
             ("mc", mc, mc_inv, subdiagonal_words)]
    for n in range(1, max_n + 1):
        for name, enc, dec, words in pairs:
            image = set()
            for p in _perms(n):
                w = enc(p)
                image.add(w)
                if dec(w) != p:
                    return Outcome(False, f"{name}: decode(encode({_fmt(p)})) = {_fmt(dec(w))}")
            if len(image) != math.factorial(n):
                return Outcome(False, f"{name}: image has {len(image)} words at n={n}")
            for w in words(n):
                if enc(dec(w)) != w:
                    return Outcome(False, f"{name}: encode(decode({codes.format_code(w)})) differs")
        for w in subdiagonal_words(n):
            if mc_inv(w) != mc_inv_via_majcode(w):
                return Outcome(False, f"mc inverse routes differ on {codes.format_code(w)}")
    return Outcome(True)


def check_involutions(max_n):
    for n in range(1, max_n + 1):
        for p in _perms(n):
            for name, f in (("i", inverse), ("c", complement), ("r", reverse)):
                if f(f(p)) != p:
                    return Outcome(False, f"{name}{name} {_fmt(p)} != itself")
            if inv(p) != inv(inverse(p)):
                return Outcome(False, f"inv differs on {_fmt(p)} and its inverse")
            if ligne(complement(p)) != ligne(p).complement():
                return Outcome(False, f"Ligne of c {_fmt(p)}")
        for w in subexcedent_words(n):
            if delta(delta(w)) != w:
                return Outcome(False, f"delta delta {codes.format_code(w)}")
    return Outcome(True)


def check_slot_labels(max_n):
    # words of length m-1 with distinct letters: relative order is all that matters
    for m in range(1, max_n + 1):
        for w in permutations(range(1, m)):
            labels = label_slots(w).labels
            if sorted(labels) != list(range(m)):
                return Outcome(False, f"labels of {w} are {labels}")
            for s in range(1, m + 1):
                if labels[s - 1] != maj(insert_at_slot(w, s, m)) - maj(w):
                    return Outcome(False, f"slot {s} of {w}: label {labels[s - 1]}")
    return Outcome(True)


def check_m5_chain(max_n):
    for n in range(1, max_n + 1):
        for p in _perms(n):
            if el_set(ic(inverse(p))) != eul_set(invcode(p)):
                return Outcome(False, f"{_fmt(p)}: El.Ic.i != Eul.Invcode")
    return Outcome(True)


def check_m5_chain_corrected(max_n):
    """Pointwise El.Ic.i = Eul.Invcode.c.r, and (Ligne, El.Ic.i) ~ (Ligne, Eul.Invcode)."""
    for n in range(1, max_n + 1):
        lhs, rhs = Counter(), Counter()
        for p in _perms(n):
            e = el_set(ic(inverse(p)))
            if e != eul_set(invcode(complement(reverse(p)))):
                return Outcome(False, f"{_fmt(p)}: El.Ic.i != Eul.Invcode.c.r")
            lhs[str(ligne(p)), str(e)] += 1
            rhs[str(ligne(p)), str(eul_set(invcode(p)))] += 1
        if lhs != rhs:
            diff = min(k for k in lhs.keys() | rhs.keys() if lhs[k] != rhs[k])
            return Outcome(False, f"n={n}: (Ligne, El.Ic.i) vs (Ligne, Eul.Invcode) differ at {diff}")
    return Outcome(True)


# ---- properties of mc-codes ----

def _small_factors(p, k):
    run = []
    for x in p:
        if x <= k:
            run.append(x)
        else:
            if run:
                yield run
            run = []
    if run:
        yield run


def check_lemma3(max_n):
    for n in range(1, max_n + 1):
        for p in _perms(n):
            d = mc(p)
            for k in range(1, n + 1):
                if any(d[i] > d[i + 1] for i in range(k - 1)):
                    break
                for f in _small_factors(p, k):
                    if f != sorted(f):
                        return Outcome(False, f"{_fmt(p)}, k={k}: factor {f}")
    return Outcome(True)


def check_lemma4(max_n):
    seen = 0
    for n in range(1, max_n + 1):
        for p in _perms(n):
            d = mc(p)
            for k in range(1, n + 1):
                if lemma4_violations(p, k):
                    continue
                seen += 1
                t = lemma4_tau(p, k)
                rotated = (d[k - 1], *d[:k - 1], *d[k:])
                if ligne(t) != ligne(p) or mc(t) != rotated or mc_inv(rotated) != t:
                    return Outcome(False, f"{_fmt(p)}, k={k} -> {_fmt(t)}")
    return Outcome(True, note=f"{seen} valid inputs")


def check_lemma5(max_n):
    for n in range(1, max_n + 1):
        for p in _perms(n):
            d = mc(p)
            for k in range(1, n + 1):
                if not is_shuffle_with_identity(p, k):
                    continue
                for i in range(2, k + 1):
                    if not (d[i - 1] >= max(d[:i - 1]) or d[i - 1] <= min(d[:i - 1])):
                        return Outcome(False, f"{_fmt(p)}, k={k}: digit {i} is neither max nor min")
                taus = lemma5_iterates(p, k)
                t = lemma5_sort_prefix(p, k)
                if taus[-1] != t or any(ligne(x) != ligne(p) for x in taus):
                    return Outcome(False, f"{_fmt(p)}, k={k} -> {_fmt(t)}")
    return Outcome(True)


def check_lemma6(max_n):
    for length in range(1, max_n + 1):
        el_of = {w: el_set(w) for w in subdiagonal_words(length)}
        for j in range(length + 1):
            suffix_el = {w[j:]: el_set(w[j:]) for w in el_of} if j else {w: el_of[w] for w in el_of}
            image = {}
            for w, e in el_of.items():
                key = (w[:j], suffix_el[w[j:]])
                if image.setdefault(key, e) != e:
                    return Outcome(False, f"c={codes.format_code(w[:j])}, a/b with El={key[1]}")
    return Outcome(True)


def check_lemma7(max_n):
    for n in range(1, max_n + 1):
        for comp in compositions(n):
            cls = shuffle_of_identities(comp)
            images = set()
            for p in cls:
                f = lemma7_phi(p, comp)
                images.add(f)
                if not in_shuffle_class(f, comp):
                    return Outcome(False, f"phi({_fmt(p)}) = {_fmt(f)} leaves class {comp.parts}")
                if sort_word(mc(p)) != sort_word(ic(f)) or el_set(mc(p)) != el_set(ic(f)):
                    return Outcome(False, f"phi({_fmt(p)}) = {_fmt(f)} for {comp.parts}")
            if len(images) != len(cls):
                return Outcome(False, f"phi not injective on class {comp.parts}")
    return Outcome(True)


def _signed(counts: Counter, sign: int, into: dict):
    for k, v in counts.items():
        into[k] = into.get(k, 0) + sign * v


def check_theorem1_ie(max_n):
    """phi on containment classes, then inclusion-exclusion down to the exact classes."""
    lhs, rhs = ("sort∘mc", "el∘mc"), ("sort∘ic", "el∘ic")
    from .harness import distribution
    for n in range(1, max_n + 1):
        per_set = {}
        for comp in compositions(n):
            cls = shuffle_of_identities(comp)
            a = distribution(n, lhs, cls).counts
            b = distribution(n, rhs, cls).counts
            if a != b:
                return Outcome(False, f"containment class {comp.parts} at n={n}")
            per_set[comp.partial_sums().positions] = a
        for S in per_set:
            acc: dict = {}
            for r in range(len(S) + 1):
                for T in combinations(S, r):
                    _signed(per_set[T], (-1) ** (len(S) - r), acc)
            acc = {k: v for k, v in acc.items() if v}
            exact = descent_class_by_filter(n, PositionSet(S, n), strict=True)
            direct_l = distribution(n, lhs, exact).counts
            direct_r = distribution(n, rhs, exact).counts
            if acc != dict(direct_l) or acc != dict(direct_r):
                return Outcome(False, f"exact class {S} at n={n}")
    return Outcome(True)


def check_shuffle_class(max_n):
    for n in range(1, max_n + 1):
        for comp in compositions(n):
            S = comp.partial_sums()
            if shuffle_of_identities(comp) != descent_class_by_filter(n, S):
                return Outcome(False, f"shuffle != containment class for {comp.parts}")
            if descent_class(n, S, strict=True) != descent_class_by_filter(n, S, strict=True):
                return Outcome(False, f"inclusion-exclusion != filter for {S}")
        for k in range(0, n + 1):
            for a in permutations(range(1, k + 1)):
                for b in permutations(range(1, n - k + 1)):
                    sh = shifted_shuffle(a, b)
                    if len(sh) != math.comb(n, k) or len(set(sh)) != len(sh):
                        return Outcome(False, f"|{a} sh {b}| = {len(sh)}")
    return Outcome(True)


CHECKS: dict[str, Check] = {c.id: c for c in [
    Check("M1", "maj and inv are equidistributed", 8, _equi(["maj"], ["inv"])),
    Check("M2", "(iligne, maj) ~ (iligne, inv)", 8, _equi(["iligne", "maj"], ["iligne", "inv"])),
    Check("M3", "(des, maj) ~ (eul.invcode, inv)", 8, _equi(["des", "maj"], ["eul∘invcode", "inv"])),
    Check("M4", "(des, maj, ides, imaj) ~ (des, maj, eul.invcode, inv)", 8,
          _equi(["des", "maj", "ides", "imaj"], ["des", "maj", "eul∘invcode", "inv"])),
    Check("M5", "(iligne, Eul.majcode) ~ (ligne, Eul.invcode)", 8,
          _equi(["iligne", "eul_set∘majcode"], ["ligne", "eul_set∘invcode"])),
    Check("M6", "(iligne, sort.mc) ~ (iligne, sort.ic)", 8, _equi(["iligne", "sort∘mc"], ["iligne", "sort∘ic"])),
    Check("M7", "(iligne, sort.mc, El.mc) ~ (iligne, sort.ic, El.ic)", 7,
          _equi(["iligne", "sort∘mc", "el∘mc"], ["iligne", "sort∘ic", "el∘ic"]), extended_n=8),
    Check("theorem1-ie", "triple equidistribution rebuilt from shuffle classes by inclusion-exclusion",
          6, check_theorem1_ie, extended_n=7),
    Check("genpoly", "maj generating polynomial is the q-factorial and palindromic", 8, check_genpoly),
    Check("neg-vector", "(iligne, majcode) and (ligne, invcode) differ: minimal witness", 8, check_neg_vector),
    Check("sc-pair", "(iligne, sort.mc) ~ (iligne, sort.sc) on S_4", None, check_sc_pair),
    Check("sc-triple", "Sc triple is not equidistributed on S_4", None, check_sc_triple),
    Check("golden", "S_4 table regenerates the shipped fixture byte for byte", None, check_golden),
    Check("R2-from-R3", "delta-complemented majcode complements Ligne; map is an involution", 8, check_r2_from_r3),
    Check("theorem2-st", "slot rules st1-st4 rebuild the complement map; label relations", 8, check_theorem2_st),
    Check("digit-sums", "code digit sums equal maj / inv", 8, check_digit_sums),
    Check("roundtrips", "codes are bijections; both mc inverses agree", 8, check_roundtrips),
    Check("involutions", "i, c, r, delta are involutions; complement flips Ligne", 8, check_involutions),
    Check("slot-labels", "slot label = maj increment of inserting a maximum", 8, check_slot_labels),
    Check("lemma8", "mc = r.delta.majcode.c and ic = r.delta.invcode.r.i", 8, check_lemma8),
    Check("R7", "invcode(r p) = delta invcode(p)", 8, check_r7),
    Check("R7-c", "invcode(c p) = delta invcode(p)", 8, check_r7_complement),
    Check("lemma9", "El(d) = complement of Eul(delta r d)", 8, check_lemma9),
    Check("lemma10", "El(d) = Eul(r d)", 8, check_lemma10),
    Check("eul-card", "#Eul = eul on all subexcedent words", 8, check_eul_card),
    Check("M5-chain", "El.Ic.i = Eul.Invcode", 7, check_m5_chain, extended_n=8),
    Check("M5-chain-c", "El.Ic.i = Eul.Invcode.c.r; closing step holds in distribution", 7,
          check_m5_chain_corrected, extended_n=8),
    Check("lemma3", "nondecreasing mc prefix forces increasing small factors", 7, check_lemma3, extended_n=8),
    Check("lemma4", "prefix rotation keeps Ligne and rotates the mc prefix", 7, check_lemma4, extended_n=8),
    Check("lemma5", "prefix sorting keeps Ligne; iteration agrees with direct", 7, check_lemma5, extended_n=8),
    Check("lemma6", "El(a) = El(b) implies El(ca) = El(cb)", 7, check_lemma6, extended_n=8),
    Check("lemma7", "phi bijection on shuffle classes", 6, check_lemma7, extended_n=7),
    Check("shuffle-class", "shifted shuffles = descent classes; strict classes by inclusion-exclusion",
          6, check_shuffle_class),
]}


@dataclass
class CheckResult:
    id: str
    n_range: str
    passed: bool
    witness: str | None
    note: str | None
    elapsed_ms: float

    def to_record(self) -> dict:
        return {"id": self.id, "n_range": self.n_range,
                "verdict": "PASS" if self.passed else "FAIL",
                "witness": self.witness, "note": self.note,
                "elapsed_ms": round(self.elapsed_ms, 1)}


def run_check(check_id: str, max_n: int | None = None, extended: bool = False) -> CheckResult:
    if check_id not in CHECKS:
        raise KeyError(f"unknown check {check_id!r}")
    chk = CHECKS[check_id]
    if chk.default_n is None:
        n = 4
    elif max_n is not None:
        n = max_n
    else:
        n = chk.extended_n if extended and chk.extended_n else chk.default_n
    if not 1 <= n <= 10:
        raise ValueError(f"max_n must be in 1..10, got {n}")
    start = time.perf_counter()
    out = chk.fn(n)
    elapsed = (time.perf_counter() - start) * 1000
    n_range = "4" if chk.default_n is None else f"1..{n}"
    return CheckResult(check_id, n_range, out.passed, out.witness, out.note, elapsed)


def run_suite(max_n: int | None = None, selection=None, extended: bool = False,
              on_result: Callable[[CheckResult], None] | None = None) -> list[CheckResult]:
    ids = list(CHECKS) if not selection else list(selection)
    unknown = [i for i in ids if i not in CHECKS]
    if unknown:
        raise KeyError(f"unknown check(s): {', '.join(unknown)}")
    results = []
    for cid in ids:
        r = run_check(cid, max_n, extended)
        results.append(r)
        if on_result:
            on_result(r)
    return results
