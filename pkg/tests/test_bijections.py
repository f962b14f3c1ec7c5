from itertools import permutations
from math import comb

import pytest
from hypothesis import given, strategies as st

from permstats.bijections import (
    Composition, compositions, descent_class, descent_class_by_filter,
    in_shuffle_class, lemma4_tau, lemma4_violations, lemma5_iterates,
    lemma5_sort_prefix, lemma7_phi, shifted_shuffle, shuffle_of_identities,
    theorem2_insert_step, theorem2_map, theorem2_map_incremental,
    theorem2_target_by_labels,
)
from permstats.codes import format_code, ic, label_slots, majcode_inv, mc, sort_word
from permstats.perm import PositionSet, identity, ligne, parse_perm
from permstats.setstats import el_set

P = parse_perm


@st.composite
def perms(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    return tuple(draw(st.permutations(range(1, n + 1))))


# ---- prefix rotation ----

def test_rotation_worked_example():
    sigma = P("5 6 12 4 10 2 3 9 11 1 7 8")
    tau = lemma4_tau(sigma, 7)
    assert tau == P("6 7 12 5 10 3 4 9 11 1 2 8")
    assert format_code(mc(tau)) == "001123342010"
    assert ligne(tau) == ligne(sigma)


def test_rotation_rejects_constant_prefix():
    # identity has an all-zero code, so d_{k-1} > d_k can never hold
    p = identity(5)
    assert "C2" in lemma4_violations(p, 3)
    with pytest.raises(ValueError, match="C2"):
        lemma4_tau(p, 3)


def test_rotation_rejects_k_out_of_range():
    with pytest.raises(ValueError):
        lemma4_tau(P("5 6 12 4 10 2 3 9 11 1 7 8"), 13)


def test_rotation_postconditions_exhaustive():
    valid = 0
    for n in range(2, 7):
        for p in permutations(range(1, n + 1)):
            d = mc(p)
            for k in range(2, n + 1):
                if lemma4_violations(p, k):
                    continue
                valid += 1
                tau = lemma4_tau(p, k)
                assert ligne(tau) == ligne(p)
                assert mc(tau) == (d[k - 1], *d[:k - 1], *d[k:])
    assert valid > 0


# ---- prefix sorting ----

def test_prefix_sorting_worked_example():
    sigma = P("12 1 2 3 10 4 9 5 6 11 7 8")
    assert format_code(mc(sigma)) == "333214042010"
    taus = lemma5_iterates(sigma, 7)
    assert taus[0] == taus[1] == taus[2] == sigma
    assert taus[3] == P("12 2 3 4 10 1 9 5 6 11 7 8")
    assert taus[4] == taus[5] == P("12 3 4 5 10 2 9 1 6 11 7 8")
    assert taus[6] == P("12 4 5 6 10 3 9 2 7 11 1 8")
    assert lemma5_sort_prefix(sigma, 7) == taus[6]
    assert ligne(sigma).positions == ligne(taus[6]).positions == (1, 5, 7, 10)


def test_prefix_sorting_k1_is_identity_map():
    for p in permutations(range(1, 6)):
        assert lemma5_sort_prefix(p, 1) == p


def test_prefix_sorting_needs_increasing_small_letters():
    with pytest.raises(ValueError):
        lemma5_sort_prefix(P("2 1 3"), 2)


def test_prefix_sorting_routes_agree():
    for n in range(1, 7):
        for p in permutations(range(1, n + 1)):
            for k in range(1, n + 1):
                small = [x for x in p if x <= k]
                if small != sorted(small):
                    continue
                direct = lemma5_sort_prefix(p, k)
                assert lemma5_iterates(p, k)[-1] == direct
                assert ligne(direct) == ligne(p)
                assert mc(direct)[:k] == sort_word(mc(p)[:k])


# ---- shuffles and classes ----

def test_shifted_shuffle_small():
    assert shifted_shuffle((1,), (1,)) == [(1, 2), (2, 1)]
    s = shifted_shuffle((1, 2), (1, 2))
    assert s == [P("1234"), P("1324"), P("1342"), P("3124"), P("3142"), P("3412")]
    assert s == descent_class(4, PositionSet((2,), 4))


def test_shifted_shuffle_sizes():
    for k in range(5):
        for l in range(5):
            for a in permutations(range(1, k + 1)):
                for b in permutations(range(1, l + 1)):
                    out = shifted_shuffle(a, b)
                    assert len(out) == len(set(out)) == comb(k + l, k)
                    for w in out:
                        assert [x for x in w if x <= k] == list(a)
                        assert [x - k for x in w if x > k] == list(b)


def test_compositions():
    assert [c.parts for c in compositions(0)] == [()]
    assert sorted(c.parts for c in compositions(3)) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    for n in range(1, 8):
        assert len(list(compositions(n))) == 2 ** (n - 1)
    assert Composition((2, 1, 3)).partial_sums().positions == (2, 3)
    with pytest.raises(ValueError):
        Composition((2, 0))


def test_classes_against_filtering():
    for n in range(1, 7):
        for comp in compositions(n):
            s = comp.partial_sums()
            assert shuffle_of_identities(comp) == descent_class_by_filter(n, s)
            assert descent_class(n, s, strict=True) == descent_class_by_filter(n, s, strict=True)


def test_strict_classes_partition():
    assert descent_class(4, PositionSet((), 4), strict=True) == [identity(4)]
    sizes = [len(descent_class(4, c.partial_sums(), strict=True)) for c in compositions(4)]
    assert sum(sizes) == 24


# ---- the phi map ----

def test_phi_on_two_by_two_class():
    comp = Composition((2, 2))
    cls = shuffle_of_identities(comp)
    images = [lemma7_phi(p, comp) for p in cls]
    assert sorted(images) == cls
    lhs = sorted((format_code(sort_word(mc(p))), str(el_set(mc(p)))) for p in cls)
    rhs = sorted((format_code(sort_word(ic(p))), str(el_set(ic(p)))) for p in cls)
    assert lhs == rhs


def test_phi_fixes_identity():
    for n in range(1, 7):
        for comp in compositions(n):
            assert lemma7_phi(identity(n), comp) == identity(n)


def test_phi_defining_equalities():
    for n in range(1, 6):
        for comp in compositions(n):
            cls = shuffle_of_identities(comp)
            images = {lemma7_phi(p, comp) for p in cls}
            assert len(images) == len(cls)
            for p in cls:
                q = lemma7_phi(p, comp)
                assert in_shuffle_class(q, comp)
                assert sort_word(mc(p)) == sort_word(ic(q))
                assert el_set(mc(p)) == el_set(ic(q))


def test_phi_rejects_outsiders():
    with pytest.raises(ValueError):
        lemma7_phi(P("4321"), Composition((2, 2)))


# ---- descent-set complement ----

def test_complement_map_worked_example():
    sigma = P("935721468")
    tau = theorem2_map(sigma)
    assert tau == P("795128643")
    assert theorem2_map_incremental(sigma) == tau


def test_complement_map_of_identity():
    for n in range(1, 8):
        assert theorem2_map(identity(n)) == majcode_inv(tuple(range(n)))
        assert ligne(theorem2_map(identity(n))).positions == tuple(range(1, n))


@given(perms())
def test_complement_map_properties(p):
    q = theorem2_map(p)
    assert ligne(q) == ligne(p).complement()
    assert theorem2_map(q) == p
    assert theorem2_map_incremental(p) == q


def test_insert_step_examples():
    sp, tp = P("35721468"), P("75128643")
    assert label_slots(sp).labels == (3, 4, 5, 2, 1, 6, 7, 8, 0)
    assert label_slots(tp).labels == (6, 5, 4, 7, 8, 3, 2, 1, 0)
    # rightmost rise goes to the last slot
    assert theorem2_insert_step(sp, tp, 8) == 9
    # rightmost slot (a descent, label 0) goes to the previous descent
    assert theorem2_insert_step(sp, tp, 9) == 5
    # leftmost slot is a rise: next rise on its right
    assert theorem2_insert_step(sp, tp, 1) == 2
    for s in range(1, 10):
        assert theorem2_insert_step(sp, tp, s) == theorem2_target_by_labels(sp, tp, s)


def test_insert_step_rejects_bad_input():
    with pytest.raises(ValueError):
        theorem2_insert_step(P("35721468"), P("35721468"), 1)
    with pytest.raises(ValueError):
        theorem2_insert_step(P("35721468"), P("75128643"), 10)


def test_slot_rules_match_labels_exhaustive():
    for m in range(1, 7):
        for sp in permutations(range(1, m + 1)):
            tp = theorem2_map(sp)
            for s in range(1, m + 2):
                assert theorem2_insert_step(sp, tp, s) == theorem2_target_by_labels(sp, tp, s)

