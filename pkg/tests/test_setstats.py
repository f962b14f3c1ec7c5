from itertools import permutations, product

import pytest
from hypothesis import given, strategies as st

from permstats.codes import delta, majcode, parse_code
from permstats.perm import PositionSet, des
from permstats.setstats import el_set, eul, eul_set

C = parse_code


def eul_recursive(w):
    # the two-branch recursion on the last digit, evaluated top-down
    if len(w) == 1:
        return 0
    prev = eul_recursive(w[:-1])
    return prev if w[-1] <= prev else prev + 1


def se_words(n):
    return product(*(range(i) for i in range(1, n + 1)))


def sd_words(n):
    return product(*(range(n - i + 1) for i in range(1, n + 1)))


def test_eul_examples():
    assert eul((0,)) == 0
    for n in range(1, 9):
        assert eul(tuple(range(n))) == n - 1


def test_eul_rejects_empty_and_bad_words():
    with pytest.raises(ValueError):
        eul(())
    with pytest.raises(ValueError):
        eul((0, 2))


@given(st.integers(1, 12).flatmap(
    lambda n: st.tuples(*(st.integers(0, i) for i in range(n)))))
def test_eul_matches_recursion(w):
    assert eul(w) == eul_recursive(w)
    assert eul(w) <= len(w) - 1


def test_eul_of_majcode_is_des():
    for n in range(1, 7):
        for p in permutations(range(1, n + 1)):
            assert eul(majcode(p)) == des(p)


def test_eul_set_examples():
    assert eul_set(C("012020203")).positions == (1, 4, 5)
    assert eul_set(C("000325475")).positions == (2, 3, 6, 7, 8)
    assert eul_set((0,) * 5) == PositionSet((), 5)


def test_el_set_examples():
    assert str(el_set(C("2200"))) == "13"
    assert str(el_set(C("3210"))) == "123"
    assert el_set((0,) * 5) == PositionSet((), 5)


@pytest.mark.parametrize("n", range(1, 8))
def test_eul_set_cardinality(n):
    for w in se_words(n):
        assert len(eul_set(w)) == eul(w)


@pytest.mark.parametrize("n", range(1, 8))
def test_el_against_eul(n):
    for d in sd_words(n):
        r = d[::-1]
        assert el_set(d) == eul_set(r)
        assert el_set(d) == eul_set(delta(r)).complement()


def test_el_is_compatible_with_left_factors():
    # equal El on suffix words survives prepending the same prefix
    for total in range(1, 7):
        for m in range(1, total):
            by_el = {}
            for b in sd_words(m):
                by_el.setdefault(el_set(b), []).append(b)
            for c in product(*(range(total - i + 1) for i in range(1, total - m + 1))):
                for group in by_el.values():
                    assert len({el_set(c + b) for b in group}) == 1
