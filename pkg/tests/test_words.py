"""Word-level invariants, membership, and the gap-set round trip."""

from itertools import product

import pytest
from hypothesis import given, strategies as st

from kunzlab.words import (
    CountQuery,
    KunzWord,
    contains,
    gaps_from_word,
    invariants,
    is_kunz,
    is_med,
    med_drop,
    med_lift,
    reduce_depth,
    word_from_gaps,
)


def test_invariants_of_21():
    inv = invariants((2, 1))
    assert inv.multiplicity == 3
    assert inv.genus == 3
    assert inv.depth == 2
    assert inv.frobenius == 4
    assert inv.conductor == 5
    assert inv.gap_count == inv.genus


def test_all_ones_word():
    # depth-1 words: every residue class fills in on the first pass, so the
    # Frobenius number is just the length and strictness is automatic.
    for ell in range(1, 8):
        w = KunzWord([1] * ell)
        assert w.depth == 1
        assert w.genus == ell
        assert w.frobenius == ell
        assert is_kunz(w)
        assert is_med(w)


def test_frobenius_uses_last_maximum():
    assert KunzWord((2, 1, 2)).frobenius == 4 * 1 + 3
    assert KunzWord((2, 2, 1)).frobenius == 4 * 1 + 2
    assert KunzWord((1, 2)).stressed
    assert not KunzWord((2, 1)).stressed
    assert not KunzWord().stressed


def test_wraparound_inequality_detected():
    # first family holds vacuously here; only the shifted family rules it out
    assert not is_kunz((9, 1, 1))
    assert is_kunz((2, 1, 1))


def test_construction_rejects_bad_entries():
    with pytest.raises(ValueError):
        KunzWord((1, 0))
    with pytest.raises(ValueError):
        KunzWord((-2,))
    with pytest.raises(ValueError):
        KunzWord((1, True))
    with pytest.raises(ValueError):
        KunzWord((1.5, 2))


def test_from_text_forms():
    assert KunzWord.from_text("2,1") == (2, 1)
    assert KunzWord.from_text("21") == (2, 1)
    assert KunzWord.from_text(" 3 , 1 , 2 ") == (3, 1, 2)
    assert KunzWord.from_text("") == ()
    assert KunzWord.from_text("12,1") == (12, 1)  # comma form keeps multi-digit
    with pytest.raises(ValueError):
        KunzWord.from_text("a,b")
    with pytest.raises(ValueError):
        KunzWord.from_text("1;2")
    w = KunzWord((4, 1, 2))
    assert KunzWord.from_text(w.to_text()) == w


def test_membership_matches_gap_set():
    w = (2, 1)
    gaps = gaps_from_word(w)
    assert gaps == {1, 2, 4}
    for n in range(0, 13):
        assert contains(w, n) == (n not in gaps)
    assert not contains(w, -3)


def test_gaps_require_kunz_word():
    with pytest.raises(ValueError):
        gaps_from_word((9, 1, 1))


def test_word_from_gaps_rejects_non_semigroup():
    # complement contains 1, and 1 + 1 = 2 is a gap
    with pytest.raises(ValueError, match="not closed"):
        word_from_gaps({2})
    with pytest.raises(ValueError):
        word_from_gaps({0})
    assert word_from_gaps(()) == ()


def _small_kunz_words():
    out = []
    for ell in range(1, 5):
        for entries in product(range(1, 4), repeat=ell):
            if is_kunz(entries):
                out.append(entries)
    return out


_WORDS = _small_kunz_words()


@given(st.sampled_from(_WORDS))
def test_gap_round_trip(entries):
    w = KunzWord(entries)
    gaps = gaps_from_word(w)
    assert word_from_gaps(gaps) == w
    assert len(gaps) == w.genus
    if gaps:
        assert max(gaps) == w.frobenius


def test_reduce_depth_over_one_frobenius_class():
    from kunzlab.enumeration import enumerate_words

    for w in enumerate_words(CountQuery(frobenius=11)):
        if w.depth < 2:
            continue
        r = reduce_depth(w)
        assert is_kunz(r)
        assert r.depth == w.depth - 1
        assert all(a <= b for a, b in zip(r, w))
    with pytest.raises(ValueError):
        reduce_depth((1, 1, 1))
    with pytest.raises(ValueError):
        reduce_depth((9, 1, 1))


def test_med_lift_drop_inverse():
    gaps = frozenset({1, 2, 4})  # the semigroup <3, 5, 7>
    lifted = med_lift(gaps, 3)
    assert lifted == {1, 2, 4, 5, 7}
    assert is_med(word_from_gaps(lifted))
    dropped, m = med_drop(lifted)
    assert (dropped, m) == (gaps, 3)

    # trivial semigroup lifts at any multiplicity, including 1
    assert med_lift((), 1) == frozenset()
    assert med_lift((), 4) == {1, 2, 3}


def test_med_lift_validation():
    with pytest.raises(ValueError):
        med_lift({1, 2, 4}, 4)  # 4 is a gap, not an element
    with pytest.raises(ValueError):
        med_lift({1}, 1)


def test_med_drop_requires_med():
    # (1, 2) fails strictness at i = j = 1: w_1 + w_1 = 2 = w_2
    gaps = gaps_from_word((1, 2))
    assert gaps == {1, 2, 5}
    with pytest.raises(ValueError):
        med_drop(gaps)


class TestCountQuery:
    def test_depth_flags_conflict(self):
        with pytest.raises(ValueError):
            CountQuery(depth_exact=2, depth_max=3)

    def test_stressed_needs_exact_depth(self):
        with pytest.raises(ValueError):
            CountQuery(stressed=True)
        CountQuery(stressed=True, depth_exact=3)  # fine

    def test_depth_bounds_positive(self):
        with pytest.raises(ValueError):
            CountQuery(depth_exact=0)
        with pytest.raises(ValueError):
            CountQuery(length=4, depth_max=0)

    def test_contains_normalization(self):
        assert CountQuery(frobenius=7, contains=5).contains == (5,)
        assert CountQuery(frobenius=7, contains=[5, 9]).contains == (5, 9)
        assert CountQuery(frobenius=7).contains == ()

    def test_finiteness(self):
        assert CountQuery(frobenius=9).is_finite
        assert CountQuery(length=4, depth_max=3).is_finite
        assert CountQuery(length=4, depth_exact=3).is_finite
        assert not CountQuery(length=4).is_finite
        assert not CountQuery(depth_max=3).is_finite
        assert not CountQuery(med=True).is_finite

    def test_matches_agrees_with_definitions(self):
        q = CountQuery(frobenius=4)
        assert q.matches((2, 1))
        assert not q.matches((1, 2))      # frobenius 5
        assert not q.matches((9, 1, 1))   # not a Kunz word
        assert not q.matches(())          # trivial semigroup excluded
        med_q = CountQuery(frobenius=4, med=True)
        assert med_q.matches((2, 1)) == is_med((2, 1))
        stress = CountQuery(frobenius=5, depth_exact=2, stressed=True)
        assert stress.matches((2, 2))
        assert not stress.matches((2, 1, 1))
        member = CountQuery(frobenius=4, contains=(3,))
        assert member.matches((2, 1))
        assert not CountQuery(frobenius=4, contains=(2,)).matches((2, 1))
