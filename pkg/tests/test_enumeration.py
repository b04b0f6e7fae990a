"""Engine counts cross-checked against a direct product-scan oracle.

The oracle enumerates every candidate word over the bounded alphabet and
filters by definition; it is independent of the engine's pruning and of the
closed forms, so agreement here pins both down.
"""

from collections import Counter
from itertools import product

import pytest

from kunzlab.enumeration import (
    TailHeavySpec,
    closed_k2,
    closed_k3,
    count_and_genus,
    count_depth_le3,
    count_stressed3,
    count_words,
    enumerate_words,
    genus_histogram,
    is_tail_heavy,
    lower_bound_family,
    med_count,
    schur_colorings,
    stressed3_genus_total,
    tail_heavy_count,
)
from kunzlab.words import CountQuery, KunzWord, is_kunz, is_med


def brute_frobenius(f: int) -> list[KunzWord]:
    """All Kunz words with Frobenius number f, by exhaustive scan.

    For each length the depth is forced (f = (ell+1)(q-1) + j with
    1 <= j <= ell has at most one solution), so the alphabet is bounded and
    the scan is finite.
    """
    words = []
    for ell in range(1, f + 1):
        m = ell + 1
        if f % m == 0:
            continue
        q = (f - 1) // m + 1
        for entries in product(range(1, q + 1), repeat=ell):
            w = KunzWord(entries)
            if w.frobenius == f and is_kunz(w):
                words.append(w)
    return words


def test_frobenius_five_exactly():
    expected = {(1, 1, 1, 1, 1), (1, 2), (2, 1, 1), (2, 2), (3,)}
    assert set(brute_frobenius(5)) == expected
    assert set(enumerate_words(CountQuery(frobenius=5))) == expected
    assert count_words(CountQuery(frobenius=5)) == 5


@pytest.mark.parametrize("f", range(1, 14))
def test_enumeration_matches_oracle(f):
    oracle = sorted(brute_frobenius(f))
    engine = sorted(enumerate_words(CountQuery(frobenius=f)))
    assert engine == oracle
    assert count_words(CountQuery(frobenius=f)) == len(oracle)


FILTER_QUERIES = [
    dict(med=True),
    dict(depth_exact=2),
    dict(depth_exact=3),
    dict(depth_max=3),
    dict(depth_exact=2, stressed=True),
    dict(depth_exact=3, stressed=True),
    dict(contains=(7,)),
    dict(length=4),
    dict(length=5, depth_max=2),
    dict(med=True, depth_exact=2),
    dict(contains=(4, 9)),
]


@pytest.mark.parametrize("extra", FILTER_QUERIES)
@pytest.mark.parametrize("f", [10, 11])
def test_filters_match_definition(f, extra):
    query = CountQuery(frobenius=f, **extra)
    oracle = sorted(w for w in brute_frobenius(f) if query.matches(w))
    assert sorted(enumerate_words(query)) == oracle
    assert count_words(query) == len(oracle)


def test_genus_histogram_matches_counter():
    q = CountQuery(frobenius=11)
    expected = Counter(w.genus for w in brute_frobenius(11))
    assert genus_histogram(q) == dict(expected)
    # and again under a depth filter
    q2 = CountQuery(frobenius=11, depth_max=2)
    expected2 = Counter(w.genus for w in brute_frobenius(11) if w.depth <= 2)
    assert genus_histogram(q2) == dict(expected2)


def test_count_and_genus_consistency():
    q = CountQuery(frobenius=13)
    count, gsum = count_and_genus(q)
    words = brute_frobenius(13)
    assert count == len(words)
    assert gsum == sum(w.genus for w in words)


@pytest.mark.parametrize("threads", [2, 5])
def test_threaded_counts_agree(threads):
    q = CountQuery(frobenius=16)
    assert count_words(q, threads=threads) == count_words(q)
    assert count_and_genus(q, threads=threads) == count_and_genus(q)


def test_infinite_query_rejected():
    with pytest.raises(ValueError):
        count_words(CountQuery(length=4))
    with pytest.raises(ValueError):
        list(enumerate_words(CountQuery(depth_max=2)))


# ---------------------------------------------------------------------------
# closed forms and the stressed depth-3 table
# ---------------------------------------------------------------------------


def test_closed_forms_match_engine():
    for f in range(1, 17):
        for ell in range(1, f + 1):
            assert closed_k2(f, ell) == count_words(
                CountQuery(frobenius=f, length=ell, depth_exact=2))
            assert closed_k3(f, ell) == count_words(
                CountQuery(frobenius=f, length=ell, depth_exact=3))


def test_stressed3_small_values():
    # length 1: only (3); length 2: (2,3) and (3,3)
    assert count_stressed3(1) == 1
    assert count_stressed3(2) == 2
    assert count_stressed3(3) == 7
    assert count_stressed3(12) == 28897
    assert stressed3_genus_total(0) == (1, 0)
    assert stressed3_genus_total(1) == (1, 3)
    assert stressed3_genus_total(2) == (2, 11)  # genus 5 + genus 6
    with pytest.raises(ValueError):
        count_stressed3(0)


@pytest.mark.parametrize("ell", range(1, 9))
def test_stressed3_matches_engine(ell):
    # a stressed depth-3 word of length ell has Frobenius number 3*ell + 2
    q = CountQuery(frobenius=3 * ell + 2, length=ell,
                   depth_exact=3, stressed=True)
    assert count_stressed3(ell) == count_words(q)
    count, total = stressed3_genus_total(ell)
    assert total == sum(w.genus for w in enumerate_words(q))
    assert count == count_words(q)


@pytest.mark.parametrize("ell", range(0, 10))
def test_depth_le3_matches_engine(ell):
    expected = 1 if ell == 0 else count_words(
        CountQuery(length=ell, depth_max=3))
    assert count_depth_le3(ell) == expected


# ---------------------------------------------------------------------------
# MED counts
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("f", range(1, 14))
def test_med_count_matches_oracle(f):
    words = brute_frobenius(f)
    assert med_count(f) == sum(1 for w in words if is_med(w))
    for depth in (1, 2, 3):
        assert med_count(f, depth=depth) == sum(
            1 for w in words if is_med(w) and w.depth == depth)
    with pytest.raises(ValueError):
        med_count(0)


# ---------------------------------------------------------------------------
# the explicit lower-bound family
# ---------------------------------------------------------------------------


def test_family_is_valid_and_sized():
    stream, size = lower_bound_family(4, 5, 3)
    words = list(stream)
    assert size == 54
    assert len(words) == size
    assert len(set(words)) == size
    for w in words:
        assert is_kunz(w)
        assert w.depth == 4
        assert w.frobenius == 6 * 3 + 3


def test_family_other_shape():
    stream, size = lower_bound_family(3, 4, 2)
    words = list(stream)
    assert len(words) == size == 8
    for w in words:
        assert is_kunz(w)
        assert w.depth == 3
        assert w.frobenius == 5 * 2 + 2


def test_family_guards():
    with pytest.raises(ValueError):
        lower_bound_family(2, 5, 3)
    with pytest.raises(ValueError):
        lower_bound_family(4, 5, 0)
    with pytest.raises(ValueError):
        lower_bound_family(4, 5, 6)


# ---------------------------------------------------------------------------
# tail-heavy words
# ---------------------------------------------------------------------------


def brute_tail_heavy(spec: TailHeavySpec) -> int:
    return sum(
        1
        for word in product(range(1, spec.depth + 1), repeat=spec.length)
        if is_tail_heavy(word, spec)
    )


@pytest.mark.parametrize("shape", [(5, 3, 3), (6, 4, 2), (7, 5, 3),
                                   (5, 5, 3), (4, 2, 3), (6, 2, 4)])
def test_tail_heavy_count_matches_brute(shape):
    spec = TailHeavySpec(*shape)
    assert tail_heavy_count(spec) == brute_tail_heavy(spec)


def test_tail_heavy_zero_when_tail_too_narrow():
    spec = TailHeavySpec(9, 2, 2)
    assert spec.n_min == 4
    assert tail_heavy_count(spec) == 0
    assert brute_tail_heavy(spec) == 0


def test_tail_heavy_spec_guards():
    with pytest.raises(ValueError):
        TailHeavySpec(5, 0, 3)
    with pytest.raises(ValueError):
        TailHeavySpec(5, 6, 3)
    with pytest.raises(ValueError):
        TailHeavySpec(5, 3, 1)
    spec = TailHeavySpec(5, 3, 3)
    with pytest.raises(ValueError):
        is_tail_heavy((3, 3, 3), spec)


# ---------------------------------------------------------------------------
# colourings
# ---------------------------------------------------------------------------


def brute_schur(n: int) -> int:
    total = 0
    for colors in product((1, 2, 3), repeat=n):
        ok = True
        for x in range(1, n + 1):
            if colors[x - 1] != 1:
                continue
            for y in range(x, n + 1 - x):
                if colors[y - 1] == 1 and colors[x + y - 1] == 3:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            total += 1
    return total


@pytest.mark.parametrize("n", range(0, 10))
def test_schur_colorings_match_brute(n):
    assert schur_colorings(n) == brute_schur(n)


def test_schur_guard():
    with pytest.raises(ValueError):
        schur_colorings(-1)
