"""Exact enumeration and counting of Kunz words.

The generic entry points (:func:`count_words`, :func:`enumerate_words`,
:func:`genus_histogram`) take a :class:`~kunzlab.words.CountQuery` and walk a
backtracking search over word positions, maintaining for each position the
interval of values permitted by the defining inequalities against the prefix
chosen so far.  A query that pins the Frobenius number determines, for every
candidate length, both the depth and the position of the last maximal entry;
the search then only ever visits words with the requested invariants, and the
final position of each word is folded in closed form instead of being
iterated.

Alongside the generic engine there are closed-form or specialised counters
(:func:`count_stressed3`, :func:`closed_k2`, :func:`closed_k3`,
:func:`schur_colorings`, :func:`tail_heavy_count`, :func:`med_count`,
:func:`lower_bound_family`) whose results the generic engine double-checks in
the test-suite.  Several of these are feasible far beyond the generic search
because they exploit structure specific to small depth.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb, isqrt
from multiprocessing import Pool

from .words import CountQuery, KunzWord

__all__ = [
    "TailHeavySpec",
    "closed_k2",
    "closed_k3",
    "count_and_genus",
    "count_depth_le3",
    "count_stressed3",
    "count_words",
    "enumerate_words",
    "genus_histogram",
    "is_tail_heavy",
    "lower_bound_family",
    "med_count",
    "schur_colorings",
    "stressed3_genus_total",
    "tail_heavy_count",
]


# ---------------------------------------------------------------------------
# plan construction: a query becomes a few (sign, caps, floors) scans
# ---------------------------------------------------------------------------


def _depth_profile(frobenius: int, length: int) -> tuple[int, int] | None:
    """Depth and last-maximum position forced by (frobenius, length).

    Returns ``(q, j)`` such that every word of the given length with the given
    Frobenius number has maximum entry ``q`` occurring last at position ``j``,
    or ``None`` when no such word can exist.
    """
    m = length + 1
    q = -((frobenius + 1) // -m)
    j = frobenius - m * (q - 1)
    if 1 <= j <= length:
        return q, j
    return None


def _plans(query: CountQuery) -> list[tuple[int, int, tuple[int, ...], tuple[int, ...]]]:
    """Expand a finite query into signed (sign, length, caps, floors) scans."""
    plans: list[tuple[int, int, tuple[int, ...], tuple[int, ...]]] = []

    def add(sign: int, length: int, caps: list[int], floors: list[int]) -> None:
        m = length + 1
        for n in query.contains:
            r = n % m
            if r:
                caps[r - 1] = min(caps[r - 1], n // m)
        plans.append((sign, length, tuple(caps), tuple(floors)))

    if query.frobenius is not None:
        f = query.frobenius
        if f < 1:
            return []
        lengths = [query.length] if query.length is not None else range(1, f + 1)
        for length in lengths:
            if length < 1:
                continue
            profile = _depth_profile(f, length)
            if profile is None:
                continue
            q, j = profile
            if query.depth_exact is not None and q != query.depth_exact:
                continue
            if query.depth_max is not None and q > query.depth_max:
                continue
            if query.stressed and j != length:
                continue
            caps = [q] * j + [q - 1] * (length - j)
            floors = [1] * length
            floors[j - 1] = q
            add(1, length, caps, floors)
        return plans

    length = query.length
    assert length is not None
    if length < 1:
        return []
    if query.depth_exact is not None:
        q = query.depth_exact
        if query.stressed:
            caps = [q] * length
            floors = [1] * length
            floors[-1] = q
            add(1, length, caps, floors)
        else:
            # words of maximum exactly q = (maximum <= q) - (maximum <= q-1)
            for sign, cap in ((1, q), (-1, q - 1)):
                if cap >= 1:
                    add(sign, length, [cap] * length, [1] * length)
    else:
        assert query.depth_max is not None
        add(1, length, [query.depth_max] * length, [1] * length)
    return plans


# ---------------------------------------------------------------------------
# the core scan
# ---------------------------------------------------------------------------


def _triangle(n: int) -> int:
    return n * (n + 1) // 2


def _pyramid(n: int) -> int:
    return n * (n + 1) * (2 * n + 1) // 6


def _scan(length: int, caps: tuple[int, ...], floors: tuple[int, ...],
          strict: int, prefix: tuple[int, ...]) -> tuple[int, int]:
    """Count words and sum their entry totals below a fixed prefix.

    Returns ``(count, genus_sum)`` over all words of the given length that
    extend ``prefix``, lie between ``floors`` and ``caps`` pointwise, and
    satisfy both inequality families (strictly when ``strict``).
    """
    w = [0] * (length + 1)
    for k, v in enumerate(prefix):
        w[k + 1] = v
    comp = 1 - strict
    count = 0
    genus = 0

    def rec(p: int, gsum: int) -> None:
        nonlocal count, genus
        ub = caps[p - 1]
        for i in range(1, p // 2 + 1):
            cand = w[i] + w[p - i] - strict
            if cand < ub:
                ub = cand
        lb = floors[p - 1]
        i0 = length + 2 - p
        if i0 < 1:
            i0 = 1
        for i in range(i0, p):
            cand = w[i + p - length - 1] - w[i] - comp
            if cand > lb:
                lb = cand
        if 2 * p >= length + 2:
            # the pair (p, p) wraps onto position 2p - length - 1
            cand = w[2 * p - length - 1] - comp
            need = cand + 1  # 2*v >= cand  <=>  v >= ceil(cand / 2)
            cand = need // 2 if need > 0 else 0
            if cand > lb:
                lb = cand
        if lb > ub:
            return
        if p == length:
            n = ub - lb + 1
            count += n
            genus += n * gsum + (_triangle(ub) - _triangle(lb - 1))
            return
        for v in range(lb, ub + 1):
            w[p] = v
            rec(p + 1, gsum + v)
        w[p] = 0

    start = len(prefix) + 1
    rec(start, sum(prefix))
    return count, genus


def _scan_task(args: tuple) -> tuple[int, int]:
    return _scan(*args)


def _prefixes(length: int, caps: tuple[int, ...], floors: tuple[int, ...],
              strict: int, depth: int) -> list[tuple[int, ...]]:
    """All valid prefixes of the given depth, in lexicographic order."""
    out: list[tuple[int, ...]] = []
    w = [0] * (length + 1)

    def rec(p: int, prefix: tuple[int, ...]) -> None:
        if p > depth:
            out.append(prefix)
            return
        lb, ub = _scan_bounds(w, p, length, caps, floors, strict)
        for v in range(lb, ub + 1):
            w[p] = v
            rec(p + 1, prefix + (v,))
        w[p] = 0

    rec(1, ())
    return out


def _scan_bounds(w: list[int], p: int, length: int, caps: tuple[int, ...],
                 floors: tuple[int, ...], strict: int) -> tuple[int, int]:
    comp = 1 - strict
    ub = caps[p - 1]
    for i in range(1, p // 2 + 1):
        cand = w[i] + w[p - i] - strict
        if cand < ub:
            ub = cand
    lb = floors[p - 1]
    i0 = length + 2 - p
    if i0 < 1:
        i0 = 1
    for i in range(i0, p):
        cand = w[i + p - length - 1] - w[i] - comp
        if cand > lb:
            lb = cand
    if 2 * p >= length + 2:
        cand = w[2 * p - length - 1] - comp
        need = cand + 1
        cand = need // 2 if need > 0 else 0
        if cand > lb:
            lb = cand
    return lb, ub


def _scan_counts(length: int, caps: tuple[int, ...], floors: tuple[int, ...],
                 strict: int, threads: int) -> tuple[int, int]:
    if threads <= 1 or length < 4:
        return _scan(length, caps, floors, strict, ())
    prefixes = _prefixes(length, caps, floors, strict, 2)
    if not prefixes:
        return 0, 0
    tasks = [(length, caps, floors, strict, pre) for pre in prefixes]
    with Pool(processes=min(threads, len(tasks))) as pool:
        parts = pool.map(_scan_task, tasks)
    count = sum(part[0] for part in parts)
    genus = sum(part[1] for part in parts)
    return count, genus


def _iter_scan(length: int, caps: tuple[int, ...], floors: tuple[int, ...],
               strict: int):
    """Yield the words of a single scan as tuples, in lexicographic order."""
    w = [0] * (length + 1)

    def rec(p: int):
        lb, ub = _scan_bounds(w, p, length, caps, floors, strict)
        if p == length:
            base = tuple(w[1:length])
            for v in range(lb, ub + 1):
                yield base + (v,)
            return
        for v in range(lb, ub + 1):
            w[p] = v
            yield from rec(p + 1)
        w[p] = 0

    yield from rec(1)


def _hist_scan(length: int, caps: tuple[int, ...], floors: tuple[int, ...],
               strict: int) -> dict[int, int]:
    """Histogram of entry totals over a single scan."""
    w = [0] * (length + 1)
    hist: dict[int, int] = {}

    def rec(p: int, gsum: int) -> None:
        lb, ub = _scan_bounds(w, p, length, caps, floors, strict)
        if p == length:
            for v in range(lb, ub + 1):
                g = gsum + v
                hist[g] = hist.get(g, 0) + 1
            return
        for v in range(lb, ub + 1):
            w[p] = v
            rec(p + 1, gsum + v)
        w[p] = 0

    rec(1, 0)
    return hist


# ---------------------------------------------------------------------------
# public generic entry points
# ---------------------------------------------------------------------------


def count_and_genus(query: CountQuery, threads: int = 1) -> tuple[int, int]:
    """Number of matching words and the sum of their genera."""
    if not query.is_finite:
        raise ValueError("query must fix the Frobenius number, or a length "
                         "together with a depth bound")
    if any(n < 0 for n in query.contains):
        return 0, 0
    strict = 1 if query.med else 0
    count = 0
    genus = 0
    for sign, length, caps, floors in _plans(query):
        part = _scan_counts(length, caps, floors, strict, threads)
        count += sign * part[0]
        genus += sign * part[1]
    return count, genus


def count_words(query: CountQuery, threads: int = 1) -> int:
    """Number of Kunz words matching the query."""
    return count_and_genus(query, threads)[0]


def genus_histogram(query: CountQuery) -> dict[int, int]:
    """Exact histogram ``genus -> number of matching words``."""
    if not query.is_finite:
        raise ValueError("query must fix the Frobenius number, or a length "
                         "together with a depth bound")
    if any(n < 0 for n in query.contains):
        return {}
    strict = 1 if query.med else 0
    hist: dict[int, int] = {}
    for sign, length, caps, floors in _plans(query):
        for g, n in _hist_scan(length, caps, floors, strict).items():
            hist[g] = hist.get(g, 0) + sign * n
    return {g: n for g, n in sorted(hist.items()) if n}


def enumerate_words(query: CountQuery):
    """Yield matching words in lexicographic order (shorter-prefix first).

    Words of different lengths interleave in plain tuple order, so the output
    is globally sorted; within one length it is ascending lexicographic.
    """
    if not query.is_finite:
        raise ValueError("query must fix the Frobenius number, or a length "
                         "together with a depth bound")
    if any(n < 0 for n in query.contains):
        return
    strict = 1 if query.med else 0
    streams = []
    if query.frobenius is None and query.depth_exact is not None and not query.stressed:
        # single positive scan with a post-filter instead of signed subtraction
        q = query.depth_exact
        caps = [q] * query.length
        m = query.length + 1
        for n in query.contains:
            r = n % m
            if r:
                caps[r - 1] = min(caps[r - 1], n // m)
        words = _iter_scan(query.length, tuple(caps), (1,) * query.length, strict)
        streams.append(w for w in words if max(w) == q)
    else:
        for sign, length, caps, floors in _plans(query):
            assert sign == 1
            streams.append(_iter_scan(length, caps, floors, strict))
    for w in heapq.merge(*streams):
        yield KunzWord(w)


# ---------------------------------------------------------------------------
# stressed depth-3 words: subset scan over the positions holding a 1
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _stressed3_scan(length: int) -> tuple[int, int]:
    """(count, genus total) over stressed depth-3 words of the given length.

    A word here has entries in {1,2,3} with the final entry equal to 3.  With
    the last entry pinned, validity only depends on the set S of positions
    holding a 1: the word is valid iff no two positions of S (repeats
    allowed) sum to the final position, and every position in (S+S) below the
    final one is then forced to hold a 2.  Positions outside S u (S+S) are
    free over {2,3}, which the leaf accounts for in closed form.
    """
    if length < 0:
        raise ValueError("length must be nonnegative")
    if length == 0:
        return 1, 0
    top = 1 << length
    low_mask = top - 2  # bits 1 .. length-1
    full_mask = (top << 1) - 1
    count = 0
    genus = 0
    # stack entries: (next candidate position, S mask, S u (S+S) mask, |S|)
    stack = [(1, 0, 0, 0)]
    while stack:
        p, smask, umask, size = stack.pop()
        if p == length:
            ubits = (umask & low_mask).bit_count()
            free = length - 1 - ubits
            forced_two = ubits - size
            block = 1 << free
            count += block
            # ones contribute 1, forced positions 2, the last position 3,
            # and each free position averages 5/2 over its {2,3} choices.
            genus += block * (size + 2 * forced_two + 3)
            genus += (5 * free * block) >> 1
            continue
        stack.append((p + 1, smask, umask, size))
        new_s = smask | (1 << p)
        new_u = (umask | (1 << p) | (new_s << p)) & full_mask
        if not new_u & top:
            stack.append((p + 1, new_s, new_u, size + 1))
    return count, genus


def count_stressed3(length: int) -> int:
    """Number of stressed depth-3 words of the given length."""
    if length < 1:
        raise ValueError("length must be at least 1")
    return _stressed3_scan(length)[0]


def stressed3_genus_total(length: int) -> tuple[int, int]:
    """(count, genus total) for stressed depth-3 words; length 0 allowed."""
    if length < 0:
        raise ValueError("length must be nonnegative")
    return _stressed3_scan(length)


def count_depth_le3(length: int) -> int:
    """Words of depth at most 3, by splitting at the last entry equal to 3."""
    if length < 0:
        raise ValueError("length must be nonnegative")
    total = 1 << length  # depth <= 2: all {1,2}-words are valid
    for j in range(1, length + 1):
        total += (1 << (length - j)) * count_stressed3(j)
    return total


# ---------------------------------------------------------------------------
# closed forms for small depth with fixed Frobenius number
# ---------------------------------------------------------------------------


def closed_k2(frobenius: int, length: int) -> int:
    """Depth-2 words with the given Frobenius number and length, in closed form.

    Such words are 2 at position ``frobenius - length - 1``, 1 afterwards and
    free over {1,2} before (every choice is valid), giving a power of two.
    """
    f, ell = frobenius, length
    if 2 * ell >= f - 1 and ell <= f - 2:
        return 1 << (f - 2 - ell)
    return 0


def closed_k3(frobenius: int, length: int) -> int:
    """Depth-3 words with the given Frobenius number and length, in closed form.

    The head up to the last 3 is a shorter stressed depth-3 word, and the tail
    is free over {1,2}: the two parts never interact.
    """
    f, ell = frobenius, length
    j = f - 2 * (ell + 1)
    if 1 <= j <= ell:
        return (1 << (ell - j)) * count_stressed3(j)
    return 0


# ---------------------------------------------------------------------------
# colourings counted by the same recursion
# ---------------------------------------------------------------------------


def schur_colorings(n: int) -> int:
    """3-colourings of 1..n where colour-1 sums never land on colour 3.

    Counts maps c with no pair x, y of colour 1 (x = y allowed) for which
    x + y <= n and c(x + y) = 3.  Greens and blues branch identically except
    where blue is forbidden, so the search tracks only the colour-1 positions
    and the sums they generate.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    limit = (1 << (n + 1)) - 1

    def rec(p: int, ones: int, sums: int) -> int:
        if p == n:
            return 2 if (sums >> n) & 1 else 3
        total = rec(p + 1, ones | (1 << p),
                    (sums | ((ones | (1 << p)) << p)) & limit)
        total += rec(p + 1, ones, sums) * (1 if (sums >> p) & 1 else 2)
        return total

    return rec(1, 0, 0)


# ---------------------------------------------------------------------------
# words that contain a given multiplicity: the MED double count
# ---------------------------------------------------------------------------


def _med_via_membership(frobenius: int, depth: int | None) -> int:
    """Count MED words by their multiplicity, via membership-constrained counts.

    A MED semigroup with Frobenius number f and multiplicity m is exactly the
    m-fold shift of a semigroup with Frobenius number f - m that contains m;
    the extreme case m = f + 1 is the shift of the full set of nonnegative
    integers.
    """
    f = frobenius
    total = 0
    for m in range(2, f + 2):
        m_depth = -((f + 1) // -m)
        if depth is not None and m_depth != depth:
            continue
        if m == f + 1:
            total += 1
        else:
            total += count_words(CountQuery(frobenius=f - m, contains=(m,)))
    return total


def med_count(frobenius: int, depth: int | None = None, threads: int = 1) -> int:
    """Number of MED words with the given Frobenius number (and depth, if set).

    Computed two independent ways -- directly, with the strict inequality
    filter in the generic engine, and by classifying on the multiplicity --
    and cross-checked before returning.
    """
    if frobenius < 1:
        raise ValueError("the Frobenius number must be at least 1")
    direct = count_words(
        CountQuery(frobenius=frobenius, depth_exact=depth, med=True), threads)
    via = _med_via_membership(frobenius, depth)
    if direct != via:
        raise ArithmeticError(
            f"MED count mismatch at frobenius={frobenius}, depth={depth}: "
            f"direct={direct}, by multiplicity={via}")
    return direct


# ---------------------------------------------------------------------------
# an explicit family of words realising the lower bound growth
# ---------------------------------------------------------------------------


def lower_bound_family(depth: int, length: int, j: int):
    """Explicit family of depth-``depth`` words, with its exact size.

    Position j is pinned to the depth q; positions i are confined to
    [ceil((q+1)/2), q] for 2i <= j, to [floor(q/2), q] for j/2 < i < j, to
    [floor(q/2), q-1] for j < i <= (length+j+1)/2 and to
    [floor((q-1)/2), q-1] beyond.  Every selection is a valid word whose
    Frobenius number is (length+1)(q-1) + j.

    Returns ``(stream, size)`` where ``stream`` yields the words.
    """
    q = depth
    if q < 3:
        raise ValueError("the family needs depth at least 3")
    if not 1 <= j <= length:
        raise ValueError("j must lie in 1..length")
    intervals: list[range] = []
    for i in range(1, length + 1):
        if i == j:
            lo = hi = q
        elif 2 * i <= j:
            lo, hi = (q + 1) // 2, q
        elif i < j:
            lo, hi = q // 2, q
        elif 2 * i <= length + j + 1:
            lo, hi = q // 2, q - 1
        else:
            lo, hi = (q - 1) // 2, q - 1
        intervals.append(range(lo, hi + 1))
    size = 1
    for interval in intervals:
        size *= len(interval)

    def stream():
        for combo in product(*intervals):
            yield KunzWord(combo)

    return stream(), size


# ---------------------------------------------------------------------------
# tail-heavy words
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TailHeavySpec:
    """Parameters for the tail-heavy count.

    ``length`` is the word length, ``tail_width`` the number of trailing
    positions inspected, ``depth`` the alphabet bound q.  The threshold
    ``n_min`` -- how many supported maximal entries the tail must hold -- is
    fixed at ``isqrt(length) + 1``, the least count strictly above the square
    root of the length.
    """

    length: int
    tail_width: int
    depth: int

    def __post_init__(self) -> None:
        if not 1 <= self.tail_width <= self.length:
            raise ValueError("tail width must lie in 1..length")
        if self.depth < 2:
            raise ValueError("depth must be at least 2")

    @property
    def n_min(self) -> int:
        return isqrt(self.length) + 1


def _head_pairs(spec: TailHeavySpec) -> list[list[tuple[int, int]]]:
    """For each tail position, the head index pairs that sum onto it."""
    h = spec.length - spec.tail_width
    out = []
    for s in range(h + 1, spec.length + 1):
        pairs = [(x - 1, s - x - 1)
                 for x in range(max(1, s - h), s // 2 + 1)]
        out.append(pairs)
    return out


def is_tail_heavy(word: tuple[int, ...], spec: TailHeavySpec) -> bool:
    """Whether a word in [q]^length has a supported-maximum-heavy tail.

    True when strictly more than sqrt(length) of the last ``tail_width``
    positions hold the value q while every head pair summing onto such a
    position reaches at least q.
    """
    if len(word) != spec.length:
        raise ValueError("word length does not match the spec")
    q = spec.depth
    h = spec.length - spec.tail_width
    supported = 0
    for pairs, s in zip(_head_pairs(spec), range(h + 1, spec.length + 1)):
        if word[s - 1] != q:
            continue
        if all(word[x] + word[y] >= q for x, y in pairs):
            supported += 1
    return supported >= spec.n_min


def tail_heavy_count(spec: TailHeavySpec) -> int:
    """Exact number of tail-heavy words in [q]^length.

    Scans the q^(length - tail_width) heads once; for each head only the
    number d of tail positions all of whose head pairs reach q matters, and
    the tails for a given d are counted in closed form.
    """
    q = spec.depth
    t = spec.tail_width
    n_min = spec.n_min
    if n_min > t:
        return 0
    h = spec.length - t
    pair_lists = _head_pairs(spec)
    always = sum(1 for pairs in pair_lists if not pairs)
    checked = [pairs for pairs in pair_lists if pairs]
    hist = [0] * (t + 1)
    if h == 0:
        hist[t] = 1
    else:
        for head in product(range(1, q + 1), repeat=h):
            d = always
            for pairs in checked:
                if all(head[x] + head[y] >= q for x, y in pairs):
                    d += 1
            hist[d] += 1
    total = 0
    for d, heads in enumerate(hist):
        if not heads:
            continue
        tails = sum(comb(d, a) * (q - 1) ** (d - a)
                    for a in range(n_min, d + 1))
        total += heads * q ** (t - d) * tails
    return total
