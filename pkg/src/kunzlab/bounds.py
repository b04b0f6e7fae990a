"""The constant family c_q and the explicit bounds as evaluable functions.

The growth constants are c_q = sqrt(floor((q+2)^2/4)); everything here keeps
their squares as exact integers, so every inequality involving them reduces to
integer arithmetic.  Comparisons that would require astronomically large
integers are settled by dyadic interval arithmetic with outward rounding and
escalating precision: an inequality is only ever reported as verified when the
intervals separate (or the exact fallback decides), so no floating-point
comparison ever decides anything.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt, sqrt
from typing import NamedTuple

__all__ = [
    "CqValue",
    "GenericBounds",
    "MonotonicityReport",
    "check_c_monotone",
    "cq",
    "depth_count_bound",
    "frobenius_bound_dominates",
    "generic_bounds",
    "growth_rate",
    "stressed3_upper_bounds",
    "tail_heavy_bound",
]


@dataclass(frozen=True)
class CqValue:
    """A growth constant, kept as its exact square plus a float for display."""

    q: int
    squared: int

    @property
    def approx(self) -> float:
        return sqrt(self.squared)


def cq(q: int) -> CqValue:
    """The growth constant for depth q: sqrt(floor((q+2)^2/4))."""
    if q < 1:
        raise ValueError("q must be at least 1")
    return CqValue(q, (q + 2) ** 2 // 4)


# ---------------------------------------------------------------------------
# rigorous comparison of products of integer powers
# ---------------------------------------------------------------------------


def _trim(mant: int, exp: int, prec: int, up: bool) -> tuple[int, int]:
    """Round a positive dyadic (mant * 2^exp) to prec mantissa bits."""
    extra = mant.bit_length() - prec
    if extra <= 0:
        return mant, exp
    if up:
        return -((-mant) >> extra), exp + extra
    return mant >> extra, exp + extra


def _imul(a: tuple[int, int, int, int], b: tuple[int, int, int, int],
          prec: int) -> tuple[int, int, int, int]:
    alo, ael, ahi, aeh = a
    blo, bel, bhi, beh = b
    lo, el = _trim(alo * blo, ael + bel, prec, up=False)
    hi, eh = _trim(ahi * bhi, aeh + beh, prec, up=True)
    return lo, el, hi, eh


def _ipow(base: int, exp: int, prec: int) -> tuple[int, int, int, int]:
    """Outward-rounded dyadic interval enclosing base**exp (base >= 1)."""
    acc = (1, 0, 1, 0)
    if exp == 0:
        return acc
    unit = (base, 0, base, 0)
    for bit in bin(exp)[2:]:
        acc = _imul(acc, acc, prec)
        if bit == "1":
            acc = _imul(acc, unit, prec)
    return acc


def _iproduct(factors, prec: int) -> tuple[int, int, int, int]:
    acc = (1, 0, 1, 0)
    for base, exp in factors:
        acc = _imul(acc, _ipow(base, exp, prec), prec)
    return acc


def _dyadic_gt(m1: int, e1: int, m2: int, e2: int) -> bool:
    if e1 >= e2:
        return (m1 << (e1 - e2)) > m2
    return m1 > (m2 << (e2 - e1))


def _estimated_bits(factors) -> int:
    return sum(exp * base.bit_length() for base, exp in factors)


def _strictly_greater(left, right, force_exact: bool = False) -> bool:
    """Whether prod(b^e for left) > prod(b^e for right), decided rigorously.

    ``left`` and ``right`` are sequences of (base, exponent) pairs with
    integer base >= 1 and exponent >= 0.  Small instances are compared as
    exact integers outright; large ones through interval enclosures whose
    precision escalates until the intervals separate, with the exact
    comparison as a final fallback.
    """
    left = list(left)
    right = list(right)
    small = max(_estimated_bits(left), _estimated_bits(right)) <= 30_000
    if force_exact or small:
        lv = 1
        for base, exp in left:
            lv *= base ** exp
        rv = 1
        for base, exp in right:
            rv *= base ** exp
        return lv > rv
    for prec in (64, 128, 256, 512, 1024):
        llo, lel, lhi, leh = _iproduct(left, prec)
        rlo, rel, rhi, reh = _iproduct(right, prec)
        if _dyadic_gt(llo, lel, rhi, reh):
            return True
        if _dyadic_gt(rlo, rel, lhi, leh):
            return False
    return _strictly_greater(left, right, force_exact=True)


# ---------------------------------------------------------------------------
# monotonicity of the constants
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MonotonicityReport:
    """Outcome of the two scaled-constant monotonicity checks."""

    q_max: int
    r_values: tuple[Fraction, ...]
    t_values: tuple[Fraction, ...]
    sequence_comparisons: int
    interpolation_comparisons: int
    violation: str | None

    @property
    def ok(self) -> bool:
        return self.violation is None


_DEFAULT_T_GRID = (Fraction(0), Fraction(1, 4), Fraction(1, 2),
                   Fraction(3, 4), Fraction(1))


def check_c_monotone(q_max: int = 10_000, r_grid=(0, Fraction(1, 2), 1),
                     t_grid=_DEFAULT_T_GRID,
                     interpolation_q_max: int = 200) -> MonotonicityReport:
    """Verify the two monotonicity statements about the scaled constants.

    First, for each r in the grid, c_q^(1/(q+r)) strictly decreases in q over
    2..q_max: equivalently s_q^(b(q+1)+a) > s_{q+1}^(bq+a) with s the squared
    constants and r = a/b, which is decided in integers.  Second, for each
    q in 3..interpolation_q_max and r in the grid, the interpolation
    F(t) = (c_q^t c_{q-1}^(1-t))^(1/(q+t-r)) strictly decreases along the
    t-grid, decided the same way after clearing denominators.

    Returns a report carrying the first violated instance, if any.
    """
    if q_max < 3:
        raise ValueError("q_max must be at least 3")
    r_values = tuple(Fraction(r) for r in r_grid)
    t_values = tuple(sorted(Fraction(t) for t in t_grid))
    for r in r_values:
        if not 0 <= r <= 1:
            raise ValueError("r values must lie in [0, 1]")
    for t in t_values:
        if not 0 <= t <= 1:
            raise ValueError("t values must lie in [0, 1]")

    seq = 0
    violation = None
    for r in r_values:
        a, b = r.numerator, r.denominator
        s_hi = cq(2).squared
        for q in range(2, q_max):
            s_lo, s_hi = s_hi, cq(q + 1).squared
            seq += 1
            if not _strictly_greater([(s_lo, b * (q + 1) + a)],
                                     [(s_hi, b * q + a)]):
                violation = (f"sequence failed at q={q}, r={r}: "
                             f"{s_lo}^{b*(q+1)+a} <= {s_hi}^{b*q+a}")
                break
        if violation:
            break

    interp = 0
    if violation is None:
        denom = 1
        for t in t_values:
            denom = denom * t.denominator // gcd(denom, t.denominator)
        u_values = [int(t * denom) for t in t_values]
        for r in r_values:
            a, b = r.numerator, r.denominator
            for q in range(3, interpolation_q_max + 1):
                s_q = cq(q).squared
                s_p = cq(q - 1).squared
                exps = [q * denom * b + u * b - a * denom for u in u_values]
                for (u1, e1), (u2, e2) in zip(zip(u_values, exps),
                                              zip(u_values[1:], exps[1:])):
                    interp += 1
                    if not _strictly_greater(
                            [(s_q, u1 * e2), (s_p, (denom - u1) * e2)],
                            [(s_q, u2 * e1), (s_p, (denom - u2) * e1)]):
                        violation = (
                            f"interpolation failed at q={q}, r={r}, "
                            f"t={Fraction(u1, denom)}..{Fraction(u2, denom)}")
                        break
                if violation:
                    break
            if violation:
                break

    return MonotonicityReport(q_max, r_values, t_values, seq, interp,
                              violation)


# ---------------------------------------------------------------------------
# explicit bounds
# ---------------------------------------------------------------------------


class StressedBounds(NamedTuple):
    naive: Fraction
    refined: Fraction


def stressed3_upper_bounds(length: int) -> StressedBounds:
    """Two upper bounds for the stressed depth-3 count of a given length.

    The naive bound is 8^((length-1)/2) for odd lengths and twice
    8^((length-2)/2) for even ones; the refined bound multiplies a power of
    two by a decay factor: 2^floor((3*length-3)/2) * (11/12)^floor((length-1)/2).
    """
    if length < 1:
        raise ValueError("length must be at least 1")
    if length % 2:
        naive = Fraction(8 ** ((length - 1) // 2))
    else:
        naive = Fraction(2 * 8 ** ((length - 2) // 2))
    refined = (Fraction(2) ** ((3 * length - 3) // 2)
               * Fraction(11, 12) ** ((length - 1) // 2))
    return StressedBounds(naive, refined)


def _sqrt_lower(n: int, digits: int = 9) -> Fraction:
    """Certified rational lower bound for sqrt(n)."""
    scale = 10 ** digits
    return Fraction(isqrt(n * scale * scale), scale)


def _iroot(n: int, k: int) -> int:
    """floor(n ** (1/k)) for n >= 0, k >= 1, in integers."""
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    if n in (0, 1) or k == 1:
        return n
    x = 1 << (n.bit_length() + k - 1) // k  # >= true root
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def tail_heavy_bound(length: int, tail_width: int, depth: int) -> Fraction:
    """Certified lower end of the tail-heavy bound t * q^t * c_q^(L + sqrt(L) + 10).

    The irrational exponent is rounded down to L + isqrt(L) + 10 and the
    leftover half-power of the squared constant is replaced by a rational
    lower bound, so the returned value never exceeds the true bound; a count
    at or below it is therefore certainly dominated.
    """
    if length < 1 or tail_width < 1 or depth < 1:
        raise ValueError("parameters must be positive")
    s = cq(depth).squared
    e = length + isqrt(length) + 10
    value = Fraction(s) ** (e // 2)
    if e % 2:
        value *= _sqrt_lower(s)
    return tail_width * Fraction(depth) ** tail_width * value


def depth_count_bound(length: int, q: int) -> int:
    """Upper bound q^length for the number of words with entries in [q]."""
    if length < 0 or q < 1:
        raise ValueError("need length >= 0 and q >= 1")
    return q ** length


def frobenius_bound_dominates(count: int, frobenius: int, q: int) -> bool:
    """Exact check of count <= frobenius * q^(frobenius/(q-1)).

    Decided by raising both sides to the (q-1)-th power, which clears the
    fractional exponent into integers.
    """
    if count < 0 or frobenius < 1 or q < 2:
        raise ValueError("need count >= 0, frobenius >= 1, q >= 2")
    return count ** (q - 1) <= frobenius ** (q - 1) * q ** frobenius


class GenericBounds(NamedTuple):
    depth_power: Fraction
    frobenius_power: Fraction


def generic_bounds(f: int, q: int) -> GenericBounds:
    """The two generic count bounds, as reportable rationals.

    ``depth_power`` is q^f with f read as a word length; ``frobenius_power``
    is a certified rational lower end of f * q^(f/(q-1)).  Dominance tests
    use :func:`depth_count_bound` and :func:`frobenius_bound_dominates`,
    which stay in integers.
    """
    if f < 1 or q < 2:
        raise ValueError("need f >= 1 and q >= 2")
    whole, rem = divmod(f, q - 1)
    value = Fraction(q) ** whole
    if rem:
        digits = 9
        scale = 10 ** digits
        root = _iroot(q ** rem * scale ** (q - 1), q - 1)
        value *= Fraction(root, scale)
    return GenericBounds(Fraction(q) ** f, f * value)


# ---------------------------------------------------------------------------
# the growth-rate curve
# ---------------------------------------------------------------------------


def growth_rate(x: float) -> float:
    """Limiting value of count(f, length)^(1/(length+1)) at ratio x = f/(length+1).

    Zero up to 1; on (1, 2] the depth-2 segment 2^(x-1), which the exact
    depth-2 count forces; past 2 the interpolation c_q^(x-q+1) * c_{q-1}^(q-x)
    on each (q-1, q].  The segments agree at every junction.
    """
    if x < 0:
        raise ValueError("x must be nonnegative")
    if x <= 1:
        return 0.0
    if x <= 2:
        return 2.0 ** (x - 1)
    q = -int(-x // 1)  # ceil: x in (q-1, q]
    s_hi = cq(q).squared
    s_lo = cq(q - 1).squared
    return s_hi ** ((x - q + 1) / 2) * s_lo ** ((q - x) / 2)
