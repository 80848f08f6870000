"""Exact closed-form counters for the restricted 132-avoider classes.

Every formula funnels through one binomial with fixed degenerate conventions:
C(a, b) = 0 for b < 0; C(a, 0) = 1 for every a (negative included);
C(a, b) = 0 for b > a >= 0 and for a < 0 < b.  Internal divisions must be
exact; an inexact one is a hard assertion failure, never a rounding.
"""
from __future__ import annotations

import math
from functools import lru_cache

from .errors import DomainError, ResourceLimitError
from .series import TruncatedSeries

SERIES_DEGREE_BOUND = 512


@lru_cache(maxsize=None)
def binomial(a: int, b: int) -> int:
    if b < 0:
        return 0
    if b == 0:
        return 1
    if a < 0 or b > a:
        return 0
    return math.comb(a, b)


def _exact_div(numerator: int, denominator: int) -> int:
    q, r = divmod(numerator, denominator)
    assert r == 0, f"inexact division {numerator}/{denominator}"
    return q


def catalan(n: int) -> int:
    if n < 0:
        raise DomainError(f"catalan needs n >= 0, got {n}")
    return _exact_div(binomial(2 * n, n), n + 1)


def narayana(n: int, k: int) -> int:
    """N(n, k): Dyck paths of semilength n with k peaks; N(0, 0) = 1."""
    if n < 0:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    return _exact_div(binomial(n, k) * binomial(n, k - 1), n)


def gen_narayana(i: int, n: int, j: int) -> int:
    """N_i(n, j): Dyck paths of semilength n, i returns to ground, j peaks."""
    if n < 0 or i < 0:
        return 0
    if n == 0:
        return 1 if i == 0 and j == 0 else 0
    return _exact_div(i * binomial(n, j) * binomial(n - i - 1, j - i), n)


def kappa(t: int, n: int, m: int) -> int:
    """Weak compositions of n into m parts, each part between 0 and t.

    Inclusion-exclusion over the parts exceeding t; the j-th term removes
    j*(t+1) before a stars-and-bars count, so j only runs while that stays
    non-negative.
    """
    if n < 0 or m < 0 or t < 0:
        return 0
    if m == 0:
        return 1 if n == 0 else 0
    total = 0
    for j in range(min(m, n // (t + 1)) + 1):
        total += (-1) ** j * binomial(m, j) * binomial(n - j * (t + 1) + m - 1, m - 1)
    assert total >= 0
    return total


def kappa_dp(t: int, n: int, m: int) -> int:
    """Dynamic-programming cross-check for kappa."""
    if n < 0 or m < 0 or t < 0:
        return 0
    row = [1] + [0] * n
    for _ in range(m):
        nxt = [0] * (n + 1)
        running = 0
        for total in range(n + 1):
            running += row[total]
            if total - t - 1 >= 0:
                running -= row[total - t - 1]
            nxt[total] = running
        row = nxt
    return row[n]


def bounded_compositions(n: int, k: int, w: int) -> int:
    """Compositions of n into k positive parts, each at most w."""
    if k < 0:
        raise DomainError(f"k must be >= 0, got {k}")
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0 or w <= 0:
        return 0
    total = 0
    for j in range(k + 1):
        if n - j * w - 1 < 0:
            break
        total += (-1) ** j * binomial(k, j) * binomial(n - j * w - 1, k - 1)
    assert total >= 0
    return total


def count_start_descents(n: int, i: int, k: int) -> int:
    """132-avoiders on [n] starting with i and having k descents."""
    if not 1 <= i <= n:
        raise DomainError(f"need 1 <= i <= n, got i={i}, n={n}")
    return _exact_div(
        (n + 1 - i) * binomial(n, n + 1 - k) * binomial(i - 2, i - k), n
    )


def count_start_end_descents(n: int, i: int, j: int, k: int) -> int:
    """132-avoiders on [n] starting with i, ending with j, with k descents.

    For i < j the class is empty unless j = n, where dropping the final
    maximum leaves an arbitrary avoider on [n-1] starting with i and the same
    descent count.  For i > j the word splits as an avoider on [n]\\[j]
    starting with i followed by an avoider on [j] ending with j; summing over
    the descents m contributed strictly inside the left block (its boundary
    drop into the right block adds one more) gives the convolution below.
    """
    if not (1 <= i <= n and 1 <= j <= n):
        raise DomainError(f"need 1 <= i, j <= n, got i={i}, j={j}, n={n}")
    if i == j:
        raise DomainError("i and j must differ")
    if i < j:
        if j != n:
            return 0
        return gen_narayana(n - i, n - 1, n - k)
    total = 0
    for m in range(k):
        left = gen_narayana(n + 1 - i, n - j, n - j - m)
        if j == 1:
            right = 1 if k - m - 1 == 1 else 0
        else:
            right = narayana(j - 1, k - m - 1)
        total += left * right
    return total


def count_bounded_runs(n: int, p: int, q: int, h: int, l: int) -> int:
    """132-avoiders on [n] with p increasing runs and q envelope groups,
    where the run ending at the last position has length <= h, every other
    run length <= h+1, and every envelope group has at most l+1 poles.

    Equivalently: plane trees of n edges with p even-level vertices of
    outdegree <= h and q odd-level vertices of outdegree <= l.  Runs and
    groups force p + q = n + 1, so other (p, q) give 0.
    """
    if n < 0 or p < 0 or q < 0 or h < 0 or l < 0:
        return 0
    if n == 0:
        return 1 if p == 0 and q == 0 else 0
    if p + q != n + 1:
        return 0
    first = kappa(l, p - 1, q) * kappa(h, q, p)
    left = sum((i + 1) * kappa(l, p - i - 2, q - 1) for i in range(l))
    right = sum((j + 1) * kappa(h, q - j - 1, p - 1) for j in range(h))
    total = first - left * right
    assert total >= 0
    return total


def count_bounded_ir(n: int, h: int) -> int:
    """132-avoiders on [n] whose final run has length <= h and every other
    run length <= h+1 (no envelope constraint)."""
    if n < 1 or h < 1:
        raise DomainError(f"need n >= 1 and h >= 1, got n={n}, h={h}")
    total = 0
    for k in range(1, n + 1):
        inner = 0
        for i in range((n + 1 - k) // (h + 1) + 1):
            inner += (-1) ** i * binomial(k, i) * binomial(n - i * (h + 1), k - 1)
        total += binomial(n, k) * inner
    return _exact_div(total, n)


def count_consec_pattern(n: int, k: int, m: int) -> int:
    """132-avoiders on [n] with m windows matching 2 3 ... k 1 (fixed k > 2).

    On avoiders these windows coincide with the maximal rising runs of length
    >= k-1 followed by a drop, which is the statistic the formula refines.
    Out-of-range terms vanish under the binomial conventions.
    """
    if k <= 2:
        raise DomainError(f"the consecutive-pattern count needs k > 2, got {k}")
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    if n == 0:
        return 1 if m == 0 else 0
    total = 0
    for s in range(n + 1):
        for q in range(s - m + 1):
            outer = binomial(n, s) * binomial(s, m + q) * binomial(m + q, m)
            if outer == 0:
                continue
            inner = 0
            for j in range(q + 1):
                inner += (-1) ** j * binomial(q, j) * binomial(
                    n - s - (j + m) * (k - 3), m + q + 1
                )
            total += outer * inner
    return _exact_div(total, n)


def _kappa_series_coefficient(t: int, n: int, m: int) -> int:
    """[x^n] ((1 - x^{t+1}) / (1 - x))^m for any integer m (exact).

    For m >= 0 this equals kappa(t, n, m); negative powers arise only on the
    boundary of the series identity below and are evaluated directly.
    """
    if n < 0:
        return 0
    if m >= 0:
        return kappa(t, n, m)
    base = TruncatedSeries.one_minus_x_power(t + 1, n) * TruncatedSeries.one_minus_x_power(
        1, n
    ).inverse()
    return base.pow(m).coefficient(n)


def lemma_a1_check(p: int, q: int, l: int) -> bool:
    """Exact coefficient identity behind the bounded-run count.

    Checks that [x^p] of
        x * (1-x^{l+1})^q/(1-x)^q * x/(1-x^{l+1}) * ((1-x^l)/(1-x) - l*x^l)
    equals sum_{i=0}^{l-1} (i+1) * kappa_l(p-i-2, q-1).  The shared factor
    (1-x^{l+1}) is cancelled exactly, (1-x^l)/(1-x) is expanded as the
    geometric polynomial, and the remaining denominators as truncated
    geometric series.
    """
    if p < 0 or q < 0 or l < 0:
        raise DomainError("parameters must be non-negative")
    if max(p, q, l) > SERIES_DEGREE_BOUND:
        raise ResourceLimitError(
            f"parameters exceed the series degree bound {SERIES_DEGREE_BOUND}"
        )
    degree = max(p, 2)
    cancelled = TruncatedSeries.one_minus_x_power(l + 1, degree).pow(q - 1)
    geom = TruncatedSeries.one_minus_x_power(1, degree).pow(-q)
    ramp = TruncatedSeries([1] * l, degree) - TruncatedSeries.x_power(l, degree).scale(l)
    lhs_series = cancelled * geom * ramp
    lhs = lhs_series.coefficient(p - 2) if p >= 2 else 0
    rhs = sum(
        (i + 1) * _kappa_series_coefficient(l, p - i - 2, q - 1) for i in range(l)
    )
    return lhs == rhs
