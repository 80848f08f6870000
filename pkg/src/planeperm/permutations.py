"""Permutations in one-line notation, pattern tests, and 132-avoider generation.

Positions are 1-based in every public position set.  The last position of a
nonempty permutation always counts as a descent, so the number of ascents plus
the number of descents equals the length.
"""
from __future__ import annotations

import os
from collections.abc import Iterable, Iterator

from .errors import DomainError, ParseError, ResourceLimitError

DEFAULT_ENUMERATION_BOUND = 14
ENUMERATION_BOUND_ENV = "PLANEPERM_MAX_N"


def enumeration_bound() -> int:
    """Largest ``n`` the exhaustive generators accept (env-overridable)."""
    raw = os.environ.get(ENUMERATION_BOUND_ENV)
    if raw is None:
        return DEFAULT_ENUMERATION_BOUND
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_ENUMERATION_BOUND


def _check_bound(n: int, bound: int | None) -> None:
    limit = enumeration_bound() if bound is None else bound
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    if n > limit:
        raise ResourceLimitError(f"n={n} exceeds the enumeration bound {limit}")


class Permutation:
    """Immutable permutation of 1..n in one-line notation.

    Indexing is 0-based like any Python sequence; the statistics below report
    1-based positions.
    """

    __slots__ = ("values",)

    def __init__(self, values: Iterable[int]):
        vals = tuple(values)
        n = len(vals)
        if sorted(vals) != list(range(1, n + 1)):
            raise DomainError(f"not a permutation of 1..{n}: {vals!r}")
        self.values = vals

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse whitespace- or comma-separated 1-based values."""
        parts = [p for p in text.replace(",", " ").split() if p]
        try:
            vals = tuple(int(p) for p in parts)
        except ValueError as exc:
            raise ParseError(f"invalid permutation entry in {text!r}") from exc
        n = len(vals)
        seen = set()
        for v in vals:
            if not 1 <= v <= n:
                raise ParseError(f"value {v} out of range 1..{n}")
            if v in seen:
                raise ParseError(f"duplicate value {v}")
            seen.add(v)
        return cls(vals)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Permutation):
            return self.values == other.values
        return NotImplemented

    def __lt__(self, other: "Permutation") -> bool:
        return self.values < other.values

    def __hash__(self) -> int:
        return hash(self.values)

    def __repr__(self) -> str:
        return f"Permutation({list(self.values)!r})"

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.values)


# A pattern is just a (usually short) permutation used as a template.
PatternWord = Permutation


def contains_pattern(pi: Permutation, tau: PatternWord) -> bool:
    """True iff some subsequence of ``pi`` is order-isomorphic to ``tau``.

    Backtracking over candidate positions; adequate for the short patterns
    (m <= 6) this project uses.
    """
    word = pi.values
    pat = tau.values
    n, m = len(word), len(pat)
    if m == 0:
        return True
    if m > n:
        return False

    def extend(start: int, chosen: list[int]) -> bool:
        t = len(chosen)
        if t == m:
            return True
        for p in range(start, n - (m - t) + 1):
            x = word[p]
            ok = True
            for s, q in enumerate(chosen):
                if (word[q] < x) != (pat[s] < pat[t]):
                    ok = False
                    break
            if ok:
                chosen.append(p)
                if extend(p + 1, chosen):
                    return True
                chosen.pop()
        return False

    return extend(0, [])


def avoids_132(pi: Permutation) -> bool:
    """Linear-time 132 test: right-to-left scan with a monotone stack.

    ``third`` tracks the largest value already popped, i.e. the best candidate
    for the middle value of a 132 occurrence seen so far.
    """
    third = 0
    stack: list[int] = []
    for x in reversed(pi.values):
        if x < third:
            return False
        while stack and stack[-1] < x:
            third = stack.pop()
        stack.append(x)
    return True


def descent_set(pi: Permutation) -> tuple[int, ...]:
    """1-based descent positions; position n is always included (n >= 1)."""
    vals = pi.values
    n = len(vals)
    if n == 0:
        return ()
    out = [i + 1 for i in range(n - 1) if vals[i] > vals[i + 1]]
    out.append(n)
    return tuple(out)


def ascent_set(pi: Permutation) -> tuple[int, ...]:
    """1-based ascent positions (strictly before position n)."""
    vals = pi.values
    return tuple(i + 1 for i in range(len(vals) - 1) if vals[i] < vals[i + 1])


def enumerate_avoiders(n: int, bound: int | None = None) -> Iterator[Permutation]:
    """Yield all of S_n(132) once each, in lexicographic one-line order.

    A prefix with minimum ``mn`` extends to a full 132-avoider exactly by one
    of: any unused value below ``mn``, or the single smallest unused value
    above ``mn``.  (A larger-than-minimal choice above ``mn`` would strand the
    skipped value between the current minimum and the new entry.)  Trying
    candidates in increasing order therefore streams the whole class in
    lexicographic order with no dead branches.
    """
    _check_bound(n, bound)

    def rec(prefix: list[int], remaining: list[int], mn: int) -> Iterator[Permutation]:
        if not remaining:
            yield Permutation(prefix)
            return
        for i, x in enumerate(remaining):
            above = x > mn
            prefix.append(x)
            yield from rec(prefix, remaining[:i] + remaining[i + 1 :], min(mn, x))
            prefix.pop()
            if above:
                break

    yield from rec([], list(range(1, n + 1)), n + 1)


def consecutive_occurrences(pi: Permutation, tau: PatternWord) -> int:
    """Number of windows of ``pi`` order-isomorphic to ``tau`` (all windows)."""
    word = pi.values
    pat = tau.values
    n, m = len(word), len(pat)
    if m == 0 or m > n:
        return 1 if m == 0 and n >= 0 else 0
    pat_ranks = _standardize(pat)
    count = 0
    for i in range(n - m + 1):
        if _standardize(word[i : i + m]) == pat_ranks:
            count += 1
    return count


def _standardize(window: tuple[int, ...]) -> tuple[int, ...]:
    order = sorted(range(len(window)), key=window.__getitem__)
    ranks = [0] * len(window)
    for r, idx in enumerate(order):
        ranks[idx] = r + 1
    return tuple(ranks)


def maximal_run_drop_count(pi: Permutation, k: int) -> int:
    """Descents whose maximal increasing run ending there has length >= k-1.

    Counts maximal rising runs of length >= k-1 that are followed by a drop,
    i.e. every run except the one ending at the last position.
    """
    if k < 2:
        raise DomainError(f"k must be >= 2, got {k}")
    vals = pi.values
    n = len(vals)
    count = 0
    run_len = 1
    for i in range(1, n):
        if vals[i] > vals[i - 1]:
            run_len += 1
        else:
            if run_len >= k - 1:
                count += 1
            run_len = 1
    return count


def lis_from(pi: Permutation, start: int) -> int:
    """Length of the longest increasing subsequence beginning at 1-based ``start``."""
    vals = pi.values
    n = len(vals)
    if not 1 <= start <= n:
        raise DomainError(f"start position {start} out of range 1..{n}")
    best = [1] * n
    for i in range(n - 1, -1, -1):
        for j in range(i + 1, n):
            if vals[j] > vals[i] and best[j] + 1 > best[i]:
                best[i] = best[j] + 1
    return best[start - 1]
