"""The four subsequence decompositions of a permutation.

IRD/DRD cut a permutation into maximal position-consecutive increasing
(respectively decreasing) runs.  VCIS groups each value with the maximal chain
j, j+1, ... that appears left to right.  LDE peels nested layers of
right-to-left maxima ("pole groups") off a 132-avoiding permutation.

Segments are reported in order of first position; every length distribution is
a non-increasing tuple summing to n.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .permutations import Permutation, avoids_132


@dataclass(frozen=True)
class Segment:
    """A subsequence: strictly increasing 1-based positions plus their values."""

    positions: tuple[int, ...]
    values: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.positions)


@dataclass(frozen=True)
class Decomposition:
    kind: str
    segments: tuple[Segment, ...]

    def __len__(self) -> int:
        return len(self.segments)

    def to_jsonable(self) -> dict:
        return {"kind": self.kind, "segments": [list(s.values) for s in self.segments]}


def _segment(pi: Permutation, positions: list[int]) -> Segment:
    return Segment(
        positions=tuple(p + 1 for p in positions),
        values=tuple(pi.values[p] for p in positions),
    )


def _runs(pi: Permutation, increasing: bool) -> tuple[Segment, ...]:
    vals = pi.values
    segs: list[Segment] = []
    block: list[int] = []
    for i, v in enumerate(vals):
        if block and ((v > vals[i - 1]) != increasing):
            segs.append(_segment(pi, block))
            block = []
        block.append(i)
    if block:
        segs.append(_segment(pi, block))
    return tuple(segs)


def ird(pi: Permutation) -> Decomposition:
    """Maximal increasing runs, left to right; one run per descent."""
    return Decomposition("IRD", _runs(pi, increasing=True))


def drd(pi: Permutation) -> Decomposition:
    """Maximal decreasing runs; one more run than there are ascents."""
    return Decomposition("DRD", _runs(pi, increasing=False))


def vcis(pi: Permutation) -> Decomposition:
    """Maximal value-consecutive increasing subsequences j, j+1, ..., j+k-1.

    Value v starts a segment iff v = 1 or v-1 appears to the right of v.
    """
    vals = pi.values
    n = len(vals)
    pos = [0] * (n + 2)
    for i, v in enumerate(vals):
        pos[v] = i
    segs: list[Segment] = []
    v = 1
    while v <= n:
        chain = [v]
        while v + 1 <= n and pos[v + 1] > pos[v]:
            v += 1
            chain.append(v)
        segs.append(_segment(pi, [pos[c] for c in chain]))
        v += 1
    segs.sort(key=lambda s: s.positions[0])
    return Decomposition("VCIS", tuple(segs))


def lde(pi: Permutation) -> Decomposition:
    """Layered decreasing envelope of a 132-avoiding permutation.

    On the active interval, repeatedly take the right-to-left maxima of the
    prefix ending at the interval's right end as one pole group, then restart
    just left of that group's leftmost pole; afterwards recurse into each gap
    strictly between consecutive poles of every group formed on this layer.
    """
    if not avoids_132(pi):
        raise DomainError("layered decreasing envelopes are defined only on 132-avoiders")
    vals = pi.values
    groups: list[list[int]] = []

    def layer(lo: int, hi: int) -> None:
        layer_groups: list[list[int]] = []
        r = hi
        while r >= lo:
            poles: list[int] = []
            best = 0
            for j in range(r, lo - 1, -1):
                if vals[j] > best:
                    best = vals[j]
                    poles.append(j)
            poles.reverse()
            layer_groups.append(poles)
            r = poles[0] - 1
        groups.extend(layer_groups)
        for g in layer_groups:
            for a, b in zip(g, g[1:]):
                if b > a + 1:
                    layer(a + 1, b - 1)

    if len(vals):
        layer(0, len(vals) - 1)
    groups.sort(key=lambda g: g[0])
    return Decomposition("LDE", tuple(_segment(pi, g) for g in groups))


def decompose(pi: Permutation, kind: str) -> Decomposition:
    key = kind.upper()
    if key == "IRD":
        return ird(pi)
    if key == "DRD":
        return drd(pi)
    if key == "VCIS":
        return vcis(pi)
    if key == "LDE":
        return lde(pi)
    raise DomainError(f"unknown decomposition kind {kind!r}")


def length_distribution(d: Decomposition) -> tuple[int, ...]:
    """Segment lengths sorted non-increasingly (an integer partition of n)."""
    return tuple(sorted((len(s) for s in d.segments), reverse=True))
