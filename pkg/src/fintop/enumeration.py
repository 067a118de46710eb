"""Enumeration of labelled finite topologies and of maps between spaces.

Topologies on a finite set correspond one-to-one to preorders on it: the
open sets are the up-closed sets of the specialisation preorder.  We list
preorders (reflexive, transitive relations) and convert each one.
"""

from __future__ import annotations

from itertools import product as cartesian
from typing import Iterator, Sequence

from .errors import CapExceeded
from .maps import PointMap
from .space import FiniteSpace

MAX_ENUM_POINTS = 4
DEFAULT_MAPS_CAP = 10_000


def default_labels(n: int) -> tuple[str, ...]:
    return tuple("abcdefghijklmnopqrstuvwxyz"[:n])


def _preorders(n: int) -> Iterator[list[int]]:
    """Yield preorders as ``up[i]`` = mask of points above ``i`` (``i`` included)."""
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    for bits in range(1 << len(pairs)):
        up = [1 << i for i in range(n)]
        for k, (i, j) in enumerate(pairs):
            if bits >> k & 1:
                up[i] |= 1 << j
        if all(up[j] & ~up[i] == 0 for i in range(n) for j in range(n) if up[i] >> j & 1):
            yield up


def _up_closed_sets(up: list[int], n: int) -> tuple[int, ...]:
    return tuple(
        m
        for m in range(1 << n)
        if all(up[i] & ~m == 0 for i in range(n) if m >> i & 1)
    )


def enumerate_topologies(
    n: int, labels: Sequence[str] | None = None
) -> Iterator[FiniteSpace]:
    """Every topology on ``n`` labelled points, ordered by their canonical open families."""
    if not 0 <= n <= MAX_ENUM_POINTS:
        raise CapExceeded(f"topology enumeration is capped at {MAX_ENUM_POINTS} points")
    labels = tuple(labels or default_labels(n))
    spaces = [FiniteSpace(labels, _up_closed_sets(up, n)) for up in _preorders(n)]
    spaces.sort(key=lambda s: (len(s.opens), s.opens))
    yield from spaces


def enumerate_maps(
    x: FiniteSpace,
    y: FiniteSpace,
    surjective_only: bool = False,
    cap: int = DEFAULT_MAPS_CAP,
) -> Iterator[PointMap]:
    """All total functions in lexicographic order of their tables."""
    n_x, n_y = len(x.points), len(y.points)
    if n_y**n_x > cap:
        raise CapExceeded(f"{n_y}^{n_x} maps exceed the cap of {cap}")
    for table in cartesian(range(n_y), repeat=n_x):
        if surjective_only and len(set(table)) != n_y:
            continue
        yield PointMap(x, y, table)
