"""Chains in coverings and the chain-component partitions they induce."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from ._dsu import DisjointSet
from .coverings import Covering, TraceCovering, enumerate_coverings, minimal_basis_covering, nerve
from .errors import UnknownPoint
from .space import ComponentPartition, FiniteSpace, iter_bits

AnyCovering = Covering | TraceCovering


@dataclass(frozen=True)
class Chain:
    """Member indices ``U_1 .. U_n`` of ``covering`` joining ``x`` to ``y``."""

    covering: AnyCovering
    members: tuple[int, ...]
    x: str
    y: str

    def __len__(self):
        return len(self.members)

    def verify(self) -> bool:
        """Recheck every chain condition from scratch."""
        ms = self.covering.members
        if not self.members or any(not 0 <= i < len(ms) for i in self.members):
            return False
        sp = self.covering.space
        try:
            bx, by = 1 << sp.index(self.x), 1 << sp.index(self.y)
        except UnknownPoint:
            return False
        if not ms[self.members[0]] & bx or not ms[self.members[-1]] & by:
            return False
        return all(ms[a] & ms[b] for a, b in zip(self.members, self.members[1:]))

    def to_json(self) -> dict:
        sp, ms = self.covering.space, self.covering.members
        return {"members": [sp.labels(ms[i]) for i in self.members], "endpoints": [self.x, self.y]}


def _bit_in_carrier(c: AnyCovering, label: str) -> int:
    bit = 1 << c.space.index(label)
    if not c.carrier & bit:
        raise UnknownPoint(label)
    return bit


def find_chain(c: AnyCovering, x: str, y: str) -> Chain | None:
    """Shortest chain from ``x`` to ``y``, or ``None``.

    Breadth-first search over the nerve, started from every member holding
    ``x``; lower member indices win ties.
    """
    bx, by = _bit_in_carrier(c, x), _bit_in_carrier(c, y)
    ms = c.members
    adj = nerve(c).adjacency
    parent: dict[int, int | None] = {}
    queue: deque[int] = deque()
    for i, m in enumerate(ms):
        if m & bx:
            parent[i] = None
            queue.append(i)
    while queue:
        i = queue.popleft()
        if ms[i] & by:
            path = [i]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            return Chain(c, tuple(reversed(path)), x, y)
        for j in adj[i]:
            if j not in parent:
                parent[j] = i
                queue.append(j)
    return None


def u_chain_components(c: AnyCovering) -> ComponentPartition:
    ms = c.members
    dsu = DisjointSet(len(ms))
    for i, j in nerve(c).edges:
        dsu.union(i, j)
    groups: dict[int, int] = {}
    for i, m in enumerate(ms):
        r = dsu.find(i)
        groups[r] = groups.get(r, 0) | m
    return ComponentPartition(c.space, "u-chain-components", tuple(groups.values()), c)


@lru_cache(maxsize=4096)
def chain_components(space: FiniteSpace) -> ComponentPartition:
    """Chain components via the minimal-basis covering, which refines every covering."""
    blocks = u_chain_components(minimal_basis_covering(space)).blocks
    return ComponentPartition(space, "chain-components", blocks)


def chain_components_by_enumeration(space: FiniteSpace) -> ComponentPartition:
    """Intersect the u-chain partitions of every covering of ``space``."""
    blocks = {space.full} if space.full else set()
    for c in enumerate_coverings(space):
        parts = u_chain_components(c).blocks
        blocks = {b & p for b in blocks for p in parts if b & p}
    return ComponentPartition(space, "chain-components", tuple(blocks))


def _within_one_block(partition: ComponentPartition, mask: int) -> bool:
    if mask == 0:
        return True
    return any(mask & ~b == 0 for b in partition.blocks)


def is_u_chain_connected_set(space: FiniteSpace, c: AnyCovering, subset: int) -> bool:
    space.check_subset(subset)
    if subset & ~c.carrier:
        raise UnknownPoint(space.labels(subset & ~c.carrier)[0])
    return _within_one_block(u_chain_components(c), subset)


def is_chain_connected_set(space: FiniteSpace, subset: int) -> bool:
    space.check_subset(subset)
    return _within_one_block(chain_components(space), subset)


def chain_relation(c: AnyCovering) -> set[tuple[int, int]]:
    """All pairs of point indices joined by some chain, found pair by pair."""
    sp = c.space
    pts = list(iter_bits(c.carrier))
    return {
        (i, j)
        for i in pts
        for j in pts
        if find_chain(c, sp.points[i], sp.points[j]) is not None
    }
