"""Finite topological spaces.

A subset of a space is an ``int`` bit-vector over the space's point
ordering: bit ``i`` is set iff ``points[i]`` is a member.  All set algebra
below is plain integer arithmetic on these masks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import TYPE_CHECKING, Any, Iterable, Sequence

from ._dsu import DisjointSet
from .errors import (
    DuplicatePoint,
    MissingEmptySet,
    MissingWholeSet,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
    UnknownPoint,
)

if TYPE_CHECKING:
    from .maps import PointMap

PointSet = int


def iter_bits(mask: int):
    """Yield the indices of set bits, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class FiniteSpace:
    """A finite point set together with its family of open sets.

    Construct through :func:`validate_topology` when starting from labels;
    the constructor itself re-checks every axiom on the mask family.
    """

    points: tuple[str, ...]
    opens: tuple[int, ...]
    _open_set: frozenset = field(init=False, repr=False, compare=False)
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        index: dict[str, int] = {}
        for i, label in enumerate(self.points):
            if label in index:
                raise DuplicatePoint(label)
            index[label] = i
        opens = frozenset(self.opens)
        full = (1 << len(self.points)) - 1
        if any(o & ~full for o in opens):
            raise ValueError("open set mask has bits outside the point set")
        if 0 not in opens:
            raise MissingEmptySet()
        if full not in opens:
            raise MissingWholeSet(self._names(full))
        for u, v in combinations(sorted(opens), 2):
            if u | v not in opens:
                raise NotClosedUnderUnion(self._names(u), self._names(v))
            if u & v not in opens:
                raise NotClosedUnderIntersection(
                    self._names(u), self._names(v)
                )
        object.__setattr__(self, "_open_set", opens)
        object.__setattr__(self, "_index", index)
        ordered = tuple(sorted(opens, key=lambda m: self._key(m)))
        object.__setattr__(self, "opens", ordered)

    def _names(self, mask):
        return sorted(self.points[i] for i in iter_bits(mask))

    def _key(self, mask):
        return (mask.bit_count(), sorted(self.points[i] for i in iter_bits(mask)))

    def __hash__(self):
        return hash((self.points, self.opens))

    def __len__(self):
        return len(self.points)

    @property
    def full(self) -> int:
        return (1 << len(self.points)) - 1

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownPoint(label) from None

    def mask(self, labels: Iterable[str]) -> int:
        """Encode labels as a mask; repeated labels are rejected."""
        m = 0
        for label in labels:
            bit = 1 << self.index(label)
            if m & bit:
                raise DuplicatePoint(label)
            m |= bit
        return m

    def labels(self, mask: int) -> list[str]:
        """Decode a mask into labels in lexicographic order."""
        return sorted(self.points[i] for i in iter_bits(mask))

    def sort_key(self, mask: int):
        """Canonical subset order: by size, then lexicographically by labels."""
        return self._key(mask)

    def is_open(self, mask: int) -> bool:
        return mask in self._open_set

    def is_closed(self, mask: int) -> bool:
        return (self.full & ~mask) in self._open_set

    def check_subset(self, mask: int) -> int:
        if mask & ~self.full:
            raise UnknownPoint(f"bit {(mask & ~self.full).bit_length() - 1}")
        return mask

    @cached_property
    def min_nbhds(self) -> tuple[int, ...]:
        """Minimal open neighbourhood of each point, by point index."""
        result = []
        for i in range(len(self.points)):
            bit = 1 << i
            m = self.full
            for o in self.opens:
                if o & bit:
                    m &= o
            result.append(m)
        return tuple(result)

    @cached_property
    def clopens(self) -> tuple[int, ...]:
        return tuple(o for o in self.opens if self.is_closed(o))

    def to_json(self) -> dict:
        return {
            "points": sorted(self.points),
            "opens": [self.labels(o) for o in self.opens],
        }


PARTITION_KINDS = ("connected-components", "quasicomponents", "u-chain-components", "chain-components")


@dataclass(frozen=True)
class ComponentPartition:
    """Disjoint nonempty blocks covering the carrier, in canonical order.

    ``covering`` is set for the u-chain kind only.
    """

    space: FiniteSpace
    kind: str
    blocks: tuple[int, ...]
    covering: Any = None

    def __post_init__(self):
        if self.kind not in PARTITION_KINDS:
            raise ValueError(f"unknown partition kind {self.kind!r}")
        object.__setattr__(
            self, "blocks", tuple(sorted(self.blocks, key=self.space.sort_key))
        )
        union = 0
        for b in self.blocks:
            if b == 0 or union & b:
                raise ValueError("partition blocks must be nonempty and disjoint")
            union |= b

    @property
    def carrier(self) -> int:
        union = 0
        for b in self.blocks:
            union |= b
        return union

    def block_of(self, x: str) -> int:
        bit = 1 << self.space.index(x)
        for b in self.blocks:
            if b & bit:
                return b
        raise ValueError(f"point {x!r} is outside the partitioned carrier")

    def same_blocks(self, other: "ComponentPartition") -> bool:
        return set(self.blocks) == set(other.blocks)

    def to_json(self) -> list[list[str]]:
        return [self.space.labels(b) for b in self.blocks]


def validate_topology(
    points: Sequence[str], opens: Iterable[Iterable[str]]
) -> FiniteSpace:
    """Build a space from labels, checking every topology axiom.

    Duplicate open sets are collapsed; duplicate labels inside one open set
    or in the point list raise :class:`DuplicatePoint`.
    """
    points = tuple(points)
    index = {}
    for i, p in enumerate(points):
        if p in index:
            raise DuplicatePoint(p)
        index[p] = i
    masks = set()
    for o in opens:
        m = 0
        for label in o:
            if label not in index:
                raise UnknownPoint(label)
            bit = 1 << index[label]
            if m & bit:
                raise DuplicatePoint(label)
            m |= bit
        masks.add(m)
    return FiniteSpace(points, tuple(masks))


def space_from_json(obj: dict) -> FiniteSpace:
    return validate_topology(obj["points"], obj["opens"])


def discrete(points: Sequence[str]) -> FiniteSpace:
    n = len(points)
    return FiniteSpace(tuple(points), tuple(range(1 << n)))


def indiscrete(points: Sequence[str]) -> FiniteSpace:
    return FiniteSpace(tuple(points), (0, (1 << len(points)) - 1))


def minimal_neighborhood(space: FiniteSpace, x: str) -> int:
    """Intersection of all open sets containing ``x`` (itself open)."""
    return space.min_nbhds[space.index(x)]


def is_t1(space: FiniteSpace) -> bool:
    """Definitional T1 test: every point has a neighbourhood missing any other."""
    n = len(space.points)
    for x in range(n):
        for y in range(n):
            if x == y:
                continue
            if not any(o >> y & 1 and not o >> x & 1 for o in space.opens):
                return False
    return True


def clopen_sets(space: FiniteSpace) -> list[int]:
    return list(space.clopens)


def is_connected(space: FiniteSpace) -> bool:
    # The empty space has no proper nonempty clopen subset; counted connected.
    return all(c in (0, space.full) for c in clopen_sets(space))


def quasicomponent(space: FiniteSpace, x: str) -> int:
    bit = 1 << space.index(x)
    m = space.full
    for c in clopen_sets(space):
        if c & bit:
            m &= c
    return m


def quasicomponents(space: FiniteSpace) -> ComponentPartition:
    blocks = {quasicomponent(space, p) for p in space.points}
    return ComponentPartition(space, "quasicomponents", tuple(blocks))


def connected_components(space: FiniteSpace) -> ComponentPartition:
    """Components of the specialisation graph: x ~ y when one lies in the other's minimal neighbourhood."""
    n = len(space.points)
    dsu = DisjointSet(n)
    for x, u in enumerate(space.min_nbhds):
        for y in iter_bits(u):
            dsu.union(x, y)
    blocks: dict[int, int] = {}
    for x in range(n):
        r = dsu.find(x)
        blocks[r] = blocks.get(r, 0) | 1 << x
    return ComponentPartition(space, "connected-components", tuple(blocks.values()))


def subspace(space: FiniteSpace, carrier: int) -> FiniteSpace:
    """Subspace topology on ``carrier``; points keep their relative order."""
    space.check_subset(carrier)
    idx = list(iter_bits(carrier))
    pos = {i: k for k, i in enumerate(idx)}

    def restrict(mask):
        r = 0
        for i in iter_bits(mask & carrier):
            r |= 1 << pos[i]
        return r

    return FiniteSpace(
        tuple(space.points[i] for i in idx), tuple({restrict(o) for o in space.opens})
    )


def union_closure(family: Iterable[int]) -> set[int]:
    """All unions of subfamilies (the empty union included)."""
    closed = {0}
    for m in family:
        closed |= {c | m for c in closed}
    return closed


def product(a: FiniteSpace, b: FiniteSpace) -> tuple[FiniteSpace, "PointMap", "PointMap"]:
    """Binary product topology plus both projections.

    The pair ``(x, y)`` is labelled ``"x,y"`` and sits at bit
    ``i * len(b) + j``.
    """
    from .maps import PointMap

    nb = len(b.points)
    points = tuple(f"{x},{y}" for x in a.points for y in b.points)
    rectangles = set()
    for u in a.opens:
        for v in b.opens:
            r = 0
            for i in iter_bits(u):
                r |= v << (i * nb)
            rectangles.add(r)
    space = FiniteSpace(points, tuple(union_closure(rectangles)))
    proj_a = PointMap(space, a, tuple(k // nb for k in range(len(points))))
    proj_b = PointMap(space, b, tuple(k % nb for k in range(len(points))))
    return space, proj_a, proj_b


def product_set(a: FiniteSpace, b: FiniteSpace, ca: int, cb: int) -> int:
    """Mask of ``ca x cb`` inside :func:`product` ``(a, b)``."""
    nb = len(b.points)
    r = 0
    for i in iter_bits(ca):
        r |= cb << (i * nb)
    return r
