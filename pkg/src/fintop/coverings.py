"""Open coverings, refinement, nerve graphs and covering enumeration."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import CapExceeded, DoesNotCover, MemberNotOpen, SpaceMismatch
from .space import FiniteSpace

DEFAULT_OPENS_CAP = 20


@dataclass(frozen=True)
class Covering:
    """Distinct nonempty open sets of ``space`` whose union is the whole set.

    ``stripped`` counts empty members dropped by :func:`validate_covering`.
    """

    space: FiniteSpace
    members: tuple[int, ...]
    stripped: int = field(default=0, compare=False)

    def __post_init__(self):
        seen = set()
        union = 0
        for i, m in enumerate(self.members):
            if not self.space.is_open(m):
                raise MemberNotOpen(i, self.space.labels(m))
            if m == 0 or m in seen:
                raise ValueError("covering members must be nonempty and distinct")
            seen.add(m)
            union |= m
        if union != self.space.full:
            raise DoesNotCover(self.space.labels(self.space.full & ~union))

    def __len__(self):
        return len(self.members)

    @property
    def carrier(self) -> int:
        return self.space.full

    def to_json(self) -> dict:
        sp = self.space
        return {
            "space": sp.to_json(),
            "members": [sp.labels(m) for m in sorted(self.members, key=sp.sort_key)],
        }


@dataclass(frozen=True)
class TraceCovering:
    """Traces ``V & carrier`` of a parent covering's members."""

    parent: Covering
    carrier: int
    members: tuple[int, ...]

    @property
    def space(self) -> FiniteSpace:
        return self.parent.space

    def __len__(self):
        return len(self.members)


def _dedupe(masks: Iterable[int]) -> tuple[int, ...]:
    return tuple(dict.fromkeys(m for m in masks if m))


def validate_covering(space: FiniteSpace, members: Iterable[Iterable[str]]) -> Covering:
    """Validate label-level members; empties are stripped, duplicates collapsed."""
    masks = []
    for i, labels in enumerate(members):
        m = space.mask(labels)
        if not space.is_open(m):
            raise MemberNotOpen(i, space.labels(m))
        masks.append(m)
    kept = _dedupe(masks)
    union = 0
    for m in kept:
        union |= m
    if union != space.full:
        raise DoesNotCover(space.labels(space.full & ~union))
    return Covering(space, kept, stripped=sum(1 for m in masks if m == 0))


def covering_from_masks(space: FiniteSpace, masks: Iterable[int]) -> Covering:
    return Covering(space, _dedupe(masks))


def refinement_witness(u: Covering, v: Covering) -> tuple[int, ...] | None:
    """For each member of ``u`` the index of the first member of ``v`` containing it."""
    if u.space != v.space:
        raise SpaceMismatch("refinement compares coverings of different spaces")
    return family_refinement_witness(u.members, v)


def family_refinement_witness(
    family: Sequence[int], v: Covering | TraceCovering
) -> tuple[int, ...] | None:
    """Containment test for an arbitrary (not necessarily open) family."""
    witness = []
    for m in family:
        for j, big in enumerate(v.members):
            if m & ~big == 0:
                witness.append(j)
                break
        else:
            return None
    return tuple(witness)


def refines(u: Covering, v: Covering) -> bool:
    return refinement_witness(u, v) is not None


def family_refines(family: Sequence[int], v: Covering | TraceCovering) -> bool:
    return family_refinement_witness(family, v) is not None


@dataclass(frozen=True)
class NerveGraph:
    """Vertex ``i`` is member ``i``; ``(i, j)`` with ``i < j`` is an edge iff they meet."""

    n_vertices: int
    edges: frozenset

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n_vertices)]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return tuple(tuple(sorted(a)) for a in adj)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def to_dot(self, labels: Sequence[str] | None = None) -> str:
        names = labels or [str(i) for i in range(self.n_vertices)]
        lines = ["graph nerve {"]
        lines += [f'  {i} [label="{names[i]}"];' for i in range(self.n_vertices)]
        lines += [f"  {i} -- {j};" for i, j in sorted(self.edges)]
        lines.append("}")
        return "\n".join(lines)


def nerve(c: Covering | TraceCovering) -> NerveGraph:
    ms = c.members
    edges = frozenset(
        (i, j)
        for i in range(len(ms))
        for j in range(i + 1, len(ms))
        if ms[i] & ms[j]
    )
    return NerveGraph(len(ms), edges)


def minimal_basis_covering(space: FiniteSpace) -> Covering:
    """Distinct minimal neighbourhoods, in canonical subset order."""
    return Covering(space, tuple(sorted(set(space.min_nbhds), key=space.sort_key)))


def _irredundant(members: Sequence[int], full: int) -> bool:
    for k in range(len(members)):
        rest = 0
        for j, m in enumerate(members):
            if j != k:
                rest |= m
        if rest == full:
            return False
    return True


def enumerate_coverings(
    space: FiniteSpace,
    irredundant_only: bool = False,
    cap: int = DEFAULT_OPENS_CAP,
) -> Iterator[Covering]:
    """Yield every covering made of nonempty opens.

    Subfamilies come in lexicographic order of their index sets, indices
    referring to the canonical order of ``space.opens`` minus the empty set.
    """
    if len(space.opens) > cap:
        raise CapExceeded(f"{len(space.opens)} open sets exceed the cap of {cap}")
    cands = [o for o in space.opens if o]
    full = space.full
    if full == 0:
        # Empty space: the empty family covers it.
        yield Covering(space, ())
        return
    stack: list[int] = []

    def walk(start, union):
        for i in range(start, len(cands)):
            stack.append(cands[i])
            u = union | cands[i]
            if u == full and (not irredundant_only or _irredundant(stack, full)):
                yield Covering(space, tuple(stack))
            yield from walk(i + 1, u)
            stack.pop()

    yield from walk(0, 0)


def trace_covering(v: Covering, carrier: int) -> TraceCovering:
    """Nonempty traces of ``v`` on ``carrier``; an empty carrier gives no members."""
    v.space.check_subset(carrier)
    return TraceCovering(v, carrier, _dedupe(m & carrier for m in v.members))
