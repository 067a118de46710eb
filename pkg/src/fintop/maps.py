"""Maps between finite spaces: continuity and continuity up to a covering."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .coverings import Covering
from .errors import MissingAssignment, SpaceMismatch, UnknownCodomainPoint, UnknownPoint
from .space import FiniteSpace, iter_bits


@dataclass(frozen=True)
class PointMap:
    """A total function ``domain -> codomain``; ``table[i]`` is the image index of point ``i``."""

    domain: FiniteSpace
    codomain: FiniteSpace
    table: tuple[int, ...]

    def __post_init__(self):
        if len(self.table) != len(self.domain.points):
            raise ValueError("table length differs from domain size")
        if any(not 0 <= t < len(self.codomain.points) for t in self.table):
            raise ValueError("table refers to a point outside the codomain")

    def __call__(self, label: str) -> str:
        return self.codomain.points[self.table[self.domain.index(label)]]

    def image(self, mask: int) -> int:
        r = 0
        for i in iter_bits(mask):
            r |= 1 << self.table[i]
        return r

    def preimage(self, mask: int) -> int:
        r = 0
        for i, t in enumerate(self.table):
            if mask >> t & 1:
                r |= 1 << i
        return r

    def to_json(self) -> dict:
        return {
            "domain": self.domain.to_json(),
            "codomain": self.codomain.to_json(),
            "table": {p: self(p) for p in sorted(self.domain.points)},
        }


def validate_map(
    x: FiniteSpace, y: FiniteSpace, table: Mapping[str, str]
) -> PointMap:
    for label in table:
        x.index(label)
    out = []
    for p in x.points:
        if p not in table:
            raise MissingAssignment(p)
        try:
            out.append(y.index(table[p]))
        except UnknownPoint:
            raise UnknownCodomainPoint(table[p]) from None
    return PointMap(x, y, tuple(out))


def identity(space: FiniteSpace, codomain: FiniteSpace | None = None) -> PointMap:
    """Identity on labels; ``codomain`` may carry another topology on the same labels."""
    codomain = codomain or space
    return validate_map(space, codomain, {p: p for p in space.points})


def discontinuity_witness(f: PointMap) -> int | None:
    """First codomain open (canonical order) whose preimage is not open."""
    for o in f.codomain.opens:
        if not f.domain.is_open(f.preimage(o)):
            return o
    return None


def is_continuous(f: PointMap) -> bool:
    return discontinuity_witness(f) is None


@dataclass(frozen=True)
class VContWitness:
    """Per domain point: an open neighbourhood and the index of a covering member holding its image."""

    f: PointMap
    covering: Covering
    neighbourhoods: tuple[int, ...]
    members: tuple[int, ...]

    def verify(self) -> bool:
        dom = self.f.domain
        if len(self.neighbourhoods) != len(dom.points) or len(self.members) != len(dom.points):
            return False
        for x, (u, j) in enumerate(zip(self.neighbourhoods, self.members)):
            if not (u >> x & 1 and dom.is_open(u)):
                return False
            if not 0 <= j < len(self.covering.members):
                return False
            if self.f.image(u) & ~self.covering.members[j]:
                return False
        return True

    def induced_covering(self) -> tuple[int, ...]:
        """The family of chosen neighbourhoods; it covers the domain."""
        return tuple(dict.fromkeys(self.neighbourhoods))

    def to_json(self) -> dict:
        dom, cod = self.f.domain, self.f.codomain
        return {
            p: {
                "U": dom.labels(self.neighbourhoods[dom.index(p)]),
                "V": cod.labels(self.covering.members[self.members[dom.index(p)]]),
            }
            for p in sorted(dom.points)
        }


@dataclass(frozen=True)
class VContinuity:
    """Outcome of a continuity-up-to-a-covering test; truthy iff it holds."""

    holds: bool
    witness: VContWitness | None = None
    offending_point: str | None = None

    def __bool__(self):
        return self.holds


def _check_codomain(f: PointMap, v: Covering):
    if v.space != f.codomain:
        raise SpaceMismatch("covering is not a covering of the map's codomain")


def _first_member_containing(v: Covering, mask: int) -> int | None:
    for j, m in enumerate(v.members):
        if mask & ~m == 0:
            return j
    return None


def is_v_continuous(f: PointMap, v: Covering) -> VContinuity:
    """Test each point's minimal neighbourhood only.

    Any neighbourhood of ``x`` contains the minimal one, so the minimal one
    is the easiest to fit in a covering member.
    """
    _check_codomain(f, v)
    chosen = []
    for x, u in enumerate(f.domain.min_nbhds):
        j = _first_member_containing(v, f.image(u))
        if j is None:
            return VContinuity(False, offending_point=f.domain.points[x])
        chosen.append(j)
    return VContinuity(True, VContWitness(f, v, f.domain.min_nbhds, tuple(chosen)))


def is_v_continuous_naive(f: PointMap, v: Covering) -> VContinuity:
    """Literal definition: scan every open set containing each point."""
    _check_codomain(f, v)
    dom = f.domain
    nbhds, chosen = [], []
    for x in range(len(dom.points)):
        found = None
        for u in dom.opens:
            if not u >> x & 1:
                continue
            j = _first_member_containing(v, f.image(u))
            if j is not None:
                found = (u, j)
                break
        if found is None:
            return VContinuity(False, offending_point=dom.points[x])
        nbhds.append(found[0])
        chosen.append(found[1])
    return VContinuity(True, VContWitness(f, v, tuple(nbhds), tuple(chosen)))


def compose(f: PointMap, g: PointMap) -> PointMap:
    """``g`` after ``f``."""
    if f.codomain != g.domain:
        raise SpaceMismatch("codomain of f is not the domain of g")
    return PointMap(f.domain, g.codomain, tuple(g.table[t] for t in f.table))


def image_family(f: PointMap, v: Covering) -> list[int]:
    if v.space != f.domain:
        raise SpaceMismatch("covering is not a covering of the map's domain")
    return [f.image(m) for m in v.members]


@dataclass(frozen=True)
class MapProperties:
    surjective: bool
    injective: bool
    bijective: bool
    homeomorphism: bool


def inverse(f: PointMap) -> PointMap:
    inv = [0] * len(f.table)
    for i, t in enumerate(f.table):
        inv[t] = i
    return PointMap(f.codomain, f.domain, tuple(inv))


def map_properties(f: PointMap) -> MapProperties:
    n_cod = len(f.codomain.points)
    surjective = len(set(f.table)) == n_cod
    injective = len(set(f.table)) == len(f.table)
    bijective = surjective and injective
    homeo = bijective and is_continuous(f) and is_continuous(inverse(f))
    return MapProperties(surjective, injective, bijective, homeo)


def constant(x: FiniteSpace, y: FiniteSpace, target: str) -> PointMap:
    return PointMap(x, y, (y.index(target),) * len(x.points))
