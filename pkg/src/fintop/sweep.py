"""Exhaustive sweeps of the claim catalog over small labelled spaces.

``sweep`` runs :func:`~fintop.theorems.check` on every instance built from
:func:`enumerate_topologies`, :func:`enumerate_maps` and
:func:`enumerate_coverings`.  For claims quantifying over one or two
coverings per map the instance count runs into the millions at three
points, so those claims also have a *factored* evaluator: coverings of a
space are indexed once, and the sets of coverings satisfying each
hypothesis or conclusion are computed as integer bitsets.  The factored
evaluator counts exactly the same instances as the brute-force one (the
test-suite compares the two) and every failure it reports is replayed
through ``check``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator

from .chains import is_u_chain_connected_set, u_chain_components
from .coverings import enumerate_coverings, trace_covering
from .enumeration import enumerate_maps, enumerate_topologies
from .errors import CapExceeded
from .maps import PointMap
from .space import FiniteSpace, is_connected, iter_bits
from .theorems import (
    FAILS,
    HOLDS,
    NOT_MET,
    SEARCH_TARGETS,
    TheoremId,
    TheoremVerdict,
    check,
    theorem_id,
    verify_witnesses,
)

T = TheoremId

DEFAULT_BUDGET_S = 60.0
MAX_STORED_COUNTEREXAMPLES = 25
# Claims quantifying over maps and coverings together.
DOUBLY_QUANTIFIED = frozenset(
    {
        T.REFINE_MONOTONE,
        T.TRIVIAL_COVER_REMARK,
        T.PREIMAGE_WITNESS_PROP,
        T.COMPOSE_PROP,
        T.VCONT_IMAGE_CHAIN_PROP21,
        T.CONN_VCONT_COR,
        T.CONN_VCONT_SURJ_COR,
    }
)


class _Timeout(Exception):
    pass


@dataclass
class SweepReport:
    theorem: TheoremId
    max_points: int
    instances: int = 0
    holds: int = 0
    fails: int = 0
    hypothesis_not_met: int = 0
    counterexamples: list[TheoremVerdict] = field(default_factory=list)
    truncated: bool = False
    witnesses_verified: int = 0
    witness_failures: int = 0
    method: str = "brute"
    elapsed_s: float = 0.0

    def record(self, status: str, n: int = 1):
        self.instances += n
        if status == HOLDS:
            self.holds += n
        elif status == FAILS:
            self.fails += n
        else:
            self.hypothesis_not_met += n

    def add_counterexample(self, verdict: TheoremVerdict):
        if len(self.counterexamples) < MAX_STORED_COUNTEREXAMPLES:
            self.counterexamples.append(verdict)

    @property
    def ok(self) -> bool:
        if self.truncated or self.witness_failures:
            return False
        if self.theorem == T.NONT1_COUNTEREXAMPLE:
            return self.fails > 0
        if self.theorem in SEARCH_TARGETS:
            return True
        return self.fails == 0

    def merge(self, other: "SweepReport") -> "SweepReport":
        for name in ("instances", "holds", "fails", "hypothesis_not_met", "witnesses_verified", "witness_failures"):
            setattr(self, name, getattr(self, name) + getattr(other, name))
        self.truncated = self.truncated or other.truncated
        for cx in other.counterexamples:
            self.add_counterexample(cx)
        return self

    def to_json(self) -> dict:
        out = {
            "theorem": self.theorem.value,
            "instances": self.instances,
            "holds": self.holds,
            "fails": self.fails,
            "hypothesis_not_met": self.hypothesis_not_met,
            "counterexamples": [c.to_json() for c in self.counterexamples],
            "truncated": self.truncated,
            "max_points": self.max_points,
            "witnesses_verified": self.witnesses_verified,
            "witness_failures": self.witness_failures,
        }
        if self.theorem == T.CHECK_EXAMPLE2 and self.counterexamples:
            out["findings"] = self.counterexamples[0].payload.get("findings", [])
        return out


# ------------------------------------------------------------ instance sets


@lru_cache(maxsize=None)
def spaces_upto(n: int) -> tuple[FiniteSpace, ...]:
    """All labelled topologies on 1..n points."""
    return tuple(s for k in range(1, n + 1) for s in enumerate_topologies(k))


@lru_cache(maxsize=None)
def _coverings(space: FiniteSpace):
    return tuple(enumerate_coverings(space))


@lru_cache(maxsize=None)
def _maps(x: FiniteSpace, y: FiniteSpace, surjective_only: bool = False):
    return tuple(enumerate_maps(x, y, surjective_only))


def _all_subsets(space):
    return range(space.full + 1)


def _map_pairs(n):
    sp = spaces_upto(n)
    for x in sp:
        for y in sp:
            for f in _maps(x, y):
                yield f


def iter_instances(tid: TheoremId, n: int) -> Iterator[dict]:
    """Brute-force instance stream for ``sweep``."""
    sp = spaces_upto(n)
    if tid == T.REFINE_MONOTONE:
        for f in _map_pairs(n):
            covs = _coverings(f.codomain)
            for v in covs:
                for w in covs:
                    yield {"f": f, "v": v, "w": w}
    elif tid in (T.TRIVIAL_COVER_REMARK, T.PREIMAGE_WITNESS_PROP, T.CONN_VCONT_COR, T.CONN_VCONT_SURJ_COR):
        for f in _map_pairs(n):
            for v in _coverings(f.codomain):
                yield {"f": f, "v": v}
    elif tid == T.COMPOSE_PROP:
        for f in _map_pairs(n):
            y = f.codomain
            for z in sp:
                for g in _maps(y, z):
                    for v in _coverings(y):
                        for w in _coverings(z):
                            yield {"f": f, "g": g, "v": v, "w": w}
    elif tid in (T.T1_EQUIV_THM, T.NONT1_COUNTEREXAMPLE):
        for f in _map_pairs(n):
            yield {"f": f}
    elif tid == T.EQUIV_RELATIONS:
        for x in sp:
            yield {"X": x, "u": None}
            for u in _coverings(x):
                yield {"X": x, "u": u}
    elif tid == T.CLOPEN_CLASSES:
        for x in sp:
            for u in _coverings(x):
                yield {"X": x, "u": u}
    elif tid in (T.QUASI_EQ_CHAIN, T.CONN_IFF_CHAIN):
        for x in sp:
            yield {"X": x}
    elif tid in (T.CONT_IMAGE_CHAIN, T.HOMEO_INVARIANCE):
        for f in _map_pairs(n):
            for c in _all_subsets(f.domain):
                yield {"f": f, "C": c}
    elif tid == T.PRODUCT_CHAIN:
        for x1 in spaces_upto(max(n - 1, 1)):
            for x2 in sp:
                for c1 in _all_subsets(x1):
                    for c2 in _all_subsets(x2):
                        yield {"X1": x1, "X2": x2, "C1": c1, "C2": c2}
    elif tid == T.VCONT_IMAGE_CHAIN_PROP21:
        for f in _map_pairs(n):
            for u in _coverings(f.domain):
                for v in _coverings(f.codomain):
                    yield {"f": f, "u": u, "v": v}
    elif tid == T.COVERWISE_SURJ_CONN_THM24:
        for x in sp:
            for y in sp:
                yield {"X": x, "Y": y}
    elif tid == T.CHECK_EXAMPLE2:
        yield {}
    else:  # pragma: no cover
        raise AssertionError(tid)


# --------------------------------------------------------- factored tables


def _submasks(mask):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _bits_count(x: int) -> int:
    return x.bit_count()


class CoverTables:
    """Bitset view of all coverings of one space.

    Covering ``k`` is ``covs[k]``; a "covering set" is an int whose bit
    ``k`` marks covering ``k``.  ``contains[m]`` is the covering set of
    coverings having a member that includes subset ``m``.
    """

    def __init__(self, space: FiniteSpace):
        self.space = space
        self.covs = _coverings(space)
        self.n = len(self.covs)
        self.all = (1 << self.n) - 1
        n_masks = 1 << len(space.points)
        self.down = []
        self.memb = []
        for c in self.covs:
            d = m_bits = 0
            for m in c.members:
                m_bits |= 1 << m
                for s in _submasks(m):
                    d |= 1 << s
            self.down.append(d)
            self.memb.append(m_bits)
        self.contains = [0] * n_masks
        for k, d in enumerate(self.down):
            for m in iter_bits(d):
                self.contains[m] |= 1 << k
        self.whole = sum(1 << k for k, c in enumerate(self.covs) if space.full in c.members)
        self.self_chained = sum(
            1 << k
            for k, c in enumerate(self.covs)
            if is_u_chain_connected_set(space, c, space.full)
        )
        self._trace = {}

    def all_containing(self, masks_bitset: int) -> int:
        """Coverings in which every subset of ``masks_bitset`` fits into one member."""
        r = self.all
        for m in iter_bits(masks_bitset):
            r &= self.contains[m]
        return r

    def refined_by(self, k: int) -> int:
        """Coverings ``w`` with ``covs[k]`` refining ``w``."""
        return self.all_containing(self.memb[k])

    def trace_chained(self, carrier: int) -> int:
        """Coverings whose trace on ``carrier`` leaves it chain connected."""
        if carrier not in self._trace:
            bits = 0
            for k, c in enumerate(self.covs):
                blocks = u_chain_components(trace_covering(c, carrier)).blocks
                if len(blocks) <= 1:
                    bits |= 1 << k
            self._trace[carrier] = bits
        return self._trace[carrier]


@lru_cache(maxsize=None)
def cover_tables(space: FiniteSpace) -> CoverTables:
    return CoverTables(space)


def required_images(f: PointMap) -> int:
    """Bitset over codomain subsets: images of the domain's minimal neighbourhoods."""
    r = 0
    for u in f.domain.min_nbhds:
        r |= 1 << f.image(u)
    return r


class _Ctx:
    def __init__(self, report: SweepReport, deadline: float, instance_cap: int | None):
        self.report = report
        self.deadline = deadline
        self.instance_cap = instance_cap

    def tick(self, clock: bool = True):
        if self.instance_cap is not None and self.report.instances >= self.instance_cap:
            raise _Timeout
        if clock and time.monotonic() > self.deadline:
            raise _Timeout

    def bulk(self, total: int, hyp: int, fails: int):
        r = self.report
        r.instances += total
        r.hypothesis_not_met += total - hyp
        r.holds += hyp - fails
        r.fails += fails

    def confirm_fail(self, tid, inst):
        verdict = check(tid, inst)
        if verdict.status != FAILS:
            raise AssertionError(f"factored sweep and check disagree on {tid.value}")
        self.report.add_counterexample(verdict)


def _fast_refine(ctx: _Ctx, n: int):
    tid = T.REFINE_MONOTONE
    for f in _map_pairs(n):
        ctx.tick()
        ty = cover_tables(f.codomain)
        good = ty.all_containing(required_images(f))
        hyp = fails = 0
        for k in iter_bits(good):
            ws = ty.refined_by(k)
            hyp += _bits_count(ws)
            bad = ws & ~good
            fails += _bits_count(bad)
            for j in iter_bits(bad):
                ctx.confirm_fail(tid, {"f": f, "v": ty.covs[k], "w": ty.covs[j]})
        ctx.bulk(ty.n * ty.n, hyp, fails)


def _fast_single_covering(tid: TheoremId):
    def run(ctx: _Ctx, n: int):
        for f in _map_pairs(n):
            ctx.tick()
            ty = cover_tables(f.codomain)
            good = ty.all_containing(required_images(f))
            if tid == T.TRIVIAL_COVER_REMARK:
                hyp, concl = ty.whole, good
            elif tid == T.PREIMAGE_WITNESS_PROP:
                hyp, concl = _preimage_hypothesis(f, ty), good
            elif tid == T.CONN_VCONT_COR:
                hyp = good if is_connected(f.domain) else 0
                concl = ty.trace_chained(f.image(f.domain.full))
            else:
                surj = len(set(f.table)) == len(f.codomain.points)
                hyp = good if surj and is_connected(f.domain) else 0
                concl = ty.trace_chained(f.codomain.full)
            bad = hyp & ~concl
            for k in iter_bits(bad):
                ctx.confirm_fail(tid, {"f": f, "v": ty.covs[k]})
            ctx.bulk(ty.n, _bits_count(hyp), _bits_count(bad))

    return run


def _preimage_hypothesis(f: PointMap, ty: CoverTables) -> int:
    y = f.codomain
    open_pre = [w for w in range(y.full + 1) if f.domain.is_open(f.preimage(w))]
    hyp = ty.all
    for t in f.table:
        q = 0
        for w in open_pre:
            if w >> t & 1:
                q |= ty.contains[w]
        hyp &= q
    return hyp


def _fast_prop21(ctx: _Ctx, n: int):
    tid = T.VCONT_IMAGE_CHAIN_PROP21
    for f in _map_pairs(n):
        ctx.tick()
        tx, ty = cover_tables(f.domain), cover_tables(f.codomain)
        concl = ty.trace_chained(f.image(f.domain.full))
        hyp = fails = 0
        for k in iter_bits(tx.self_chained):
            imgs = 0
            for m in tx.covs[k].members:
                imgs |= 1 << f.image(m)
            vs = ty.all_containing(imgs)
            bad = vs & ~concl
            hyp += _bits_count(vs)
            fails += _bits_count(bad)
            for j in iter_bits(bad):
                ctx.confirm_fail(tid, {"f": f, "u": tx.covs[k], "v": ty.covs[j]})
        ctx.bulk(tx.n * ty.n, hyp, fails)


def _fast_compose(ctx: _Ctx, n: int):
    tid = T.COMPOSE_PROP
    spaces = spaces_upto(n)
    for y in spaces:
        ty = cover_tables(y)
        # Maps into y only matter through their required-image bitset.
        profile: dict[int, list] = {}
        for x in spaces:
            for f in _maps(x, y):
                profile.setdefault(required_images(f), []).append(f)
        f_total = sum(len(fs) for fs in profile.values())
        good_v = {r: ty.all_containing(r) for r in profile}
        n_masks = y.full + 1
        for z in spaces:
            tz = cover_tables(z)
            for g in _maps(y, z):
                ctx.tick()
                g_img = [g.image(m) for m in range(n_masks)]
                r_g = required_images(g)
                hyp = fails = 0
                for j in range(tz.n):
                    dz = tz.down[j]
                    if r_g & ~dz:
                        continue
                    fits = 0
                    for m in range(n_masks):
                        if dz >> g_img[m] & 1:
                            fits |= 1 << m
                    vs = 0
                    for k in range(ty.n):
                        if ty.memb[k] & ~fits == 0:
                            vs |= 1 << k
                    if not vs:
                        continue
                    for r, fs in profile.items():
                        both = good_v[r] & vs
                        if not both:
                            continue
                        c = _bits_count(both) * len(fs)
                        hyp += c
                        if r & ~fits:
                            fails += c
                            k = (both & -both).bit_length() - 1
                            ctx.confirm_fail(
                                tid, {"f": fs[0], "g": g, "v": ty.covs[k], "w": tz.covs[j]}
                            )
                ctx.bulk(f_total * ty.n * tz.n, hyp, fails)


FACTORED: dict[TheoremId, Callable[[_Ctx, int], None]] = {
    T.REFINE_MONOTONE: _fast_refine,
    T.TRIVIAL_COVER_REMARK: _fast_single_covering(T.TRIVIAL_COVER_REMARK),
    T.PREIMAGE_WITNESS_PROP: _fast_single_covering(T.PREIMAGE_WITNESS_PROP),
    T.CONN_VCONT_COR: _fast_single_covering(T.CONN_VCONT_COR),
    T.CONN_VCONT_SURJ_COR: _fast_single_covering(T.CONN_VCONT_SURJ_COR),
    T.VCONT_IMAGE_CHAIN_PROP21: _fast_prop21,
    T.COMPOSE_PROP: _fast_compose,
}


def _brute(ctx: _Ctx, tid: TheoremId, n: int):
    report = ctx.report
    for k, inst in enumerate(iter_instances(tid, n)):
        ctx.tick(clock=k % 64 == 0)
        verdict = check(tid, inst)
        report.record(verdict.status)
        checked, bad = verify_witnesses(verdict)
        report.witnesses_verified += checked
        report.witness_failures += bad
        if verdict.status == FAILS:
            report.add_counterexample(verdict)


def sweep(
    theorem: str | TheoremId,
    max_points: int = 3,
    budget_s: float = DEFAULT_BUDGET_S,
    instance_cap: int | None = None,
    method: str = "auto",
) -> SweepReport:
    """Check ``theorem`` on every instance over spaces of 1..max_points points.

    ``method`` is ``"brute"`` (``check`` per instance), ``"fast"`` (factored
    bitsets, only for claims listed in ``FACTORED``) or ``"auto"``.  Running
    out of time or instances marks the report truncated.
    """
    tid = theorem_id(theorem)
    limit = 3 if tid in DOUBLY_QUANTIFIED or tid == T.COMPOSE_PROP else 4
    if max_points > limit:
        raise CapExceeded(f"{tid.value} sweeps are capped at {limit} points")
    if method == "auto":
        method = "fast" if tid in FACTORED else "brute"
    if method == "fast" and tid not in FACTORED:
        raise ValueError(f"no factored evaluator for {tid.value}")
    report = SweepReport(tid, max_points, method=method)
    start = time.monotonic()
    ctx = _Ctx(report, start + budget_s, instance_cap)
    try:
        if method == "fast":
            FACTORED[tid](ctx, max_points)
        else:
            _brute(ctx, tid, max_points)
    except _Timeout:
        report.truncated = True
    report.elapsed_s = time.monotonic() - start
    return report


# Claims swept by ``verify all``.
CATALOG = tuple(TheoremId)
