"""Claim catalog and per-instance checkers.

Each :class:`TheoremId` names one claim about continuity up to a covering,
chains or connectedness.  :func:`check` evaluates the claim on a single
instance: the hypothesis first (``hypothesis-not-met`` when it fails),
then the conclusion, attaching witnesses or a counterexample payload.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any, Mapping

from .chains import (
    Chain,
    chain_components,
    chain_relation,
    find_chain,
    is_chain_connected_set,
    is_u_chain_connected_set,
    u_chain_components,
)
from .coverings import (
    Covering,
    enumerate_coverings,
    family_refines,
    refinement_witness,
    trace_covering,
    validate_covering,
)
from .enumeration import enumerate_maps
from .errors import MalformedInstance, UnknownTheorem
from .maps import (
    PointMap,
    VContWitness,
    compose,
    discontinuity_witness,
    identity,
    image_family,
    is_continuous,
    is_v_continuous,
    map_properties,
    validate_map,
)
from .space import (
    FiniteSpace,
    is_connected,
    is_t1,
    iter_bits,
    product,
    product_set,
    quasicomponents,
    space_from_json,
    validate_topology,
)

HOLDS = "holds"
FAILS = "fails"
NOT_MET = "hypothesis-not-met"


class TheoremId(str, enum.Enum):
    REFINE_MONOTONE = "REFINE_MONOTONE"
    TRIVIAL_COVER_REMARK = "TRIVIAL_COVER_REMARK"
    PREIMAGE_WITNESS_PROP = "PREIMAGE_WITNESS_PROP"
    COMPOSE_PROP = "COMPOSE_PROP"
    T1_EQUIV_THM = "T1_EQUIV_THM"
    NONT1_COUNTEREXAMPLE = "NONT1_COUNTEREXAMPLE"
    EQUIV_RELATIONS = "EQUIV_RELATIONS"
    CLOPEN_CLASSES = "CLOPEN_CLASSES"
    QUASI_EQ_CHAIN = "QUASI_EQ_CHAIN"
    CONN_IFF_CHAIN = "CONN_IFF_CHAIN"
    CONT_IMAGE_CHAIN = "CONT_IMAGE_CHAIN"
    HOMEO_INVARIANCE = "HOMEO_INVARIANCE"
    PRODUCT_CHAIN = "PRODUCT_CHAIN"
    VCONT_IMAGE_CHAIN_PROP21 = "VCONT_IMAGE_CHAIN_PROP21"
    CONN_VCONT_COR = "CONN_VCONT_COR"
    CONN_VCONT_SURJ_COR = "CONN_VCONT_SURJ_COR"
    COVERWISE_SURJ_CONN_THM24 = "COVERWISE_SURJ_CONN_THM24"
    CHECK_EXAMPLE2 = "CHECK_EXAMPLE2"


T = TheoremId

STATEMENTS = {
    T.REFINE_MONOTONE: "f V-continuous and V refines W => f W-continuous",
    T.TRIVIAL_COVER_REMARK: "a covering containing the whole codomain makes every map continuous up to it",
    T.PREIMAGE_WITNESS_PROP: "each f(x) lies in some W inside a member with open preimage => f V-continuous",
    T.COMPOSE_PROP: "f V-continuous, g W-continuous, g(V) refines W => g.f W-continuous",
    T.T1_EQUIV_THM: "T1 codomain: continuous <=> V-continuous for every covering V",
    T.NONT1_COUNTEREXAMPLE: "search: V-continuous for every covering yet discontinuous, non-T1 codomain",
    T.EQUIV_RELATIONS: "U-chain relation and chain relation are equivalence relations",
    T.CLOPEN_CLASSES: "every U-chain component is clopen",
    T.QUASI_EQ_CHAIN: "chain components equal quasicomponents",
    T.CONN_IFF_CHAIN: "connected <=> chain connected in itself",
    T.CONT_IMAGE_CHAIN: "continuous images of chain connected sets are chain connected",
    T.HOMEO_INVARIANCE: "under a homeomorphism, C chain connected <=> f(C) chain connected",
    T.PRODUCT_CHAIN: "C1 x C2 is chain connected when C1, C2 are",
    T.VCONT_IMAGE_CHAIN_PROP21: "X U-chain connected, f(U) refines V => f(X) V-chain connected",
    T.CONN_VCONT_COR: "X connected, f V-continuous => f(X) V-chain connected",
    T.CONN_VCONT_SURJ_COR: "X connected, f a V-continuous surjection => Y V-chain connected",
    T.COVERWISE_SURJ_CONN_THM24: "X connected, a V-continuous surjection for every covering V of Y => Y connected",
    T.CHECK_EXAMPLE2: "audit of the three-point example pair with no continuous surjection",
}

# Claims whose counterexamples are the point of the exercise.
SEARCH_TARGETS = frozenset({T.NONT1_COUNTEREXAMPLE, T.CHECK_EXAMPLE2})


@dataclass
class TheoremVerdict:
    theorem: TheoremId
    instance: dict
    status: str
    description: str = ""
    witness: Any = None
    payload: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem.value,
            "status": self.status,
            "description": self.description,
            "instance": instance_to_json(self.instance),
            "payload": self.payload,
        }


# ---------------------------------------------------------------- instances

_SPACE_KEYS = ("X", "Y", "X1", "X2")
_MAP_KEYS = ("f", "g")
_COVER_KEYS = ("u", "v", "w")
_SUBSET_OWNER = {"C": ("f", "X"), "C1": ("X1",), "C2": ("X2",)}


def _subset_owner(instance: Mapping, key: str) -> FiniteSpace:
    for k in _SUBSET_OWNER[key]:
        if k in instance:
            obj = instance[k]
            return obj.domain if isinstance(obj, PointMap) else obj
    raise MalformedInstance(f"subset {key} has no owning space")


def instance_to_json(instance: Mapping) -> dict:
    out: dict[str, Any] = {}
    for key, obj in instance.items():
        if key in _SUBSET_OWNER:
            out[key] = _subset_owner(instance, key).labels(obj)
        elif obj is None or isinstance(obj, (str, int, bool)):
            out[key] = obj
        else:
            out[key] = obj.to_json()
    return out


def _covering_from_json(obj: dict) -> Covering:
    return validate_covering(space_from_json(obj["space"]), obj["members"])


def _map_from_json(obj: dict) -> PointMap:
    return validate_map(space_from_json(obj["domain"]), space_from_json(obj["codomain"]), obj["table"])


def instance_from_json(obj: Mapping) -> dict:
    inst: dict[str, Any] = {}
    for key, val in obj.items():
        if key in _SPACE_KEYS:
            inst[key] = space_from_json(val)
        elif key in _MAP_KEYS:
            inst[key] = _map_from_json(val)
        elif key in _COVER_KEYS:
            inst[key] = None if val is None else _covering_from_json(val)
    for key, val in obj.items():
        if key in _SUBSET_OWNER:
            inst[key] = _subset_owner(inst, key).mask(val)
    return inst


def _need(instance: Mapping, *keys):
    missing = [k for k in keys if k not in instance]
    if missing:
        raise MalformedInstance(f"instance lacks {', '.join(missing)}")
    return [instance[k] for k in keys]


def _covers(c: Covering, space: FiniteSpace, what: str):
    if not isinstance(c, Covering) or c.space != space:
        raise MalformedInstance(f"{what} is not a covering of the expected space")


# ----------------------------------------------------------------- checkers


def _verdict(tid, instance, status, description="", witness=None, **payload):
    return TheoremVerdict(tid, dict(instance), status, description, witness, payload)


def _image_chains(cov, points_mask, labels) -> list[Chain] | None:
    """Chains from the first point of ``points_mask`` to each other point, or None."""
    pts = list(iter_bits(points_mask))
    if not pts:
        return []
    chains = []
    x = labels[pts[0]]
    for i in pts:
        ch = find_chain(cov, x, labels[i])
        if ch is None:
            return None
        chains.append(ch)
    return chains


def _check_refine_monotone(inst):
    f, v, w = _need(inst, "f", "v", "w")
    _covers(v, f.codomain, "v")
    _covers(w, f.codomain, "w")
    tid = T.REFINE_MONOTONE
    if not is_v_continuous(f, v) or refinement_witness(v, w) is None:
        return _verdict(tid, inst, NOT_MET)
    res = is_v_continuous(f, w)
    if res:
        return _verdict(tid, inst, HOLDS, witness=[res.witness])
    return _verdict(tid, inst, FAILS, "not W-continuous", offending_point=res.offending_point)


def _check_trivial_cover(inst):
    f, v = _need(inst, "f", "v")
    _covers(v, f.codomain, "v")
    tid = T.TRIVIAL_COVER_REMARK
    if f.codomain.full not in v.members:
        return _verdict(tid, inst, NOT_MET)
    res = is_v_continuous(f, v)
    if res:
        return _verdict(tid, inst, HOLDS, witness=[res.witness])
    return _verdict(tid, inst, FAILS, offending_point=res.offending_point)


def _submasks_containing(mask: int, bit: int):
    sub = mask
    while True:
        if sub & bit:
            yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _check_preimage_witness(inst):
    f, v = _need(inst, "f", "v")
    _covers(v, f.codomain, "v")
    tid = T.PREIMAGE_WITNESS_PROP
    choices = {}
    for x, p in enumerate(f.domain.points):
        bit = 1 << f.table[x]
        found = None
        for j, big in enumerate(v.members):
            for sub in _submasks_containing(big, bit):
                if f.domain.is_open(f.preimage(sub)):
                    found = (j, sub)
                    break
            if found:
                break
        if found is None:
            return _verdict(tid, inst, NOT_MET)
        choices[p] = {"V": f.codomain.labels(v.members[found[0]]), "W": f.codomain.labels(found[1])}
    res = is_v_continuous(f, v)
    if res:
        return _verdict(tid, inst, HOLDS, witness=[res.witness], choices=choices)
    return _verdict(tid, inst, FAILS, offending_point=res.offending_point, choices=choices)


def _check_compose(inst):
    f, g, v, w = _need(inst, "f", "g", "v", "w")
    if f.codomain != g.domain:
        raise MalformedInstance("f and g do not compose")
    _covers(v, f.codomain, "v")
    _covers(w, g.codomain, "w")
    tid = T.COMPOSE_PROP
    fv, gw = is_v_continuous(f, v), is_v_continuous(g, w)
    if not fv or not gw or not family_refines(image_family(g, v), w):
        return _verdict(tid, inst, NOT_MET)
    res = is_v_continuous(compose(f, g), w)
    if res:
        return _verdict(tid, inst, HOLDS, witness=[fv.witness, gw.witness, res.witness])
    return _verdict(tid, inst, FAILS, offending_point=res.offending_point)


def _first_failing_covering(f: PointMap) -> Covering | None:
    for c in enumerate_coverings(f.codomain):
        if not is_v_continuous(f, c):
            return c
    return None


def _check_t1_equiv(inst):
    (f,) = _need(inst, "f")
    tid = T.T1_EQUIV_THM
    if not is_t1(f.codomain):
        return _verdict(tid, inst, NOT_MET)
    cont = is_continuous(f)
    bad = _first_failing_covering(f)
    every = bad is None
    payload = {"continuous": cont, "v_continuous_for_every_covering": every}
    if bad is not None:
        payload["failing_covering"] = bad.to_json()["members"]
    return _verdict(tid, inst, HOLDS if cont == every else FAILS, **payload)


def _check_nont1(inst):
    (f,) = _need(inst, "f")
    tid = T.NONT1_COUNTEREXAMPLE
    if is_t1(f.codomain) or _first_failing_covering(f) is not None:
        return _verdict(tid, inst, NOT_MET)
    bad_open = discontinuity_witness(f)
    if bad_open is None:
        return _verdict(tid, inst, HOLDS)
    coverings = [c.to_json()["members"] for c in enumerate_coverings(f.codomain)]
    return _verdict(
        tid,
        inst,
        FAILS,
        "discontinuous, yet V-continuous for every covering of a non-T1 codomain",
        open_with_non_open_preimage=f.codomain.labels(bad_open),
        coverings_checked=coverings,
    )


def _closure_defects(rel: set, pts: list[int]) -> list[str]:
    defects = []
    if any((i, i) not in rel for i in pts):
        defects.append("reflexivity")
    if any((j, i) not in rel for i, j in rel):
        defects.append("symmetry")
    if any((i, k) not in rel for i, j in rel for jj, k in rel if j == jj):
        defects.append("transitivity")
    return defects


def _relation_with_chains(c):
    sp = c.space
    pts = list(iter_bits(c.carrier))
    rel, chains = set(), []
    for i in pts:
        for j in pts:
            ch = find_chain(c, sp.points[i], sp.points[j])
            if ch is not None:
                rel.add((i, j))
                chains.append(ch)
    return rel, chains


def _check_equiv_relations(inst):
    (space,) = _need(inst, "X")
    u = inst.get("u")
    tid = T.EQUIV_RELATIONS
    pts = list(range(len(space.points)))
    if u is not None:
        _covers(u, space, "u")
        rel, chains = _relation_with_chains(u)
    else:
        chains = []
        rel = {(i, j) for i in pts for j in pts}
        for c in enumerate_coverings(space):
            rel &= chain_relation(c)
    defects = _closure_defects(rel, pts)
    pairs = sorted([space.points[i], space.points[j]] for i, j in rel)
    if defects:
        return _verdict(tid, inst, FAILS, "relation lacks " + ", ".join(defects), relation=pairs)
    return _verdict(tid, inst, HOLDS, witness=chains, relation=pairs)


def _check_clopen_classes(inst):
    space, u = _need(inst, "X", "u")
    _covers(u, space, "u")
    tid = T.CLOPEN_CLASSES
    blocks = u_chain_components(u).blocks
    bad = [b for b in blocks if not (space.is_open(b) and space.is_closed(b))]
    if bad:
        return _verdict(tid, inst, FAILS, non_clopen_block=space.labels(bad[0]))
    return _verdict(tid, inst, HOLDS, blocks=[space.labels(b) for b in blocks])


def _check_quasi_eq_chain(inst):
    (space,) = _need(inst, "X")
    tid = T.QUASI_EQ_CHAIN
    ch, qc = chain_components(space), quasicomponents(space)
    payload = {"chain_components": ch.to_json(), "quasicomponents": qc.to_json()}
    return _verdict(tid, inst, HOLDS if ch.same_blocks(qc) else FAILS, **payload)


def _check_conn_iff_chain(inst):
    (space,) = _need(inst, "X")
    tid = T.CONN_IFF_CHAIN
    conn = is_connected(space)
    chained = is_chain_connected_set(space, space.full)
    return _verdict(
        tid, inst, HOLDS if conn == chained else FAILS, connected=conn, chain_connected=chained
    )


def _check_cont_image(inst):
    f, c = _need(inst, "f", "C")
    tid = T.CONT_IMAGE_CHAIN
    if not is_continuous(f) or not is_chain_connected_set(f.domain, c):
        return _verdict(tid, inst, NOT_MET)
    img = f.image(c)
    if is_chain_connected_set(f.codomain, img):
        return _verdict(tid, inst, HOLDS)
    return _verdict(tid, inst, FAILS, image=f.codomain.labels(img))


def _check_homeo(inst):
    f, c = _need(inst, "f", "C")
    tid = T.HOMEO_INVARIANCE
    if not map_properties(f).homeomorphism:
        return _verdict(tid, inst, NOT_MET)
    left = is_chain_connected_set(f.domain, c)
    right = is_chain_connected_set(f.codomain, f.image(c))
    return _verdict(tid, inst, HOLDS if left == right else FAILS, set_chain_connected=left, image_chain_connected=right)


def _check_product(inst):
    x1, x2, c1, c2 = _need(inst, "X1", "X2", "C1", "C2")
    tid = T.PRODUCT_CHAIN
    if not is_chain_connected_set(x1, c1) or not is_chain_connected_set(x2, c2):
        return _verdict(tid, inst, NOT_MET)
    prod = product(x1, x2)[0]
    if is_chain_connected_set(prod, product_set(x1, x2, c1, c2)):
        return _verdict(tid, inst, HOLDS)
    return _verdict(tid, inst, FAILS, product_opens=prod.to_json()["opens"])


def _trace_conclusion(tid, inst, f, v, extra_witness=()):
    img = f.image(f.domain.full)
    trace = trace_covering(v, img)
    chains = _image_chains(trace, img, f.codomain.points)
    if chains is not None and is_u_chain_connected_set(f.codomain, trace, img):
        return _verdict(tid, inst, HOLDS, witness=[*extra_witness, *chains])
    return _verdict(
        tid,
        inst,
        FAILS,
        "image is not chain connected in the trace covering",
        image=f.codomain.labels(img),
        trace=[f.codomain.labels(m) for m in trace.members],
    )


def _check_prop21(inst):
    f, u, v = _need(inst, "f", "u", "v")
    _covers(u, f.domain, "u")
    _covers(v, f.codomain, "v")
    tid = T.VCONT_IMAGE_CHAIN_PROP21
    if not family_refines(image_family(f, u), v):
        return _verdict(tid, inst, NOT_MET)
    if not is_u_chain_connected_set(f.domain, u, f.domain.full):
        return _verdict(tid, inst, NOT_MET)
    return _trace_conclusion(tid, inst, f, v)


def _check_conn_vcont(inst):
    f, v = _need(inst, "f", "v")
    _covers(v, f.codomain, "v")
    tid = T.CONN_VCONT_COR
    if not is_connected(f.domain):
        return _verdict(tid, inst, NOT_MET)
    res = is_v_continuous(f, v)
    if not res:
        return _verdict(tid, inst, NOT_MET)
    return _trace_conclusion(tid, inst, f, v, [res.witness])


def _check_conn_vcont_surj(inst):
    f, v = _need(inst, "f", "v")
    _covers(v, f.codomain, "v")
    tid = T.CONN_VCONT_SURJ_COR
    if not is_connected(f.domain) or not map_properties(f).surjective:
        return _verdict(tid, inst, NOT_MET)
    res = is_v_continuous(f, v)
    if not res:
        return _verdict(tid, inst, NOT_MET)
    y = f.codomain
    chains = _image_chains(v, y.full, y.points)
    if chains is not None and is_u_chain_connected_set(y, v, y.full):
        return _verdict(tid, inst, HOLDS, witness=[res.witness, *chains])
    return _verdict(tid, inst, FAILS, "codomain is not V-chain connected")


def first_covering_without_vcont_surjection(x: FiniteSpace, y: FiniteSpace):
    """Coverings outermost, surjections inner; returns ``(covering, None)`` or ``(None, witnesses)``."""
    surjections = list(enumerate_maps(x, y, surjective_only=True))
    found = []
    for v in enumerate_coverings(y):
        for f in surjections:
            res = is_v_continuous(f, v)
            if res:
                found.append(res.witness)
                break
        else:
            return v, None
    return None, found


def _check_thm24(inst):
    x, y = _need(inst, "X", "Y")
    tid = T.COVERWISE_SURJ_CONN_THM24
    if not is_connected(x):
        return _verdict(tid, inst, NOT_MET, "domain is not connected")
    bad, witnesses = first_covering_without_vcont_surjection(x, y)
    if bad is not None:
        return _verdict(
            tid,
            inst,
            NOT_MET,
            "no V-continuous surjection for some covering",
            covering_without_surjection=bad.to_json()["members"],
        )
    if is_connected(y):
        return _verdict(tid, inst, HOLDS, witness=witnesses)
    return _verdict(tid, inst, FAILS, "codomain is not connected")


# The three-point example pair.
EXAMPLE2_POINTS = ("a", "b", "c")
EXAMPLE2_X_OPENS = ([], ["a"], ["b"], ["a", "b"], ["a", "b", "c"])
EXAMPLE2_Y_OPENS = ([], ["c"], ["b", "c"], ["a", "c"], ["a", "b", "c"])


def example2_spaces() -> tuple[FiniteSpace, FiniteSpace]:
    return (
        validate_topology(EXAMPLE2_POINTS, EXAMPLE2_X_OPENS),
        validate_topology(EXAMPLE2_POINTS, EXAMPLE2_Y_OPENS),
    )


def _open_singletons(space):
    return sum(1 for o in space.opens if o.bit_count() == 1)


def audit_example2(x: FiniteSpace, y: FiniteSpace) -> list[dict]:
    """Recompute every assertion made about the example pair.

    Each finding carries what was claimed, what was observed, and whether
    the two agree.
    """
    findings = []

    def note(item, claim, observed, agrees, **extra):
        findings.append({"item": item, "claimed": claim, "observed": observed, "agrees": agrees, **extra})

    note("a", "both families are topologies", "both validate", True)
    cx, cy = is_connected(x), is_connected(y)
    note("b", "both spaces are connected", f"X connected: {cx}, Y connected: {cy}", cx and cy)
    for name, (d, c) in (("X->Y", (x, y)), ("Y->X", (y, x))):
        surj = list(enumerate_maps(d, c, surjective_only=True))
        cont = [s for s in surj if is_continuous(s)]
        note(
            "c",
            f"no continuous surjection {name}",
            f"{len(surj)} surjections, {len(cont)} continuous",
            not cont,
            direction=name,
        )
    sx, sy = _open_singletons(x), _open_singletons(y)
    homeo = any(map_properties(s).homeomorphism for s in enumerate_maps(x, y, surjective_only=True))
    note(
        "c",
        "X has two open singletons, Y has one, so they are not homeomorphic",
        f"open singletons: X {sx}, Y {sy}; homeomorphic: {homeo}",
        sx == 2 and sy == 1 and not homeo,
    )
    ident = identity(x, y)
    with_whole = [v for v in enumerate_coverings(y) if y.full in v.members]
    ok = all(is_v_continuous(ident, v) for v in with_whole)
    note(
        "d",
        "the identity X->Y is V-continuous for every covering of Y containing Y",
        f"{len(with_whole)} such coverings, identity V-continuous for all: {ok}",
        ok,
    )
    for name, sp in (("X", x), ("Y", y)):
        missing = sorted(
            (v for v in enumerate_coverings(sp) if sp.full not in v.members), key=len
        )
        extra = {}
        if missing:
            extra["counterexample_covering"] = missing[0].to_json()["members"]
            extra["coverings_omitting_whole_set"] = [v.to_json()["members"] for v in missing]
        note(
            "e",
            f"every open covering of {name} contains {name}",
            f"{len(missing)} coverings of {name} omit {name}",
            not missing,
            **extra,
        )
    for name, (d, c) in (("X->Y", (x, y)), ("Y->X", (y, x))):
        surj = list(enumerate_maps(d, c, surjective_only=True))
        lacking = sorted(
            (v for v in enumerate_coverings(c) if not any(is_v_continuous(s, v) for s in surj)),
            key=len,
        )
        extra = {}
        if lacking:
            bad = lacking[0]
            extra = {
                "covering": bad.to_json()["members"],
                "coverings_without_surjection": [v.to_json()["members"] for v in lacking],
                "surjections_checked": len(surj),
                "offending_points": sorted({is_v_continuous(s, bad).offending_point for s in surj}),
            }
        note(
            "e",
            f"for every covering of the codomain some surjection {name} is V-continuous",
            "holds" if not lacking else f"no V-continuous surjection for covering {extra['covering']}",
            not lacking,
            direction=name,
            **extra,
        )
    return findings


def _check_example2(inst):
    if "X" in inst or "Y" in inst:
        x, y = _need(inst, "X", "Y")
    else:
        x, y = example2_spaces()
        inst = {"X": x, "Y": y}
    findings = audit_example2(x, y)
    disagreements = [f for f in findings if not f["agrees"]]
    if disagreements:
        desc = "discrepancy: " + "; ".join(
            f"claimed '{f['claimed']}', observed '{f['observed']}'" for f in disagreements
        )
        return _verdict(T.CHECK_EXAMPLE2, inst, FAILS, desc, findings=findings)
    return _verdict(T.CHECK_EXAMPLE2, inst, HOLDS, findings=findings)


CHECKERS = {
    T.REFINE_MONOTONE: _check_refine_monotone,
    T.TRIVIAL_COVER_REMARK: _check_trivial_cover,
    T.PREIMAGE_WITNESS_PROP: _check_preimage_witness,
    T.COMPOSE_PROP: _check_compose,
    T.T1_EQUIV_THM: _check_t1_equiv,
    T.NONT1_COUNTEREXAMPLE: _check_nont1,
    T.EQUIV_RELATIONS: _check_equiv_relations,
    T.CLOPEN_CLASSES: _check_clopen_classes,
    T.QUASI_EQ_CHAIN: _check_quasi_eq_chain,
    T.CONN_IFF_CHAIN: _check_conn_iff_chain,
    T.CONT_IMAGE_CHAIN: _check_cont_image,
    T.HOMEO_INVARIANCE: _check_homeo,
    T.PRODUCT_CHAIN: _check_product,
    T.VCONT_IMAGE_CHAIN_PROP21: _check_prop21,
    T.CONN_VCONT_COR: _check_conn_vcont,
    T.CONN_VCONT_SURJ_COR: _check_conn_vcont_surj,
    T.COVERWISE_SURJ_CONN_THM24: _check_thm24,
    T.CHECK_EXAMPLE2: _check_example2,
}


def theorem_id(name: str | TheoremId) -> TheoremId:
    try:
        return TheoremId(name)
    except ValueError:
        raise UnknownTheorem(f"unknown theorem id {name!r}") from None


def check(theorem: str | TheoremId, instance: Mapping) -> TheoremVerdict:
    tid = theorem_id(theorem)
    return CHECKERS[tid](instance)


def witness_objects(verdict: TheoremVerdict) -> list:
    w = verdict.witness
    if w is None:
        return []
    return [o for o in w if isinstance(o, (Chain, VContWitness))]


def verify_witnesses(verdict: TheoremVerdict) -> tuple[int, int]:
    """Return ``(checked, bad)`` after re-verifying every attached witness."""
    objs = witness_objects(verdict)
    return len(objs), sum(1 for o in objs if not o.verify())
