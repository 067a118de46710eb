import json

import pytest

from fintop import discrete, identity, minimal_basis_covering, validate_covering, validate_map, validate_topology
from fintop.errors import CapExceeded, MalformedInstance, UnknownTheorem
from fintop.maps import PointMap, constant
from fintop.sweep import FACTORED, SweepReport, iter_instances, sweep
from fintop.theorems import (
    FAILS,
    HOLDS,
    NOT_MET,
    STATEMENTS,
    TheoremId,
    audit_example2,
    check,
    instance_from_json,
    instance_to_json,
    verify_witnesses,
)

T = TheoremId


def test_every_claim_has_a_statement_and_checker():
    assert set(STATEMENTS) == set(TheoremId)
    assert len(TheoremId) == 18


def test_unknown_theorem():
    with pytest.raises(UnknownTheorem):
        check("NOPE", {})


def test_missing_keys():
    with pytest.raises(MalformedInstance):
        check(T.REFINE_MONOTONE, {})


def test_wrong_covering_space(example2, sierpinski):
    x, y = example2
    with pytest.raises(MalformedInstance):
        check(T.TRIVIAL_COVER_REMARK, {"f": identity(x, y), "v": minimal_basis_covering(sierpinski)})


class TestExamples:
    def test_trivial_cover(self, example2):
        x, y = example2
        v = validate_covering(y, [y.points])
        res = check(T.TRIVIAL_COVER_REMARK, {"f": identity(x, y), "v": v})
        assert res.status == HOLDS
        assert verify_witnesses(res) == (1, 0)

    def test_trivial_cover_not_applicable(self, example2):
        x, y = example2
        v = validate_covering(y, [["a", "c"], ["b", "c"]])
        assert check(T.TRIVIAL_COVER_REMARK, {"f": identity(x, y), "v": v}).status == NOT_MET

    def test_refine_monotone(self, example2):
        x, y = example2
        f = identity(x, y)
        v = validate_covering(y, [y.points])
        assert check(T.REFINE_MONOTONE, {"f": f, "v": v, "w": v}).status == HOLDS

    def test_t1_equiv(self, disc2, sierpinski):
        f = identity(sierpinski, disc2)
        res = check(T.T1_EQUIV_THM, {"f": f})
        assert res.status == HOLDS
        assert res.payload["continuous"] is False
        assert res.payload["failing_covering"] == [["a"], ["b"]]

    def test_nont1_finite_sierpinski(self):
        x = validate_topology("pq", [[], ["p"], ["p", "q"]])
        y = validate_topology("ab", [[], ["a"], ["a", "b"]])
        res = check(T.NONT1_COUNTEREXAMPLE, {"f": validate_map(x, y, {"p": "b", "q": "a"})})
        assert res.status == FAILS
        assert res.payload["open_with_non_open_preimage"] == ["a"]

    def test_thm24_example2_not_met(self, example2):
        x, y = example2
        res = check(T.COVERWISE_SURJ_CONN_THM24, {"X": x, "Y": y})
        assert res.status == NOT_MET
        # First such covering in enumeration order.
        assert res.payload["covering_without_surjection"] == [["c"], ["a", "c"], ["b", "c"]]

    def test_thm24_reverse_holds(self, example2):
        x, y = example2
        res = check(T.COVERWISE_SURJ_CONN_THM24, {"X": y, "Y": x})
        assert res.status == HOLDS
        assert verify_witnesses(res)[1] == 0

    def test_thm24_disconnected_domain(self, disc2, point):
        assert check(T.COVERWISE_SURJ_CONN_THM24, {"X": disc2, "Y": point}).status == NOT_MET

    def test_conn_vcont_surj_example(self, example2):
        x, y = example2
        v = validate_covering(y, [y.points])
        res = check(T.CONN_VCONT_SURJ_COR, {"f": identity(x, y), "v": v})
        assert res.status == HOLDS

    def test_equiv_relations_all_coverings(self, split3):
        res = check(T.EQUIV_RELATIONS, {"X": split3, "u": None})
        assert res.status == HOLDS
        assert ["a", "b"] not in res.payload["relation"] and ["b", "c"] in res.payload["relation"]

    def test_clopen_and_quasi(self, split3):
        u = minimal_basis_covering(split3)
        assert check(T.CLOPEN_CLASSES, {"X": split3, "u": u}).status == HOLDS
        assert check(T.QUASI_EQ_CHAIN, {"X": split3}).status == HOLDS
        assert check(T.CONN_IFF_CHAIN, {"X": split3}).payload == {"connected": False, "chain_connected": False}

    def test_cont_image(self, example2):
        x = example2[0]
        f = constant(x, x, "a")
        assert check(T.CONT_IMAGE_CHAIN, {"f": f, "C": x.full}).status == HOLDS

    def test_homeo(self, example2):
        x = example2[0]
        res = check(T.HOMEO_INVARIANCE, {"f": identity(x), "C": x.mask("ab")})
        assert res.status == HOLDS and res.payload["set_chain_connected"] is True

    def test_product(self, sierpinski, disc2):
        inst = {"X1": sierpinski, "X2": disc2, "C1": sierpinski.full, "C2": disc2.mask("a")}
        assert check(T.PRODUCT_CHAIN, inst).status == HOLDS
        inst["C2"] = disc2.full
        assert check(T.PRODUCT_CHAIN, inst).status == NOT_MET

    def test_prop21(self, example2):
        x, y = example2
        u = validate_covering(x, [x.points])
        v = validate_covering(y, [y.points])
        res = check(T.VCONT_IMAGE_CHAIN_PROP21, {"f": identity(x, y), "u": u, "v": v})
        assert res.status == HOLDS and verify_witnesses(res)[1] == 0

    def test_preimage_witness(self, example2):
        x, y = example2
        v = validate_covering(y, [["a", "c"], ["b", "c"]])
        res = check(T.PREIMAGE_WITNESS_PROP, {"f": identity(x, y), "v": v})
        # {a,c} has preimage {a,c}, not open in X; nor any submask holding c.
        assert res.status == NOT_MET

    def test_compose(self, example2):
        x, y = example2
        v = validate_covering(y, [y.points])
        w = validate_covering(x, [x.points])
        res = check(T.COMPOSE_PROP, {"f": identity(x, y), "g": identity(y, x), "v": v, "w": w})
        assert res.status == HOLDS and verify_witnesses(res) == (3, 0)

    def test_compose_mismatch(self, example2, disc2):
        x, y = example2
        with pytest.raises(MalformedInstance):
            check(T.COMPOSE_PROP, {"f": identity(x, y), "g": identity(disc2), "v": None, "w": None})


class TestExample2Audit:
    def test_findings(self, example2):
        findings = audit_example2(*example2)
        disagree = [f for f in findings if not f["agrees"]]
        assert [f["item"] for f in disagree] == ["e", "e"]
        cover = disagree[0]
        assert cover["counterexample_covering"] == [["a", "c"], ["b", "c"]]
        surj = disagree[1]
        assert surj["direction"] == "X->Y"
        assert surj["surjections_checked"] == 6
        assert surj["offending_points"] == ["c"]

    def test_items_a_to_d_agree(self, example2):
        findings = audit_example2(*example2)
        assert all(f["agrees"] for f in findings if f["item"] in "abcd")

    def test_verdict(self):
        res = check(T.CHECK_EXAMPLE2, {})
        assert res.status == FAILS and res.description.startswith("discrepancy:")


class TestReplay:
    @pytest.mark.parametrize("tid", [T.NONT1_COUNTEREXAMPLE, T.REFINE_MONOTONE, T.COMPOSE_PROP, T.PRODUCT_CHAIN])
    def test_json_round_trip_replays(self, tid):
        report = sweep(tid, max_points=2, method="brute")
        samples = report.counterexamples or []
        for inst in list(iter_instances(tid, 2))[:: 97][:40]:
            samples.append(check(tid, inst))
        for verdict in samples:
            text = json.dumps(verdict.to_json(), sort_keys=True)
            again = check(tid, instance_from_json(json.loads(text)["instance"]))
            assert again.status == verdict.status
            assert json.dumps(again.to_json(), sort_keys=True) == text

    def test_instance_json_subset(self, example2):
        x = example2[0]
        inst = {"f": identity(x), "C": x.mask("ab")}
        back = instance_from_json(instance_to_json(inst))
        assert back["C"] == inst["C"] and back["f"] == inst["f"]


class TestSweep:
    @pytest.mark.parametrize("tid", sorted(FACTORED, key=lambda t: t.value))
    def test_factored_matches_brute_n2(self, tid):
        fast, brute = sweep(tid, 2, method="fast"), sweep(tid, 2, method="brute")
        assert (fast.instances, fast.holds, fast.fails, fast.hypothesis_not_met) == (
            brute.instances,
            brute.holds,
            brute.fails,
            brute.hypothesis_not_met,
        )
        assert fast.ok and brute.ok and brute.witness_failures == 0

    @pytest.mark.slow
    @pytest.mark.parametrize(
        "tid", [T.TRIVIAL_COVER_REMARK, T.PREIMAGE_WITNESS_PROP, T.CONN_VCONT_COR, T.CONN_VCONT_SURJ_COR]
    )
    def test_factored_matches_brute_n3(self, tid):
        fast, brute = sweep(tid, 3, method="fast"), sweep(tid, 3, method="brute", budget_s=300)
        assert not brute.truncated
        assert (fast.instances, fast.holds, fast.fails) == (brute.instances, brute.holds, brute.fails)

    def test_nont1_found_at_two_points(self):
        r = sweep(T.NONT1_COUNTEREXAMPLE, 2)
        assert r.ok and r.fails == 8
        assert all(cx.status == FAILS for cx in r.counterexamples)

    def test_truncation(self):
        r = sweep(T.QUASI_EQ_CHAIN, 3, instance_cap=5)
        assert r.truncated and not r.ok and r.instances == 5
        assert not sweep(T.QUASI_EQ_CHAIN, 3, instance_cap=34).truncated

    def test_cap(self):
        with pytest.raises(CapExceeded):
            sweep(T.COMPOSE_PROP, 4)

    def test_fast_unavailable(self):
        with pytest.raises(ValueError):
            sweep(T.QUASI_EQ_CHAIN, 2, method="fast")

    def test_example2_findings_in_report(self):
        r = sweep(T.CHECK_EXAMPLE2)
        assert r.ok and r.fails == 1
        assert any(not f["agrees"] for f in r.to_json()["findings"])

    def test_report_json_deterministic(self):
        a = sweep(T.CONN_IFF_CHAIN, 3).to_json()
        b = sweep(T.CONN_IFF_CHAIN, 3).to_json()
        assert a == b and "elapsed_s" not in a

    def test_merge(self):
        a, b = SweepReport(T.CONN_IFF_CHAIN, 1), SweepReport(T.CONN_IFF_CHAIN, 1)
        a.record(HOLDS, 3)
        b.record(NOT_MET)
        a.merge(b)
        assert (a.instances, a.holds, a.hypothesis_not_met) == (4, 3, 1)

    def test_discrete_codomain_nont1_never_fails(self):
        d = discrete("ab")
        for table in [(0, 0), (0, 1), (1, 0), (1, 1)]:
            assert check(T.NONT1_COUNTEREXAMPLE, {"f": PointMap(d, d, table)}).status == NOT_MET
