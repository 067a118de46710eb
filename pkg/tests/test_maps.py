import pytest
from hypothesis import given, strategies as st

import oracles as O
from strategies import spaces

from fintop import (
    compose,
    discrete,
    enumerate_coverings,
    enumerate_maps,
    identity,
    image_family,
    is_continuous,
    is_v_continuous,
    is_v_continuous_naive,
    map_properties,
    minimal_basis_covering,
    validate_covering,
    validate_map,
    validate_topology,
)
from fintop.errors import MissingAssignment, SpaceMismatch, UnknownCodomainPoint
from fintop.maps import PointMap, constant, discontinuity_witness


def label_view(f):
    dom = f.domain
    opens = {frozenset(dom.labels(o)) for o in dom.opens}
    table = {p: f(p) for p in dom.points}
    return dom.points, opens, table


@st.composite
def maps(draw, max_points=4):
    x = draw(spaces(max_points=max_points))
    y = draw(spaces(max_points=max_points))
    table = tuple(draw(st.integers(0, len(y.points) - 1)) for _ in x.points)
    return PointMap(x, y, table)


class TestValidateMap:
    def test_identity(self, example2):
        x, y = example2
        f = identity(x, y)
        assert [f(p) for p in "abc"] == ["a", "b", "c"]

    def test_missing(self, example2):
        x, y = example2
        with pytest.raises(MissingAssignment):
            validate_map(x, y, {"a": "a", "b": "b"})

    def test_unknown_image(self, example2):
        x, y = example2
        with pytest.raises(UnknownCodomainPoint):
            validate_map(x, y, {"a": "a", "b": "b", "c": "z"})


class TestContinuity:
    @given(spaces(max_points=4), spaces(max_points=4), st.data())
    def test_discrete_domain(self, y, _unused, data):
        x = discrete("abc")
        table = tuple(data.draw(st.integers(0, len(y.points) - 1)) for _ in x.points)
        assert is_continuous(PointMap(x, y, table))

    def test_example2_surjections_all_discontinuous(self, example2):
        x, y = example2
        for a, b in ((x, y), (y, x)):
            surj = list(enumerate_maps(a, b, surjective_only=True))
            assert len(surj) == 6
            assert not any(is_continuous(f) for f in surj)

    @given(spaces(max_points=4), spaces(max_points=4))
    def test_constant(self, x, y):
        assert is_continuous(constant(x, y, y.points[0]))

    def test_first_failing_open(self, example2):
        x, y = example2
        f = identity(x, y)
        assert y.labels(discontinuity_witness(f)) == ["c"]

    @given(maps())
    def test_matches_oracle(self, f):
        pts, opens, table = label_view(f)
        cod_opens = [frozenset(f.codomain.labels(o)) for o in f.codomain.opens]
        assert is_continuous(f) == O.continuous(pts, opens, table, cod_opens)


class TestVContinuity:
    @given(maps(max_points=3))
    def test_trivial_covering(self, f):
        y = f.codomain
        for v in enumerate_coverings(y):
            if y.full in v.members:
                assert is_v_continuous(f, v)

    def test_example2_audit_case(self, example2):
        x, y = example2
        v = validate_covering(y, [["a", "c"], ["b", "c"]])
        for test in (is_v_continuous, is_v_continuous_naive):
            res = test(identity(x, y), v)
            assert not res and res.offending_point == "c"

    def test_finite_sierpinski_analogue(self):
        x = validate_topology("pq", [[], ["p"], ["p", "q"]])
        y = validate_topology("ab", [[], ["a"], ["a", "b"]])
        f = validate_map(x, y, {"p": "b", "q": "a"})
        assert not is_continuous(f)
        covs = list(enumerate_coverings(y))
        assert len(covs) == 2
        assert all(is_v_continuous(f, v) for v in covs)

    def test_identity_trivial_naive(self, example2):
        x = example2[0]
        v = validate_covering(x, [x.points])
        assert is_v_continuous_naive(identity(x), v)

    def test_witness_and_induced_covering(self, example2):
        x, y = example2
        v = validate_covering(y, [y.points])
        res = is_v_continuous(identity(x, y), v)
        assert res.witness.verify()
        union = 0
        for u in res.witness.induced_covering():
            union |= u
        assert union == x.full
        assert res.witness.to_json()["c"] == {"U": ["a", "b", "c"], "V": ["a", "b", "c"]}

    def test_mismatch(self, example2, sierpinski):
        x, y = example2
        with pytest.raises(SpaceMismatch):
            is_v_continuous(identity(x, y), minimal_basis_covering(sierpinski))

    @given(maps(max_points=3))
    def test_fast_naive_oracle_agree(self, f):
        pts, opens, table = label_view(f)
        for v in enumerate_coverings(f.codomain):
            fam = [frozenset(f.codomain.labels(m)) for m in v.members]
            want = O.v_continuous(pts, opens, table, fam)
            fast, naive = is_v_continuous(f, v), is_v_continuous_naive(f, v)
            assert bool(fast) == bool(naive) == want
            if fast:
                assert fast.witness.verify() and naive.witness.verify()

    @given(maps(max_points=3))
    def test_continuous_implies_v_continuous(self, f):
        if is_continuous(f):
            assert all(is_v_continuous(f, v) for v in enumerate_coverings(f.codomain))


class TestComposeAndImages:
    @given(maps())
    def test_identities(self, f):
        assert compose(identity(f.domain), f) == f
        assert compose(f, identity(f.codomain)) == f

    @given(maps(), st.data())
    def test_pointwise(self, f, data):
        z = data.draw(spaces(max_points=3))
        g = PointMap(f.codomain, z, tuple(data.draw(st.integers(0, len(z.points) - 1)) for _ in f.codomain.points))
        h = compose(f, g)
        assert all(h(p) == g(f(p)) for p in f.domain.points)

    def test_mismatch(self, example2):
        x, y = example2
        with pytest.raises(SpaceMismatch):
            compose(identity(x, y), identity(x, y))

    def test_image_family(self, example2):
        x, y = example2
        fam = image_family(identity(x, y), minimal_basis_covering(x))
        assert [y.labels(m) for m in fam] == [["a"], ["b"], ["a", "b", "c"]]

    def test_constant_image_family(self, example2):
        x, y = example2
        fam = image_family(constant(x, y, "b"), minimal_basis_covering(x))
        assert set(fam) == {y.mask("b")}


class TestProperties:
    def test_identity(self, example2):
        p = map_properties(identity(example2[0]))
        assert p.surjective and p.injective and p.bijective and p.homeomorphism

    def test_example2_identity(self, example2):
        p = map_properties(identity(*example2))
        assert p.bijective and not p.homeomorphism
        assert not is_continuous(identity(*example2))

    def test_constant(self, example2):
        p = map_properties(constant(example2[0], example2[1], "a"))
        assert not (p.surjective or p.injective or p.bijective or p.homeomorphism)
