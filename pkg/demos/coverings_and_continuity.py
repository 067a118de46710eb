"""Open coverings and continuity relative to a covering.

A map can fail to be continuous and still be V-continuous for every
covering V of a non-T1 codomain.  The two-point version below shows it.
"""

from fintop import (
    enumerate_coverings,
    is_continuous,
    is_v_continuous,
    nerve,
    refines,
    validate_covering,
    validate_map,
    validate_topology,
)

x = validate_topology("pq", [[], ["p"], ["p", "q"]])
y = validate_topology("ab", [[], ["a"], ["a", "b"]])
f = validate_map(x, y, {"p": "b", "q": "a"})

print("continuous?", is_continuous(f))
for v in enumerate_coverings(y):
    res = is_v_continuous(f, v)
    print(f"  covering {v.to_json()['members']}: V-continuous={res.holds}, witness={res.witness.to_json()}")

# Refinement and nerves on the three-point space with opens {c}, {b,c}, {a,c}.
z = validate_topology("abc", [[], ["c"], ["b", "c"], ["a", "c"], ["a", "b", "c"]])
fine = validate_covering(z, [["c"], ["a", "c"], ["b", "c"]])
coarse = validate_covering(z, [["a", "c"], ["b", "c"]])
print("fine refines coarse?", refines(fine, coarse))
print(nerve(coarse).to_dot([",".join(z.labels(m)) for m in coarse.members]))
