"""Chains in a covering and the partitions they produce."""

from fintop import (
    chain_components,
    find_chain,
    minimal_basis_covering,
    quasicomponents,
    trace_covering,
    u_chain_components,
    validate_covering,
    validate_topology,
)

y = validate_topology("abc", [[], ["c"], ["b", "c"], ["a", "c"], ["a", "b", "c"]])
v = validate_covering(y, [["a", "c"], ["b", "c"]])

ch = find_chain(v, "a", "b")
print("chain a..b:", ch.to_json(), "verified:", ch.verify())

# Restricting to {a, b} cuts the link through c.
t = trace_covering(v, y.mask("ab"))
print("trace members:", [y.labels(m) for m in t.members])
print("chain in trace:", find_chain(t, "a", "b"))
print("trace components:", u_chain_components(t).to_json())

split = validate_topology("abcd", [[], ["a"], ["b", "c", "d"], ["c"], ["a", "c"], ["c", "d"], ["a", "c", "d"],
                              ["a", "b", "c", "d"]])
basis = minimal_basis_covering(split)
print("basis covering:", basis.to_json()["members"])
print("chain components:", chain_components(split).to_json())
print("quasicomponents: ", quasicomponents(split).to_json())
