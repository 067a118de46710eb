"""Finite spaces: validation, neighbourhoods, components, products.

Run with ``python3 demos/spaces.py``.
"""

from fintop import (
    connected_components,
    enumerate_topologies,
    is_connected,
    is_t1,
    minimal_neighborhood,
    product,
    quasicomponents,
    validate_topology,
)
from fintop.errors import NotClosedUnderUnion

sierpinski = validate_topology("ab", [[], ["a"], ["a", "b"]])
print("Sierpinski opens:", [sierpinski.labels(o) for o in sierpinski.opens])
print("minimal neighbourhood of b:", sierpinski.labels(minimal_neighborhood(sierpinski, "b")))
print("T1?", is_t1(sierpinski), " connected?", is_connected(sierpinski))

# A family that is not a topology is rejected with the offending pair.
try:
    validate_topology("abc", [[], ["a"], ["b"], ["a", "b", "c"]])
except NotClosedUnderUnion as e:
    print("rejected:", e)

split = validate_topology("abc", [[], ["a"], ["b", "c"], ["a", "b", "c"]])
print("components:", connected_components(split).to_json())
print("quasicomponents:", quasicomponents(split).to_json())

square, _, _ = product(sierpinski, sierpinski)
print(f"Sierpinski squared has {len(square.opens)} open sets on points {list(square.points)}")

for n in range(5):
    print(f"labelled topologies on {n} points: {sum(1 for _ in enumerate_topologies(n))}")
