"""Finite topological spaces: continuity up to a covering, chains and connectedness."""

from .chains import (
    Chain,
    chain_components,
    chain_components_by_enumeration,
    find_chain,
    is_chain_connected_set,
    is_u_chain_connected_set,
    u_chain_components,
)
from .coverings import (
    Covering,
    NerveGraph,
    TraceCovering,
    enumerate_coverings,
    family_refines,
    minimal_basis_covering,
    nerve,
    refinement_witness,
    refines,
    trace_covering,
    validate_covering,
)
from .enumeration import enumerate_maps, enumerate_topologies
from .maps import (
    MapProperties,
    PointMap,
    VContWitness,
    compose,
    identity,
    image_family,
    is_continuous,
    is_v_continuous,
    is_v_continuous_naive,
    map_properties,
    validate_map,
)
from .space import (
    ComponentPartition,
    FiniteSpace,
    clopen_sets,
    connected_components,
    discrete,
    indiscrete,
    is_connected,
    is_t1,
    minimal_neighborhood,
    product,
    quasicomponent,
    quasicomponents,
    subspace,
    validate_topology,
)
from .sweep import SweepReport, sweep
from .theorems import TheoremId, TheoremVerdict, check

__version__ = "0.1.0"
