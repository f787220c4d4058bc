"""Dense-P properties of finite topological spaces, finite topologized groups
and symbolic models of infinite example spaces."""
from .core import (
    FiniteSpace,
    PointMap,
    Preorder,
    Subspace,
    closure,
    classify_connectivity,
    clopen_splitting_decomposition,
    connected_components,
    discrete,
    indiscrete,
    interior,
    is_dense,
    map_profile,
    max_real_range,
    minimal_open_neighborhood,
    product,
    separation_profile,
    sierpinski,
    space_from_json,
    specialization_preorder,
    subspace,
    topological_sum,
    validate_topology,
)
from .enumeration import (
    canonical_form,
    dense_subsets,
    enumerate_maps,
    enumerate_preorders,
    enumerate_topologies,
    topology_from_preorder,
)
from .errors import (
    CapExceeded,
    DensetopError,
    NotAGroup,
    NotAPreorder,
    NotATopology,
    NotExpressible,
    NotLocallyDC,
    OutOfCarrier,
    UnknownClaim,
    UnknownTheorem,
)
from .groups import (
    GroupTable,
    TopologizedGroup,
    continuity_class,
    dense_subgroup_P,
    dense_subgroups,
    identity_neighborhood_conditions,
    verify_group_theorems,
)
from .named import h_analogue, named_space, sierpinski_sq
from .properties import (
    PROPERTIES,
    Property,
    dc_decomposition,
    dense_connected_component,
    dense_P,
    hereditarily_P,
    heredity_class,
    is_dense_connected_fast,
    is_dense_pathwise_fast,
    is_dense_pseudocompact,
    is_dense_ultraconnected_fast,
    locally_dense_P,
    one_dense_P,
    proper_one_dense_P,
)
from .report import TheoremReport
from .symbolic import SetDescriptor, cross_validate, sym_claim, sym_closure, sym_is_dense, window_sample
from .theorems import replay_failure, verify_theorem

__version__ = "0.1.0"
