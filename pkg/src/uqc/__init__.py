"""Universality of exponentiated qudit gate sets.

Decide whether a finite set of skew-Hermitian generators, one of which is a
diagonal drift with rationally independent phases, exponentiates to a
universal gate family for U(d) or SU(d).  The decision reduces to
connectivity of a coupling graph on basis indices; disconnected sets can be
repaired with elementary bridges, a two-generator universal pair can be
constructed for any d, and every verdict can be cross-checked against a
brute-force Lie-closure oracle.
"""

__version__ = "0.1.0"

from .errors import (
    DegenerateSpectrum,
    DesignatedNotDiagonal,
    InvalidInput,
    NotSkewHermitian,
    NotTraceless,
    NumericalFailure,
    UqcError,
    ValidationError,
)
from .generators import (
    Algebra,
    Generator,
    GeneratorSet,
    IndependenceStatus,
    SpectrumIndependenceVerdict,
    check_general_direction,
    epsilon_bound,
    epsilon_bound_per_generator,
    make_general_direction,
    phases_of,
    validate_set,
)
from .linalg import (
    commutator,
    embed_real,
    matrix_exp,
    numerical_rank,
    operator_norm,
    unembed_real,
)
from .universality import (
    CouplingGraph,
    UniversalityVerdict,
    VerdictStatus,
    block_partition,
    build_coupling_graph,
    check_universality,
    connected_components,
    reachable_from,
)
from .repair import (
    BridgeStyle,
    RepairPlan,
    antisymmetric_chain,
    bridge_generator,
    minimal_pair,
    repair,
    symmetric_chain,
)
from .oracle import (
    LieClosureReport,
    closure_block_partition,
    coordinate_subspace_scan,
    lie_closure,
)

__all__ = [
    "__version__",
    # errors
    "UqcError",
    "InvalidInput",
    "NumericalFailure",
    "ValidationError",
    "NotSkewHermitian",
    "NotTraceless",
    "DesignatedNotDiagonal",
    "DegenerateSpectrum",
    # linalg
    "commutator",
    "operator_norm",
    "matrix_exp",
    "numerical_rank",
    "embed_real",
    "unembed_real",
    # generators
    "Algebra",
    "Generator",
    "GeneratorSet",
    "IndependenceStatus",
    "SpectrumIndependenceVerdict",
    "validate_set",
    "check_general_direction",
    "make_general_direction",
    "phases_of",
    "epsilon_bound",
    "epsilon_bound_per_generator",
    # universality
    "CouplingGraph",
    "UniversalityVerdict",
    "VerdictStatus",
    "build_coupling_graph",
    "connected_components",
    "reachable_from",
    "check_universality",
    "block_partition",
    # repair
    "BridgeStyle",
    "RepairPlan",
    "repair",
    "bridge_generator",
    "minimal_pair",
    "antisymmetric_chain",
    "symmetric_chain",
    # oracle
    "LieClosureReport",
    "lie_closure",
    "closure_block_partition",
    "coordinate_subspace_scan",
]
