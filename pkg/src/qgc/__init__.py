"""qgc: an exact workbench for qudit graph-state quantum codes.

Constructs, searches, and verifies quantum codes whose codewords are
graph-basis states of a weighted graph on n qudits of any dimension D >= 2.
All core reasoning is integer arithmetic mod D (labels and phase
exponents); a dense complex-vector oracle cross-checks it numerically at
small sizes.
"""

__version__ = "0.1.0"

from ._kernels import BACKEND as KERNEL_BACKEND
from .codes import (
    GraphCode,
    assert_distance,
    code_from_labels,
    is_additive,
    qs_bound,
)
from .constructions import hypercube16_code, partition_code, star_code_odd
from .distance import ABOVE_CAP, DistanceTable, build_distance_table, pair_distance
from .errors import (
    CapacityError,
    CapTooLowError,
    ConstructionError,
    DegenerateRegimeError,
    DimensionMismatchError,
    GraphParseError,
    InternalCheckError,
    InvalidScalarError,
    NotAdditiveError,
    QgcError,
)
from .graphs import (
    FAMILIES,
    Graph,
    apply_pauli_symbolic,
    build_family,
    coordination_bound,
    displacement,
    parse_graph,
    serialize_graph,
)
from .oracle import (
    DenseState,
    apply_pauli_dense,
    build_graph_state,
    graph_basis_state,
    kl_verify,
)
from .pauli import (
    PauliProduct,
    commutation_exponent,
    enumerate_by_size,
    inverse,
    multiply,
    pauli_string,
    size_and_base,
)
from .search import (
    CompatibilityGraph,
    candidate_set,
    compatibility_graph,
    max_clique,
    search_additive,
    search_code,
)
from .stabilizer import (
    StabilizerGroup,
    stabilizer_element,
    stabilizer_phase,
    stabilizer_subgroup,
    verify_stabilizer,
)
from .zmod import (
    GeneratorMatrix,
    ModTuple,
    add_tuples,
    diagonalize,
    dot,
    dual_generators,
    label_str,
    memory_cap,
    neg_tuple,
    parse_label,
    scale_tuple,
    solve_dual,
    span,
    sub_tuples,
)

__all__ = [name for name in dir() if not name.startswith("_")]
