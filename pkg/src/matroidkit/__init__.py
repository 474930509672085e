"""matroidkit: subset-list matroid descriptions, the conversion order
between them, counting families that separate them, and minor /
intersection / isomorphism algorithms checked against exhaustive
oracles.
"""

from .bitsets import (
    WORD_BITS,
    CapacityError,
    elements,
    format_bits,
    from_elements,
    full_mask,
    masks_of_size,
    max_ground,
    parse_bits,
    submasks,
)
from .core import (
    MatroidView,
    add_parallel,
    direct_sum,
    minor_circuits,
    parallel_blowup,
    relabel,
)
from .descriptions import (
    KINDS,
    Description,
    ParseError,
    SizeMeasure,
    ValidationReport,
    description,
    encode_from_oracle,
    parse,
    semantically_equal,
    serialize,
    size_of,
    to_view,
    validate,
)
from .conversions import (
    EDGES,
    ConversionPlan,
    PlanError,
    convert,
    convert_edge,
    count_cyclic_flats_vs_bases,
    plan,
    reachable,
)
from .families import (
    FAMILY_TAGS,
    MultiGraph,
    add_loops,
    bicircular,
    multigraph,
    parse_graph,
    phi,
    phi_r,
    separation_family,
    serialize_graph,
    subdivide,
    subdivision_length,
    uniform,
)
from .reductions import (
    EncodedBipartiteGraph,
    MinorWitness,
    ThreePartitionReduction,
    TripleSystem,
    detect_minor_exhaustive,
    detect_minor_fixed,
    encode_bipartite,
    graph_has_independent_set,
    has_matching,
    intersect3_bases,
    intersect3_bruteforce,
    isomorphic,
    parse_3dm,
    reduce_3dm,
    reduce_independent_set,
    reduce_subgraph_iso,
    subgraph_contains,
    verify_minor_witness,
)
from .harness import (
    ExperimentReport,
    SizeRow,
    measure_family,
    render_csv,
    render_table,
    run_separation_suite,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
