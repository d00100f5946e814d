"""Weak integer additive set-indexers: sumsets, verification, sparing numbers."""

from .errors import (
    DisjointnessError,
    FormatError,
    IncompleteLabelingError,
    InfeasiblePatternError,
    InvalidParameterError,
    LabelOverflowError,
    NotASubgraphError,
    TooLargeInputError,
    UnknownVertexError,
    WeakIASIError,
)
from .graph import (
    Graph,
    complement,
    graph_intersection,
    graph_join,
    graph_union,
    is_bipartite,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_fan,
    make_path,
    make_wheel,
    ring_sum,
    subgraph_complement,
)
from .labels import (
    Labeling,
    LabelSet,
    VerificationReport,
    induced_edge_labels,
    is_concurrent_weak,
    is_iasi,
    is_weak_iasi,
    mono_indexed_edges,
    restrict,
    set_indexing_number,
    sumset,
)
from .sparing import (
    Pattern,
    SparingCertificate,
    concurrent_min_mono,
    mono_count_spectrum,
    pattern_feasible,
    pattern_mono_count,
    realize_labeling,
    sparing_exact,
    sparing_oracle,
)

__version__ = "0.1.0"
