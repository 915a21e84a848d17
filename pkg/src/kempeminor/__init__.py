"""Kempe-colorings, unique colorings and clique minors on small graphs."""

from .coloring import (
    KempeReport,
    NotAPartition,
    Partition,
    Uniqueness,
    UniqueColoring,
    chromatic_number,
    enumerate_partitions,
    unique_coloring,
    verify_partition,
)
from .extractor import (
    Branch,
    BudgetExceeded,
    ExceptionalContradiction,
    ExtractionTrace,
    NotUnique,
    OrderTooHigh,
    WrongOrder,
    contradiction_diagnostics,
    extract_theorem1,
    extract_unique,
    pad_to_ten,
)
from .graph import (
    Graph,
    add_universal_vertices,
    build_cockade,
    build_graph,
    complete_multipartite,
    decode_graph6,
    encode_graph6,
    is_connected_subset,
    universal_vertex_count,
    vertex_connectivity,
)
from .minor import MinorStatus, MinorWitness, SearchBudget, find_clique_minor, verify_clique_minor
from .verifiers import (
    NotKempe,
    check_lemma1,
    check_lemma2,
    classify_theorem0,
    generate_kempe_colored,
    generate_uniquely_colorable,
)

__version__ = "0.1.0"
