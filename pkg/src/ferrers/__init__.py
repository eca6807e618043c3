"""Ferrers graphs and tableaux: edge ideals, cellular resolutions and toric rings."""
from .combinatorics import (
    CornerData, Partition, PartitionError, binomial, corners, dual, parse_partition,
    partitions_of, partitions_up_to, rectangle, staircase, validate_partition,
)
from .graph import (
    BipartiteGraph, RecognitionResult, SimpleGraph, complement, ferrers_graph,
    has_two_linear_resolution, is_chordal, is_ferrers_labeled, recognize_ferrers,
)
from .ideal import (
    EdgeIdeal, IdealInvariants, PrimeComponent, edge_ideal, invariants,
    irredundant_decomposition, membership, power_regularity, redundant_decomposition,
)
from .series import BettiTable, HilbertSeries, betti_numbers, hilbert_function, hilbert_series
from .resolution import build_complex, build_resolution, incidence, verify_resolution
from .toric import (
    ToricInvariants, gorenstein_witness, h_vector, h_vector_closed, h_vector_recursive,
    is_gorenstein, multiplicity, toric_invariants, toric_regularity,
)

__version__ = "0.1.0"
