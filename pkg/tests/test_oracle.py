from itertools import product

import pytest
from hypothesis import given

from ferrers.combinatorics import Partition, binomial, rectangle, staircase
from ferrers.oracle import (
    CompositionError, ResourceLimitError, homology_ranks, lattice_path_count, lattice_path_counts,
    lattice_paths, quotient_hilbert_oracle, standard_monomials, toric_hilbert_oracle,
)
from ferrers.toric import h_vector, multiplicity

from conftest import partitions


def test_quotient_oracle():
    p = Partition((2, 1))
    assert quotient_hilbert_oracle(p, 3) == 10 == standard_monomials(p, 3)
    for q in (p, staircase(3), Partition((6, 4, 4, 2, 1))):
        assert quotient_hilbert_oracle(q, 0) == 1
        assert quotient_hilbert_oracle(q, 1) == q.n + q.m


@given(partitions(max_parts=3, max_part=3))
def test_support_counting_matches_listing(p):
    for d in range(5):
        assert quotient_hilbert_oracle(p, d) == standard_monomials(p, d)


def test_toric_oracle():
    assert toric_hilbert_oracle(Partition((2, 2)), 2) == 9
    for m, n in product(range(1, 5), range(1, 4)):
        assert toric_hilbert_oracle(Partition((m,) + (1,) * (n - 1)), 2) == binomial(n + m, 2)
    assert toric_hilbert_oracle(Partition((6, 4, 4, 2, 1)), 1) == 17


def test_resource_guard():
    with pytest.raises(ResourceLimitError):
        toric_hilbert_oracle(rectangle(4, 4), 6, limit=1000)
    with pytest.raises(ResourceLimitError):
        standard_monomials(rectangle(4, 4), 6, limit=1000)


def test_lattice_paths_examples():
    for n, m in product(range(1, 6), repeat=2):
        counts = lattice_path_counts(rectangle(n, m))
        assert counts == [binomial(m - 1, k) * binomial(n - 1, k) for k in range(min(n, m))]
    assert lattice_path_count(staircase(4), 2) == 1
    assert lattice_path_count(staircase(4), 0) == 1
    assert lattice_path_count(staircase(4), 7) == 0


@given(partitions(max_parts=5, max_part=5))
def test_dp_matches_enumeration(p):
    counts = {}
    for path in lattice_paths(p):
        counts[path.turns] = counts.get(path.turns, 0) + 1
    assert [counts.get(k, 0) for k in range(max(counts) + 1)] == lattice_path_counts(p)


@given(partitions(max_parts=5, max_part=5))
def test_paths_count_h_vector(p):
    assert tuple(lattice_path_counts(p)) == h_vector(p)
    assert sum(lattice_path_counts(p)) == multiplicity(p)


def test_homology_triangle():
    aug = [[1, 1, 1]]
    d1 = [[-1, -1, 0], [1, 0, -1], [0, 1, 1]]   # edges 01, 02, 12
    d2 = [[1], [-1], [1]]
    assert homology_ranks([aug, d1, d2]) == [0, 0, 0, 0]
    assert homology_ranks([aug, d1]) == [0, 0, 1]


def test_homology_hollow_square():
    aug = [[1, 1, 1, 1]]
    d1 = [[-1, 0, 0, -1], [1, -1, 0, 0], [0, 1, -1, 0], [0, 0, 1, 1]]
    assert homology_ranks([aug, d1]) == [0, 0, 1]
    assert homology_ranks([aug, d1], method="modular") == [0, 0, 1]


def test_torsion():
    ranks, tors = homology_ranks([[[1]], [[0]], [[2]]], torsion=True)
    assert ranks == [0, 0, 0, 0]
    assert tors[2] == [2]


def test_composition_error():
    with pytest.raises(CompositionError):
        homology_ranks([[[1, 1]], [[1], [0]]])
