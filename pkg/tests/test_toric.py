from itertools import product

import pytest
from hypothesis import given

from ferrers.combinatorics import Partition, binomial, rectangle, staircase
from ferrers.ideal import is_unmixed
from ferrers.oracle import toric_hilbert_oracle
from ferrers.series import trim
from ferrers.toric import (
    GorensteinError, a_invariant, gorenstein_witness, h_vector, h_vector_closed,
    h_vector_recursive, is_gorenstein, ladder, minor_generators, multiplicity,
    multiplicity_closed, regularity_piecewise, toric_hilbert_function, toric_ideal_height,
    toric_invariants, toric_regularity,
)

from conftest import partitions


def hook(m, n):
    return Partition((m,) + (1,) * (n - 1))


def shifted(n, m):
    return Partition(tuple(m + 1 - k for k in range(1, n + 1)))


def test_ladder_shapes():
    assert ladder(Partition((5, 4, 4, 3, 2))).shape == (4, 4, 4, 3, 2)
    assert ladder(Partition((5, 4, 3, 2, 1))).shape == (4, 4, 3, 2)
    assert ladder(Partition((6,))).degenerate
    assert ladder(hook(4, 3)).degenerate


def test_minor_generators():
    assert minor_generators(ladder(Partition((2, 2)))) == [((1, 2), (1, 2))]
    assert minor_generators(ladder(Partition((5,)))) == []
    shape = (4, 4, 4, 3, 2)
    want = sum(binomial(shape[b], 2) for b in range(len(shape)) for _ in range(b))
    assert len(minor_generators(ladder(Partition((5, 4, 4, 3, 2))))) == want


def test_toric_ideal_height():
    assert toric_ideal_height(Partition((2, 2))) == 1
    assert toric_ideal_height(hook(5, 3)) == 0
    for n, m in product(range(1, 6), range(2, 6)):
        assert toric_ideal_height(rectangle(n, m)) == (n - 1) * (m - 1)


@given(partitions())
def test_toric_height_is_generator_surplus(p):
    # generators minus Krull dimension of K[G]
    assert toric_ideal_height(p) == p.weight - (p.n + p.m - 1)


def test_h_vector_examples():
    assert h_vector(Partition((2, 2))) == (1, 1)
    assert h_vector(Partition((2, 2, 2))) == (1, 2)
    assert h_vector(staircase(4)) == (1, 3, 1)
    assert h_vector(Partition((1,))) == (1,)


def test_h_vector_families():
    for n, m in product(range(2, 7), repeat=2):
        assert h_vector(rectangle(n, m)) == trim([binomial(m - 1, k) * binomial(n - 1, k) for k in range(n)])
    for m in range(2, 7):
        for n in range(2, m + 1):
            want = [binomial(n - 1, k) * binomial(m - 2, k) - binomial(n - 1, k + 1) * binomial(m - 2, k - 1)
                    for k in range(n)]
            assert h_vector(shifted(n, m)) == trim(want)
    for n in range(2, 8):
        want = [binomial(n - 2, k) * binomial(n - 1, k) // (k + 1) for k in range(n - 1)]
        assert h_vector(staircase(n)) == trim(want)


@given(partitions())
def test_closed_equals_recursive(p):
    assert h_vector_closed(p) == h_vector_recursive(p)
    assert multiplicity_closed(p) == multiplicity(p)


def test_multiplicity_examples():
    assert [multiplicity(staircase(n)) for n in range(2, 7)] == [1, 2, 5, 14, 42]
    for n, m in product(range(2, 7), repeat=2):
        assert multiplicity(rectangle(n, m)) == binomial(n + m - 2, m - 1)
        if n <= m:
            assert multiplicity(shifted(n, m)) * m == (m - n + 1) * binomial(m + n - 2, m - 1)


def test_regularity():
    for n in range(2, 8):
        assert toric_regularity(staircase(n)) == n - 2
    for n, m in product(range(2, 6), repeat=2):
        if n <= m:
            assert toric_regularity(rectangle(n, m)) == n - 1
    p = Partition((3, 3, 3, 3, 3))
    assert toric_regularity(p) == 2 == len(h_vector(p)) - 1
    assert regularity_piecewise(p) == 4


def test_a_invariant():
    assert a_invariant(Partition((2, 2))) == -2
    for n in range(2, 7):
        assert a_invariant(staircase(n)) == -n - 1
    for n, m in product(range(2, 6), repeat=2):
        if n <= m:
            assert a_invariant(rectangle(n, m)) == -m


def test_gorenstein():
    assert is_gorenstein(Partition((2, 2)))
    for n in range(2, 7):
        assert is_gorenstein(staircase(n))
        assert gorenstein_witness(staircase(n)) == staircase(n)
    for n, m in product(range(2, 6), repeat=2):
        if n != m:
            assert not is_gorenstein(rectangle(n, m))
    assert gorenstein_witness(Partition((2, 2))) == Partition((3, 2, 1))
    with pytest.raises(GorensteinError):
        gorenstein_witness(rectangle(2, 3))


@given(partitions())
def test_gorenstein_properties(p):
    h = h_vector(p)
    if is_gorenstein(p):
        assert h == h[::-1]
        mu = gorenstein_witness(p)
        assert is_unmixed(mu) and h_vector(mu) == h


def test_toric_hilbert_function():
    p = Partition((2, 2))
    assert toric_hilbert_function(p, 2) == 9 == toric_hilbert_oracle(p, 2)
    for q in (Partition((6, 4, 4, 2, 1)), staircase(4)):
        assert toric_hilbert_function(q, 0) == 1
        assert toric_hilbert_function(q, 1) == q.weight
    for m, n in product(range(1, 5), range(1, 4)):
        for d in range(4):
            assert toric_hilbert_function(hook(m, n), d) == binomial(d + n + m - 2, n + m - 2)


@given(partitions(max_parts=3, max_part=3))
def test_toric_hilbert_matches_oracle(p):
    for d in range(4):
        assert toric_hilbert_function(p, d) == toric_hilbert_oracle(p, d)


def test_toric_invariants_summary():
    inv = toric_invariants(Partition((6, 4, 4, 2, 1)))
    assert inv.h_vector == (1, 7, 7, 1) and inv.multiplicity == 16 and inv.gorenstein
    assert inv.dimension == 10
    assert inv.to_json()["multiplicity"] == "16"
