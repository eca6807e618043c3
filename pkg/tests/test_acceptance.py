"""Acceptance gate: eleven criteria, exact arithmetic throughout (tolerance zero).

Each test records one PASS/FAIL line; the lines are printed in the pytest terminal
summary and also when this file is run as a script.
"""
import random
import time
from collections import Counter
from itertools import product

import numpy as np
import pytest

from ferrers import _kernels, graph, ideal, oracle, resolution, series, toric
from ferrers.combinatorics import Partition, binomial, partitions_up_to, rectangle, staircase

RESULTS = {}


def record(number, ok, detail, elapsed, limit=None):
    within = limit is None or elapsed < limit
    status = "PASS" if ok and within else "FAIL"
    budget = "" if limit is None else f" / {limit:g}s"
    line = f"criterion {number:>2}: {status}  {detail}  [{elapsed:.2f}s{budget}]"
    RESULTS[number] = line
    print(line)
    return ok and within


def _first(iterable):
    return next(iter(iterable), None)


def test_c01_64421():
    t0 = time.perf_counter()
    p = Partition((6, 4, 4, 2, 1))
    comps = [(c.a, c.b) for c in ideal.irredundant_decomposition(p)]
    beta1 = series.betti_numbers(p)[1]
    ok = comps == [(0, 6), (1, 4), (3, 2), (4, 1), (5, 0)] and beta1 == 17
    assert record(1, ok, f"components {comps}, beta_1 = {beta1}", time.perf_counter() - t0, 1)


def test_c02_betti_k_polynomial():
    t0 = time.perf_counter()

    def bad():
        for p in partitions_up_to(12):
            beta = series.betti_numbers(p)
            if not series.k_polynomial_check(p):
                yield p, "K-polynomial"
            if beta[1] != p.weight:
                yield p, "beta_1"
            if sum((-1) ** i * b for i, b in enumerate(beta.beta)):
                yield p, "alternating sum"

    count = sum(1 for _ in partitions_up_to(12))
    fail = _first(bad())
    assert record(2, fail is None, f"{count} partitions, |lambda| <= 12, first failure {fail}",
                  time.perf_counter() - t0, 60)


def test_c03_cellular_resolution():
    t0 = time.perf_counter()
    fail = None
    count = acyclic = 0
    for p in partitions_up_to(10):
        depth = 4 if p.weight <= 8 else 3
        rep = resolution.verify_resolution(p, depth)
        count += 1
        acyclic += depth == 4
        if not rep.passed:
            fail = (p, rep.failure)
            break
    assert record(3, fail is None,
                  f"{count} complexes checked, {acyclic} with all restrictions acyclic, first failure {fail}",
                  time.perf_counter() - t0, 300)


def test_c04_staircase_cells():
    t0 = time.perf_counter()
    cx = resolution.build_complex(staircase(4))
    types = Counter(resolution.combinatorial_type(f) for f in cx.faces[3])
    want_f = tuple(i * binomial(5, i + 1) for i in range(1, 5))
    ok = (cx.f_vector == want_f == (10, 20, 15, 4)
          and types == Counter({(3, 0): 1, (0, 3): 1, (1, 2): 1, (2, 1): 1}))
    assert record(4, ok, f"f = {cx.f_vector}, 3-cell types {sorted(types)}", time.perf_counter() - t0)


def test_c05_hilbert_oracle():
    t0 = time.perf_counter()
    fail = None
    count = 0
    for p in partitions_up_to(16):
        if p.n + p.m > 8:
            continue
        h = series.hilbert_series(p)
        count += 1
        for d in range(7):
            if series.hilbert_function(h, d) != oracle.standard_monomials(p, d):
                fail = (p, d)
                break
        if fail:
            break
    assert record(5, fail is None, f"{count} partitions with n+m <= 8, d <= 6, first failure {fail}",
                  time.perf_counter() - t0)


def _graph_from_mask(mask, nx, ny):
    return graph.BipartiteGraph(nx, ny, frozenset(
        (k // ny + 1, k % ny + 1) for k in range(nx * ny) if mask >> k & 1))


def _covers_all(mask, nx, ny):
    rows = all(mask >> (i * ny) & ((1 << ny) - 1) for i in range(nx))
    cols = all(any(mask >> (i * ny + j) & 1 for i in range(nx)) for j in range(ny))
    return rows and cols


def test_c06_recognition_equivalence():
    t0 = time.perf_counter()
    fail = None
    exhaustive = 0
    for nx, ny in product(range(1, 5), repeat=2):
        masks = np.array([m for m in range(1 << (nx * ny)) if _covers_all(m, nx, ny)], dtype=np.int64)
        chordal = _kernels.complement_chordal_batch(masks, nx, ny)
        exhaustive += len(masks)
        for mask, c in zip(masks.tolist(), chordal.tolist()):
            if graph.recognize_ferrers(_graph_from_mask(mask, nx, ny)).ferrers != bool(c):
                fail = ("exhaustive", nx, ny, mask)
                break
        if fail:
            break
    rng = random.Random(2024)
    randomized = 0
    while fail is None and randomized < 10_000:
        nx, ny = rng.randint(1, 7), rng.randint(1, 7)
        if rng.random() < 0.5:
            parts = sorted((rng.randint(1, ny) for _ in range(nx)), reverse=True)
            parts[0] = ny
            rows, cols = list(range(1, nx + 1)), list(range(1, ny + 1))
            rng.shuffle(rows)
            rng.shuffle(cols)
            g = graph.relabel(graph.ferrers_graph(Partition(tuple(parts))), rows, cols)
        else:
            density = rng.random()
            g = graph.strip_isolated(graph.BipartiteGraph(nx, ny, frozenset(
                (i, j) for i in range(1, nx + 1) for j in range(1, ny + 1) if rng.random() < density)))
            if g.nx == 0:
                continue
        randomized += 1
        rec = graph.recognize_ferrers(g)
        h = graph.complement(g)
        chord = graph.is_chordal(h)
        if rec.ferrers != chord.chordal:
            fail = ("random disagreement", graph.format_edge_list(g))
        elif rec.ferrers and not (
                graph.is_ferrers_labeled(graph.relabel(g, rec.row_permutation, rec.col_permutation))
                and graph.valid_elimination_order(h, chord.order)):
            fail = ("bad Ferrers certificate", graph.format_edge_list(g))
        elif not rec.ferrers and not (graph.valid_obstruction(g, rec.obstruction)
                                      and graph.valid_chordless_cycle(h, chord.cycle)):
            fail = ("bad obstruction certificate", graph.format_edge_list(g))
    assert record(6, fail is None,
                  f"{exhaustive} exhaustive graphs, {randomized} random with certificates, "
                  f"first failure {fail}", time.perf_counter() - t0, 300)


def _expand(h, dim, d):
    return sum(c * binomial(d - k + dim - 1, dim - 1) for k, c in enumerate(h))


def test_c07_h_vector_agreement():
    t0 = time.perf_counter()
    fail = None
    count = 0
    for p in partitions_up_to(14):
        count += 1
        if toric.h_vector_closed(p) != toric.h_vector_recursive(p):
            fail = ("closed vs recursive", p)
            break
    oracle_cases = 0
    for p in partitions_up_to(16):
        if fail or p.n > 4 or p.m > 4:
            continue
        oracle_cases += 1
        dim = toric.dimension(p)
        for d in range(5):
            want = oracle.toric_hilbert_oracle(p, d)
            if not (_expand(toric.h_vector_closed(p), dim, d) == _expand(toric.h_vector_recursive(p), dim, d)
                    == want):
                fail = ("toric Hilbert oracle", p, d)
                break
    assert record(7, fail is None,
                  f"{count} partitions |lambda| <= 14, {oracle_cases} oracle cases n,m <= 4 d <= 4, "
                  f"first failure {fail}", time.perf_counter() - t0)


def test_c08_examples():
    t0 = time.perf_counter()
    fail = None
    for n, m in product(range(2, 9), repeat=2):
        p = rectangle(n, m)
        want = series.trim([binomial(m - 1, k) * binomial(n - 1, k) for k in range(n)])
        if toric.h_vector(p) != want or toric.multiplicity(p) != binomial(n + m - 2, m - 1):
            fail = ("complete bipartite", n, m)
        if n <= m:
            q = Partition(tuple(m + 1 - k for k in range(1, n + 1)))
            want = series.trim([binomial(n - 1, k) * binomial(m - 2, k)
                                - binomial(n - 1, k + 1) * binomial(m - 2, k - 1) for k in range(n)])
            if toric.h_vector(q) != want or toric.multiplicity(q) * m != (m - n + 1) * binomial(m + n - 2, m - 1):
                fail = ("shifted staircase", n, m)
        if fail:
            break
    catalan = [toric.multiplicity(staircase(n)) for n in range(2, 7)]
    ok = fail is None and catalan == [1, 2, 5, 14, 42]
    assert record(8, ok, f"families 2 <= n, m <= 8 ok={fail is None}, staircase e = {catalan}",
                  time.perf_counter() - t0)


def test_c09_regularity():
    t0 = time.perf_counter()
    fail = None
    count = 0
    for p in partitions_up_to(14):
        if p.n < 2 or p.part(2) < 2:
            continue
        count += 1
        if toric.toric_regularity(p) != len(toric.h_vector_recursive(p)) - 1:
            fail = p
            break
    q = Partition((3, 3, 3, 3, 3))
    reg, piece, deg = toric.toric_regularity(q), toric.regularity_piecewise(q), len(toric.h_vector(q)) - 1
    ok = fail is None and reg == deg == 2
    assert record(9, ok, f"{count} partitions, first failure {fail}; (3,3,3,3,3): min-expression {reg}, "
                         f"deg p {deg}, piecewise form {piece} (known discrepancy)",
                  time.perf_counter() - t0)


def test_c10_gorenstein():
    t0 = time.perf_counter()
    fail = None
    gorenstein = 0
    for p in partitions_up_to(14):
        if not toric.is_gorenstein(p):
            continue
        gorenstein += 1
        h = toric.h_vector(p)
        mu = toric.gorenstein_witness(p)
        if h != h[::-1]:
            fail = ("not palindromic", p)
        elif not ideal.is_unmixed(mu) or toric.h_vector(mu) != h:
            fail = ("witness", p, mu)
        if fail:
            break
    assert record(10, fail is None, f"{gorenstein} Gorenstein cases |lambda| <= 14, first failure {fail}",
                  time.perf_counter() - t0)


def test_c11_lattice_paths():
    t0 = time.perf_counter()
    fail = None
    count = 0
    for p in partitions_up_to(10):
        count += 1
        counts = Counter(path.turns for path in oracle.lattice_paths(p))
        dense = [counts.get(k, 0) for k in range(max(counts) + 1)]
        if tuple(dense) != toric.h_vector(p) or dense != oracle.lattice_path_counts(p):
            fail = (p, dense, toric.h_vector(p))
            break
    assert record(11, fail is None, f"{count} partitions |lambda| <= 10, first failure {fail}",
                  time.perf_counter() - t0)


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q"]))
