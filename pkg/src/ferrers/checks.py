"""Cross-module invariant sweeps driven by ``ferrers verify``.

Every sweep yields ``Violation`` records; an empty sweep means the invariant held
on every case within the bounds.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from . import graph, ideal, oracle, resolution, series, toric
from .combinatorics import Partition, binomial, dual, partitions_up_to, rectangle, staircase


@dataclass(frozen=True)
class Violation:
    check: str
    case: str
    detail: str

    def __str__(self):
        return f"[{self.check}] {self.case}: {self.detail}"


@dataclass(frozen=True)
class Bounds:
    max_weight: int = 8
    resolution_weight: int = 8
    acyclic_weight: int = 6
    max_degree: int = 4
    toric_side: int = 4
    toric_degree: int = 3
    random_graphs: int = 500
    random_side: int = 7
    exhaustive_side: int = 3
    seed: int = 0


QUICK = Bounds()
FULL = Bounds(max_weight=14, resolution_weight=10, acyclic_weight=8, max_degree=6,
              toric_side=4, toric_degree=4, random_graphs=10_000, random_side=7,
              exhaustive_side=4)


def combinatorics_sweep(b: Bounds):
    for p in partitions_up_to(b.max_weight):
        if dual(dual(p)) != p:
            yield Violation("dual involution", str(p), str(dual(dual(p))))
        if p.m >= 2 and dual(p).parts[1] != p.s:
            yield Violation("s = dual_2", str(p), f"s={p.s}")


def betti_sweep(b: Bounds):
    for p in partitions_up_to(b.max_weight):
        beta = series.betti_numbers(p)
        mism = series.k_polynomial_mismatch(p)
        if mism is not None:
            yield Violation("K-polynomial", str(p), f"degree {mism[0]}: {mism[1]} != {mism[2]}")
        if beta[1] != p.weight:
            yield Violation("beta_1 = |lambda|", str(p), str(beta[1]))
        if sum((-1) ** i * x for i, x in enumerate(beta.beta)):
            yield Violation("alternating sum", str(p), str(beta.beta))


def decomposition_sweep(b: Bounds):
    for p in partitions_up_to(b.max_weight):
        comps = ideal.irredundant_decomposition(p)
        if ideal.prune(ideal.redundant_decomposition(p)) != comps:
            yield Violation("pruned decomposition", str(p), str(comps))
        if ideal.height(p) != min(c.height for c in comps):
            yield Violation("height", str(p), str(ideal.height(p)))
        if ideal.is_unmixed(p) != (len({c.height for c in comps}) == 1):
            yield Violation("unmixed", str(p), str(comps))
        if p.n + p.m > 8:
            continue
        deg = min(b.max_degree, 3)
        for xs in product(range(deg + 1), repeat=p.n):
            rest = deg - sum(xs)
            if rest < 0:
                continue
            for ys in product(range(rest + 1), repeat=p.m):
                if sum(ys) > rest:
                    continue
                lhs = ideal.membership(p, xs, ys)
                rhs = all(c.contains_monomial(xs, ys) for c in comps)
                if lhs != rhs:
                    yield Violation("decomposition membership", str(p), f"x^{xs} y^{ys}")
                    return


def hilbert_sweep(b: Bounds):
    for p in partitions_up_to(b.max_weight):
        if p.n + p.m > 8:
            continue
        h = series.hilbert_series(p)
        for d in range(b.max_degree + 1):
            got, want = series.hilbert_function(h, d), oracle.quotient_hilbert_oracle(p, d)
            if got != want:
                yield Violation("Hilbert function", str(p), f"d={d}: {got} != {want}")


def resolution_sweep(b: Bounds):
    for p in partitions_up_to(b.resolution_weight):
        depth = 4 if p.weight <= b.acyclic_weight else 3
        rep = resolution.verify_resolution(p, depth)
        if not rep.passed:
            yield Violation("cellular resolution", str(p), rep.failure)
        cx = resolution.build_complex(p)
        if cx.dim != ideal.projective_dimension(p) - 1:
            yield Violation("dim X = pd - 1", str(p), f"{cx.dim}")


def _random_graph(rng, side):
    nx, ny = rng.randint(1, side), rng.randint(1, side)
    if rng.random() < 0.5:
        parts = sorted((rng.randint(1, ny) for _ in range(nx)), reverse=True)
        parts[0] = ny
        g = graph.ferrers_graph(Partition(tuple(parts)))
        rows = list(range(1, nx + 1))
        cols = list(range(1, ny + 1))
        rng.shuffle(rows)
        rng.shuffle(cols)
        return graph.relabel(g, rows, cols)
    density = rng.random()
    edges = {(i, j) for i in range(1, nx + 1) for j in range(1, ny + 1) if rng.random() < density}
    return graph.strip_isolated(graph.BipartiteGraph(nx, ny, frozenset(edges)))


def _check_graph(g):
    rec = graph.recognize_ferrers(g)
    h = graph.complement(g)
    chord = graph.is_chordal(h)
    if rec.ferrers != chord.chordal:
        return "recognition disagrees with complement chordality"
    if rec.ferrers:
        if not graph.is_ferrers_labeled(graph.relabel(g, rec.row_permutation, rec.col_permutation)):
            return "relabeling is not a Ferrers labeling"
        if not graph.valid_elimination_order(h, chord.order):
            return "invalid perfect elimination ordering"
    else:
        if not graph.valid_obstruction(g, rec.obstruction):
            return f"invalid obstruction {rec.obstruction}"
        if not graph.valid_chordless_cycle(h, chord.cycle):
            return f"invalid chordless cycle {chord.cycle}"
    return None


def recognition_sweep(b: Bounds):
    side = b.exhaustive_side
    for nx in range(1, side + 1):
        for ny in range(1, side + 1):
            for mask in range(1 << (nx * ny)):
                edges = frozenset((k // ny + 1, k % ny + 1) for k in range(nx * ny) if mask >> k & 1)
                g = graph.BipartiteGraph(nx, ny, edges)
                if g.isolated():
                    continue
                problem = _check_graph(g)
                if problem:
                    yield Violation("Ferrers recognition", graph.format_edge_list(g), problem)
                    return
    rng = random.Random(b.seed)
    for _ in range(b.random_graphs):
        g = _random_graph(rng, b.random_side)
        if g.nx == 0:
            continue
        problem = _check_graph(g)
        if problem:
            yield Violation("Ferrers recognition (random)", graph.format_edge_list(g), problem)
            return


def toric_sweep(b: Bounds):
    for p in partitions_up_to(b.max_weight):
        h = toric.h_vector_recursive(p)
        if toric.h_vector_closed(p) != h:
            yield Violation("closed = recursive h-vector", str(p), f"{toric.h_vector_closed(p)} != {h}")
        if h[0] != 1 or min(h) < 0:
            yield Violation("h-vector sign", str(p), str(h))
        if p.n >= 2 and p.part(2) >= 2 and toric.toric_regularity(p) != len(h) - 1:
            yield Violation("regularity = deg p", str(p), str(toric.toric_regularity(p)))
        if p.n >= 2 and toric.multiplicity_closed(p) != sum(h):
            yield Violation("multiplicity nested sum", str(p), str(toric.multiplicity_closed(p)))
        if toric.is_gorenstein(p):
            if h != h[::-1]:
                yield Violation("Gorenstein palindrome", str(p), str(h))
            mu = toric.gorenstein_witness(p)
            if not ideal.is_unmixed(mu) or toric.h_vector(mu) != h:
                yield Violation("Gorenstein witness", str(p), str(mu))
        if p.weight <= 10:
            paths = oracle.lattice_path_counts(p)
            if tuple(paths) != h:
                yield Violation("lattice paths = h", str(p), f"{paths} != {h}")
    for p in partitions_up_to(b.toric_side ** 2):
        if p.n > b.toric_side or p.m > b.toric_side:
            continue
        for d in range(b.toric_degree + 1):
            got, want = toric.toric_hilbert_function(p, d), oracle.toric_hilbert_oracle(p, d)
            if got != want:
                yield Violation("toric Hilbert function", str(p), f"d={d}: {got} != {want}")


def examples_sweep(b: Bounds):
    for n in range(2, 9):
        for m in range(2, 9):
            p = rectangle(n, m)
            want = tuple(binomial(m - 1, k) * binomial(n - 1, k) for k in range(n))
            if toric.h_vector(p) != series.trim(want):
                yield Violation("complete bipartite h", str(p), str(toric.h_vector(p)))
            if toric.multiplicity(p) != binomial(n + m - 2, m - 1):
                yield Violation("complete bipartite e", str(p), str(toric.multiplicity(p)))
            if n <= m:
                q = Partition(tuple(m + 1 - k for k in range(1, n + 1)))
                want = tuple(binomial(n - 1, k) * binomial(m - 2, k)
                             - binomial(n - 1, k + 1) * binomial(m - 2, k - 1) for k in range(n))
                if toric.h_vector(q) != series.trim(want):
                    yield Violation("shifted staircase h", str(q), str(toric.h_vector(q)))
                if toric.multiplicity(q) * m != (m - n + 1) * binomial(m + n - 2, m - 1):
                    yield Violation("shifted staircase e", str(q), str(toric.multiplicity(q)))
    for n in range(2, 9):
        e = toric.multiplicity(staircase(n))
        if e * n != binomial(2 * (n - 1), n - 1):
            yield Violation("Catalan multiplicity", str(staircase(n)), str(e))


SWEEPS = {
    "combinatorics": combinatorics_sweep,
    "betti": betti_sweep,
    "decomposition": decomposition_sweep,
    "hilbert": hilbert_sweep,
    "resolution": resolution_sweep,
    "recognition": recognition_sweep,
    "toric": toric_sweep,
    "examples": examples_sweep,
}


def run_all(b: Bounds):
    """Yield (sweep name, first violation or None)."""
    for name, sweep in SWEEPS.items():
        yield name, next(iter(sweep(b)), None)
