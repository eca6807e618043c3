"""Brute-force counterparts of the closed formulas.

Nothing in here calls the formula modules: every count is produced by enumerating
monomials, products of generators, lattice paths or by plain linear algebra.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement

import numpy as np
from sympy import QQ, ZZ, Matrix
from sympy.matrices.normalforms import invariant_factors
from sympy.polys.matrices import DomainMatrix

from . import _kernels
from .combinatorics import Partition, binomial
from .graph import ferrers_graph

DEFAULT_LIMIT = 2_000_000


class ResourceLimitError(RuntimeError):
    pass


class CompositionError(ValueError):
    pass


# --- Hilbert function of R/I --------------------------------------------------

def quotient_hilbert_oracle(p: Partition, d: int) -> int:
    """Number of degree-d monomials outside the Ferrers ideal.

    A monomial survives iff its support (A on x, B on y) spans no edge; the monomials
    with a given support of size k are counted by C(d-1, k-1).
    """
    if d < 0:
        return 0
    if d == 0:
        return 1
    edges = ferrers_graph(p).edges
    total = 0
    for a in range(p.n + 1):
        for A in combinations(range(1, p.n + 1), a):
            for b in range(p.m + 1):
                if a + b == 0:
                    continue
                for B in combinations(range(1, p.m + 1), b):
                    if any((i, j) in edges for i in A for j in B):
                        continue
                    total += binomial(d - 1, a + b - 1)
    return total


def standard_monomials(p: Partition, d: int, limit: int = DEFAULT_LIMIT) -> int:
    """Same count as ``quotient_hilbert_oracle`` by listing every degree-d monomial."""
    nvars = p.n + p.m
    if binomial(nvars + d - 1, d) > limit:
        raise ResourceLimitError(f"{binomial(nvars + d - 1, d)} monomials exceed limit {limit}")
    edges = ferrers_graph(p).edges
    count = 0
    for mono in combinations_with_replacement(range(nvars), d):
        xs = {v + 1 for v in mono if v < p.n}
        ys = {v - p.n + 1 for v in mono if v >= p.n}
        if not any((i, j) in edges for i in xs for j in ys):
            count += 1
    return count


# --- Hilbert function of the toric ring ----------------------------------------

def toric_hilbert_oracle(p: Partition, d: int, limit: int = DEFAULT_LIMIT) -> int:
    """Distinct monomials among all products of d edge monomials x_i y_j."""
    if d < 0:
        return 0
    boxes = sorted(ferrers_graph(p).edges)
    size = binomial(len(boxes) + d - 1, d)
    if size > limit:
        raise ResourceLimitError(f"{size} products exceed limit {limit}")
    seen = set()
    for prod in combinations_with_replacement(range(len(boxes)), d):
        rows = [0] * p.n
        cols = [0] * p.m
        for b in prod:
            i, j = boxes[b]
            rows[i - 1] += 1
            cols[j - 1] += 1
        seen.add((tuple(rows), tuple(cols)))
    return len(seen)


# --- lattice paths --------------------------------------------------------------

@dataclass(frozen=True)
class LatticePath:
    """Path through the tableau cells from (n, 1) to (1, m); steps are 'N' or 'E'."""

    steps: str

    @property
    def turns(self) -> int:
        return self.steps.count("EN")


def lattice_paths(p: Partition):
    """Yield every monotone path through the cells of the tableau.

    Cells are the boxes (i, j), j <= lambda_i.  The path starts in the south-west box
    (n, 1) and ends in the north-east box (1, m); N moves to row i-1, E to column j+1.
    """
    def walk(i, j, acc):
        if (i, j) == (1, p.m):
            yield LatticePath("".join(acc))
            return
        if i > 1:
            acc.append("N")
            yield from walk(i - 1, j, acc)
            acc.pop()
        if j < p.part(i):
            acc.append("E")
            yield from walk(i, j + 1, acc)
            acc.pop()

    yield from walk(p.n, 1, [])


def lattice_path_counts(p: Partition) -> list[int]:
    """Number of cell paths with exactly k east-north turns, for k = 0, 1, ...

    Dynamic programming over (cell, last step); polynomial in the turn count.
    """
    # state[(i, j)][last] = list of counts indexed by turns; last in {"", "N", "E"}
    state = {(p.n, 1): {"": [1]}}
    # (i+1, j) and (i, j-1) must be settled before (i, j)
    order = sorted(((i, j) for i in range(1, p.n + 1) for j in range(1, p.part(i) + 1)),
                   key=lambda c: c[1] - c[0])
    for i, j in order:
        here = state.get((i, j))
        if not here:
            continue
        for di, dj, step in ((-1, 0, "N"), (0, 1, "E")):
            ni, nj = i + di, j + dj
            if ni < 1 or nj > p.part(ni):
                continue
            dest = state.setdefault((ni, nj), {})
            for last, counts in here.items():
                shift = 1 if (last == "E" and step == "N") else 0
                cur = dest.setdefault(step, [])
                need = len(counts) + shift
                if len(cur) < need:
                    cur.extend([0] * (need - len(cur)))
                for k, c in enumerate(counts):
                    cur[k + shift] += c
    final = state.get((1, p.m), {})
    out = []
    for counts in final.values():
        if len(out) < len(counts):
            out.extend([0] * (len(counts) - len(out)))
        for k, c in enumerate(counts):
            out[k] += c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def lattice_path_count(p: Partition, k: int) -> int:
    if k < 0:
        return 0
    counts = lattice_path_counts(p)
    return counts[k] if k < len(counts) else 0


# --- homology -------------------------------------------------------------------

def _shape(mat):
    a = np.asarray(mat, dtype=object)
    if a.ndim == 1 and a.size == 0:
        return (0, 0)
    return a.shape


def _exact_rank(mat) -> int:
    rows, cols = _shape(mat)
    if rows == 0 or cols == 0:
        return 0
    dm = DomainMatrix.from_list([[int(x) for x in row] for row in mat], ZZ)
    return dm.convert_to(QQ).to_sparse().rank()


def _rank(mat, method) -> int:
    if method == "exact":
        return _exact_rank(mat)
    if method == "modular":
        return _kernels.rank_mod_p(mat)
    raise ValueError(f"unknown rank method {method!r}")


def homology_ranks(matrices, method: str = "exact", torsion: bool = False, check: bool = True):
    """Reduced Betti numbers of a chain complex given by its boundary matrices.

    ``matrices[0]`` is the augmentation (1 x c_0) and ``matrices[k]`` maps C_k to
    C_{k-1}.  Returns [b_{-1}, b_0, ..., b_d].  With ``torsion=True`` also returns the
    torsion coefficients of each integral reduced homology group, computed from the
    Smith normal form.
    """
    mats = [np.asarray(m, dtype=object).reshape(_shape(m)) for m in matrices]
    if not mats:
        return ([], []) if torsion else []
    if check:
        for k in range(len(mats) - 1):
            a, b = mats[k], mats[k + 1]
            if a.shape[1] != b.shape[0]:
                raise CompositionError(f"shape mismatch between d_{k} and d_{k + 1}")
            if a.size and b.size and np.any(a.dot(b) != 0):
                raise CompositionError(f"d_{k} o d_{k + 1} is not zero")
    dims = [mats[0].shape[0]] + [m.shape[1] for m in mats]   # c_{-1}, c_0, ..., c_d
    ranks = [_rank(m.tolist(), method) for m in mats] + [0]   # rank d_0 .. d_d, d_{d+1}
    betti = [dims[0] - ranks[0]]
    for k in range(len(mats)):
        betti.append(dims[k + 1] - ranks[k] - ranks[k + 1])
    if not torsion:
        return betti
    # torsion of reduced H_k is read off d_{k+1}; aligned with ``betti``
    tors = []
    for m in mats:
        if m.size == 0:
            tors.append([])
            continue
        facs = invariant_factors(Matrix(m.tolist()), domain=ZZ)
        tors.append([abs(int(f)) for f in facs if abs(int(f)) > 1])
    tors.append([])
    return betti, tors
