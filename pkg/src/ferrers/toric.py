"""Invariants of the toric ring K[G] generated by the edge monomials x_i y_j.

The ring is the ladder determinantal ring cut out by the 2x2 minors of the
truncated tableau (first row cut at lambda_2, first column cut at s).  Its
Hilbert series is p(t)/(1-t)^(n+m-1); the h-vector p is computed here by the
liaison recursion and by the closed nested-sum formula.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .combinatorics import Partition, binomial, corners
from .series import padd, trim


class GorensteinError(ValueError):
    pass


@dataclass(frozen=True)
class Ladder:
    shape: tuple  # (lambda_2, lambda_2, lambda_3, ..., lambda_s); empty when degenerate

    @property
    def rows(self) -> int:
        return len(self.shape)

    @property
    def degenerate(self) -> bool:
        return not self.shape


@dataclass(frozen=True)
class ToricInvariants:
    dimension: int
    toric_ideal_height: int
    multiplicity: int
    regularity: int
    a_invariant: int
    gorenstein: bool
    h_vector: tuple
    ladder: tuple

    def to_json(self) -> dict:
        return {"h_vector": [str(h) for h in self.h_vector],
                "multiplicity": str(self.multiplicity),
                "dimension": self.dimension,
                "toric_ideal_height": self.toric_ideal_height,
                "regularity": self.regularity,
                "a_invariant": self.a_invariant,
                "gorenstein": self.gorenstein,
                "ladder": list(self.ladder)}


def ladder(p: Partition) -> Ladder:
    if p.s <= 1:
        return Ladder(())
    return Ladder((p.part(2),) + p.parts[1:p.s])


def minor_generators(lad: Ladder) -> list:
    """Index pairs ((i, i'), (j, j')) of the 2x2 minors that fit in the ladder."""
    out = []
    for i, i2 in combinations(range(1, lad.rows + 1), 2):
        width = lad.shape[i2 - 1]
        for j, j2 in combinations(range(1, width + 1), 2):
            out.append(((i, i2), (j, j2)))
    return out


def toric_ideal_height(p: Partition) -> int:
    if p.s == 0:
        return 0
    return sum(p.part(i) for i in range(2, p.s + 1)) - p.s + 1


def _canonical(parts: tuple) -> tuple:
    """Drop the rows of length one below the first and cap the first row at lambda_2."""
    parts = tuple(parts)
    while len(parts) > 1 and parts[-1] == 1:
        parts = parts[:-1]
    if len(parts) <= 1:
        return ()
    return (parts[1],) + parts[1:]


@lru_cache(maxsize=None)
def _recursive(key: tuple) -> tuple:
    n = len(key)
    if n <= 1:
        return (1,)
    if n == 2:
        return trim((1, key[1] - 1))
    last = key[-1]
    shorter = key[:-1] + (last - 1,)
    shifted = tuple(v - last + 1 for v in key[:-1])
    return padd(_recursive(_canonical(shorter)), (0,) + _recursive(_canonical(shifted)))


def h_vector_recursive(p: Partition) -> tuple:
    """h-vector via p_lambda = p_{lambda''} + t p_{lambda'}, memoised on the truncated shape."""
    return _recursive(_canonical(p.parts))


def _nested_sum(lows, top) -> int:
    """sum_{j_r = lows[r]}^{top} sum_{j_{r-1} = lows[r-1]}^{j_r} ... sum_{j_1 = lows[1]}^{j_2} j_1.

    ``lows`` is indexed 1..r (lows[0] unused).
    """
    r = len(lows) - 1

    @lru_cache(maxsize=None)
    def inner(t, upper):
        lo = lows[t]
        if upper < lo:
            return 0
        if t == 1:
            return (lo + upper) * (upper - lo + 1) // 2
        return sum(inner(t - 1, j) for j in range(lo, upper + 1))

    return inner(r, top)


def h_vector_closed(p: Partition) -> tuple:
    """h-vector from the explicit nested-sum formula.

    h_1 = sum_{j >= 2} (lambda_j - 1).  For k >= 2, h_k sums over 2 <= i_1 < ... < i_k <= n
    the nested sum whose index j_t runs from lambda_{i_1} - lambda_{i_{t+1}} - t + 1 up to
    j_{t+1}, with j_k = lambda_{i_1} - k.
    """
    n = p.n
    if n == 1:
        return (1,)
    h = [1, sum(p.part(j) - 1 for j in range(2, n + 1))]
    for k in range(2, n):
        total = 0
        for idx in combinations(range(2, n + 1), k):
            top_row = p.part(idx[0])
            lows = [None] + [top_row - p.part(idx[t]) - t + 1 for t in range(1, k)]
            total += _nested_sum(lows, top_row - k)
        h.append(total)
    return trim(h)


def h_vector(p: Partition) -> tuple:
    return h_vector_recursive(p)


def multiplicity(p: Partition) -> int:
    return sum(h_vector_recursive(p))


def multiplicity_closed(p: Partition) -> int:
    """Nested-sum multiplicity; index j_t runs from lambda_2 - lambda_{t+2} + 1 to j_{t+1}, j_{n-1} = lambda_2."""
    if p.n == 1:
        return 1
    if p.n == 2:
        return p.part(2)
    lows = [None] + [p.part(2) - p.part(t + 2) + 1 for t in range(1, p.n - 1)]
    return _nested_sum(lows, p.part(2))


def toric_regularity(p: Partition) -> int:
    if p.n < 2 or p.part(2) < 2:
        return 0
    s = p.s
    return min([s - 1] + [p.part(j) + j - 3 for j in range(2, s + 1)])


def regularity_piecewise(p: Partition) -> int:
    """The case-split form: s - 1 if lambda_s >= 3, else min{j - 1 : lambda_j = 2}.

    Kept for comparison only; it disagrees with ``toric_regularity`` when some
    lambda_j + j - 3 < s - 1 although lambda_s >= 3, e.g. (3,3,3,3,3).
    """
    if p.n < 2 or p.part(2) < 2:
        return 0
    s = p.s
    if p.part(s) >= 3:
        return s - 1
    return min(j - 1 for j in range(1, s + 1) if p.part(j) == 2)


def dimension(p: Partition) -> int:
    return p.n + p.m - 1


def a_invariant(p: Partition) -> int:
    return toric_regularity(p) - dimension(p)


def is_gorenstein(p: Partition) -> bool:
    lad = ladder(p)
    if lad.degenerate:
        return True
    top = p.part(2)
    if top != p.s:
        return False
    return all(i + j == top + 1 for i, j in corners(Partition(lad.shape)).inner)


def gorenstein_witness(p: Partition) -> Partition:
    """A partition mu with unmixed Ferrers ideal whose toric ring matches up to free variables."""
    if not is_gorenstein(p):
        raise GorensteinError(f"toric ring of {p} is not Gorenstein")
    if p.n == 1:
        return Partition((1,))
    return Partition((p.part(2) + 1,) + p.parts[1:p.s] + (1,))


def toric_hilbert_function(p: Partition, d: int) -> int:
    if d < 0:
        return 0
    dim = dimension(p)
    return sum(h * binomial(d - k + dim - 1, dim - 1) for k, h in enumerate(h_vector(p)))


def toric_invariants(p: Partition) -> ToricInvariants:
    return ToricInvariants(
        dimension=dimension(p),
        toric_ideal_height=toric_ideal_height(p),
        multiplicity=multiplicity(p),
        regularity=toric_regularity(p),
        a_invariant=a_invariant(p),
        gorenstein=is_gorenstein(p),
        h_vector=h_vector(p),
        ladder=ladder(p).shape,
    )
