"""Ferrers ideals: generators, prime decompositions and classification."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .combinatorics import Partition, corners


@dataclass(frozen=True)
class EdgeIdeal:
    partition: Partition
    generators: tuple  # (i, j) stands for x_i * y_j, row-major order

    def __str__(self):
        return "(" + ", ".join(f"x{i}y{j}" for i, j in self.generators) + ")"


@dataclass(frozen=True, order=True)
class PrimeComponent:
    """The prime (x_1, ..., x_a, y_1, ..., y_b)."""

    a: int
    b: int

    @property
    def height(self) -> int:
        return self.a + self.b

    def contains(self, other: "PrimeComponent") -> bool:
        return self.a >= other.a and self.b >= other.b

    def contains_monomial(self, xexp: Sequence[int], yexp: Sequence[int]) -> bool:
        return any(xexp[:self.a]) or any(yexp[:self.b])

    def to_json(self) -> dict:
        return {"x_prefix": self.a, "y_prefix": self.b}

    def __str__(self):
        gens = [f"x{i}" for i in range(1, self.a + 1)] + [f"y{j}" for j in range(1, self.b + 1)]
        return "(" + ", ".join(gens) + ")"


@dataclass(frozen=True)
class IdealInvariants:
    height: int
    projective_dimension: int
    regularity: int
    unmixed: bool
    cohen_macaulay: bool
    cm_type: int | None = None

    def to_json(self) -> dict:
        return dict(self.__dict__)


def edge_ideal(p: Partition) -> EdgeIdeal:
    return EdgeIdeal(p, tuple((i, j) for i in range(1, p.n + 1) for j in range(1, p.part(i) + 1)))


def irredundant_decomposition(p: Partition) -> list[PrimeComponent]:
    js = corners(p).indices
    comps = [PrimeComponent(js[i - 1], p.part(js[i])) for i in range(1, len(js))]
    comps.append(PrimeComponent(js[-1], 0))
    return comps


def redundant_decomposition(p: Partition) -> list[PrimeComponent]:
    comps = [PrimeComponent(i - 1, p.part(i)) for i in range(1, p.s + 1)]
    comps.append(PrimeComponent(p.s, 1))
    comps.append(PrimeComponent(p.n, 0))
    return comps


def prune(components: Sequence[PrimeComponent]) -> list[PrimeComponent]:
    """Drop every component containing another one (keeps first of duplicates)."""
    kept = []
    for idx, c in enumerate(components):
        redundant = any(
            c.contains(d) and (c != d or jdx < idx)
            for jdx, d in enumerate(components) if jdx != idx)
        if not redundant:
            kept.append(c)
    return kept


def _hooks(p: Partition) -> list[int]:
    return [p.part(j) + j - 1 for j in range(1, p.n + 1)]


def height(p: Partition) -> int:
    return min(min(_hooks(p)), p.n)


def projective_dimension(p: Partition) -> int:
    return max(_hooks(p))


def is_unmixed(p: Partition) -> bool:
    if p.n != p.m:
        return False
    return all(a + b == p.m for a, b in corners(p).inner)


def is_cohen_macaulay(p: Partition) -> bool:
    return p.n == p.m and p.is_staircase()


def invariants(p: Partition) -> IdealInvariants:
    cm = is_cohen_macaulay(p)
    return IdealInvariants(
        height=height(p),
        projective_dimension=projective_dimension(p),
        regularity=2,
        unmixed=is_unmixed(p),
        cohen_macaulay=cm,
        cm_type=p.n if cm else None,
    )


def membership(p: Partition, xexp: Sequence[int], yexp: Sequence[int]) -> bool:
    """Whether x^xexp y^yexp lies in the Ferrers ideal."""
    if len(xexp) != p.n or len(yexp) != p.m:
        raise ValueError(f"exponent vectors must have lengths {p.n} and {p.m}")
    return any(xexp[i - 1] > 0 and yexp[j - 1] > 0
               for i in range(1, p.n + 1) for j in range(1, p.part(i) + 1))


def power_regularity(p: Partition, k: int) -> int:
    """Regularity of the k-th power of the ideal (powers have linear resolutions)."""
    if k < 1:
        raise ValueError(f"power must be positive, got {k}")
    return 2 * k
