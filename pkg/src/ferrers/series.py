"""Betti numbers and Hilbert series of R/I for a Ferrers ideal I.

Polynomials in t are tuples of Python ints, constant term first.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .combinatorics import Partition, binomial


# --- polynomial helpers -----------------------------------------------------

def trim(a: Sequence[int]) -> tuple:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def padd(a, b) -> tuple:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return trim(out)


def psub(a, b) -> tuple:
    return padd(a, [-c for c in b])


def pmul(a, b) -> tuple:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def one_minus_t(e: int) -> tuple:
    """(1 - t)^e for e >= 0."""
    return tuple((-1) ** k * binomial(e, k) for k in range(e + 1))


def peval(a, x):
    return sum(c * x ** k for k, c in enumerate(a))


def divide_one_minus_t(a) -> tuple:
    """Exact quotient a / (1 - t); raises if (1 - t) does not divide a."""
    a = trim(a)
    if not a:
        return ()
    q = []
    acc = 0
    # a = (1 - t) q  =>  q_k = a_0 + ... + a_k
    for c in a[:-1]:
        acc += c
        q.append(acc)
    if acc + a[-1] != 0:
        raise ArithmeticError("polynomial is not divisible by 1 - t")
    return trim(q)


# --- data types -------------------------------------------------------------

@dataclass(frozen=True)
class BettiTable:
    beta: tuple  # beta_0 .. beta_pd

    @property
    def pd(self) -> int:
        return len(self.beta) - 1

    def __getitem__(self, i):
        return self.beta[i] if 0 <= i < len(self.beta) else 0

    def graded(self) -> dict:
        """Nonzero graded Betti numbers keyed by (i, internal degree)."""
        out = {(0, 0): self.beta[0]}
        out.update({(i, i + 1): b for i, b in enumerate(self.beta) if i >= 1})
        return out

    def to_json(self) -> dict:
        return {"betti": [str(b) for b in self.beta], "pd": self.pd}


@dataclass(frozen=True)
class HilbertSeries:
    """numerator / (1 - t)^denom_power, kept in lowest terms."""

    numerator: tuple
    denom_power: int

    @classmethod
    def reduced(cls, numerator, denom_power: int) -> "HilbertSeries":
        num = trim(numerator)
        e = denom_power
        while num and e > 0 and peval(num, 1) == 0:
            num = divide_one_minus_t(num)
            e -= 1
        return cls(num, e if num else 0)

    def coefficient(self, d: int) -> int:
        return hilbert_function(self, d)

    def to_json(self) -> dict:
        return {"numerator": [str(c) for c in self.numerator], "denom_power": self.denom_power}

    def __str__(self):
        terms = []
        for k, c in enumerate(self.numerator):
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            coef = str(c) if (abs(c) != 1 or k == 0) else ("-" if c < 0 else "")
            terms.append(f"{coef}{mono}")
        num = " + ".join(terms).replace("+ -", "- ") or "0"
        return f"({num})/(1-t)^{self.denom_power}"


# --- operations -------------------------------------------------------------

def betti_numbers(p: Partition) -> BettiTable:
    pd = max(p.part(j) + j - 1 for j in range(1, p.n + 1))
    beta = [1]
    for i in range(1, pd + 1):
        beta.append(sum(binomial(p.part(j) + j - 1, i) for j in range(1, p.n + 1))
                    - binomial(p.n, i + 1))
    return BettiTable(tuple(beta))


def hilbert_series(p: Partition) -> HilbertSeries:
    """1/(1-t)^m + t/(1-t)^(m+n+1) * sum_j (1-t)^(lambda_j + j), in lowest terms."""
    n, m = p.n, p.m
    total = one_minus_t(n + 1)
    tail = ()
    for j in range(1, n + 1):
        tail = padd(tail, one_minus_t(p.part(j) + j))
    total = padd(total, pmul((0, 1), tail))
    return HilbertSeries.reduced(total, m + n + 1)


def hilbert_function(h: HilbertSeries, d: int) -> int:
    if d < 0:
        return 0
    e = h.denom_power
    if e == 0:
        return h.numerator[d] if d < len(h.numerator) else 0
    return sum(c * binomial(d - i + e - 1, e - 1)
               for i, c in enumerate(h.numerator) if i <= d)


def k_polynomial_mismatch(p: Partition):
    """First (degree, from_series, from_betti) where the two K-polynomials differ, or None."""
    h = hilbert_series(p)
    lhs = pmul(h.numerator, one_minus_t(p.m + p.n - h.denom_power))
    beta = betti_numbers(p)
    rhs = [0] * (beta.pd + 2)
    rhs[0] = 1
    for i in range(1, beta.pd + 1):
        rhs[i + 1] += (-1) ** i * beta[i]
    rhs = trim(rhs)
    for k in range(max(len(lhs), len(rhs))):
        a = lhs[k] if k < len(lhs) else 0
        b = rhs[k] if k < len(rhs) else 0
        if a != b:
            return (k, a, b)
    return None


def k_polynomial_check(p: Partition) -> bool:
    """(1-t)^(m+n) P(t) == 1 + sum_i (-1)^i beta_i t^(i+1) as exact polynomials."""
    return k_polynomial_mismatch(p) is None
