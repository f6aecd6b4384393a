"""Three fast engines for the odd central characters of q(N).

chi(m, N) here always means the character value on c_{2m+1} as a
polynomial in lambda_1..lambda_N (the even central elements vanish). The
engines are deliberately independent of each other:

  * recurrence: iterate the upper-triangular matrix A with diagonal
    lambda_i(lambda_i - 1) and row tail -2 lambda_i against the vector of
    lambdas, then double the trace sum;
  * series: expand the product of the per-index factors
    (1 - z lambda_i(lambda_i + 1)) / (1 - z lambda_i(lambda_i - 1))
    to the needed order and negate the z^{m+1} coefficient;
  * closed_numeric: evaluate the residue-style sum at a rational point
    where its denominators are nonzero.

chi_polynomial is the checked entry point: it computes the series answer,
demands exact agreement with the recurrence, and spot-checks the closed
form at random admissible points. Disagreement anywhere is fatal.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import VerificationError
from .poly import MultiPoly, TruncatedSeries, geometric_series


class SingularPointError(ValueError):
    """The closed-form sum was requested at a point where it divides by zero."""


@dataclass(frozen=True)
class AMatrix:
    """Upper-triangular recurrence matrix with polynomial entries."""

    N: int
    entries: tuple[tuple[MultiPoly, ...], ...]


@dataclass(frozen=True)
class ChiResult:
    """A computed character chi(c_{2m+1}) with its provenance tag."""

    N: int
    m: int
    poly: MultiPoly
    engine: str


def _lam(i: int, N: int) -> MultiPoly:
    return MultiPoly.var(i - 1, N)


def matrix_A(N: int) -> AMatrix:
    """Diagonal lambda_i(lambda_i - 1); entries -2 lambda_i right of it; zero below."""
    if N < 1:
        raise ValueError("N must be a positive integer")
    rows = []
    for i in range(1, N + 1):
        li = _lam(i, N)
        row = []
        for j in range(1, N + 1):
            if j < i:
                row.append(MultiPoly.zero(N))
            elif j == i:
                row.append(li * li - li)
            else:
                row.append(li.scaled(-2))
        rows.append(tuple(row))
    return AMatrix(N, tuple(rows))


@lru_cache(maxsize=None)
def _recurrence_vector(m: int, N: int) -> tuple[MultiPoly, ...]:
    """The vector A^m (lambda_1..lambda_N), built by repeated mat-vec."""
    if m == 0:
        return tuple(_lam(i, N) for i in range(1, N + 1))
    prev = _recurrence_vector(m - 1, N)
    A = matrix_A(N)
    out = []
    for i in range(N):
        acc = MultiPoly.zero(N)
        for j in range(i, N):
            acc = acc + A.entries[i][j] * prev[j]
        out.append(acc)
    return tuple(out)


def chi_entry_recurrence(m: int, i: int, N: int) -> MultiPoly:
    """Character of the i-th odd diagonal entry: row i of A^m against lambda."""
    if m < 0:
        raise ValueError("m must be >= 0")
    if not 1 <= i <= N:
        raise ValueError(f"i must lie in 1..{N}")
    return _recurrence_vector(m, N)[i - 1]


def chi_cn_recurrence(m: int, N: int) -> ChiResult:
    """Character of c_{2m+1}: twice the sum of the diagonal entry characters."""
    total = MultiPoly.zero(N)
    for i in range(1, N + 1):
        total = total + chi_entry_recurrence(m, i, N)
    return ChiResult(N, m, total.scaled(2), "recurrence")


def pi_factor_series(i: int, order: int, N: int) -> TruncatedSeries:
    """(1 - z lambda_i(lambda_i+1)) / (1 - z lambda_i(lambda_i-1)), truncated."""
    if not 1 <= i <= N:
        raise ValueError(f"i must lie in 1..{N}")
    li = _lam(i, N)
    numerator = TruncatedSeries.from_dict(
        {0: MultiPoly.one(N), 1: -(li * li + li)}, order, N)
    return numerator * geometric_series(li * li - li, order)


def chi_series(max_m: int, N: int) -> list[ChiResult]:
    """All characters chi(c_1)..chi(c_{2 max_m + 1}) from one product expansion.

    The generating function is (1/z)(1 - P(z)) where P is the product of
    the per-index factors, so chi(c_{2m+1}) is minus the z^{m+1}
    coefficient of P. P(0) = 1 is asserted, not assumed.
    """
    if max_m < 0:
        raise ValueError("max_m must be >= 0")
    if N < 1:
        raise ValueError("N must be a positive integer")
    order = max_m + 1
    P = TruncatedSeries.one(order, N)
    for i in range(1, N + 1):
        P = P * pi_factor_series(i, order, N)
    if P.coeffs[0] != MultiPoly.one(N):
        raise VerificationError(
            f"constant term of the product series is {P.coeffs[0].render()}, not 1")
    return [ChiResult(N, m, -P.coeffs[m + 1], "series") for m in range(max_m + 1)]


def chi_closed_numeric(m: int, lam: Sequence) -> Fraction:
    """Closed-form value 2 sum_i lambda_i^{m+1}(lambda_i-1)^m prod_{j != i} ...

    Exact rational evaluation; requires the values lambda_i(lambda_i - 1)
    to be pairwise distinct, otherwise a denominator vanishes.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    vals = [Fraction(x) for x in lam]
    if not vals:
        raise ValueError("lambda must have at least one entry")
    down = [x * (x - 1) for x in vals]
    up = [x * (x + 1) for x in vals]
    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            if down[i] == down[j]:
                raise SingularPointError(
                    f"coincident lambda_i(lambda_i-1) values at positions "
                    f"{i + 1} and {j + 1} (both equal {down[i]})")
    total = Fraction(0)
    for i, x in enumerate(vals):
        term = 2 * x ** (m + 1) * (x - 1) ** m
        for j in range(len(vals)):
            if j != i:
                term *= Fraction(down[i] - up[j], down[i] - down[j])
        total += term
    return total


def random_admissible_point(rng: random.Random, N: int, max_tries: int = 1000) -> list[Fraction]:
    """Draw a rational point where the closed form's denominators are nonzero."""
    for _ in range(max_tries):
        pt = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(N)]
        down = [x * (x - 1) for x in pt]
        if len(set(down)) == N:
            return pt
    raise RuntimeError("could not draw an admissible point")


@lru_cache(maxsize=None)
def chi_polynomial(m: int, N: int) -> ChiResult:
    """The checked character polynomial: series result, cross-verified.

    Exact equality with the recurrence engine is mandatory; the closed
    numeric form is sampled at a few seeded random admissible points.
    """
    series = chi_series(m, N)[m]
    recur = chi_cn_recurrence(m, N)
    if series.poly != recur.poly:
        raise VerificationError(
            f"series and recurrence engines disagree at m={m}, N={N}:\n"
            f"  series:     {series.poly.render()}\n"
            f"  recurrence: {recur.poly.render()}")
    rng = random.Random(f"chi-spot:{m}:{N}")
    for _ in range(3):
        pt = random_admissible_point(rng, N)
        closed = chi_closed_numeric(m, pt)
        direct = series.poly.eval(pt)
        if closed != direct:
            raise VerificationError(
                f"closed form disagrees with the polynomial at m={m}, N={N}, "
                f"point {pt}: {closed} vs {direct}")
    return series
