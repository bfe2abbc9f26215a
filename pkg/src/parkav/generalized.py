"""Generalized parking functions and their congruence-class counts.

Two generalizations are handled, both determined by m >= 1:

- an m-multiparking function of size mn is f : [mn] -> [n] whose evaluation
  (value-multiplicity vector) is m times the evaluation of an ordinary
  parking function;
- an m-parking function of size n is f : [n] -> [1+m(n-1)] whose sorted
  values satisfy f(i) <= 1 + m(i-1).

Class counts under the hyposylvester / metasylvester / hypoplactic
congruences depend only on the packed evaluation beta of a function, via the
per-class factors prod(1+beta_i) (i>=2), prod(1+suffix sums) (i>=2) and
2^(|beta|-1) respectively.  Since increasing (m-)parking functions biject
with (m-)Catalan paths and packed evaluations with ascent words, the totals
are sums of path weights; closed forms or triangular recurrences are used
where they exist, and the path sums remain available as cross-checks.

Everything returns exact Python integers; the 1/n-style prefactors carry
divisibility assertions.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Iterator, Sequence

from .counting import first_run_triangle
from .parking import is_parking
from .paths import ascent_word, enumerate_paths, path_count
from .series import PowerSeries, series


@dataclass(frozen=True)
class Evaluation:
    """Value multiplicities of f : [n] -> [N] plus the packed (nonzero) view."""

    counts: tuple[int, ...]

    @property
    def packed(self) -> tuple[int, ...]:
        return tuple(c for c in self.counts if c)


def evaluation(values: Sequence[int], codomain: int) -> Evaluation:
    counts = [0] * codomain
    for v in values:
        if not 1 <= v <= codomain:
            raise ValueError(f"value {v} outside 1..{codomain}")
        counts[v - 1] += 1
    return Evaluation(tuple(counts))


def is_m_multiparking(values: Sequence[int], m: int, n: int) -> bool:
    """True iff the evaluation is m times a parking-function evaluation."""
    if len(values) != m * n:
        return False
    ev = evaluation(values, n).counts
    if any(c % m for c in ev):
        return False
    scaled = [c // m for c in ev]
    # an evaluation is a parking evaluation iff its prefix sums dominate 1..n
    prefix = 0
    for i, c in enumerate(scaled, start=1):
        prefix += c
        if prefix < i:
            return False
    return True


def is_m_parking(values: Sequence[int], m: int, n: int) -> bool:
    """True iff sorted values satisfy f(i) <= 1 + m(i-1)."""
    if len(values) != n:
        return False
    bound = 1 + m * (n - 1) if n else 0
    if any(not 1 <= v <= bound for v in values):
        return False
    return all(v <= 1 + m * i for i, v in enumerate(sorted(values)))


@dataclass(frozen=True)
class MMultiparking:
    """Validated f : [mn] -> [n] whose evaluation is m times a parking one."""

    values: tuple[int, ...]
    m: int
    n: int

    def __post_init__(self) -> None:
        if not is_m_multiparking(self.values, self.m, self.n):
            raise ValueError(f"not an {self.m}-multiparking function of size {self.m * self.n}")

    def evaluation(self) -> Evaluation:
        return evaluation(self.values, self.n)


@dataclass(frozen=True)
class MParking:
    """Validated f : [n] -> [1+m(n-1)] with sorted values below the ramp."""

    values: tuple[int, ...]
    m: int

    def __post_init__(self) -> None:
        if not is_m_parking(self.values, self.m, len(self.values)):
            raise ValueError(f"not an {self.m}-parking function: {self.values!r}")

    def evaluation(self) -> Evaluation:
        return evaluation(self.values, 1 + self.m * (len(self.values) - 1))


# -- class-count weights ------------------------------------------------------

def hyposylvester_factor(beta: Sequence[int]) -> int:
    out = 1
    for b in beta[1:]:
        out *= 1 + b
    return out


def metasylvester_factor(beta: Sequence[int]) -> int:
    out = 1
    tail = sum(beta)
    for b in beta[:-1]:
        tail -= b
        out *= 1 + tail
    return out


def hypoplactic_factor(beta: Sequence[int]) -> int:
    return 2 ** (len(beta) - 1) if beta else 1


_FACTORS = {
    "hyposylvester": hyposylvester_factor,
    "metasylvester": metasylvester_factor,
    "hypoplactic": hypoplactic_factor,
}


# -- m-multiparking class counts ----------------------------------------------

def hyposylvester_multipark(n: int, m: int) -> int:
    """(1/n) sum_k C(n,k) C(3n-k, 2n+1) (m-1)^k."""
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    total = sum(
        math.comb(n, k) * math.comb(3 * n - k, 2 * n + 1) * (m - 1) ** k
        for k in range(0, n)
    )
    q, r = divmod(total, n)
    if r:
        raise ArithmeticError(f"{total} not divisible by {n}")
    return q


def metasylvester_multipark(n: int, m: int) -> int:
    """Row sum of the (1 + m(n-k))-weighted triangular recurrence."""
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    t = first_run_triangle(n, m)
    return sum(t[n, k] for k in range(1, n + 1))


def multipark_class_count_by_paths(n: int, m: int, congruence: str) -> int:
    """Independent route: packed evaluations of m-multiparking functions are
    m times ascent words of ordinary paths, so sum the class factor of
    m*w(C) over all order-n unit paths."""
    fn = _FACTORS[congruence]
    total = 0
    for c in enumerate_paths(n, 1):
        beta = tuple(m * v for v in ascent_word(c).runs)
        total += fn(beta)
    return total


# -- m-parking class counts ----------------------------------------------------

DEFAULT_PATH_CAP = 10**7
PATH_CAP_ENV = "PARKAV_PATH_CAP"


class PathBudgetExceeded(RuntimeError):
    """The m-Catalan enumeration would exceed the configured path cap."""

    def __init__(self, needed: int, cap: int):
        super().__init__(
            f"enumeration needs {needed} paths, cap is {cap}; "
            f"raise {PATH_CAP_ENV} to proceed"
        )
        self.needed = needed
        self.cap = cap


def _path_cap() -> int:
    raw = os.environ.get(PATH_CAP_ENV, "")
    return int(raw) if raw else DEFAULT_PATH_CAP


def metasylvester_mpark(n: int, m: int, cap: int | None = None) -> int:
    """Sum of prod_{i>=2}(1 + suffix sums of w(C)) over m-Catalan paths.

    No closed form is known, so this enumerates; the Fuss-Catalan path count
    is checked against the cap first and a refusal is raised rather than
    truncating silently.
    """
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    budget = cap if cap is not None else _path_cap()
    needed = path_count(n, m)
    if needed > budget:
        raise PathBudgetExceeded(needed, budget)
    total = 0
    for c in enumerate_paths(n, m):
        total += metasylvester_factor(ascent_word(c).runs)
    return total


def hypoplactic_mpark(n: int, m: int) -> int:
    """(1/n) sum_k C(mn, k-1) C(n, k) 2^(k-1)."""
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    total = sum(
        math.comb(m * n, k - 1) * math.comb(n, k) * 2 ** (k - 1)
        for k in range(1, n + 1)
    )
    q, r = divmod(total, n)
    if r:
        raise ArithmeticError(f"{total} not divisible by {n}")
    return q


def hyposylvester_mpark(n: int, m: int) -> int:
    """C((2m+1)n, n) / (2mn + 1), the Fuss-Catalan-shaped count that matches
    the per-evaluation product sum (both routes are asserted equal in tests)."""
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    num = math.comb((2 * m + 1) * n, n)
    q, r = divmod(num, 2 * m * n + 1)
    if r:
        raise ArithmeticError(f"{num} not divisible by {2 * m * n + 1}")
    return q


def hyposylvester_mpark_by_paths(n: int, m: int) -> int:
    """Dual route: sum of prod_{i>=2}(1 + w_i) over m-Catalan paths."""
    total = 0
    for c in enumerate_paths(n, m):
        total += hyposylvester_factor(ascent_word(c).runs)
    return total


def hypoplactic_mpark_by_paths(n: int, m: int) -> int:
    """Dual route: sum of 2^(peaks-1) over m-Catalan paths."""
    total = 0
    for c in enumerate_paths(n, m):
        total += hypoplactic_factor(ascent_word(c).runs)
    return total


# -- per-evaluation oracle ------------------------------------------------------

def enumerate_increasing_mpark(n: int, m: int) -> Iterator[tuple[int, ...]]:
    """All nondecreasing m-parking functions of size n."""
    out: list[int] = []

    def rec(i: int, last: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(out)
            return
        for v in range(last, 2 + m * i):
            out.append(v)
            yield from rec(i + 1, v)
            out.pop()

    yield from rec(0, 1)


def mpark_class_count_by_evaluations(n: int, m: int, congruence: str) -> int:
    """Independent route for the m-parking tables: enumerate increasing
    m-parking functions directly (sorted tuples, not paths), take packed
    evaluations, and sum the class factor."""
    fn = _FACTORS[congruence]
    codomain = 1 + m * (n - 1)
    total = 0
    for f in enumerate_increasing_mpark(n, m):
        total += fn(evaluation(f, codomain).packed)
    return total


def multipark_class_count_by_evaluations(n: int, m: int, congruence: str) -> int:
    """Per-evaluation oracle on the multiparking side: scale each increasing
    ordinary parking evaluation by m."""
    fn = _FACTORS[congruence]
    total = 0
    for f in enumerate_increasing_mpark(n, 1):
        if not is_parking(f):
            continue
        beta = tuple(m * c for c in evaluation(f, n).packed)
        total += fn(beta)
    return total


# -- the metasylvester functional identity ---------------------------------------

def metasylvester_identity_sides(m: int, order: int) -> tuple[PowerSeries, PowerSeries]:
    """Both sides of x/(1-x) = sum_n p_n x^n (1-x)^n / prod_l (1+mlx),
    truncated at ``order`` (terms beyond n = order cannot contribute)."""
    from .series import geometric, one, reciprocal, x, zero

    lhs = x(order) * geometric(order)
    rhs = zero(order)
    denom = one(order)
    numer = one(order)
    one_minus_x = series([1, -1], order)
    xs = x(order)
    for n in range(1, order + 1):
        numer = numer * one_minus_x * xs
        denom = denom * series([1, m * n], order)
        term = numer * reciprocal(denom)
        rhs = rhs + term.scale(metasylvester_multipark(n, m))
    return lhs, rhs
