"""Exact truncated power series: Euler products and factor-count statistics.

Everything here is integer or rational arithmetic; the only floating point
lives in :func:`empirical_tail_slopes`, which fits clearly-labeled
empirical decay exponents to already-computed exact tails.

The family distributions are computed as Euler products over blocks.  For
the linear and unitary families the product-one constraint on a member's
blocks is enforced exactly by grading the series over the cyclic group
Z_g (g = q-1 resp. q+1) carrying each block's product value, and reading
off the identity component at the end.  This is the same computation as
averaging the block generating function over the g multiplicative
characters of Z_g -- Fourier inversion on a finite cyclic group -- but it
stays in integer arithmetic and, unlike the per-character shortcut with
exponents (block count)/ord(chi), it remains correct when the block
products are not equidistributed, which really happens for small q.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Callable, Sequence

from .errors import InvariantError
from .ffpoly.families import irreducible_poly_count, norm_fiber_counts

ExponentSource = Callable[[int], int] | Sequence[int]


def _exponent_at(exponents: ExponentSource, n: int) -> int:
    if callable(exponents):
        e = exponents(n)
    else:
        e = exponents[n - 1]
    if e < 0:
        raise ValueError(f"negative exponent e_{n} = {e}")
    return int(e)


@dataclass(frozen=True)
class IntSeries:
    """Power series truncated at degree ``trunc`` with exact coefficients."""

    trunc: int
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.trunc + 1:
            raise ValueError("coefficient vector does not match truncation degree")

    def __getitem__(self, n: int):
        return self.coeffs[n]


@dataclass(frozen=True)
class BiSeries:
    """Bivariate series sum c[n][m] x**n y**m, m <= n, truncated in x."""

    trunc: int
    rows: tuple  # rows[n] is a tuple of length n+1

    def __post_init__(self):
        if len(self.rows) != self.trunc + 1:
            raise ValueError("row count does not match truncation degree")
        for n, row in enumerate(self.rows):
            if len(row) != n + 1:
                raise ValueError(f"row {n} must have {n + 1} entries")
        if self.rows[0][0] != 1:
            raise ValueError("c[0][0] must be 1")

    def row(self, n: int) -> tuple:
        return self.rows[n]

    def collapse_y(self) -> IntSeries:
        """Set y = 1, recovering the univariate Euler product."""
        return IntSeries(self.trunc, tuple(sum(row) for row in self.rows))


def euler_product(exponents: ExponentSource, trunc: int) -> IntSeries:
    """Coefficients of prod_n (1 - x**n)**(-e_n) up to degree ``trunc``."""
    coeffs = [0] * (trunc + 1)
    coeffs[0] = 1
    for n in range(1, trunc + 1):
        e = _exponent_at(exponents, n)
        if e == 0:
            continue
        weights = [math.comb(k + e - 1, k) for k in range(trunc // n + 1)]
        for i in range(trunc, n - 1, -1):
            acc = coeffs[i]
            for k in range(1, i // n + 1):
                src = coeffs[i - n * k]
                if src:
                    acc += weights[k] * src
            coeffs[i] = acc
    return IntSeries(trunc, tuple(coeffs))


def bivariate_euler_product(exponents: ExponentSource, trunc: int) -> BiSeries:
    """Coefficients of prod_n (1 - x**n y)**(-e_n), graded by block count."""
    rows = [[0] * (n + 1) for n in range(trunc + 1)]
    rows[0][0] = 1
    for n in range(1, trunc + 1):
        e = _exponent_at(exponents, n)
        if e == 0:
            continue
        weights = [math.comb(k + e - 1, k) for k in range(trunc // n + 1)]
        for i in range(trunc, n - 1, -1):
            tgt = rows[i]
            for k in range(1, i // n + 1):
                w = weights[k]
                for m2, v in enumerate(rows[i - n * k]):
                    if v:
                        tgt[m2 + k] += w * v
    return BiSeries(trunc, tuple(tuple(r) for r in rows))


def _graded_family_product(
    fibers_at: Callable[[int], tuple[int, ...]],
    g: int,
    trunc: int,
    y_weight: Callable[[int], int],
) -> BiSeries:
    """Euler product over blocks graded by product value in Z_g; z**0 slice.

    ``fibers_at(n)`` gives the Z_g-indexed counts of degree-n blocks;
    ``y_weight(n)`` the power of y a degree-n block contributes.
    """
    # rows[i][m] is a Z_g vector (list of g ints)
    rows = [[[0] * g for _ in range(n + 1)] for n in range(trunc + 1)]
    rows[0][0][0] = 1
    for n in range(1, trunc + 1):
        fibers = fibers_at(n)
        w_y = y_weight(n)
        for c, f in enumerate(fibers):
            if f == 0:
                continue
            weights = [math.comb(k + f - 1, k) for k in range(trunc // n + 1)]
            for i in range(trunc, n - 1, -1):
                tgt = rows[i]
                for k in range(1, i // n + 1):
                    if k * w_y > i:
                        break
                    w = weights[k]
                    shift = (c * k) % g
                    for m2, vec in enumerate(rows[i - n * k]):
                        if m2 + k * w_y > i:
                            break
                        t = tgt[m2 + k * w_y]
                        for idx, v in enumerate(vec):
                            if v:
                                t[(idx + shift) % g] += w * v
    out = [tuple(vec[0] for vec in rows[n]) for n in range(trunc + 1)]
    return BiSeries(trunc, tuple(out))


def family_factor_distribution(
    kind: str, q: int, trunc: int, convention: str | None = None
) -> BiSeries:
    """Row n counts family members of degree n (half-degree for selfdual)
    with exactly m blocks or factors.

    Conventions: ``linear`` counts irreducible factors (its blocks);
    ``unitary`` defaults to factors over F_{q**2} (a block of even size
    contributes two), with ``convention="blocks"`` available; ``selfdual``
    counts root-multiset blocks, which undercount polynomial factors.
    """
    if kind == "selfdual":
        if convention not in (None, "blocks"):
            raise ValueError("selfdual distribution is computed in block convention")
        series = bivariate_euler_product(
            lambda n: irreducible_poly_count(n, q), trunc
        )
        _validate_family_rows(series, [q**n for n in range(1, trunc + 1)])
        return series
    if kind == "linear":
        if convention not in (None, "factors", "blocks"):
            raise ValueError(f"unknown convention {convention!r}")
        series = _graded_family_product(
            lambda n: norm_fiber_counts("linear", n, q), q - 1, trunc, lambda n: 1
        )
        _validate_family_rows(series, [q ** (n - 1) for n in range(1, trunc + 1)])
        return series
    if kind == "unitary":
        if convention is None:
            convention = "factors"
        if convention == "factors":
            weight = lambda n: 2 if n % 2 == 0 else 1
        elif convention == "blocks":
            weight = lambda n: 1
        else:
            raise ValueError(f"unknown convention {convention!r}")
        series = _graded_family_product(
            lambda n: norm_fiber_counts("unitary", n, q), q + 1, trunc, weight
        )
        _validate_family_rows(series, [q ** (n - 1) for n in range(1, trunc + 1)])
        return series
    raise ValueError(f"unknown family kind {kind!r}")


def _validate_family_rows(series: BiSeries, expected_totals: list[int]):
    for n in range(1, series.trunc + 1):
        row = series.rows[n]
        if any(v < 0 for v in row) or sum(row) != expected_totals[n - 1]:
            raise InvariantError(
                "twist integrality violated: "
                f"row {n} sums to {sum(row)}, expected {expected_totals[n - 1]}"
            )


# -- tails ---------------------------------------------------------------


@dataclass(frozen=True)
class TailTable:
    """Exact tail fractions tail(n, m) = (sum_{j>m} c_nj) / (sum_j c_nj)."""

    kind: str
    q: int
    n_max: int
    m_max: int
    tails: tuple          # tails[n-1][m] for 0 <= m <= min(m_max, n)
    thresholds: dict      # (n, k) -> least m with tail(n, m) < n**-k
    powers: tuple = dc_field(default=())

    def tail(self, n: int, m: int) -> Fraction:
        return self.tails[n - 1][m]

    def rows(self):
        """Yield (kind, q, n, m, numerator, denominator) rows."""
        for n in range(1, self.n_max + 1):
            for m, t in enumerate(self.tails[n - 1]):
                yield (self.kind, self.q, n, m, t.numerator, t.denominator)


def tail_table(
    kind: str,
    q: int,
    n_max: int,
    m_max: int,
    powers: Sequence[int] = (1, 2),
    convention: str | None = None,
    series: BiSeries | None = None,
) -> TailTable:
    if series is None:
        series = family_factor_distribution(kind, q, n_max, convention=convention)
    tails = []
    thresholds = {}
    for n in range(1, n_max + 1):
        row = series.rows[n]
        total = sum(row)
        suffix = []
        acc = 0
        for m in range(n, -1, -1):  # acc = sum_{j > m} after each step
            suffix.append(acc)
            acc += row[m]
        suffix.reverse()
        row_tails = []
        for m in range(min(m_max, n) + 1):
            t = Fraction(suffix[m], total)
            if row_tails and t > row_tails[-1]:
                raise InvariantError("tail fractions must be nonincreasing in m")
            row_tails.append(t)
        tails.append(tuple(row_tails))
        for k in powers:
            bound = Fraction(1, n**k)
            least = None
            for m in range(n + 1):
                if Fraction(suffix[m], total) < bound:
                    least = m
                    break
            thresholds[(n, k)] = least
    return TailTable(kind, q, n_max, m_max, tuple(tails), thresholds, tuple(powers))


def empirical_tail_slopes(table: TailTable) -> dict[int, tuple[float, float]]:
    """Least-squares fit of log tail(n, m) ~ alpha + beta*m, per n.

    Purely descriptive ("empirical"): these floats are reported, never
    asserted against, and are the only floating point in this module.
    """
    out = {}
    for n in range(1, table.n_max + 1):
        pts = [
            (m, math.log(float(t)))
            for m, t in enumerate(table.tails[n - 1])
            if t > 0
        ]
        if len(pts) < 2:
            continue
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        mx = sum(xs) / len(xs)
        my = sum(ys) / len(ys)
        sxx = sum((x - mx) ** 2 for x in xs)
        if sxx == 0:
            continue
        beta = sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sxx
        out[n] = (my - beta * mx, beta)
    return out
