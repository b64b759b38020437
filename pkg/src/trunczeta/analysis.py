"""Relative error of the closed-form normalizers and parameter sweeps over it.

The relative error of an approximate pmf is independent of the rank, because
every approximation only changes the normalizer:

    eps = (P_approx - P) / P = S / S_approx - 1

where ``S`` is the exact partial sum. Positive ``eps`` means the normalizer
was underestimated.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .approx import (
    AVERAGE_INTEGRAL,
    DEFAULT_ALPHA_GUARD,
    INTEGRAL,
    ApproxMethod,
    Kind,
    _pow1m,
    approx_sum,
    trapezoidal,
    trapezoidal_denominator,
)
from .core import ZipfParams, exact_partial_sum
from .errors import EmptyGrid, InvalidParams

# decimals kept when generating alpha grid points, so 0.1 + 7*0.01 prints as 0.17
_ALPHA_DECIMALS = 12


@dataclass(frozen=True)
class ErrorRecord:
    n: int
    alpha: float
    method: ApproxMethod
    epsilon: float

    @property
    def k(self) -> int | None:
        return self.method.k


@dataclass(frozen=True)
class SweepGrid:
    """Alpha range (inclusive, stepped), species counts and methods to evaluate.

    Points with ``|alpha - 1| < guard_exclusion`` are skipped.
    """

    alpha_min: float = 0.1
    alpha_max: float = 2.0
    alpha_step: float = 0.01
    n_values: tuple[int, ...] = (100, 1000, 10000)
    methods: tuple[ApproxMethod, ...] = field(
        default_factory=lambda: (INTEGRAL, AVERAGE_INTEGRAL, trapezoidal(2))
    )
    guard_exclusion: float = 0.05

    def __post_init__(self):
        object.__setattr__(self, "n_values", tuple(self.n_values))
        object.__setattr__(self, "methods", tuple(self.methods))
        vals = (self.alpha_min, self.alpha_max, self.alpha_step, self.guard_exclusion)
        if not all(math.isfinite(v) for v in vals):
            raise InvalidParams("sweep bounds must be finite")
        if self.alpha_min <= 0:
            raise InvalidParams(f"alpha_min must be > 0, got {self.alpha_min}")
        if self.alpha_step <= 0:
            raise InvalidParams(f"alpha_step must be > 0, got {self.alpha_step}")
        if self.alpha_max < self.alpha_min:
            raise InvalidParams("alpha_max must be >= alpha_min")
        if self.guard_exclusion < DEFAULT_ALPHA_GUARD:
            raise InvalidParams(
                f"guard_exclusion must be >= {DEFAULT_ALPHA_GUARD:g}, got {self.guard_exclusion}"
            )
        for n in self.n_values:
            ZipfParams(self.alpha_min, n)
        if any(m.kind is Kind.EXACT for m in self.methods):
            raise InvalidParams("the exact method has no approximation error to sweep")

    def alphas(self) -> list[float]:
        """Grid alphas in increasing order, guard band removed."""
        count = math.floor((self.alpha_max - self.alpha_min) / self.alpha_step + 1e-9) + 1
        out = []
        for j in range(count):
            a = round(self.alpha_min + j * self.alpha_step, _ALPHA_DECIMALS)
            if abs(a - 1.0) < self.guard_exclusion - 1e-12:
                continue
            out.append(a)
        return out


def _error_from_sum(exact: float, params: ZipfParams, method: ApproxMethod,
                    alpha_guard: float, allow_alpha_one: bool) -> float:
    a, n = params.alpha, params.n
    if abs(a - 1.0) <= alpha_guard:
        # only reachable with the limit branch; approx_sum raises otherwise
        return exact / approx_sum(params, method, alpha_guard=alpha_guard,
                                  allow_alpha_one=allow_alpha_one) - 1
    kind = method.kind
    if kind is Kind.INTEGRAL:
        return (1 - a) * exact / (_pow1m(n + 1, a) - 1) - 1
    if kind is Kind.AVERAGE_INTEGRAL:
        return 2 * (1 - a) * exact / (_pow1m(n + 1, a) + _pow1m(n, a) - (1 + a)) - 1
    if kind is Kind.TRAPEZOIDAL:
        return exact / trapezoidal_denominator(params, method.k, alpha_guard=alpha_guard) - 1
    raise InvalidParams("relative error is undefined for the exact method")


def relative_error(params: ZipfParams, method: ApproxMethod, *,
                   alpha_guard: float = DEFAULT_ALPHA_GUARD,
                   allow_alpha_one: bool = False) -> float:
    """Signed relative error of the approximate pmf, identical for every rank."""
    if method.kind is Kind.EXACT:
        raise InvalidParams("relative error is undefined for the exact method")
    # validate method preconditions before paying for the O(n) exact sum
    approx_sum(params, method, alpha_guard=alpha_guard, allow_alpha_one=allow_alpha_one)
    return _error_from_sum(exact_partial_sum(params), params, method, alpha_guard, allow_alpha_one)


def run_sweep(grid: SweepGrid) -> list[ErrorRecord]:
    """Evaluate every (method, n, alpha) point; records come back in that order."""
    alphas = grid.alphas()
    if not alphas or not grid.n_values or not grid.methods:
        raise EmptyGrid("sweep grid has no points outside the guard band")
    exact = {}
    for n in grid.n_values:
        for a in alphas:
            exact[n, a] = exact_partial_sum(ZipfParams(a, n))
    records = []
    for method in grid.methods:
        for n in grid.n_values:
            for a in alphas:
                params = ZipfParams(a, n)
                eps = _error_from_sum(exact[n, a], params, method, DEFAULT_ALPHA_GUARD, False)
                records.append(ErrorRecord(n, a, method, eps))
    return records


def summarize(records: Sequence[ErrorRecord]) -> dict[str, dict[str, float]]:
    """Max |eps| and the alpha/n where it occurs, per method label."""
    out: dict[str, dict[str, float]] = {}
    for rec in records:
        key = str(rec.method)
        cur = out.get(key)
        if cur is None or abs(rec.epsilon) > cur["max_abs_epsilon"]:
            out[key] = {"max_abs_epsilon": abs(rec.epsilon), "alpha": rec.alpha, "n": rec.n}
    return out
