"""Exact truncated zeta partial sums.

Everything else in the package is checked against :func:`exact_partial_sum`,
so it trades speed for accuracy: terms are generated smallest first and
accumulated with :func:`math.fsum`, which returns the correctly rounded sum.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParams, RankOutOfRange

# Euler-Mascheroni constant, 16 significant digits (OEIS A001620).
EULER_GAMMA = 0.5772156649015329

MAX_N = 2**31 - 1

_CHUNK = 1 << 20


@dataclass(frozen=True)
class ZipfParams:
    """Zipf exponent ``alpha`` and number of species ``n``.

    ``alpha = 0`` is accepted as the degenerate uniform case.
    """

    alpha: float
    n: int

    def __post_init__(self):
        alpha, n = self.alpha, self.n
        if isinstance(alpha, bool) or not isinstance(alpha, (int, float, np.floating, np.integer)):
            raise InvalidParams(f"alpha must be a real number, got {alpha!r}")
        if not math.isfinite(alpha):
            raise InvalidParams(f"alpha must be finite, got {alpha!r}")
        if alpha < 0:
            raise InvalidParams(f"alpha must be >= 0, got {alpha!r}")
        if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
            raise InvalidParams(f"n must be an integer, got {n!r}")
        if not 1 <= n <= MAX_N:
            raise InvalidParams(f"n must be in [1, {MAX_N}], got {n}")
        object.__setattr__(self, "alpha", float(alpha))
        object.__setattr__(self, "n", int(n))

    def check_rank(self, r) -> int:
        if isinstance(r, bool) or not isinstance(r, (int, np.integer)):
            raise RankOutOfRange(f"rank must be an integer, got {r!r}")
        if not 1 <= r <= self.n:
            raise RankOutOfRange(f"rank {r} outside [1, {self.n}]")
        return int(r)


def _descending_terms(n: int, s: float, m: int):
    """Yield chunks of ``i**m * i**-s`` for ``i = n, n-1, ..., 1`` as Python lists."""
    hi = n
    while hi >= 1:
        lo = max(1, hi - _CHUNK + 1)
        i = np.arange(hi, lo - 1, -1, dtype=np.float64)
        terms = np.power(i, -s)
        if m:
            terms *= np.power(i, m)
        yield terms.tolist()
        hi = lo - 1


def power_sum(n: int, s: float, m: int = 0) -> float:
    """Return ``sum(i**m * i**-s for i in 1..n)`` for any real ``s`` (no validation).

    The integer weight ``m`` is applied separately so that ``s - m`` never
    has to be rounded. O(n) time, O(min(n, 2**20)) memory.
    """
    if n <= 0:
        return 0.0
    if s == 0.0 and m == 0:
        return float(n)
    return math.fsum(itertools.chain.from_iterable(_descending_terms(n, s, m)))


def exact_partial_sum(params: ZipfParams) -> float:
    """Truncated Riemann zeta ``S(n, alpha) = sum_{i=1}^{n} i**-alpha``."""
    return power_sum(params.n, params.alpha)


def harmonic_approx(n: int) -> float:
    """Closed-form harmonic number estimate ``gamma + ln(n) + 1/(2n)``."""
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
        raise InvalidParams(f"n must be a positive integer, got {n!r}")
    return EULER_GAMMA + math.log(n) + 0.5 / n


def compensated_cumsum(terms: np.ndarray) -> np.ndarray:
    """Running sums of ``terms`` with first-order rounding-error correction.

    Each naive step ``s[i] = s[i-1] + t[i]`` loses an amount recovered
    exactly by TwoSum; the losses are accumulated separately and added back.
    """
    terms = np.asarray(terms, dtype=np.float64)
    s = np.cumsum(terms)
    if s.size < 2:
        return s
    a = s[:-1]
    b = terms[1:]
    t = s[1:]
    bv = t - a
    av = t - bv
    err = (a - av) + (b - bv)
    corr = np.concatenate(([0.0], np.cumsum(err)))
    return s + corr
