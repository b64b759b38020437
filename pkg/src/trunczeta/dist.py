"""The truncated Zeta distribution on ranks ``1..n``."""
from __future__ import annotations

import threading

import numpy as np

from .core import ZipfParams, compensated_cumsum, exact_partial_sum, power_sum
from .errors import InvalidParams, InvalidProbability


class TruncatedZeta:
    """``P[X = r] = r**-alpha / S(n, alpha)`` for ``r = 1..n``.

    Immutable once built. The cumulative table used by :meth:`cdf`,
    :meth:`quantile` and :meth:`sample` is built on first use (O(n) memory)
    and shared afterwards. Random state is never stored on the object.
    """

    __slots__ = ("_params", "_norm", "_cdf", "_lock")

    def __init__(self, alpha: float, n: int):
        self._params = ZipfParams(alpha, n)
        self._norm = exact_partial_sum(self._params)
        self._cdf = None
        self._lock = threading.Lock()

    @classmethod
    def from_params(cls, params: ZipfParams) -> "TruncatedZeta":
        return cls(params.alpha, params.n)

    @property
    def params(self) -> ZipfParams:
        return self._params

    @property
    def alpha(self) -> float:
        return self._params.alpha

    @property
    def n(self) -> int:
        return self._params.n

    @property
    def norm(self) -> float:
        """Cached exact normalizing constant ``S(n, alpha)``."""
        return self._norm

    def __repr__(self):
        return f"TruncatedZeta(alpha={self.alpha!r}, n={self.n!r})"

    def __eq__(self, other):
        if not isinstance(other, TruncatedZeta):
            return NotImplemented
        return self._params == other._params

    def __hash__(self):
        return hash(self._params)

    def _table(self) -> np.ndarray:
        table = self._cdf
        if table is None:
            with self._lock:
                table = self._cdf
                if table is None:
                    ranks = np.arange(1, self.n + 1, dtype=np.float64)
                    table = compensated_cumsum(np.power(ranks, -self.alpha)) / self._norm
                    # guard against overshoot/undershoot from rounding at the top
                    np.minimum(table, 1.0, out=table)
                    table[-1] = 1.0
                    table.flags.writeable = False
                    self._cdf = table
        return table

    def pmf(self, r: int) -> float:
        r = self._params.check_rank(r)
        return r ** -self.alpha / self._norm

    def pmf_array(self) -> np.ndarray:
        """All probabilities, index ``r-1`` holding ``P[X = r]``."""
        ranks = np.arange(1, self.n + 1, dtype=np.float64)
        return np.power(ranks, -self.alpha) / self._norm

    def cdf(self, r: int) -> float:
        r = self._params.check_rank(r)
        return float(self._table()[r - 1])

    def quantile(self, u: float) -> int:
        """Smallest rank ``r`` with ``cdf(r) >= u``."""
        try:
            u = float(u)
        except (TypeError, ValueError):
            raise InvalidProbability(f"probability must be a real number, got {u!r}") from None
        if not 0.0 <= u <= 1.0:
            raise InvalidProbability(f"probability must lie in [0, 1], got {u!r}")
        idx = int(np.searchsorted(self._table(), u, side="left"))
        return min(idx, self.n - 1) + 1

    def sample(self, rng: np.random.Generator, size: int | None = None):
        """Draw ranks by inverting the cumulative table.

        ``rng`` is any :class:`numpy.random.Generator`; returns an ``int`` when
        ``size`` is None, otherwise an int64 array.
        """
        table = self._table()
        if size is None:
            u = rng.random()
            return min(int(np.searchsorted(table, u, side="left")), self.n - 1) + 1
        u = rng.random(size)
        idx = np.searchsorted(table, u, side="left")
        return np.minimum(idx, self.n - 1).astype(np.int64) + 1

    def moment(self, m: int) -> float:
        """Raw moment ``E[X**m] = S(n, alpha - m) / S(n, alpha)``."""
        if isinstance(m, bool) or not isinstance(m, (int, np.integer)) or m < 1:
            raise InvalidParams(f"moment order must be a positive integer, got {m!r}")
        return power_sum(self.n, self.alpha, m) / self._norm

    def mean(self) -> float:
        return self.moment(1)

    def variance(self) -> float:
        mu = self.moment(1)
        return self.moment(2) - mu * mu
