"""Closed-form approximations of the truncated zeta partial sum.

Three estimates of ``S(n, alpha)`` are provided, each O(1) in ``n``:

* integral: ``((n+1)**(1-a) - 1) / (1-a)``, always below the sum;
* average integral: mean of the integral estimate and the one built from
  above, ``1 + (n**(1-a) - 1) / (1-a)``;
* trapezoidal: keeps the first ``k-1`` terms exactly and replaces the rest by
  the trapezoidal rule applied to ``x**-a`` on ``[k, n]``.

All of them are singular at ``alpha == 1``. Inside ``|alpha - 1| <= alpha_guard``
they raise :class:`AlphaNearOne` unless ``allow_alpha_one`` is set, in which
case the ``alpha -> 1`` limit (logarithms in place of the power ratios) is used.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .core import ZipfParams, exact_partial_sum, power_sum
from .errors import AlphaNearOne, InvalidK

DEFAULT_ALPHA_GUARD = 1e-8
DEFAULT_K = 2


class Kind(str, enum.Enum):
    EXACT = "exact"
    INTEGRAL = "integral"
    AVERAGE_INTEGRAL = "avg-integral"
    TRAPEZOIDAL = "trapezoidal"


@dataclass(frozen=True)
class ApproxMethod:
    """Which normalizer to use. ``k`` is only meaningful for the trapezoidal rule."""

    kind: Kind
    k: int | None = None

    def __post_init__(self):
        kind = Kind(self.kind)
        object.__setattr__(self, "kind", kind)
        if kind is Kind.TRAPEZOIDAL:
            k = self.k
            if isinstance(k, bool) or not isinstance(k, (int, np.integer)) or k < 2:
                raise InvalidK(f"trapezoidal k must be an integer >= 2, got {k!r}")
            object.__setattr__(self, "k", int(k))
        elif self.k is not None:
            raise InvalidK(f"k only applies to the trapezoidal method, not {kind.value}")

    @classmethod
    def parse(cls, name: str, k: int = DEFAULT_K) -> "ApproxMethod":
        kind = Kind(name.strip().lower())
        return cls(kind, k if kind is Kind.TRAPEZOIDAL else None)

    @property
    def name(self) -> str:
        return self.kind.value

    def __str__(self):
        if self.kind is Kind.TRAPEZOIDAL:
            return f"{self.kind.value}(k={self.k})"
        return self.kind.value


EXACT = ApproxMethod(Kind.EXACT)
INTEGRAL = ApproxMethod(Kind.INTEGRAL)
AVERAGE_INTEGRAL = ApproxMethod(Kind.AVERAGE_INTEGRAL)


def trapezoidal(k: int = DEFAULT_K) -> ApproxMethod:
    return ApproxMethod(Kind.TRAPEZOIDAL, k)


def _in_band(alpha: float, alpha_guard: float, allow_alpha_one: bool) -> bool:
    """True when the alpha -> 1 limit must be substituted."""
    if abs(alpha - 1.0) > alpha_guard:
        return False
    if not allow_alpha_one:
        raise AlphaNearOne(
            f"alpha={alpha!r} lies within {alpha_guard:g} of 1, where the closed form is singular"
        )
    return True


def _pow1m(x: int, a: float) -> float:
    """``x**(1-a)`` as ``x * x**-a``.

    Rounding ``1 - a`` first would cost about ``ln(x)`` ulps in the result.
    """
    return x * x ** -a


def _check_k(params: ZipfParams, k) -> int:
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)):
        raise InvalidK(f"k must be an integer, got {k!r}")
    if not 2 <= k <= params.n:
        raise InvalidK(f"k must satisfy 2 <= k <= n={params.n}, got {k}")
    return int(k)


def integral_sum(params: ZipfParams, *, alpha_guard: float = DEFAULT_ALPHA_GUARD,
                 allow_alpha_one: bool = False) -> float:
    """Integral of ``x**-alpha`` over ``[1, n+1]``; underestimates ``S(n, alpha)``."""
    a, n = params.alpha, params.n
    if _in_band(a, alpha_guard, allow_alpha_one):
        return math.log(n + 1)
    return (_pow1m(n + 1, a) - 1) / (1 - a)


def upper_integral_sum(params: ZipfParams, *, alpha_guard: float = DEFAULT_ALPHA_GUARD,
                       allow_alpha_one: bool = False) -> float:
    """``1 + integral of (x-1)**-alpha over [2, n+1]``; overestimates ``S(n, alpha)`` for n >= 2."""
    a, n = params.alpha, params.n
    if _in_band(a, alpha_guard, allow_alpha_one):
        return 1.0 + math.log(n)
    return 1 + (_pow1m(n, a) - 1) / (1 - a)


def average_integral_sum(params: ZipfParams, *, alpha_guard: float = DEFAULT_ALPHA_GUARD,
                         allow_alpha_one: bool = False) -> float:
    a, n = params.alpha, params.n
    if _in_band(a, alpha_guard, allow_alpha_one):
        return 0.5 * (math.log(n + 1) + 1.0 + math.log(n))
    return (_pow1m(n + 1, a) + _pow1m(n, a) - (1 + a)) / (2 * (1 - a))


def trapezoidal_sum(params: ZipfParams, k: int = DEFAULT_K, *,
                    alpha_guard: float = DEFAULT_ALPHA_GUARD,
                    allow_alpha_one: bool = False) -> float:
    """Trapezoidal-rule estimate keeping the first ``k-1`` terms exact.

    ``k == n`` reproduces the exact sum. The exact head costs O(k).
    """
    k = _check_k(params, k)
    a, n = params.alpha, params.n
    if _in_band(a, alpha_guard, allow_alpha_one):
        integral = math.log(n / k)
    else:
        integral = (_pow1m(n, a) - _pow1m(k, a)) / (1 - a)
    return integral + power_sum(k - 1, a) + (k ** -a + n ** -a) / 2


def trapezoidal_denominator(params: ZipfParams, k: int = DEFAULT_K, *,
                            alpha_guard: float = DEFAULT_ALPHA_GUARD) -> float:
    """Trapezoidal normalizer grouped by powers of ``n`` and ``k``.

    ``n**-a (1/2 + n/(1-a)) + k**-a (1/2 - k/(1-a)) + sum_{i<k} i**-a``.
    Algebraically identical to :func:`trapezoidal_sum`; no alpha -> 1 limit.
    """
    k = _check_k(params, k)
    a, n = params.alpha, params.n
    _in_band(a, alpha_guard, False)
    return n ** -a * (0.5 + n / (1 - a)) + k ** -a * (0.5 - k / (1 - a)) + power_sum(k - 1, a)


def approx_sum(params: ZipfParams, method: ApproxMethod, *,
               alpha_guard: float = DEFAULT_ALPHA_GUARD,
               allow_alpha_one: bool = False) -> float:
    kind = method.kind
    if kind is Kind.EXACT:
        return exact_partial_sum(params)
    opts = dict(alpha_guard=alpha_guard, allow_alpha_one=allow_alpha_one)
    if kind is Kind.INTEGRAL:
        return integral_sum(params, **opts)
    if kind is Kind.AVERAGE_INTEGRAL:
        return average_integral_sum(params, **opts)
    return trapezoidal_sum(params, method.k, **opts)


def approx_pmf(r: int, params: ZipfParams, method: ApproxMethod, *,
               alpha_guard: float = DEFAULT_ALPHA_GUARD,
               allow_alpha_one: bool = False) -> float:
    """``r**-alpha`` divided by the chosen normalizer."""
    r = params.check_rank(r)
    norm = approx_sum(params, method, alpha_guard=alpha_guard, allow_alpha_one=allow_alpha_one)
    return r ** -params.alpha / norm
