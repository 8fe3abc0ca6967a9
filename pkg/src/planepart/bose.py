"""Canonical partition function of N bosonic oscillators in one or two dimensions.

Units: hbar*omega = 1, so the Boltzmann factor x = exp(-beta) is the only
temperature variable.
"""
from __future__ import annotations

import math
from decimal import Context, Decimal
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .errors import ConvergenceError, ZnOverflowError

Z_INF_MAX_TERMS = 10**6


@dataclass(frozen=True)
class OscillatorPoint:
    """Evaluation point: Boltzmann factor ``x`` in (0, 1) and dimension 1 or 2."""

    x: float
    dim: int = 1

    def __post_init__(self):
        if not 0.0 < self.x < 1.0:
            raise ValueError(f"x must satisfy 0 < x < 1, got {self.x!r}")
        if self.dim not in (1, 2):
            raise ValueError(f"dim must be 1 or 2, got {self.dim!r}")

    @property
    def beta(self) -> float:
        return -math.log(self.x)

    @classmethod
    def from_beta(cls, beta: float, dim: int = 1) -> "OscillatorPoint":
        return cls(math.exp(-beta), dim)


@dataclass(frozen=True)
class ZSequence:
    """Z_0(x) .. Z_nmax(x) with the matching logarithms."""

    point: OscillatorPoint
    values: np.ndarray = field(repr=False)
    log_values: np.ndarray = field(repr=False)

    def __post_init__(self):
        for arr in (self.values, self.log_values):
            arr.setflags(write=False)

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n):
        return self.values[n]


def b_k(point: OscillatorPoint, k: int) -> float:
    """(1 - x^k)^(-D), with the k = 0 term defined as zero."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return 0.0
    return (-math.expm1(k * math.log(point.x))) ** (-point.dim)


def zn_recurrence(point: OscillatorPoint, n_max: int) -> ZSequence:
    """Z_N = (1/N) sum_{k=1..N} B_k Z_{N-k}, Z_0 = 1, for N up to ``n_max``.

    Each sum is formed with ``math.fsum`` so rounding does not accumulate.
    Raises :class:`ZnOverflowError` naming the first N that overflows.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    b = [b_k(point, k) for k in range(n_max + 1)]
    z = [1.0]
    for n in range(1, n_max + 1):
        s = math.fsum(b[k] * z[n - k] for k in range(1, n + 1)) / n
        if not math.isfinite(s):
            raise ZnOverflowError(n)
        z.append(s)
    # Z_N >= Z_{N-1} exactly; once Z saturates, rounding can break it by an ulp
    values = np.maximum.accumulate(np.array(z))
    return ZSequence(point, values, np.log(values))


def zn_1d_closed(point: OscillatorPoint, n: int) -> float:
    """prod_{k=1..n} 1/(1 - x^k); one dimension only."""
    if point.dim != 1:
        raise ValueError("the closed form exists only for dim=1")
    if n < 0:
        raise ValueError("n must be nonnegative")
    lx = math.log(point.x)
    return 1.0 / math.prod(-math.expm1(k * lx) for k in range(1, n + 1))


def _level_weight(dim, k):
    # degeneracy of oscillator level k: 1 in 1D, k + 1 in 2D
    return 1 if dim == 1 else k + 1


def _log_product(x, weight, tol, max_terms):
    """-sum_k weight(k) ln(1 - x^k), stopped on a geometric tail estimate."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    lx = math.log(x)
    terms = []
    partial = 0.0
    prev = None
    for k in range(1, max_terms + 1):
        t = -weight(k) * math.log(-math.expm1(k * lx))
        terms.append(t)
        partial += t
        if t == 0.0:
            break
        if prev is not None and t < prev:
            ratio = t / prev
            if t * ratio / (1.0 - ratio) < tol * partial:
                break
        prev = t
    else:
        raise ConvergenceError(
            f"product at x={x} did not reach tol={tol} within {max_terms} terms"
        )
    return math.fsum(terms)


def log_z_inf(point: OscillatorPoint, tol: float = 1e-15, max_terms: int = Z_INF_MAX_TERMS) -> float:
    """ln Z_inf, the N -> infinity limit of :func:`zn_recurrence`.

    Z_inf = prod_k (1 - x^k)^(-g_k) over excited levels, with degeneracy
    g_k = 1 in 1D and k + 1 in 2D.  Summation stops once the geometric
    estimate of the remaining tail drops below ``tol`` times the partial sum.
    """
    return _log_product(point.x, lambda k: _level_weight(point.dim, k), tol, max_terms)


def log_macmahon(x: float, tol: float = 1e-15, max_terms: int = Z_INF_MAX_TERMS) -> float:
    """ln prod_k (1 - x^k)^(-k), the generating function of plane partitions.

    This is the 2D partition function with k-fold (not k+1) degeneracy of
    level k; its saddle point counts plane partitions.
    """
    return _log_product(x, lambda k: k, tol, max_terms)


z_inf = log_z_inf


def _log_zn_decimal(point, n, ctx):
    x = Decimal(point.x)
    one = Decimal(1)
    b = [Decimal(0)] + [
        ctx.power(ctx.divide(one, ctx.subtract(one, ctx.power(x, k))), point.dim)
        for k in range(1, n + 1)
    ]
    z = [one]
    for m in range(1, n + 1):
        total = Decimal(0)
        for k in range(1, m + 1):
            total = ctx.add(total, ctx.multiply(b[k], z[m - k]))
        z.append(ctx.divide(total, m))
    return ctx.ln(z[n])


def _log_z_inf_decimal(point, tol, ctx, max_terms=Z_INF_MAX_TERMS):
    x = Decimal(point.x)
    one = Decimal(1)
    tol = Decimal(tol)
    partial = Decimal(0)
    prev = None
    for k in range(1, max_terms + 1):
        w = _level_weight(point.dim, k)
        t = ctx.multiply(-w, ctx.ln(ctx.subtract(one, ctx.power(x, k))))
        partial = ctx.add(partial, t)
        if t.is_zero():
            return partial
        if prev is not None and t < prev:
            ratio = t / prev
            if t * ratio / (one - ratio) < tol * partial:
                return partial
        prev = t
    raise ConvergenceError(
        f"ln Z_inf at x={point.x} did not reach tol={tol} within {max_terms} terms"
    )


def log_y_n_numeric(point: OscillatorPoint, n: int, tol: float = 1e-15, digits=None) -> float:
    """ln(Z_N / Z_inf) from the recurrence.

    In double precision the difference of logarithms limits the absolute
    accuracy to about 1e-16.  Pass ``digits`` to run the recurrence and the
    series in decimal arithmetic with that many significant digits; pick
    ``tol`` well below the accuracy you need.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if digits is None:
        seq = zn_recurrence(point, n)
        log_zn = float(seq.log_values[n])
        diff = log_zn - log_z_inf(point, tol)
    else:
        ctx = Context(prec=digits)
        log_zn = _log_zn_decimal(point, n, ctx)
        diff = float(ctx.subtract(log_zn, _log_z_inf_decimal(point, tol, ctx)))
    # Z_N <= Z_inf exactly; absorb only a rounding-level excess
    if 0.0 < diff <= 1e-13 * max(1.0, abs(float(log_zn))):
        diff = 0.0
    return diff


def y_n_numeric(point: OscillatorPoint, n: int, tol: float = 1e-15, digits=None) -> float:
    """Correction factor Z_N / Z_inf from the recurrence, formed in log space."""
    return math.exp(log_y_n_numeric(point, n, tol, digits))


def y_n_sequence(point: OscillatorPoint, n_max: int, tol: float = 1e-15) -> np.ndarray:
    """y_N for N = 0..n_max sharing one recurrence run."""
    seq = zn_recurrence(point, n_max)
    diff = seq.log_values - log_z_inf(point, tol)
    slack = 1e-13 * np.maximum(1.0, np.abs(seq.log_values))
    diff = np.where((diff > 0) & (diff <= slack), 0.0, diff)
    return np.exp(diff)


Flavor1D = Literal["leading", "exponential-small-x", "exponential-near-1"]
Flavor2D = Literal["full", "leading"]


def y1d_closed(x: float, n: int, flavor: Flavor1D = "leading") -> float:
    """Approximations to the one-dimensional correction factor.

    ``leading``: 1 - x^(N+1); ``exponential-small-x``: exp(-x^(N+1));
    ``exponential-near-1``: exp(-x^N / (1 - x)).
    """
    if flavor == "leading":
        return 1.0 - x ** (n + 1)
    if flavor == "exponential-small-x":
        return math.exp(-(x ** (n + 1)))
    if flavor == "exponential-near-1":
        return math.exp(-(x**n) / (1.0 - x))
    raise ValueError(f"unknown flavor {flavor!r}")


def y2d_closed(x: float, n: int, flavor: Flavor2D = "full") -> float:
    """Approximations to the two-dimensional correction factor.

    ``full``: (N+1) x^(N+2) - (N+2) x^(N+1) + 1, which is 0 at x = 1;
    ``leading``: 1 - N x^N.
    """
    if flavor == "full":
        return (n + 1) * x ** (n + 2) - (n + 2) * x ** (n + 1) + 1.0
    if flavor == "leading":
        return 1.0 - n * x**n
    raise ValueError(f"unknown flavor {flavor!r}")
