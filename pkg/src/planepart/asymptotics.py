"""Asymptotic estimates for linear and plane partition counts.

Covers the steepest-descent microstate count, the stationary points for
1D and 2D oscillators, the Erdos-Lehner estimate for linear partitions
with at most N parts, Wright's formula for unrestricted plane partitions
and the restriction factor for plane partitions with at most N parts.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Callable, List, Literal, Optional, Tuple

from scipy.optimize import brentq

from . import exact
from .errors import SaddleError

ZETA3 = 1.2020569031595942854
ZETA_PRIME_MINUS1 = -0.16542114370045092921
C_PR = Fraction(-1, 6)

TWO_ZETA3 = 2.0 * ZETA3
# lower edge of the validity window is this constant times n^(1/3); about 0.7465
WINDOW_COEFF = TWO_ZETA3 ** (-1.0 / 3.0)

Base = Literal["exact", "wright", "pr"]


@dataclass(frozen=True)
class Constants:
    zeta3: float = ZETA3
    zeta_prime_minus1: float = ZETA_PRIME_MINUS1
    c_pr: Fraction = C_PR


CONSTANTS = Constants()


class WindowWarning(UserWarning):
    """N lies outside the range where the restricted plane estimate applies."""


@dataclass(frozen=True)
class SaddleResult:
    beta0: float
    entropy: float
    curvature: float
    gamma: float


@dataclass(frozen=True)
class EstimateReport:
    """One row of the restricted plane-partition comparison table.

    ``calc1`` scales the exact p2d(n); ``calc2`` uses Wright's formula with
    c = zeta'(-1); ``calc3`` uses it with c = -1/6.  Errors are percentages
    relative to ``exact_restricted``.
    """

    n: int
    max_parts: int
    exact_restricted: Optional[int]
    p2d_exact: Optional[int]
    calc1: float
    calc2: float
    calc3: float
    rel_err1: Optional[float]
    rel_err2: Optional[float]
    rel_err3: Optional[float]
    in_window: bool

    def as_dict(self):
        return asdict(self)


def beta0_1d(n) -> float:
    """Stationary inverse temperature pi/sqrt(6n) for linear partitions."""
    return math.pi / math.sqrt(6.0 * n)


def beta0_2d(n) -> float:
    """Stationary inverse temperature (2 zeta(3)/n)^(1/3) for plane partitions."""
    return (TWO_ZETA3 / n) ** (1.0 / 3.0)


def saddle_count(
    log_z: Callable[[float], float],
    e: float,
    bracket: Tuple[float, float],
    *,
    rel_step: float = 1e-5,
) -> SaddleResult:
    """Steepest-descent estimate of the number of states at energy ``e``.

    S(beta) = beta*e + ln Z(beta); the root of a central-difference S'
    (step beta*rel_step) is found by Brent's method on ``bracket``, and
    Gamma = exp(S) / sqrt(2 pi S'') at that root.
    """

    def entropy(beta):
        return beta * e + log_z(beta)

    def slope(beta):
        h = beta * rel_step
        return (entropy(beta + h) - entropy(beta - h)) / (2.0 * h)

    lo, hi = bracket
    f_lo, f_hi = slope(lo), slope(hi)
    if f_lo * f_hi > 0:
        raise SaddleError(f"S' does not change sign on [{lo}, {hi}]")
    beta0 = brentq(slope, lo, hi, xtol=1e-14, rtol=1e-13)
    # second differences need a wider step than first ones
    h = beta0 * math.sqrt(rel_step) * 0.3
    s0 = entropy(beta0)
    curvature = (entropy(beta0 + h) - 2.0 * s0 + entropy(beta0 - h)) / (h * h)
    if not curvature > 0:
        raise SaddleError(f"non-convex entropy at beta0={beta0} (S''={curvature})")
    gamma = math.exp(s0) / math.sqrt(2.0 * math.pi * curvature)
    return SaddleResult(beta0, s0, curvature, gamma)


def erdos_lehner_factor(n, max_parts) -> float:
    """exp{-(sqrt(6n)/pi) exp(-pi N / sqrt(6n))}."""
    a = math.sqrt(6.0 * n) / math.pi
    return math.exp(-a * math.exp(-max_parts / a))


def p1d_restricted_estimate(n: int, max_parts: int) -> float:
    """Erdos-Lehner estimate of linear partitions of n into at most N parts."""
    if n < 1 or max_parts < 1:
        raise ValueError("n and max_parts must be >= 1")
    return float(exact.p1d(n)) * erdos_lehner_factor(n, max_parts)


def _c_value(c_variant) -> float:
    if c_variant == "wright":
        return ZETA_PRIME_MINUS1
    if c_variant == "pr":
        return float(C_PR)
    raise ValueError(f"unknown c variant {c_variant!r}")


def log_p2d_unrestricted_estimate(n: int, c_variant: Literal["wright", "pr"] = "wright") -> float:
    """Natural log of :func:`p2d_unrestricted_estimate`; usable where the value overflows."""
    if n < 1:
        raise ValueError("n must be >= 1")
    c = _c_value(c_variant)
    return (
        (7.0 / 36.0) * math.log(TWO_ZETA3)
        - 0.5 * math.log(6.0 * math.pi)
        - (25.0 / 36.0) * math.log(n)
        + 1.5 * TWO_ZETA3 ** (1.0 / 3.0) * n ** (2.0 / 3.0)
        + c
    )


def p2d_unrestricted_estimate(n: int, c_variant: Literal["wright", "pr"] = "wright") -> float:
    """Wright's asymptotic formula for the number of plane partitions of n.

    ``wright`` uses c = zeta'(-1); ``pr`` uses c = -1/6, which is closer for
    moderate n.  Overflows a double above n ~ 6600.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    c = _c_value(c_variant)
    prefactor = TWO_ZETA3 ** (7.0 / 36.0) / math.sqrt(6.0 * math.pi)
    return prefactor * n ** (-25.0 / 36.0) * math.exp(
        1.5 * TWO_ZETA3 ** (1.0 / 3.0) * n ** (2.0 / 3.0) + c
    )


def restriction_factor_2d(n, max_parts) -> float:
    """exp{-(N n^(1/3)/[2 zeta(3)]^(1/3)) exp(-N [2 zeta(3)/n]^(1/3))}."""
    scale = (n / TWO_ZETA3) ** (1.0 / 3.0)
    return math.exp(-max_parts * scale * math.exp(-max_parts / scale))


def validity_window(n) -> Tuple[float, int]:
    """Half-open range [[2 zeta(3)]^(-1/3) n^(1/3), n) of sensible N."""
    return WINDOW_COEFF * n ** (1.0 / 3.0), n


def in_validity_window(n, max_parts) -> bool:
    lo, hi = validity_window(n)
    return lo <= max_parts < hi


def p2d_restricted_estimate(n: int, max_parts: int, base: Base = "exact") -> float:
    """Estimated number of plane partitions of n into at most N parts.

    The unrestricted count is exact (``base="exact"``) or Wright's formula
    with either constant.  Emits :class:`WindowWarning` when N is outside
    the validity window; the value is still returned.
    """
    if n < 1 or max_parts < 1:
        raise ValueError("n and max_parts must be >= 1")
    if not in_validity_window(n, max_parts):
        lo, hi = validity_window(n)
        warnings.warn(
            f"N={max_parts} outside validity window [{lo:.3f}, {hi}) for n={n}",
            WindowWarning,
            stacklevel=2,
        )
    if base == "exact":
        unrestricted = float(exact.p2d(n))
    else:
        unrestricted = p2d_unrestricted_estimate(n, base)
    return unrestricted * restriction_factor_2d(n, max_parts)


def round_half_away(value: float, ndigits: int = 0):
    """Round half away from zero; returns int when ``ndigits == 0``."""
    scale = 10**ndigits
    r = math.floor(abs(value) * scale + 0.5) / scale
    r = math.copysign(r, value)
    return int(r) if ndigits == 0 else r


def _rel_err(calc, ref):
    if ref is None:
        return None
    return 100.0 * abs(calc - ref) / ref


TABLE1_ROWS = ((10, 9), (15, 14), (20, 19), (20, 18))


def estimate_report(n: int, max_parts: int, *, exact_restricted=True, ceiling=None) -> EstimateReport:
    """Build one comparison row; exact counts are skipped if ``exact_restricted`` is False."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", WindowWarning)
        calc1 = p2d_restricted_estimate(n, max_parts, "exact")
        calc2 = p2d_restricted_estimate(n, max_parts, "wright")
        calc3 = p2d_restricted_estimate(n, max_parts, "pr")
    ref = exact.p2d_atmost(n, max_parts, ceiling=ceiling) if exact_restricted else None
    return EstimateReport(
        n=n,
        max_parts=max_parts,
        exact_restricted=ref,
        p2d_exact=exact.p2d(n),
        calc1=calc1,
        calc2=calc2,
        calc3=calc3,
        rel_err1=_rel_err(calc1, ref),
        rel_err2=_rel_err(calc2, ref),
        rel_err3=_rel_err(calc3, ref),
        in_window=in_validity_window(n, max_parts),
    )


def table1_report() -> List[EstimateReport]:
    """The four rows (10,9), (15,14), (20,19), (20,18)."""
    return [estimate_report(n, m) for n, m in TABLE1_ROWS]
