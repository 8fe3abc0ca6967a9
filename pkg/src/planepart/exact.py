"""Exact big-integer counts of linear and plane partitions.

All counts are Python ints, so nothing overflows or rounds.  Unrestricted
sequences are memoized per process; the memo only ever grows by appending
fully computed values under a lock, so concurrent readers see each value
exactly once.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import Optional

BigCount = int


@dataclass(frozen=True)
class RestrictionSpec:
    """The pair (n, N): partitions of ``n`` with at most ``max_parts`` parts.

    ``max_parts=None`` means unbounded.
    """

    n: int
    max_parts: Optional[int] = None

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"n must be a nonnegative integer, got {self.n!r}")
        if self.max_parts is not None and (
            not isinstance(self.max_parts, int) or self.max_parts < 1
        ):
            raise ValueError(f"max_parts must be >= 1 or None, got {self.max_parts!r}")

    @property
    def bounded(self) -> bool:
        return self.max_parts is not None and self.max_parts < self.n


def _as_spec(spec, max_parts=None) -> RestrictionSpec:
    if isinstance(spec, RestrictionSpec):
        return spec
    return RestrictionSpec(spec, max_parts)


def _check_n(n):
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")


class _Sequence:
    """Append-only memo of a sequence a(0), a(1), ... built by ``step``."""

    def __init__(self, step):
        self._step = step
        self._values = [1]
        self._lock = threading.Lock()

    def __call__(self, n):
        values = self._values
        if n < len(values):
            return values[n]
        with self._lock:
            while len(values) <= n:
                values.append(self._step(values, len(values)))
        return values[n]


def _p1d_step(values, n):
    # Euler's pentagonal-number recurrence
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * values[n - g1]
        g2 = g1 + k
        if g2 <= n:
            total += sign * values[n - g2]
        k += 1
    return total


_p1d = _Sequence(_p1d_step)


def p1d(n: int) -> BigCount:
    """Number of linear partitions of ``n`` (``p1d(0) == 1``)."""
    _check_n(n)
    return _p1d(n)


def p1d_atmost(spec, max_parts=None) -> BigCount:
    """Linear partitions of n with at most N parts.

    Accepts a :class:`RestrictionSpec` or ``(n, max_parts)``.  Uses the
    table q(m, k) = q(m, k-1) + q(m-k, k) over parts of size <= k, which
    counts the same set by conjugation.
    """
    spec = _as_spec(spec, max_parts)
    n = spec.n
    k_max = n if spec.max_parts is None else min(spec.max_parts, n)
    # row[m] holds the count using parts <= k for the current k
    row = [1] + [0] * n
    for k in range(1, k_max + 1):
        for m in range(k, n + 1):
            row[m] += row[m - k]
    return row[n]


def sigma2(k: int) -> BigCount:
    """Sum of the squares of the divisors of ``k``."""
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    total = 0
    r = math.isqrt(k)
    for d in range(1, r + 1):
        if k % d == 0:
            e = k // d
            total += d * d
            if e != d:
                total += e * e
    return total


_sigma2_memo = _Sequence(lambda values, n: sigma2(n))


def _p2d_step(values, n):
    # n p(n) = sum_j sigma2(j) p(n - j), from the log-derivative of MacMahon's product
    total = sum(_sigma2_memo(j) * values[n - j] for j in range(1, n + 1))
    q, r = divmod(total, n)
    assert r == 0
    return q


_p2d = _Sequence(_p2d_step)


def p2d(n: int) -> BigCount:
    """Number of plane partitions of ``n`` (``p2d(0) == 1``)."""
    _check_n(n)
    return _p2d(n)


def p2d_atmost(spec, max_parts=None, *, ceiling=None, jobs=1) -> BigCount:
    """Plane partitions of n with at most N nonzero entries.

    When N >= n the restriction is vacuous and the recurrence answers
    directly; otherwise the plane generator's counting pass is used, which
    raises :class:`~planepart.errors.ResourceLimitError` above ``ceiling``.
    """
    from . import generator

    spec = _as_spec(spec, max_parts)
    if not spec.bounded:
        return p2d(spec.n)
    hist = generator.count_by_parts(spec.n, ceiling=ceiling, jobs=jobs)
    return sum(c for k, c in hist.items() if k <= spec.max_parts)
