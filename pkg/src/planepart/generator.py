"""Exhaustive generation of plane partitions.

A plane partition is built row by row: the first row is any linear
partition of some m <= n, and every later row is a linear partition that is
componentwise <= the row above it.  Any nonempty row can always be followed
by enough rows of ``1`` to finish, so the search never hits a dead end.

Candidate rows are tried in lexicographically decreasing order, which fixes
the order of :func:`generate_all` (the partition ``[[n]]`` comes first and the
single column of ones comes last).
"""
from __future__ import annotations

import functools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Sequence, TextIO, Tuple

from .errors import ResourceLimitError

GENERATOR_CEILING = 30

Row = Tuple[int, ...]


@dataclass(frozen=True)
class PlanePartition:
    """Row-major plane partition with zeros suppressed.

    Construction does not check the ordering conditions; use :func:`validate`.
    """

    rows: Tuple[Row, ...]

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "PlanePartition":
        return cls(tuple(tuple(r) for r in rows))

    @property
    def weight(self) -> int:
        return sum(sum(r) for r in self.rows)

    @property
    def parts(self) -> int:
        return sum(len(r) for r in self.rows)

    def __str__(self):
        return format_block(self)


def validate(p) -> bool:
    """True iff ``p`` (a PlanePartition or nested sequence) is a valid plane partition."""
    rows = p.rows if isinstance(p, PlanePartition) else p
    try:
        rows = [list(r) for r in rows]
    except TypeError:
        return False
    prev = None
    for row in rows:
        if not row:
            return False
        for j, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, int) or v < 1:
                return False
            if j and v > row[j - 1]:
                return False
        if prev is not None:
            if len(row) > len(prev):
                return False
            if any(v > u for v, u in zip(row, prev)):
                return False
        prev = row
    return True


def _check_ceiling(n, ceiling):
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")
    ceiling = GENERATOR_CEILING if ceiling is None else ceiling
    if n > ceiling:
        raise ResourceLimitError(n, ceiling)


def candidate_rows(bound: Sequence[int], budget: int) -> Iterator[Row]:
    """Nonincreasing rows r with r[j] <= bound[j] and 1 <= sum(r) <= budget.

    Yields in lexicographically decreasing order.
    """
    width = len(bound)
    prefix: List[int] = []

    def extend(j, cap, left):
        if j == width:
            return
        for v in range(min(cap, bound[j], left), 0, -1):
            prefix.append(v)
            # longer rows sharing this prefix compare greater, so they go first
            yield from extend(j + 1, v, left - v)
            yield tuple(prefix)
            prefix.pop()

    yield from extend(0, budget, budget)


def _first_bound(n):
    return (n,) * n


def generate_all(n: int, *, ceiling=None) -> Iterator[PlanePartition]:
    """Yield every plane partition of ``n`` exactly once, in a fixed order."""
    _check_ceiling(n, ceiling)
    rows: List[Row] = []

    def walk(bound, left):
        if left == 0:
            yield PlanePartition(tuple(rows))
            return
        for r in candidate_rows(bound, left):
            rows.append(r)
            yield from walk(r, left - sum(r))
            rows.pop()

    return walk(_first_bound(n), n)


def _normalize(bound, left):
    return tuple(min(b, left) for b in bound[:left])


def _completion_counter():
    @functools.lru_cache(maxsize=None)
    def completions(bound: Row, left: int) -> Tuple[int, ...]:
        # hist[k]: ways to place `left` more units below a row `bound` using k parts
        hist = [0] * (left + 1)
        if left == 0:
            hist[0] = 1
            return tuple(hist)
        for r in candidate_rows(bound, left):
            rest = left - sum(r)
            sub = completions(_normalize(r, rest), rest)
            shift = len(r)
            for k, c in enumerate(sub):
                if c:
                    hist[k + shift] += c
        return tuple(hist)

    return completions


def _hist_for_first_rows(n: int, first_rows: Sequence[Row]) -> List[int]:
    completions = _completion_counter()
    hist = [0] * (n + 1)
    for r in first_rows:
        rest = n - sum(r)
        sub = completions(_normalize(r, rest), rest)
        for k, c in enumerate(sub):
            hist[k + len(r)] += c
    return hist


def count_by_parts(n: int, *, ceiling=None, jobs: int = 1) -> Dict[int, int]:
    """Histogram ``{k: number of plane partitions of n with exactly k parts}``.

    Runs the same row-by-row search as :func:`generate_all` but memoizes the
    completion counts below each row, so nothing is materialized.  With
    ``jobs > 1`` the first-row choices are split across worker processes;
    the merged histogram does not depend on the split.
    """
    _check_ceiling(n, ceiling)
    if n == 0:
        return {0: 1}
    first = list(candidate_rows(_first_bound(n), n))
    if jobs <= 1:
        hist = _hist_for_first_rows(n, first)
    else:
        # big first rows have tiny subtrees; interleave for balance
        chunks = [first[i::jobs] for i in range(jobs)]
        hist = [0] * (n + 1)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_hist_for_first_rows, [n] * jobs, chunks):
                for k, c in enumerate(part):
                    hist[k] += c
    return {k: c for k, c in enumerate(hist) if c}


def tally_parts(partitions: Iterable[PlanePartition]) -> Dict[int, int]:
    """Histogram of part counts over an explicit stream of partitions."""
    hist: Dict[int, int] = {}
    for p in partitions:
        hist[p.parts] = hist.get(p.parts, 0) + 1
    return dict(sorted(hist.items()))


def format_block(p: PlanePartition) -> str:
    return "\n".join(" ".join(str(v) for v in row) for row in p.rows)


def write_blocks(partitions: Iterable[PlanePartition], out: TextIO) -> int:
    """Write partitions as blank-line separated blocks; return how many."""
    count = 0
    for p in partitions:
        if count:
            out.write("\n")
        out.write(format_block(p))
        out.write("\n")
        count += 1
    return count


def parse_blocks(text: str) -> List[PlanePartition]:
    """Inverse of :func:`write_blocks` for nonempty partitions."""
    blocks = [b for b in text.strip("\n").split("\n\n") if b.strip()]
    return [
        PlanePartition.from_rows(
            [int(v) for v in line.split()] for line in block.splitlines()
        )
        for block in blocks
    ]
