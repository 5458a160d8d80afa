"""Exhaustive generation and counting of copartitions.

The generator is the ground truth the series engine and the closed forms
are tested against.  Output order is deterministic: blocks ascend by
(ground count, sky count), and inside a block pairs descend
reverse-lexicographically by ground, then by sky.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterator

from .copartitions import Copartition, CopartitionParams, ParamsLike, coerce_params
from .errors import NoClosedFormError
from .partitions import (
    _bounded_partitions,
    divisor_count_in_class,
    partition_count,
)


def _all_bounded(
    max_total: int, max_parts: int, max_part: int | None = None
) -> Iterator[tuple[int, ...]]:
    # Every partition with sum <= max_total and <= max_parts parts,
    # reverse-lexicographic, the empty partition last.
    if max_parts > 0:
        top = max_total if max_part is None else min(max_total, max_part)
        for first in range(top, 0, -1):
            for rest in _all_bounded(max_total - first, max_parts - 1, first):
                yield (first,) + rest
    yield ()


def enumerate_copartitions(params: ParamsLike, n: int) -> Iterator[Copartition]:
    """All copartitions of size n for the given parameters."""
    p = coerce_params(params)
    a, b, m = p.a, p.b, p.m
    if n < 0:
        return
    w = 1 if b == 0 else 0
    s_min = 1 if a == 0 else 0
    while True:
        floor_w = a * w + (m * w + b) * s_min
        if floor_w > n:
            break
        s = s_min
        while True:
            rest = n - a * w - (m * w + b) * s
            if rest < 0:
                break
            if rest % m == 0:
                total = rest // m
                if s == 0:
                    ground_iter = _bounded_partitions(total, w, total)
                else:
                    ground_iter = _all_bounded(total, w)
                for t in ground_iter:
                    ground = tuple(a + m * ti for ti in t + (0,) * (w - len(t)))
                    left = total - sum(t)
                    if s == 0:
                        yield Copartition(p, ground, ())
                        continue
                    for u in _bounded_partitions(left, s, left):
                        sky = tuple(b + m * ui for ui in u + (0,) * (s - len(u)))
                        yield Copartition(p, ground, sky)
            s += 1
        w += 1


@dataclass(frozen=True)
class RefinedCount:
    """Counts of copartitions of n split by (ground count, sky count)."""

    params: CopartitionParams
    n: int
    table: dict[tuple[int, int], int]

    @property
    def total(self) -> int:
        return sum(self.table.values())


@dataclass(frozen=True)
class CrankTally:
    """Crank residues (mod modulus) with exact counts, zero-filled."""

    modulus: int
    counts: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())


_refined_cache: dict[tuple[int, int, int], list[dict[tuple[int, int], int]]] = {}
_refined_lock = threading.Lock()


def _refined_up_to(
    key: tuple[int, int, int], max_n: int
) -> list[dict[tuple[int, int], int]]:
    """Tables [(w,s) -> count] for n = 0..max_n, grown incrementally so
    every n is enumerated exactly once per parameter triple.  Callers must
    not mutate the returned dicts."""
    with _refined_lock:
        tables = _refined_cache.setdefault(key, [])
        p = CopartitionParams(*key)
        for n in range(len(tables), max_n + 1):
            table: dict[tuple[int, int], int] = {}
            for c in enumerate_copartitions(p, n):
                ws = (len(c.ground), len(c.sky))
                table[ws] = table.get(ws, 0) + 1
            tables.append(table)
        return tables[: max_n + 1]


def _counts_up_to(key: tuple[int, int, int], max_n: int) -> list[int]:
    return [sum(t.values()) for t in _refined_up_to(key, max_n)]


def count_refined(params: ParamsLike, n: int) -> RefinedCount:
    """Refined count by enumeration."""
    p = coerce_params(params)
    table = dict(_refined_up_to(p.as_tuple(), n)[n])
    return RefinedCount(p, n, table)


def crank_tally(params: ParamsLike, n: int, modulus: int) -> CrankTally:
    """Tally crank residues over all copartitions of n."""
    if modulus < 1:
        raise ValueError(f"modulus must be positive, got {modulus}")
    counts = {r: 0 for r in range(modulus)}
    for c in enumerate_copartitions(params, n):
        counts[c.crank % modulus] += 1
    return CrankTally(modulus, counts)


def count_formula(params: ParamsLike, n: int) -> int:
    """Closed-form counts for the families that have one.

    (1,1,1): partial sums of p.  (0,b,m): a partition-divisor convolution.
    (0,0,1): twice the (0,1,1) value minus p(n).  Anything else raises.
    """
    p = coerce_params(params)
    if n < 0:
        return 0
    a, b, m = p.as_tuple()
    if (a, b, m) == (1, 1, 1):
        return sum(partition_count(k) for k in range(n + 1))
    if a == 0 and b >= 1:
        return sum(
            partition_count(k) * divisor_count_in_class(n - m * k, b, m)
            for k in range(0, (n + m - 1) // m)
        )
    if b == 0 and a >= 1:
        return count_formula((0, a, m), n)
    if (a, b, m) == (0, 0, 1):
        if n == 0:
            # the perimeter identity reads -1 here (empty partition)
            return 0
        return 2 * count_formula((0, 1, 1), n) - partition_count(n)
    raise NoClosedFormError(f"no closed form for ({a},{b},{m})")


_ENUM_THRESHOLD = 40


def count_copartitions(params: ParamsLike, n: int, method: str = "auto") -> int:
    """Count copartitions of n.

    method "enum" walks the generator, "series" reads a generating-function
    coefficient, "formula" uses count_formula, and "auto" enumerates below
    a size threshold and uses the series engine above it.
    """
    p = coerce_params(params)
    if n < 0:
        return 0
    if method == "auto":
        if n <= _ENUM_THRESHOLD or (p.a == 0 and p.b == 0):
            method = "enum"
        else:
            method = "series"
    if method == "enum":
        if n <= _ENUM_THRESHOLD:
            return _counts_up_to(p.as_tuple(), n)[n]
        return sum(1 for _ in enumerate_copartitions(p, n))
    if method == "series":
        from . import series

        return series.count_series(p, n)
    if method == "formula":
        return count_formula(p, n)
    raise ValueError(f"unknown method {method!r}")
