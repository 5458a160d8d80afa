"""Integer partitions and the counting helpers built on them.

A partition is a plain tuple of non-increasing ints.  Ordinary partitions
have strictly positive parts; a few operations (padded shapes with a fixed
number of parts) deal in explicit zero parts, and such tuples compare
unequal to their stripped forms: (2,) != (2, 0).

Enumeration order everywhere is reverse-lexicographic on the part
sequences, so enumerate_partitions(4) yields (4,), (3,1), (2,2), (2,1,1),
(1,1,1,1).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .errors import InvalidPartitionError

Partition = tuple[int, ...]


def as_partition(parts: Sequence[int], allow_zero_parts: bool = False) -> Partition:
    """Coerce a sequence to a validated partition tuple."""
    t = tuple(int(p) for p in parts)
    floor = 0 if allow_zero_parts else 1
    prev = None
    for p in t:
        if p < floor:
            raise InvalidPartitionError(f"part {p} below minimum {floor}")
        if prev is not None and p > prev:
            raise InvalidPartitionError(f"parts not non-increasing: {list(t)}")
        prev = p
    return t


def _reject_zero_parts(parts: Sequence[int], op: str) -> None:
    if parts and parts[-1] <= 0:
        raise InvalidPartitionError(f"{op} is undefined for zero parts: {list(parts)}")


def conjugate(parts: Sequence[int]) -> Partition:
    """Transpose of the Young diagram: column lengths become parts."""
    _reject_zero_parts(parts, "conjugate")
    if not parts:
        return ()
    out = []
    for i in range(1, parts[0] + 1):
        count = 0
        for p in parts:
            if p >= i:
                count += 1
            else:
                break
        out.append(count)
    return tuple(out)


def diversity(parts: Sequence[int]) -> int:
    """Number of distinct values among the parts."""
    return len(set(parts))


def perimeter(parts: Sequence[int]) -> int:
    """Largest part plus number of parts minus one; 0 for the empty partition."""
    _reject_zero_parts(parts, "perimeter")
    if not parts:
        return 0
    return parts[0] + len(parts) - 1


def rim_cells(parts: Sequence[int]) -> list[tuple[int, int]]:
    """Cells (row, col), 1-based, with no cell diagonally below and right.

    Walks the south-east boundary from the top-right cell to the bottom-left
    cell; the number of rim cells equals perimeter(parts).
    """
    _reject_zero_parts(parts, "rim_cells")
    cells: list[tuple[int, int]] = []
    n = len(parts)
    for i in range(1, n + 1):
        below = parts[i] if i < n else 0
        for j in range(parts[i - 1], max(below, 1) - 1, -1):
            cells.append((i, j))
    return cells


def _bounded_partitions(total: int, max_parts: int, max_part: int) -> Iterator[Partition]:
    # Fixed sum, at most max_parts parts, each <= max_part, reverse-lex order.
    if total == 0:
        yield ()
        return
    if max_parts <= 0 or max_part <= 0:
        return
    lo = -(-total // max_parts)  # ceil: smaller first parts cannot reach the total
    for first in range(min(total, max_part), lo - 1, -1):
        for rest in _bounded_partitions(total - first, max_parts - 1, first):
            yield (first,) + rest


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """All partitions of n, reverse-lexicographic."""
    if n < 0:
        raise InvalidPartitionError(f"cannot partition {n}")
    return _bounded_partitions(n, n, n)


def enumerate_restricted(
    n: int,
    residue: int,
    modulus: int,
    min_part: int = 1,
    exact_num_parts: Optional[int] = None,
    allow_zero_parts: bool = False,
) -> Iterator[Partition]:
    """Partitions of n with every part congruent to residue (mod modulus)
    and at least min_part.

    With exact_num_parts the output has exactly that many parts; combined
    with allow_zero_parts (which needs min_part == 0) the padding zeros are
    explicit parts.  Inconsistent constraints yield nothing.  Zero parts
    without a fixed part count would make the output infinite, so that
    combination raises.
    """
    if modulus < 1:
        raise InvalidPartitionError(f"modulus must be positive, got {modulus}")
    if n < 0:
        return
    if allow_zero_parts:
        if min_part != 0:
            raise InvalidPartitionError("allow_zero_parts requires min_part == 0")
        if exact_num_parts is None:
            raise ValueError("allow_zero_parts without exact_num_parts is unbounded")
    r = residue % modulus
    # Smallest usable part value in the residue class.
    if allow_zero_parts and r == 0:
        base = 0
    else:
        lo = max(min_part, 1)
        base = lo + ((r - lo) % modulus)
    if exact_num_parts is not None:
        k = exact_num_parts
        if k < 0:
            return
        rem = n - base * k
        if rem < 0 or rem % modulus:
            return
        for t in _bounded_partitions(rem // modulus, k, rem // modulus):
            padded = t + (0,) * (k - len(t))
            yield tuple(base + modulus * ti for ti in padded)
        return
    yield from _progression_partitions(n, base, modulus, n)


def _progression_partitions(n: int, base: int, step: int, max_part: int) -> Iterator[Partition]:
    # Parts drawn from {base, base+step, ...}, reverse-lex order.
    if n == 0:
        yield ()
        return
    if base > max_part or base > n or base <= 0:
        return
    top = base + ((min(n, max_part) - base) // step) * step
    for v in range(top, base - 1, -step):
        for rest in _progression_partitions(n - v, base, step, v):
            yield (v,) + rest


_p_cache = [1]
_p_lock = threading.Lock()


def partition_count(n: int) -> int:
    """p(n) by the pentagonal-number recurrence (exact, memoized)."""
    if n < 0:
        raise InvalidPartitionError(f"p({n}) undefined")
    if n < len(_p_cache):
        return _p_cache[n]
    with _p_lock:
        while len(_p_cache) <= n:
            k = len(_p_cache)
            total = 0
            j = 1
            while True:
                g = j * (3 * j - 1) // 2
                if g > k:
                    break
                sign = 1 if j % 2 else -1
                total += sign * _p_cache[k - g]
                g2 = j * (3 * j + 1) // 2
                if g2 <= k:
                    total += sign * _p_cache[k - g2]
                j += 1
            _p_cache.append(total)
    return _p_cache[n]


def _divisors(n: int) -> list[int]:
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return out


def divisor_count(n: int) -> int:
    """d(n), the number of positive divisors."""
    if n < 1:
        raise ValueError(f"d({n}) undefined")
    return len(_divisors(n))


def divisor_count_in_class(n: int, residue: int, modulus: int) -> int:
    """Number of divisors of n congruent to residue (mod modulus)."""
    if n < 1:
        raise ValueError(f"divisor count of {n} undefined")
    if modulus < 1:
        raise ValueError(f"modulus must be positive, got {modulus}")
    r = residue % modulus
    return sum(1 for d in _divisors(n) if d % modulus == r)


@dataclass(frozen=True)
class PartitionStatistics:
    """Aggregates over all partitions of one n."""

    total_parts: int
    sum_largest_parts: int
    sum_perimeters: int
    parts_of_size_one: int
    diversity_sum: int
    spt: int


@lru_cache(maxsize=None)
def partition_statistics(n: int) -> PartitionStatistics:
    """One enumeration pass over the partitions of n.

    spt sums, over every partition, the multiplicity of its smallest part.
    All fields are 0 at n = 0 (the empty partition has perimeter 0).
    """
    total_parts = 0
    sum_largest = 0
    sum_perims = 0
    ones = 0
    div_sum = 0
    spt = 0
    for lam in enumerate_partitions(n):
        if not lam:
            continue
        total_parts += len(lam)
        sum_largest += lam[0]
        sum_perims += lam[0] + len(lam) - 1
        div_sum += diversity(lam)
        smallest = lam[-1]
        mult = 0
        for p in reversed(lam):
            if p != smallest:
                break
            mult += 1
        spt += mult
        if smallest == 1:
            ones += mult
    return PartitionStatistics(total_parts, sum_largest, sum_perims, ones, div_sum, spt)


def format_partition(parts: Sequence[int]) -> str:
    """Canonical text form, e.g. [9,5,5,5,5,1,1,1]; zero parts are explicit."""
    return "[" + ",".join(str(p) for p in parts) + "]"


def parse_partition(text: str, allow_zero_parts: bool = False) -> Partition:
    """Inverse of format_partition."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise InvalidPartitionError(f"expected [..,..] form, got {text!r}")
    body = s[1:-1].strip()
    if not body:
        return ()
    try:
        parts = [int(x) for x in body.split(",")]
    except ValueError as exc:
        raise InvalidPartitionError(f"bad partition text {text!r}") from exc
    return as_partition(parts, allow_zero_parts=allow_zero_parts)
