"""Executable bijections with exact inverses.

Four families: merging a congruence-restricted pair of partitions into a
leftover partition plus a copartition, the even-odd correspondence for
(1,1,2), the threshold-split map for (1,1,1), and the rim-cell map for
(0,0,1).  Every map validates domain and codomain membership and checks
size preservation; the tests run the round trips exhaustively.

Indexing follows the usual convention for partitions: parts are 1-based,
largest first.
"""

from __future__ import annotations

from collections import Counter
from typing import Sequence

from .copartitions import (
    Copartition,
    CopartitionParams,
    ParamsLike,
    coerce_params,
    enlarged_sky,
    split_enlarged_sky,
)
from .diagrams import render_ascii
from .errors import CopaError, NotEOStarError
from .partitions import Partition, as_partition, conjugate, rim_cells


def _check_family(parts: Sequence[int], base: int, m: int, label: str) -> Partition:
    """Validate membership in the family of partitions with every part
    congruent to base (mod m) and at least base."""
    lam = as_partition(parts)
    for q in lam:
        if q % m != base % m:
            raise CopaError(f"{label} part {q} is not {base % m} (mod {m})")
        if q < base:
            raise CopaError(f"{label} part {q} is below the minimum {base}")
    return lam


def pair_to_copartition(
    ground_source: Sequence[int], sky_source: Sequence[int], params: ParamsLike
) -> tuple[Partition, Copartition]:
    """Merge a pair into a partition of combined parts plus a copartition.

    ground_source has parts congruent to a and at least a; sky_source has
    parts congruent to b and at least b.  A threshold index k splits the
    sky source: parts from k on are each fused with a distinct ground part
    into the combined class (congruent to a+b), parts before k become the
    enlarged sky, and the unmatched ground parts become the ground.  Total
    size is preserved.
    """
    p = coerce_params(params)
    if p.a < 1 or p.b < 1:
        raise CopaError(f"pair merge needs a, b >= 1, got ({p.a},{p.b},{p.m})")
    pi = _check_family(ground_source, p.a, p.m, "ground source")
    lam = _check_family(sky_source, p.b, p.m, "sky source")
    np_, nl = len(pi), len(lam)
    k = nl + 1
    for cand in range(1, nl + 1):
        # the left side is strictly decreasing in the candidate index
        if (lam[cand - 1] - p.b) // p.m + nl - cand < np_:
            k = cand
            break
    merged: list[int] = []
    matched: list[int] = []
    for j in range(k, nl + 1):
        i = np_ - (nl - j) - (lam[j - 1] - p.b) // p.m
        if not 1 <= i <= np_:
            raise CopaError(f"matched index {i} out of range 1..{np_}")
        if matched and i <= matched[-1]:
            raise CopaError(f"matched indices not strictly increasing: {matched + [i]}")
        matched.append(i)
        merged.append(lam[j - 1] + pi[i - 1])
    taken = set(matched)
    ground = tuple(q for idx, q in enumerate(pi, start=1) if idx not in taken)
    sky = split_enlarged_sky(lam[: k - 1], len(ground), p)
    c = Copartition(p, ground, sky)
    out = _check_family(merged, p.a + p.b, p.m, "combined")
    if sum(pi) + sum(lam) != sum(out) + c.size:
        raise CopaError("pair merge did not preserve total size")
    return out, c


def _inverse_steps(merged: Partition, c: Copartition) -> list[tuple[int, int]]:
    """Rows (combined part, chosen offset) in processing order, smallest
    combined part first.

    For each combined part the offset is the smallest j >= 0 such that the
    part minus (m*j + b) fits at or below the j-th smallest ground part;
    j = number of ground parts is always allowed (nothing above to fit
    under), which stands in for an unbounded top comparison.  Offsets are
    chosen against the copartition's original ground throughout.
    """
    p = c.params
    gamma = c.ground
    ng = len(gamma)
    rows = []
    for val in reversed(merged):
        jk = ng
        for j in range(ng):
            if val - p.m * j - p.b <= gamma[ng - 1 - j]:
                jk = j
                break
        rows.append((val, jk))
    return rows


def copartition_to_pair(
    merged: Sequence[int], copartition: Copartition
) -> tuple[Partition, Partition]:
    """Exact inverse of pair_to_copartition.

    Each combined part splits into a ground piece and a sky piece at the
    offset from _inverse_steps; the pieces join the copartition's ground
    and enlarged sky, and the two piles are the original pair.
    """
    c = copartition
    p = c.params
    if p.a < 1 or p.b < 1:
        raise CopaError(f"pair split needs a, b >= 1, got ({p.a},{p.b},{p.m})")
    mu = _check_family(merged, p.a + p.b, p.m, "combined")
    ground_pile = list(c.ground)
    sky_pile = list(enlarged_sky(c))
    for val, jk in _inverse_steps(mu, c):
        piece = p.m * jk + p.b
        sky_pile.append(piece)
        ground_pile.append(val - piece)
    pi = _check_family(sorted(ground_pile, reverse=True), p.a, p.m, "ground source")
    lam = _check_family(sorted(sky_pile, reverse=True), p.b, p.m, "sky source")
    if sum(pi) + sum(lam) != sum(mu) + c.size:
        raise CopaError("pair split did not preserve total size")
    return pi, lam


def inverse_match_table(merged: Sequence[int], copartition: Copartition) -> list[tuple[int, int]]:
    """The (combined part, offset) trace of copartition_to_pair."""
    mu = _check_family(merged, copartition.a + copartition.b, copartition.m, "combined")
    return _inverse_steps(mu, copartition)


def is_eo_star(parts: Sequence[int]) -> bool:
    """Membership test for even-odd partitions.

    Every even part is smaller than every odd part; every odd part has
    even multiplicity; if even parts exist, the largest even part has odd
    multiplicity and all other even parts have even multiplicity.  With no
    even parts the multiplicity rule on odd parts is all that remains.
    """
    lam = as_partition(parts)
    evens = [q for q in lam if q % 2 == 0]
    odds = [q for q in lam if q % 2 == 1]
    if evens and odds and max(evens) > min(odds):
        return False
    mult = Counter(lam)
    if any(mult[q] % 2 for q in set(odds)):
        return False
    if evens:
        top = max(evens)
        if mult[top] % 2 == 0:
            return False
        if any(mult[q] % 2 for q in set(evens) if q != top):
            return False
    return True


def enumerate_eo_star(n: int) -> list[Partition]:
    """All even-odd partitions of n by filtering; independent of the
    copartition machinery on purpose."""
    from .partitions import enumerate_partitions

    return [lam for lam in enumerate_partitions(n) if is_eo_star(lam)]


def eo_crank(parts: Sequence[int]) -> int:
    """Largest even part (0 if none) minus the number of odd parts."""
    lam = as_partition(parts)
    evens = [q for q in lam if q % 2 == 0]
    odds = [q for q in lam if q % 2 == 1]
    return (max(evens) if evens else 0) - len(odds)


def copartition_to_eo(c: Copartition) -> Partition:
    """Double a (1,1,2)-copartition into an even-odd partition.

    Each enlarged-sky part appears twice (the odd block); the ground's
    conjugate doubles into the even block.  Size doubles.
    """
    if c.params.as_tuple() != (1, 1, 2):
        raise CopaError(f"even-odd map needs params (1,1,2), got {c.params.as_tuple()}")
    block: list[int] = []
    for f in enlarged_sky(c):
        block += [f, f]
    block += [2 * q for q in conjugate(c.ground)]
    out = as_partition(sorted(block, reverse=True))
    if not is_eo_star(out) or sum(out) != 2 * c.size:
        raise CopaError(f"even-odd image invalid for {c!r}")
    return out


def eo_to_copartition(parts: Sequence[int]) -> Copartition:
    """Halve an even-odd partition back into a (1,1,2)-copartition."""
    lam = as_partition(parts)
    if not is_eo_star(lam):
        raise NotEOStarError(f"not an even-odd partition: {list(lam)}")
    evens = [q // 2 for q in lam if q % 2 == 0]
    odd_mult = Counter(q for q in lam if q % 2 == 1)
    ground = conjugate(evens)
    fused: list[int] = []
    for v in sorted(odd_mult, reverse=True):
        fused += [v] * (odd_mult[v] // 2)
    sky = split_enlarged_sky(fused, len(ground), (1, 1, 2))
    return Copartition(CopartitionParams(1, 1, 2), ground, sky)


def partition_to_cp111(parts: Sequence[int], ground_count: int) -> Copartition:
    """Pair (partition, count k) to a (1,1,1)-copartition with k ground parts.

    Parts larger than k become the enlarged sky; k stacked on the remaining
    parts conjugates into the ground.  The image has size |parts| + k.
    """
    lam = as_partition(parts)
    k = ground_count
    if k < 0:
        raise ValueError(f"ground count must be non-negative, got {k}")
    j = next((idx for idx, q in enumerate(lam, start=1) if q <= k), len(lam) + 1)
    fused = lam[: j - 1]
    tail = lam[j - 1 :]
    ground = conjugate((k,) + tail) if k else conjugate(tail)
    sky = split_enlarged_sky(fused, len(ground), (1, 1, 1))
    c = Copartition(CopartitionParams(1, 1, 1), ground, sky)
    if len(c.ground) != k or c.size != sum(lam) + k:
        raise CopaError(f"threshold split broke on {list(lam)}, k={k}")
    return c


def cp111_to_partition(c: Copartition) -> tuple[Partition, int]:
    """Exact inverse of partition_to_cp111; the count is the ground size."""
    if c.params.as_tuple() != (1, 1, 1):
        raise CopaError(f"threshold map needs params (1,1,1), got {c.params.as_tuple()}")
    k = len(c.ground)
    tail = conjugate(c.ground)[1:]
    lam = as_partition(enlarged_sky(c) + tail)
    return lam, k


def rim_cell_to_cp001(parts: Sequence[int], cell: tuple[int, int]) -> Copartition:
    """Partition with a marked rim cell to a (0,0,1)-copartition.

    For the cell (i, j): rows 1..i lose their first j columns and become
    the sky (zero parts kept), rows below conjugate into the ground padded
    with zeros to exactly j parts, and the i-by-j block they framed is the
    derived rectangle.  Size is preserved.
    """
    lam = as_partition(parts)
    if tuple(cell) not in rim_cells(lam):
        raise CopaError(f"{tuple(cell)} is not a rim cell of {list(lam)}")
    i, j = cell
    sky = tuple(lam[r] - j for r in range(i))
    cols = conjugate(lam[i:])
    ground = cols + (0,) * (j - len(cols))
    c = Copartition(CopartitionParams(0, 0, 1), ground, sky)
    if c.size != sum(lam):
        raise CopaError(f"rim map broke on {list(lam)}, cell {tuple(cell)}")
    return c


def cp001_to_rim_cell(c: Copartition) -> tuple[Partition, tuple[int, int]]:
    """Exact inverse of rim_cell_to_cp001."""
    if c.params.as_tuple() != (0, 0, 1):
        raise CopaError(f"rim map needs params (0,0,1), got {c.params.as_tuple()}")
    j = len(c.ground)
    i = len(c.sky)
    upper = tuple(s + j for s in c.sky)
    lower = conjugate(tuple(g for g in c.ground if g))
    lam = as_partition(upper + lower)
    if (i, j) not in rim_cells(lam):
        raise CopaError(f"rim map inverse broke on {c!r}")
    return lam, (i, j)


def render_pair_merge(
    ground_source: Sequence[int], sky_source: Sequence[int], params: ParamsLike
) -> str:
    """Four-panel picture of the pair merge, with symbolic cells.

    Panel 1 draws both sources as modular diagrams (class cell, then one
    cell per modulus step).  Panel 2 rotates the ground source a quarter
    turn clockwise and skews the sky source one step per row.  Panel 3
    stacks them: a sky row whose last cell has a ground column below it is
    matched, and matched cells are uppercased.  Panel 4 shows the merged
    rows and the resulting copartition diagram.
    """
    p = coerce_params(params)
    pi = _check_family(ground_source, p.a, p.m, "ground source")
    lam = _check_family(sky_source, p.b, p.m, "sky source")
    np_, nl = len(pi), len(lam)

    def sky_row(idx: int, skew: bool) -> list[str]:
        pad = ["."] * (nl - idx) if skew else []
        return pad + ["b"] + ["m"] * ((lam[idx - 1] - p.b) // p.m)

    def ground_rows_rotated() -> list[list[str]]:
        rows = [["a"] * np_]
        heights = [(pi[np_ - col] - p.a) // p.m for col in range(1, np_ + 1)]
        for r in range(1, max(heights, default=0) + 1):
            rows.append([("m" if h >= r else " ") for h in heights])
        return rows

    def fmt(rows: list[list[str]]) -> list[str]:
        return [" ".join(row).rstrip() for row in rows]

    lines = ["1. source diagrams", "  sky source:"]
    lines += ["    " + r for r in fmt([sky_row(i, False) for i in range(1, nl + 1)])]
    lines.append("  ground source:")
    lines += [
        "    " + r
        for r in fmt([["a"] + ["m"] * ((q - p.a) // p.m) for q in pi])
    ]
    lines.append("2. rotate the ground source, skew the sky source")
    skewed = [sky_row(i, True) for i in range(1, nl + 1)]
    rotated = ground_rows_rotated()
    lines += ["    " + r for r in fmt(skewed)]
    lines += ["    " + r for r in fmt(rotated)]

    merged, c = pair_to_copartition(pi, lam, p)
    lines.append("3. matched columns (uppercase)")
    k = nl + 1 - len(merged)
    matched_cols = set()
    marked_sky = []
    for i in range(1, nl + 1):
        row = sky_row(i, True)
        if i >= k:
            end = (nl - i) + 1 + (lam[i - 1] - p.b) // p.m
            matched_cols.add(end)
            row = [cell.upper() for cell in row]
        marked_sky.append(row)
    marked_rot = [
        [cell.upper() if col + 1 in matched_cols else cell for col, cell in enumerate(row)]
        for row in rotated
    ]
    lines += ["    " + r for r in fmt(marked_sky)]
    lines += ["    " + r for r in fmt(marked_rot)]
    lines.append("4. merged parts and copartition")
    lines += [
        "    " + r
        for r in fmt(
            [["a", "b"] + ["m"] * ((q - p.a - p.b) // p.m) for q in merged]
        )
    ]
    diagram = render_ascii(c)
    lines += ["    " + row for row in diagram.splitlines()] if diagram else ["    (empty)"]
    return "\n".join(lines) + "\n"
