"""Bulk pairwise-distance kernels shared by verification and snake validation.

Chebyshev distances run over a chunked numpy broadcast.  Kendall distances
use order bitmaps: codeword c maps to an integer whose bit for the value
pair (u, v), u < v, records whether u precedes v in c.  The Kendall
distance of two codewords is then the popcount of the XOR of their
bitmaps, which vectorises well.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from .perm import Perm, kendall_distance

Violation = tuple[tuple[int, int], int]

VIOLATION_CAP = 50


def find_duplicate(codewords: Sequence[Perm]) -> tuple[int, int] | None:
    """First (i, j) with codewords[i] == codewords[j], else None."""
    seen: dict[Perm, int] = {}
    for j, c in enumerate(codewords):
        if c in seen:
            return (seen[c], j)
        seen[c] = j
    return None


def _chunk_rows(m: int, n: int) -> int:
    return max(1, 8_000_000 // max(1, m * n))


def min_pairwise_linf(
    codewords: Sequence[Perm],
) -> tuple[int | None, list[Violation], int]:
    """Exhaustive pairwise Chebyshev minimum.

    Returns (min_distance, violations, pairs_checked); min_distance is None
    when there are fewer than two codewords.  Violations are pairs at
    distance < 2, capped at VIOLATION_CAP.
    """
    m = len(codewords)
    if m < 2:
        return None, [], 0
    arr = np.asarray(codewords, dtype=np.int16)
    n = arr.shape[1]
    best = np.iinfo(np.int16).max
    violations: list[Violation] = []
    block = _chunk_rows(m, n)
    for i0 in range(0, m - 1, block):
        i1 = min(i0 + block, m - 1)
        rows = arr[i0:i1]
        d = np.abs(rows[:, None, :] - arr[None, :, :]).max(axis=2)
        gi = np.arange(i0, i1)[:, None]
        gj = np.arange(m)[None, :]
        upper = gj > gi
        dm = np.where(upper, d, np.iinfo(np.int16).max)
        chunk_min = int(dm.min())
        if chunk_min < best:
            best = chunk_min
        if chunk_min < 2 and len(violations) < VIOLATION_CAP:
            bad = np.argwhere(upper & (d < 2))
            for bi, j in bad[: VIOLATION_CAP - len(violations)]:
                violations.append(((int(bi) + i0, int(j)), int(d[bi, j])))
    return int(best), violations, m * (m - 1) // 2


def order_bitmaps(codewords: Sequence[Perm]) -> np.ndarray | None:
    """uint64 order bitmap per codeword, or None if n is too wide (>11)."""
    m = len(codewords)
    n = len(codewords[0])
    if n * (n - 1) // 2 > 63:
        return None
    pos = np.argsort(np.asarray(codewords, dtype=np.int64), axis=1)
    bits = np.zeros(m, dtype=np.uint64)
    bit = np.uint64(1)
    for u in range(n):
        for v in range(u + 1, n):
            before = pos[:, u] < pos[:, v]
            bits |= np.where(before, bit, np.uint64(0))
            bit = np.uint64(int(bit) << 1)
    return bits


def min_pairwise_kendall(
    codewords: Sequence[Perm],
) -> tuple[int | None, list[Violation], int]:
    """Exhaustive pairwise Kendall minimum; same contract as the linf kernel."""
    m = len(codewords)
    if m < 2:
        return None, [], 0
    bits = order_bitmaps(codewords)
    if bits is None:
        return _min_pairwise_kendall_slow(codewords)
    best = None
    violations: list[Violation] = []
    block = max(1, 4_000_000 // m)
    for i0 in range(0, m - 1, block):
        i1 = min(i0 + block, m - 1)
        x = np.bitwise_xor(bits[i0:i1, None], bits[None, :])
        d = np.bitwise_count(x).astype(np.int64)
        gi = np.arange(i0, i1)[:, None]
        gj = np.arange(m)[None, :]
        upper = gj > gi
        dm = np.where(upper, d, np.iinfo(np.int64).max)
        chunk_min = int(dm.min())
        if best is None or chunk_min < best:
            best = chunk_min
        if chunk_min < 2 and len(violations) < VIOLATION_CAP:
            bad = np.argwhere(upper & (d < 2))
            for bi, j in bad[: VIOLATION_CAP - len(violations)]:
                violations.append(((int(bi) + i0, int(j)), int(d[bi, j])))
    return best, violations, m * (m - 1) // 2


def _min_pairwise_kendall_slow(
    codewords: Sequence[Perm],
) -> tuple[int | None, list[Violation], int]:
    m = len(codewords)
    best = None
    violations: list[Violation] = []
    for i in range(m):
        for j in range(i + 1, m):
            d = kendall_distance(codewords[i], codewords[j])
            if best is None or d < best:
                best = d
            if d < 2 and len(violations) < VIOLATION_CAP:
                violations.append(((i, j), d))
    return best, violations, m * (m - 1) // 2


def sampled_min_distance(
    codewords: Sequence[Perm],
    metric_tag: str,
    window: int,
    cross_pairs: int,
    seed: int,
) -> tuple[int | None, list[Violation], int]:
    """Windowed plus random-cross-pair scan, vectorised for either metric.

    Checks every pair at index offset <= window and `cross_pairs` seeded
    random pairs.  A distant bad pair can escape the sample; the caller
    reports the mode alongside the result.
    """
    m = len(codewords)
    if m < 2:
        return None, [], 0
    if metric_tag == "kendall":
        bits = order_bitmaps(codewords)
        if bits is None:
            return _sampled_slow(codewords, metric_tag, window, cross_pairs, seed)

        def pair_dist(i_idx: np.ndarray, j_idx: np.ndarray) -> np.ndarray:
            return np.bitwise_count(np.bitwise_xor(bits[i_idx], bits[j_idx]))

    else:
        arr = np.asarray(codewords, dtype=np.int16)

        def pair_dist(i_idx: np.ndarray, j_idx: np.ndarray) -> np.ndarray:
            return np.abs(arr[i_idx] - arr[j_idx]).max(axis=1)

    best: int | None = None
    violations: list[Violation] = []
    checked = 0

    def scan(i_idx: np.ndarray, j_idx: np.ndarray) -> None:
        nonlocal best, checked
        d = pair_dist(i_idx, j_idx)
        checked += len(d)
        here = int(d.min())
        if best is None or here < best:
            best = here
        if here < 2 and len(violations) < VIOLATION_CAP:
            for at in np.flatnonzero(d < 2)[: VIOLATION_CAP - len(violations)]:
                violations.append(
                    ((int(i_idx[at]), int(j_idx[at])), int(d[at]))
                )

    idx = np.arange(m)
    for offset in range(1, min(window, m - 1) + 1):
        scan(idx[:-offset], idx[offset:])
    if cross_pairs > 0:
        rng = np.random.default_rng(seed)
        i_idx = rng.integers(0, m, size=cross_pairs)
        j_idx = rng.integers(0, m, size=cross_pairs)
        keep = i_idx != j_idx
        scan(
            np.minimum(i_idx[keep], j_idx[keep]),
            np.maximum(i_idx[keep], j_idx[keep]),
        )
    return best, violations, checked


def _sampled_slow(
    codewords: Sequence[Perm],
    metric_tag: str,
    window: int,
    cross_pairs: int,
    seed: int,
) -> tuple[int | None, list[Violation], int]:
    import random

    from .perm import linf_distance

    dist = linf_distance if metric_tag == "linf" else kendall_distance
    m = len(codewords)
    rng = random.Random(seed)
    best: int | None = None
    violations: list[Violation] = []
    checked = 0
    pairs = [
        (i, j)
        for i in range(m)
        for j in range(i + 1, min(i + 1 + window, m))
    ]
    for _ in range(cross_pairs):
        i, j = rng.randrange(m), rng.randrange(m)
        if i != j:
            pairs.append((min(i, j), max(i, j)))
    for i, j in pairs:
        d = dist(codewords[i], codewords[j])
        checked += 1
        if best is None or d < best:
            best = d
        if d < 2 and len(violations) < VIOLATION_CAP:
            violations.append(((i, j), d))
    return best, violations, checked
