"""Vectorized integer-box scanning.

Everything here is integer arithmetic. numpy int64 is used only when a
magnitude bound proves no intermediate can overflow; otherwise the arrays
fall back to Python ints (dtype=object), which is slow but exact.
"""

from __future__ import annotations

import itertools
import os
from typing import Iterator, Sequence

import numpy as np

INT64_SAFE = 2**62
CHUNK = 1 << 16


def choose_dtype(*bounds: int):
    return np.int64 if max(bounds, default=0) < INT64_SAFE else object


def box_chunks(lo: Sequence[int], hi: Sequence[int], dtype=np.int64) -> Iterator[np.ndarray]:
    """Yield ``(m, k)`` arrays covering every integer point of ``prod [lo_i, hi_i]``.

    Points come out in lexicographic order so any reduction over chunks is
    deterministic.
    """
    k = len(lo)
    if k == 0:
        yield np.zeros((1, 0), dtype=dtype)
        return
    if any(h < l for l, h in zip(lo, hi)):
        return
    axes = [np.arange(l, h + 1, dtype=np.int64).astype(dtype) for l, h in zip(lo, hi)]
    inner = axes[1:]
    inner_size = 1
    for a in inner:
        inner_size *= len(a)
    if inner:
        grid = np.stack(np.meshgrid(*inner, indexing="ij"), axis=-1).reshape(-1, k - 1)
    else:
        grid = np.zeros((1, 0), dtype=dtype)
    step = max(1, CHUNK // max(inner_size, 1))
    first = axes[0]
    for s in range(0, len(first), step):
        block = first[s : s + step]
        head = np.repeat(block, inner_size).reshape(-1, 1)
        yield np.hstack([head, np.tile(grid, (len(block), 1))]).astype(dtype)


def thread_cap() -> int:
    """Worker cap from RECIPROCITY_THREADS (default: all cores)."""
    raw = os.environ.get("RECIPROCITY_THREADS")
    if raw is None or raw == "":
        return os.cpu_count() or 1
    n = int(raw)
    if n < 1:
        raise ValueError("RECIPROCITY_THREADS must be a positive integer")
    return n


def product_points(ranges: Sequence[range]) -> Iterator[tuple[int, ...]]:
    return itertools.product(*ranges)
