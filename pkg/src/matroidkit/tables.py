"""Exhaustive subset tables for a matroid view.

Everything here enumerates all ``2**n`` subsets, which the ground-set
cap keeps affordable.  These tables are the independent oracle against
which the listed-data algorithms are checked, and the engine behind
exhaustive re-encoding.
"""

from __future__ import annotations

from typing import Dict, List, Tuple

import numpy as np

from .core import MatroidView


def popcounts(n: int) -> np.ndarray:
    """Bit-count of every mask below ``2**n``."""
    pc = np.zeros(1 << n, dtype=np.int8)
    for b in range(n):
        pc[1 << b : 1 << (b + 1)] = pc[: 1 << b] + 1
    return pc


def independence_table(view: MatroidView) -> np.ndarray:
    """Boolean array over all masks; cached on the view."""
    cached = view._tables
    if cached is not None and "indep" in cached:
        return cached["indep"]
    size = 1 << view.n
    indep = np.fromiter(
        (view.is_independent(m) for m in range(size)), dtype=bool, count=size
    )
    if cached is None:
        cached = view._tables = {}
    cached["indep"] = indep
    return indep


def rank_table(view: MatroidView) -> np.ndarray:
    """Rank of every mask, derived from the independence table by the
    level-by-level recursion r(A) = max_e r(A - e) for dependent A."""
    cached = view._tables
    if cached is not None and "rank" in cached:
        return cached["rank"]
    n = view.n
    indep = independence_table(view)
    pc = popcounts(n)
    rank = np.where(indep, pc, 0).astype(np.int8)
    all_masks = np.arange(1 << n, dtype=np.int64)
    for k in range(1, n + 1):
        level = all_masks[(pc == k) & ~indep]
        if len(level) == 0:
            continue
        acc = np.zeros(len(level), dtype=np.int8)
        for b in range(n):
            bit = 1 << b
            sel = (level & bit) != 0
            if not sel.any():
                continue
            acc[sel] = np.maximum(acc[sel], rank[level[sel] ^ bit])
        rank[level] = acc
    cached = view._tables
    cached["rank"] = rank
    return rank


def classify(view: MatroidView) -> Dict[str, np.ndarray]:
    """Characteristic boolean arrays for every family of subsets the
    description formats can list."""
    cached = view._tables
    if cached is not None and "families" in cached:
        return cached["families"]
    n = view.n
    indep = independence_table(view)
    rank = rank_table(view)
    pc = popcounts(n)
    r = int(rank[-1]) if n else 0
    all_masks = np.arange(1 << n, dtype=np.int64)

    spanning = rank == r
    bases = indep & (pc == r)

    # circuit: dependent, every single-element deletion independent
    circuits = ~indep
    # flat: no outside element keeps the rank fixed
    flats = np.ones(1 << n, dtype=bool)
    # cyclic: no inside element drops the rank (no coloop of the restriction)
    cyclic = np.ones(1 << n, dtype=bool)
    for b in range(n):
        bit = 1 << b
        has = (all_masks & bit) != 0
        inside = all_masks[has]
        circuits[inside] &= indep[inside ^ bit]
        cyclic[inside] &= rank[inside ^ bit] == rank[inside]
        outside = all_masks[~has]
        flats[outside] &= rank[outside | bit] != rank[outside]

    hyperplanes = flats & (rank == r - 1) if r >= 1 else np.zeros(1 << n, dtype=bool)
    out = {
        "independent": indep,
        "spanning": spanning,
        "bases": bases,
        "flats": flats,
        "circuits": circuits,
        "hyperplanes": hyperplanes,
        "nsc": circuits & (pc <= r),
        "dephyp": hyperplanes & ~indep,
        "cyclicflats": flats & cyclic,
    }
    view._tables["families"] = out
    return out


def family_masks(view: MatroidView, family: str) -> List[int]:
    """Masks of one family, in canonical (cardinality, value) order."""
    flags = classify(view)[family]
    masks = np.nonzero(flags)[0]
    pc = popcounts(view.n)[masks]
    order = np.lexsort((masks, pc))
    return [int(m) for m in masks[order]]


def circuit_masks(view: MatroidView) -> List[int]:
    return family_masks(view, "circuits")


def rank_signature(view: MatroidView) -> Tuple[int, ...]:
    """Isomorphism-invariant histogram of (cardinality, rank) pairs."""
    rank = rank_table(view)
    pc = popcounts(view.n)
    width = view.n + 1
    return tuple(np.bincount(pc.astype(np.int64) * width + rank, minlength=width * width))


def table_view(n: int, rank: np.ndarray, name=None) -> MatroidView:
    """A view backed directly by a precomputed rank array."""
    pc = popcounts(n)
    view = MatroidView(n, rank=lambda a: int(rank[a]), name=name)
    view._tables = {"rank": np.asarray(rank, dtype=np.int8), "indep": np.asarray(rank) == pc}
    return view


def views_equal(a: MatroidView, b: MatroidView) -> bool:
    """Exhaustive rank-function equality (identical element labels)."""
    if a.n != b.n:
        raise ValueError(f"ground sets differ: {a.n} vs {b.n}")
    return bool(np.array_equal(rank_table(a), rank_table(b)))
