"""Subsets of a small ground set packed into machine integers.

Element ``j`` of the ground set corresponds to bit ``1 << j``.  Union,
intersection, difference, subset test and cardinality are single-word
integer operations, and the whole subset lattice of a ground set can be
enumerated because the element count is capped at :data:`WORD_BITS`.
"""

from __future__ import annotations

import os
from itertools import combinations
from typing import Iterable, Iterator

#: Hard ceiling on the ground-set size.  Keeps every mask in one machine
#: word and every ``2**n`` enumeration affordable.
WORD_BITS = 24


class CapacityError(ValueError):
    """The ground set does not fit the fixed mask width."""


def max_ground() -> int:
    """Current element-count cap.

    The environment variable ``MATROID_MAX_N`` may lower the cap, never
    raise it.
    """
    cap = os.environ.get("MATROID_MAX_N")
    if cap is None:
        return WORD_BITS
    try:
        value = int(cap)
    except ValueError:
        raise CapacityError(f"MATROID_MAX_N is not an integer: {cap!r}") from None
    return min(value, WORD_BITS)


def check_ground(n: int) -> int:
    if n < 0:
        raise ValueError(f"negative ground-set size: {n}")
    if n > max_ground():
        raise CapacityError(
            f"ground set of {n} elements exceeds the cap of {max_ground()}"
        )
    return n


def full_mask(n: int) -> int:
    return (1 << n) - 1


def check_mask(mask: int, n: int) -> int:
    if mask < 0 or mask & ~full_mask(n):
        raise ValueError(f"mask {bin(mask)} has bits outside a ground set of size {n}")
    return mask


def elements(mask: int) -> Iterator[int]:
    """Indices of the set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_elements(items: Iterable[int]) -> int:
    m = 0
    for e in items:
        m |= 1 << e
    return m


def submasks(mask: int) -> Iterator[int]:
    """All subsets of ``mask`` in ascending numeric order."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


def masks_of_size(n: int, k: int) -> Iterator[int]:
    """All ``k``-subsets of ``{0..n-1}``, in lexicographic element order."""
    for combo in combinations(range(n), k):
        yield from_elements(combo)


def format_bits(mask: int, n: int) -> str:
    """Characteristic vector as text; leftmost character is element 0."""
    return "".join("1" if mask >> j & 1 else "0" for j in range(n))


def parse_bits(text: str) -> int:
    mask = 0
    for j, ch in enumerate(text):
        if ch == "1":
            mask |= 1 << j
        elif ch != "0":
            raise ValueError(f"bad character {ch!r} in bitstring {text!r}")
    return mask
