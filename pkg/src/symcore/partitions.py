"""
Partitions: validation, conjugation and enumeration inside an r x c box
"""
from math import comb
from numbers import Integral
from typing import Iterable, List, Tuple

from sympy.utilities.iterables import partitions as _sympy_partitions

from ..errors import ConsistencyError

Partition = Tuple[int, ...]

EMPTY: Partition = ()


def make_partition(parts: Iterable[int]) -> Partition:
    """
    Validate a sequence of parts and return it as a Partition

    Trailing zeros are dropped, so (2, 1, 0) and (2, 1) give the same value.

    Args:
        parts: Weakly decreasing sequence of integers

    Returns:
        Tuple of positive parts
    """
    raw = list(parts)
    values = []
    for part in raw:
        if isinstance(part, bool) or not isinstance(part, (int, Integral)):
            raise ValueError(f"Partition parts must be integers: {raw}")
        values.append(int(part))

    while values and values[-1] == 0:
        values.pop()

    for i, part in enumerate(values):
        if part < 1:
            raise ValueError(f"Partition parts must be positive: {values}")
        if i and part > values[i - 1]:
            raise ValueError(f"Partition must be weakly decreasing: {values}")

    return tuple(values)


def weight(lam: Partition) -> int:
    return sum(lam)


def length(lam: Partition) -> int:
    return len(lam)


def in_box(lam: Partition, rows: int, cols: int) -> bool:
    """True when lam has at most `rows` parts and each part is at most `cols`"""
    return len(lam) <= rows and (not lam or lam[0] <= cols)


def box_order_key(lam: Partition) -> Tuple[int, Partition]:
    """Sort key for the fixed basis order: by weight, then lexicographic"""
    return weight(lam), lam


def conjugate(lam: Partition) -> Partition:
    """Transpose the Young diagram: lam'_j = #{i : lam_i >= j}"""
    if not lam:
        return EMPTY
    return tuple(sum(1 for part in lam if part >= j) for j in range(1, lam[0] + 1))


def add_full_column(lam: Partition, r: int) -> Partition:
    """
    Add one box to each of the first r rows of lam

    Args:
        lam: Partition with at most r parts
        r: Column height

    Returns:
        Partition of length exactly r
    """
    if len(lam) > r:
        raise ValueError(f"Partition {lam} has more than {r} parts")
    padded = list(lam) + [0] * (r - len(lam))
    return tuple(part + 1 for part in padded)


def remove_full_column(lam: Partition, r: int) -> Partition:
    """Inverse of add_full_column for partitions of length exactly r"""
    if len(lam) != r:
        raise ValueError(f"Partition {lam} does not have exactly {r} parts")
    return make_partition(part - 1 for part in lam)


def partitions_of(total: int, max_parts: int, max_part: int) -> List[Partition]:
    """
    All partitions of `total` with at most `max_parts` parts, each at most `max_part`

    Returned in lexicographic ascending order.
    """
    if total < 0:
        return []
    if total == 0:
        return [EMPTY]
    # sympy yields a spurious empty dict when the bounds cannot be met
    if max_parts <= 0 or max_part <= 0 or max_parts * max_part < total:
        return []

    found = []
    for multiplicities in _sympy_partitions(total, m=max_parts, k=max_part):
        parts = []
        for part in sorted(multiplicities, reverse=True):
            parts.extend([part] * multiplicities[part])
        found.append(tuple(parts))

    found.sort()
    return found


def enumerate_box(r: int, c: int) -> List[Partition]:
    """
    Enumerate the partitions that fit in an r x c box

    Args:
        r: Maximum number of parts
        c: Maximum part size

    Returns:
        Partitions ordered by weight, then lexicographically; there are
        binomial(r + c, r) of them
    """
    if r < 0 or c < 0:
        raise ValueError(f"Box dimensions must be non-negative, got ({r}, {c})")

    box = []
    for total in range(r * c + 1):
        box.extend(partitions_of(total, r, c))

    if len(box) != comb(r + c, r):
        raise ConsistencyError(f"Box ({r}, {c}) enumerated {len(box)} partitions")
    return box


def partitions_up_to(max_weight: int, max_parts: int) -> List[Partition]:
    """Partitions of weight at most max_weight with at most max_parts parts"""
    found = []
    for total in range(max_weight + 1):
        found.extend(partitions_of(total, max_parts, total))
    return found
