"""Lower and upper approximation operators and the families they generate.

``lower(R, X)`` collects the elements whose whole neighbourhood lies inside
X; ``upper(R, X)`` those whose neighbourhood meets X.  Power-set sweeps are
guarded by an enumeration cap so nothing silently explodes.
"""

from __future__ import annotations

from .errors import CapExceeded
from .relations import Equivalence, Relation, Tolerance

__all__ = [
    "ENUMERATION_CAP",
    "lower",
    "upper",
    "lower_mask",
    "upper_mask",
    "is_definable",
    "definable_family",
    "upper_family",
    "lower_family",
]

ENUMERATION_CAP = 20


def lower_mask(rows: tuple[int, ...], x: int) -> int:
    """Unchecked core of ``lower``; operates on raw neighbourhood rows."""
    out = 0
    bit = 1
    for row in rows:
        if row & ~x == 0:
            out |= bit
        bit <<= 1
    return out


def upper_mask(rows: tuple[int, ...], x: int) -> int:
    """Unchecked core of ``upper``."""
    out = 0
    bit = 1
    for row in rows:
        if row & x:
            out |= bit
        bit <<= 1
    return out


def lower(r: Relation, x: int) -> int:
    """Elements all of whose neighbours lie in ``x``."""
    r.universe.check_mask(x)
    return lower_mask(r.rows, x)


def upper(r: Relation, x: int) -> int:
    """Elements with at least one neighbour in ``x``."""
    r.universe.check_mask(x)
    return upper_mask(r.rows, x)


def is_definable(e: Equivalence, x: int) -> bool:
    """Whether ``x`` is a union of classes of ``e``."""
    e.universe.check_mask(x)
    return upper_mask(e.rows, x) == x


def _check_cap(count: int, cap: int) -> None:
    if cap < 1:
        raise ValueError("enumeration cap must be at least 1")
    if count > cap:
        raise CapExceeded(f"enumeration over 2^{count} subsets exceeds the cap of 2^{cap}")


def definable_family(e: Equivalence, cap: int = ENUMERATION_CAP) -> tuple[int, ...]:
    """All unions of classes of ``e``, ascending as masks.

    Closed under union, intersection and complement, and contains the empty
    set and the whole universe.
    """
    classes = e.classes()
    _check_cap(len(classes), cap)
    out = []
    for pick in range(1 << len(classes)):
        acc = 0
        rest = pick
        while rest:
            low = rest & -rest
            acc |= classes[low.bit_length() - 1]
            rest ^= low
        out.append(acc)
    return tuple(sorted(set(out)))


def upper_family(t: Tolerance, cap: int = ENUMERATION_CAP) -> tuple[int, ...]:
    """All distinct upper approximations over every subset of the universe."""
    n = t.universe.size
    _check_cap(n, cap)
    rows = t.rows
    return tuple(sorted({upper_mask(rows, x) for x in range(1 << n)}))


def lower_family(t: Tolerance, cap: int = ENUMERATION_CAP) -> tuple[int, ...]:
    """All distinct lower approximations over every subset of the universe."""
    n = t.universe.size
    _check_cap(n, cap)
    rows = t.rows
    return tuple(sorted({lower_mask(rows, x) for x in range(1 << n)}))
