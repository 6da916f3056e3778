"""Approximation pairs and the ordered sets they form.

A rough pair couples a lower approximation taken through an equivalence
with an upper approximation taken through a compatible tolerance.  Ranging
over every subset of the universe and deduplicating yields a finite ordered
set under coordinatewise inclusion: a complete lattice whenever the
tolerance is compatible, and a mere poset otherwise.

The closed-form join of a family is the coordinatewise union.  The
closed-form meet intersects the lower parts and re-expands the intersected
upper interiors after removing a correction term: those one-element classes
that every member's upper interior retains but some member's lower part
already lost.  Both forms are checked elsewhere against order-only oracles
that never touch these formulas.
"""

from __future__ import annotations

import json
from typing import Iterable, NamedTuple

from .approximation import ENUMERATION_CAP, is_definable, lower_mask, upper_mask
from .compatibility import isolated_elements, require_compatible
from .errors import CapExceeded
from .order import OrderCore
from .relations import Equivalence, Tolerance, Universe, _require_same_universe

__all__ = [
    "RoughPair",
    "RoughLattice",
    "rough_pair",
    "approximation_lattice",
    "tolerance_pair_poset",
    "is_representable_pair",
    "meet_correction",
    "family_join",
    "family_meet",
]


class RoughPair(NamedTuple):
    lower: int
    upper: int


class RoughLattice:
    """A deduplicated, canonically ordered set of rough pairs.

    ``kind`` records the construction: ``"et"`` for pairs (lower via E,
    upper via T), ``"t"`` for single-tolerance pairs.  ``source`` keeps the
    relations that produced the elements, and ``flags`` caches analysis
    results computed downstream.
    """

    def __init__(self, universe: Universe, elements: Iterable[RoughPair], source: tuple, kind: str):
        elems = tuple(RoughPair(*p) for p in sorted(set(elements)))
        for p in elems:
            universe.check_mask(p.lower)
            universe.check_mask(p.upper)
            if p.lower & ~p.upper:
                raise ValueError(f"lower part exceeds upper part in {universe.format_pair(*p)}")
        self.universe = universe
        self.elements = elems
        self.source = source
        self.kind = kind
        self.flags: dict = {}
        self._index = {p: i for i, p in enumerate(elems)}
        self._core: OrderCore | None = None

    # -- basic queries -------------------------------------------------------

    @staticmethod
    def leq(p: RoughPair, q: RoughPair) -> bool:
        return p.lower & ~q.lower == 0 and p.upper & ~q.upper == 0

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, pair) -> bool:
        return RoughPair(*pair) in self._index

    def index(self, pair) -> int:
        try:
            return self._index[RoughPair(*pair)]
        except KeyError:
            raise ValueError(f"{self.universe.format_pair(*pair)} is not an element") from None

    @property
    def core(self) -> OrderCore:
        if self._core is None:
            self._core = OrderCore(list(self.elements), self.leq)
        return self._core

    @property
    def bottom(self) -> RoughPair:
        return self.elements[self.core.bottom]

    @property
    def top(self) -> RoughPair:
        return self.elements[self.core.top]

    def covers(self) -> tuple[tuple[int, int], ...]:
        """Hasse edges as (lower-element index, upper-element index)."""
        return self.core.covers()

    # -- order-only bounds (the oracle side; no closed formulas) -------------

    def minimal_upper_bounds(self, *pairs) -> tuple[RoughPair, ...]:
        idxs = [self.index(p) for p in pairs]
        ub = self.core.upper_bounds(idxs)
        return tuple(self.elements[i] for i in self.core.minimal_of(ub))

    def maximal_lower_bounds(self, *pairs) -> tuple[RoughPair, ...]:
        idxs = [self.index(p) for p in pairs]
        lb = self.core.lower_bounds(idxs)
        return tuple(self.elements[i] for i in self.core.maximal_of(lb))

    def least_upper_bound(self, pairs: Iterable) -> RoughPair | None:
        i = self.core.lub(self.index(p) for p in pairs)
        return None if i is None else self.elements[i]

    def greatest_lower_bound(self, pairs: Iterable) -> RoughPair | None:
        i = self.core.glb(self.index(p) for p in pairs)
        return None if i is None else self.elements[i]

    # -- export ---------------------------------------------------------------

    def to_json_dict(self, annotations: dict | None = None) -> dict:
        u = self.universe
        data = {
            "universe": list(u.labels),
            "elements": [{"lower": list(u.labels_of(p.lower)), "upper": list(u.labels_of(p.upper))} for p in self.elements],
            "covers": [list(edge) for edge in self.covers()],
            "kind": self.kind,
        }
        if annotations:
            data.update(annotations)
        return data

    def to_json(self, annotations: dict | None = None) -> str:
        return json.dumps(self.to_json_dict(annotations), indent=2, ensure_ascii=False) + "\n"

    def to_dot(self, annotations: dict | None = None) -> str:
        """Hasse diagram in DOT, drawn bottom-up; nodes labelled "lower|upper"."""
        u = self.universe
        lines = ["digraph rough_pairs {", "  rankdir=BT;", '  node [shape=box];']
        for key, value in (annotations or {}).items():
            lines.append(f"  // {key}: {value}")
        for i, p in enumerate(self.elements):
            label = f"{u.format_set(p.lower)}|{u.format_set(p.upper)}"
            lines.append(f'  n{i} [label="{label}"];')
        for i, j in self.covers():
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def rough_pair(e: Equivalence, t: Tolerance, x: int, force: bool = False) -> RoughPair:
    """The pair (lower through ``e``, upper through ``t``) of subset ``x``.

    The tolerance must be compatible with the equivalence unless ``force``
    is set (useful only to study what goes wrong without it).
    """
    _require_same_universe(e, t)
    e.universe.check_mask(x)
    if not force:
        require_compatible(e, t)
    return RoughPair(lower_mask(e.rows, x), upper_mask(t.rows, x))


def _check_cap(n: int, cap: int) -> None:
    if cap < 1:
        raise ValueError("enumeration cap must be at least 1")
    if n > cap:
        raise CapExceeded(f"enumeration over 2^{n} subsets exceeds the cap of 2^{cap}")


def approximation_lattice(
    e: Equivalence,
    t: Tolerance | None = None,
    cap: int = ENUMERATION_CAP,
    force: bool = False,
) -> RoughLattice:
    """All distinct pairs (lower through ``e``, upper through ``t``).

    With ``t`` omitted the tolerance is the equivalence itself, which gives
    the classic single-relation rough-set lattice.
    """
    if t is None:
        t = e
    _require_same_universe(e, t)
    n = e.universe.size
    _check_cap(n, cap)
    if not force:
        require_compatible(e, t)
    erows, trows = e.rows, t.rows
    elems = {RoughPair(lower_mask(erows, x), upper_mask(trows, x)) for x in range(1 << n)}
    return RoughLattice(e.universe, elems, source=(e, t), kind="et")


def tolerance_pair_poset(t: Tolerance, cap: int = ENUMERATION_CAP) -> RoughLattice:
    """All distinct pairs (lower, upper) through a single tolerance.

    This ordered set need not be a lattice, or even a semilattice.
    """
    n = t.universe.size
    _check_cap(n, cap)
    rows = t.rows
    elems = {RoughPair(lower_mask(rows, x), upper_mask(rows, x)) for x in range(1 << n)}
    return RoughLattice(t.universe, elems, source=(t,), kind="t")


def is_representable_pair(e: Equivalence, pair) -> bool:
    """Whether a pair of definable sets arises as (lower, upper) of some subset.

    A definable pair (A, B) with A ⊆ B qualifies exactly when no one-element
    class falls in the gap B minus A.  Both components must be definable.
    """
    p = RoughPair(*pair)
    if not (is_definable(e, p.lower) and is_definable(e, p.upper)):
        raise ValueError("both components must be unions of classes")
    if p.lower & ~p.upper:
        return False
    return isolated_elements(e) & p.upper & ~p.lower == 0


def meet_correction(e: Equivalence, t: Tolerance, family: Iterable[int], checked: bool = True) -> int:
    """One-element classes kept by every member's upper interior but already
    lost from some member's lower part; the meet formula removes them."""
    _require_same_universe(e, t)
    if checked:
        require_compatible(e, t)
    erows, trows = e.rows, t.rows
    full = e.universe.full
    inter_lower = full
    inter_interior = full
    for x in family:
        e.universe.check_mask(x)
        inter_lower &= lower_mask(erows, x)
        inter_interior &= lower_mask(trows, upper_mask(trows, x))
    return inter_interior & ~inter_lower & isolated_elements(e)


def family_join(e: Equivalence, t: Tolerance, family: Iterable[int], checked: bool = True) -> RoughPair:
    """Closed-form join of a family of subsets' pairs: coordinatewise union.

    The empty family yields the bottom pair.
    """
    _require_same_universe(e, t)
    if checked:
        require_compatible(e, t)
    erows, trows = e.rows, t.rows
    lo = up = 0
    for x in family:
        e.universe.check_mask(x)
        lo |= lower_mask(erows, x)
        up |= upper_mask(trows, x)
    return RoughPair(lo, up)


def family_meet(e: Equivalence, t: Tolerance, family: Iterable[int], checked: bool = True) -> RoughPair:
    """Closed-form meet of a family of subsets' pairs.

    Lower part: intersection of the lower approximations.  Upper part: the
    upper approximation of (intersection of the members' upper interiors)
    minus the singleton-class correction, which is always evaluated
    literally.  The empty family yields the top pair.
    """
    _require_same_universe(e, t)
    if checked:
        require_compatible(e, t)
    erows, trows = e.rows, t.rows
    full = e.universe.full
    inter_lower = full
    inter_interior = full
    for x in family:
        e.universe.check_mask(x)
        inter_lower &= lower_mask(erows, x)
        inter_interior &= lower_mask(trows, upper_mask(trows, x))
    correction = inter_interior & ~inter_lower & isolated_elements(e)
    return RoughPair(inter_lower, upper_mask(trows, inter_interior & ~correction))
