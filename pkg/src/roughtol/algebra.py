"""Lattice diagnostics for ordered sets of rough pairs.

Every check here is search-based and works purely from the enumerated
order: pseudocomplements, relative pseudocomplements, distributivity and
self-duality are found, not derived.  The closed-form pseudocomplement
formulas live in :func:`pseudocomplement_formulas` and are kept strictly
apart so the two routes can be compared against each other in tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .approximation import lower_mask, upper_mask
from .compatibility import CompatibilityReport, is_compatible, isolated_elements, require_compatible
from .errors import CapExceeded, HypothesisNotMet, NotCompatible
from .lattice import RoughLattice, RoughPair, approximation_lattice
from .relations import Equivalence, Tolerance, _require_same_universe, bits, blocks, induced_irredundant_covering

__all__ = [
    "Verdict",
    "AlgebraReport",
    "is_lattice",
    "is_distributive",
    "find_pentagon",
    "find_diamond",
    "is_complete_sublattice",
    "meet_closure_condition",
    "meet_closure_condition_eq",
    "pseudocomplement",
    "dual_pseudocomplement",
    "PseudoQuad",
    "pseudocomplement_formulas",
    "is_regular_double_p_algebra",
    "is_stone",
    "is_double_stone",
    "relative_pseudocomplement",
    "is_heyting",
    "is_self_dual",
    "analyze",
]

DISTRIBUTIVITY_CAP = 300


@dataclass(frozen=True)
class Verdict:
    """A check outcome: True, False (with witness), or None if inapplicable."""

    holds: bool | None
    witness: str | None = None
    note: str | None = None

    def __bool__(self) -> bool:
        return self.holds is True

    def to_json_dict(self) -> dict:
        return {"holds": self.holds, "witness": self.witness, "note": self.note}


def is_lattice(rl: RoughLattice) -> Verdict:
    """Whether every element pair has a least upper and greatest lower bound."""
    core = rl.core
    for i in range(core.n):
        for j in range(i + 1, core.n):
            if core.join(i, j) is None:
                mubs = ", ".join(rl.universe.format_pair(*rl.elements[k]) for k in core.minimal_of(core.ups[i] & core.ups[j]))
                return Verdict(
                    False,
                    witness=f"{rl.universe.format_pair(*rl.elements[i])} and {rl.universe.format_pair(*rl.elements[j])} "
                    f"have no least upper bound; minimal upper bounds: {mubs}",
                )
            if core.meet(i, j) is None:
                mlbs = ", ".join(rl.universe.format_pair(*rl.elements[k]) for k in core.maximal_of(core.downs[i] & core.downs[j]))
                return Verdict(
                    False,
                    witness=f"{rl.universe.format_pair(*rl.elements[i])} and {rl.universe.format_pair(*rl.elements[j])} "
                    f"have no greatest lower bound; maximal lower bounds: {mlbs}",
                )
    return Verdict(True)


def is_distributive(rl: RoughLattice, cap: int = DISTRIBUTIVITY_CAP) -> Verdict:
    """Scan all triples for both distributive laws; witness the first failure."""
    lat = is_lattice(rl)
    if not lat.holds:
        return Verdict(None, note="not a lattice")
    core = rl.core
    if core.n > cap:
        raise CapExceeded(f"distributivity scan over {core.n}^3 triples exceeds the cap of {cap} elements")
    mt = core.meet_table()
    jt = core.join_table()
    fmt = rl.universe.format_pair
    for x in range(core.n):
        for y in range(core.n):
            for z in range(core.n):
                if mt[x][jt[y][z]] != jt[mt[x][y]][mt[x][z]]:
                    return Verdict(
                        False,
                        witness=f"x∧(y∨z) ≠ (x∧y)∨(x∧z) at x={fmt(*rl.elements[x])}, "
                        f"y={fmt(*rl.elements[y])}, z={fmt(*rl.elements[z])}",
                    )
                if jt[x][mt[y][z]] != mt[jt[x][y]][jt[x][z]]:
                    return Verdict(
                        False,
                        witness=f"x∨(y∧z) ≠ (x∨y)∧(x∨z) at x={fmt(*rl.elements[x])}, "
                        f"y={fmt(*rl.elements[y])}, z={fmt(*rl.elements[z])}",
                    )
    return Verdict(True)


def find_pentagon(rl: RoughLattice) -> tuple[RoughPair, ...] | None:
    """A five-element pentagon sublattice (bottom, short side, long side pair,
    top), or None; exists in a lattice iff modularity fails."""
    core = rl.core
    mt = core.meet_table()
    jt = core.join_table()
    for x in range(core.n):
        for z in bits(core.downs[x] & ~(1 << x)):
            for y in range(core.n):
                m = mt[x][y]
                j = jt[x][y]
                if mt[z][y] == m and jt[z][y] == j and len({m, z, x, y, j}) == 5:
                    return tuple(rl.elements[i] for i in (m, z, x, y, j))
    return None


def find_diamond(rl: RoughLattice) -> tuple[RoughPair, ...] | None:
    """A five-element diamond sublattice (three incomparable mid elements
    with common meet and join), or None."""
    core = rl.core
    mt = core.meet_table()
    jt = core.join_table()
    for x in range(core.n):
        for y in range(x + 1, core.n):
            m = mt[x][y]
            j = jt[x][y]
            for z in range(y + 1, core.n):
                if (
                    mt[x][z] == m
                    and mt[y][z] == m
                    and jt[x][z] == j
                    and jt[y][z] == j
                    and len({m, x, y, z, j}) == 5
                ):
                    return tuple(rl.elements[i] for i in (m, x, y, z, j))
    return None


def is_complete_sublattice(rl: RoughLattice) -> Verdict:
    """Whether the pair set is closed under the ambient product operations.

    The ambient lattice is (definable sets) x (upper-approximation family);
    its binary meet is (A∩C, ((B∩D) interior)^T) and its join the
    coordinatewise union.  For finite orders, closure under these plus the
    ambient bounds is equivalent to complete-sublattice closure.
    """
    if rl.kind != "et" or len(rl.source) != 2:
        raise ValueError("complete-sublattice check needs a lattice built from an (equivalence, tolerance) pair")
    e, t = rl.source
    trows = t.rows
    full = rl.universe.full
    fmt = rl.universe.format_pair
    if RoughPair(0, 0) not in rl or RoughPair(full, full) not in rl:
        return Verdict(False, witness="missing an ambient bound")
    elems = rl.elements
    index = rl._index
    for i, (al, au) in enumerate(elems):
        for bl, bu in elems[i:]:
            join = RoughPair(al | bl, au | bu)
            if join not in index:
                return Verdict(False, witness=f"ambient join of {fmt(al, au)} and {fmt(bl, bu)} = {fmt(*join)} is missing")
            meet = RoughPair(al & bl, upper_mask(trows, lower_mask(trows, au & bu)))
            if meet not in index:
                return Verdict(False, witness=f"ambient meet of {fmt(al, au)} and {fmt(bl, bu)} = {fmt(*meet)} is missing")
    return Verdict(True)


def meet_closure_condition(e: Equivalence, t: Tolerance) -> Verdict:
    """The singleton-class condition characterising ambient meet closure.

    Requires a tolerance induced by an irredundant covering and compatible
    with the equivalence.  Two equivalent forms are evaluated: for every
    element x with a one-element class but a larger neighbourhood, (a) some
    element of a non-singleton class has its neighbourhood inside that of x,
    and (b) when additionally the neighbourhood of x is a block, some such
    element has exactly the same neighbourhood.  Disagreement of the two
    forms would be an implementation fault.
    """
    _require_same_universe(e, t)
    induced_irredundant_covering(t)
    require_compatible(e, t)
    full = e.universe.full
    trows = t.rows
    singles = isolated_elements(e) & ~isolated_elements(t)
    plural = full & ~isolated_elements(e)
    witness = None
    cond_sub = True
    for x in bits(singles):
        if not any(trows[y] & ~trows[x] == 0 for y in bits(plural)):
            cond_sub = False
            if witness is None:
                witness = x
    block_set = set(blocks(t))
    cond_block = True
    for x in bits(singles):
        if trows[x] in block_set and not any(trows[y] == trows[x] for y in bits(plural)):
            cond_block = False
            if witness is None:
                witness = x
    assert cond_sub == cond_block, "internal fault: the two meet-closure forms disagree"
    if cond_sub:
        return Verdict(True)
    return Verdict(False, witness=f"no substitute outside the singleton classes for element {e.universe.labels[witness]}")


def meet_closure_condition_eq(e: Equivalence, f: Equivalence) -> Verdict:
    """Equivalence-pair form of the meet-closure condition.

    Requires ``e`` to refine ``f``; holds when every non-singleton class of
    ``f`` contains an element whose class under ``e`` is non-singleton.
    """
    _require_same_universe(e, f)
    if not e <= f:
        raise HypothesisNotMet("the first equivalence must refine the second")
    plural = f.universe.full & ~isolated_elements(e)
    for cls in f.classes():
        if cls.bit_count() > 1 and cls & plural == 0:
            return Verdict(False, witness=f"class {f.universe.format_set(cls)} splits into singletons only")
    return Verdict(True)


def _stars(rl: RoughLattice) -> list[int | None]:
    """Index of the pseudocomplement of each element, by search."""
    if "stars" not in rl.flags:
        core = rl.core
        bottom = core.bottom
        out: list[int | None] = []
        for a in range(core.n):
            cand_mask = 0
            for b in range(core.n):
                if core.meet(a, b) == bottom:
                    cand_mask |= 1 << b
            best = None
            for c in bits(cand_mask):
                if cand_mask & ~core.downs[c] == 0:
                    best = c
                    break
            out.append(best)
        rl.flags["stars"] = out
    return rl.flags["stars"]


def _duals(rl: RoughLattice) -> list[int | None]:
    """Index of the dual pseudocomplement of each element, by search."""
    if "duals" not in rl.flags:
        core = rl.core
        top = core.top
        out: list[int | None] = []
        for a in range(core.n):
            cand_mask = 0
            for b in range(core.n):
                if core.join(a, b) == top:
                    cand_mask |= 1 << b
            best = None
            for c in bits(cand_mask):
                if cand_mask & ~core.ups[c] == 0:
                    best = c
                    break
            out.append(best)
        rl.flags["duals"] = out
    return rl.flags["duals"]


def pseudocomplement(rl: RoughLattice, pair) -> RoughPair | None:
    """Greatest element whose meet with ``pair`` is bottom, found by search."""
    i = _stars(rl)[rl.index(pair)]
    return None if i is None else rl.elements[i]


def dual_pseudocomplement(rl: RoughLattice, pair) -> RoughPair | None:
    """Least element whose join with ``pair`` is top, found by search."""
    i = _duals(rl)[rl.index(pair)]
    return None if i is None else rl.elements[i]


class PseudoQuad(NamedTuple):
    star: RoughPair
    plus: RoughPair
    star_star: RoughPair
    plus_plus: RoughPair


def pseudocomplement_formulas(e: Equivalence, t: Tolerance, pair) -> PseudoQuad:
    """Closed-form pseudocomplement, dual pseudocomplement and their squares.

    Valid when the tolerance comes from an irredundant covering and the
    meet-closure condition holds; rejected otherwise.  For a pair (A, B):
    star = ((B^c interior expanded)), namely (((B^c)^T)_T, (B^c)^T);
    plus = (A^c, (A^c)^T); star-star = (B_T, B); plus-plus = (A, A^T).
    """
    verdict = meet_closure_condition(e, t)
    if not verdict.holds:
        raise HypothesisNotMet(f"meet-closure condition fails: {verdict.witness}")
    p = RoughPair(*pair)
    e.universe.check_mask(p.lower)
    e.universe.check_mask(p.upper)
    trows = t.rows
    full = e.universe.full
    comp_u = full & ~p.upper
    comp_l = full & ~p.lower
    star = RoughPair(lower_mask(trows, upper_mask(trows, comp_u)), upper_mask(trows, comp_u))
    plus = RoughPair(comp_l, upper_mask(trows, comp_l))
    star_star = RoughPair(lower_mask(trows, p.upper), p.upper)
    plus_plus = RoughPair(p.lower, upper_mask(trows, p.lower))
    return PseudoQuad(star, plus, star_star, plus_plus)


def is_regular_double_p_algebra(rl: RoughLattice) -> Verdict:
    """Both operations total, and no two elements share both images."""
    stars = _stars(rl)
    duals = _duals(rl)
    fmt = rl.universe.format_pair
    for i, (s, d) in enumerate(zip(stars, duals)):
        if s is None or d is None:
            return Verdict(None, note=f"{fmt(*rl.elements[i])} lacks a pseudocomplement or dual pseudocomplement")
    for i in range(len(stars)):
        for j in range(i + 1, len(stars)):
            if stars[i] == stars[j] and duals[i] == duals[j]:
                return Verdict(False, witness=f"{fmt(*rl.elements[i])} and {fmt(*rl.elements[j])} share both images")
    return Verdict(True)


def is_stone(rl: RoughLattice) -> Verdict:
    """The identity star(a) ∨ star(star(a)) = top, over all elements."""
    core = rl.core
    stars = _stars(rl)
    fmt = rl.universe.format_pair
    for i, s in enumerate(stars):
        if s is None:
            return Verdict(None, note=f"{fmt(*rl.elements[i])} lacks a pseudocomplement")
        if core.join(s, stars[s]) != core.top:
            return Verdict(False, witness=f"star identity fails at {fmt(*rl.elements[i])}")
    return Verdict(True)


def is_double_stone(rl: RoughLattice) -> Verdict:
    """The star identity and its dual, over all elements."""
    stone = is_stone(rl)
    if not stone.holds:
        return stone
    core = rl.core
    duals = _duals(rl)
    fmt = rl.universe.format_pair
    for i, d in enumerate(duals):
        if d is None:
            return Verdict(None, note=f"{fmt(*rl.elements[i])} lacks a dual pseudocomplement")
        if core.meet(d, duals[d]) != core.bottom:
            return Verdict(False, witness=f"dual star identity fails at {fmt(*rl.elements[i])}")
    return Verdict(True)


def relative_pseudocomplement(rl: RoughLattice, a, b) -> RoughPair | None:
    """Greatest x with a ∧ x ≤ b, found by search."""
    core = rl.core
    ai = rl.index(a)
    bi = rl.index(b)
    cand_mask = 0
    for x in range(core.n):
        m = core.meet(ai, x)
        if m is not None and core.leq(m, bi):
            cand_mask |= 1 << x
    for c in bits(cand_mask):
        if cand_mask & ~core.downs[c] == 0:
            return rl.elements[c]
    return None


def is_heyting(rl: RoughLattice) -> Verdict:
    """Whether every element pair has a relative pseudocomplement."""
    fmt = rl.universe.format_pair
    for a in rl.elements:
        for b in rl.elements:
            if relative_pseudocomplement(rl, a, b) is None:
                return Verdict(False, witness=f"no greatest x with {fmt(*a)} ∧ x ≤ {fmt(*b)}")
    return Verdict(True)


def is_self_dual(rl: RoughLattice) -> Verdict:
    """Search for an order-reversing bijection of the ordered set onto itself."""
    core = rl.core
    image = core.find_isomorphism(core.dual())
    if image is None:
        return Verdict(False, note="no order-reversing bijection exists (exhaustive search)")
    fmt = rl.universe.format_pair
    seen = ", ".join(f"{fmt(*rl.elements[i])}→{fmt(*rl.elements[j])}" for i, j in enumerate(image))
    return Verdict(True, witness=seen)


@dataclass
class AlgebraReport:
    universe: tuple[str, ...]
    element_count: int
    compatible: CompatibilityReport | None
    lattice: Verdict = field(default_factory=lambda: Verdict(None))
    distributive: Verdict = field(default_factory=lambda: Verdict(None))
    complete_sublattice: Verdict = field(default_factory=lambda: Verdict(None))
    meet_closure: Verdict = field(default_factory=lambda: Verdict(None))
    pseudocomplemented: Verdict = field(default_factory=lambda: Verdict(None))
    regular_double_p: Verdict = field(default_factory=lambda: Verdict(None))
    stone: Verdict = field(default_factory=lambda: Verdict(None))
    double_stone: Verdict = field(default_factory=lambda: Verdict(None))
    heyting: Verdict = field(default_factory=lambda: Verdict(None))
    self_dual: Verdict = field(default_factory=lambda: Verdict(None))
    algebraic: Verdict = field(default_factory=lambda: Verdict(None))
    completely_distributive: Verdict = field(default_factory=lambda: Verdict(None))

    CHECKS = (
        "lattice",
        "distributive",
        "complete_sublattice",
        "meet_closure",
        "pseudocomplemented",
        "regular_double_p",
        "stone",
        "double_stone",
        "heyting",
        "self_dual",
        "algebraic",
        "completely_distributive",
    )

    def verdict(self, name: str) -> Verdict:
        if name == "compatible":
            ok = self.compatible.compatible if self.compatible else None
            return Verdict(ok, witness=None if ok else self.compatible.describe())
        if name not in self.CHECKS:
            raise ValueError(f"unknown check {name!r}")
        return getattr(self, name)

    def to_json_dict(self) -> dict:
        return {
            "universe": list(self.universe),
            "element_count": self.element_count,
            "compatible": self.compatible.to_json_dict() if self.compatible else None,
            "checks": {name: getattr(self, name).to_json_dict() for name in self.CHECKS},
        }


def analyze(e: Equivalence, t: Tolerance | None = None, cap: int | None = None) -> AlgebraReport:
    """Run the full battery of structure checks on the pair set of (e, t).

    Hypothesis failures disable individual checks (verdict None with a note)
    rather than aborting the run.  Verdicts for algebraicity and complete
    distributivity are corollaries of finiteness and plain distributivity,
    never computed from the infinite-lattice definitions.
    """
    if t is None:
        t = e
    kwargs = {} if cap is None else {"cap": cap}
    compat = is_compatible(e, t)
    rl = approximation_lattice(e, t, force=True, **kwargs)
    report = AlgebraReport(e.universe.labels, len(rl), compat)

    report.lattice = is_lattice(rl)
    report.self_dual = is_self_dual(rl)

    if report.lattice.holds:
        report.distributive = is_distributive(rl)
        if report.distributive.holds is False:
            pent = find_pentagon(rl)
            diam = find_diamond(rl)
            extras = []
            if pent:
                extras.append("pentagon " + ", ".join(rl.universe.format_pair(*p) for p in pent))
            if diam:
                extras.append("diamond " + ", ".join(rl.universe.format_pair(*p) for p in diam))
            report.distributive = Verdict(False, witness=report.distributive.witness + "; " + "; ".join(extras))
        report.heyting = is_heyting(rl)
        stars = _stars(rl)
        duals = _duals(rl)
        missing = next((i for i, (s, d) in enumerate(zip(stars, duals)) if s is None or d is None), None)
        if missing is None:
            report.pseudocomplemented = Verdict(True)
            report.regular_double_p = is_regular_double_p_algebra(rl)
            report.stone = is_stone(rl)
            report.double_stone = is_double_stone(rl)
        else:
            report.pseudocomplemented = Verdict(
                False, witness=f"{rl.universe.format_pair(*rl.elements[missing])} lacks an operation image"
            )
        report.algebraic = Verdict(True, note="finite lattice, hence algebraic")
        if report.distributive.holds is not None:
            report.completely_distributive = Verdict(
                report.distributive.holds, note="finite lattice: distributive iff completely distributive"
            )
    else:
        note = "not a lattice"
        report.distributive = Verdict(None, note=note)
        report.heyting = Verdict(None, note=note)
        report.pseudocomplemented = Verdict(None, note=note)
        report.algebraic = Verdict(None, note=note)
        report.completely_distributive = Verdict(None, note=note)

    if compat.compatible:
        report.complete_sublattice = is_complete_sublattice(rl)
    else:
        report.complete_sublattice = Verdict(None, note="tolerance is not compatible with the equivalence")

    try:
        report.meet_closure = meet_closure_condition(e, t)
    except (HypothesisNotMet, NotCompatible) as exc:
        report.meet_closure = Verdict(None, note=str(exc))

    rl.flags["report"] = report
    return report
