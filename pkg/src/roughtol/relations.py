"""Finite binary relations over a labelled universe.

Everything is bitset-backed: a subset of the universe is a plain ``int``
whose bit ``i`` stands for element ``i`` in label order, and a relation
stores one such mask per element (its neighbourhood row).  Labels appear
only at the edges: construction, rendering, JSON files, error messages.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable, Iterator, Mapping

from .errors import HypothesisNotMet, UniverseMismatch

__all__ = [
    "Universe",
    "Relation",
    "Tolerance",
    "Equivalence",
    "Covering",
    "bits",
    "product",
    "inverse",
    "kernel",
    "blocks",
    "induced_tolerance",
    "is_irredundant",
    "membership_profile_kernel",
    "induced_irredundant_covering",
    "relation_to_dict",
    "relation_from_dict",
    "load_relation",
    "save_relation",
    "covering_to_dict",
    "covering_from_dict",
    "load_covering",
    "save_covering",
]


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Universe:
    """An ordered finite set of distinct, non-empty string labels.

    Label order is fixed at creation; it determines the bit layout of every
    subset mask and therefore every deterministic output downstream.
    """

    __slots__ = ("labels", "_index")

    def __init__(self, labels: Iterable[str]):
        labels = tuple(str(x) for x in labels)
        index: dict[str, int] = {}
        for i, lab in enumerate(labels):
            if not lab:
                raise ValueError("universe labels must be non-empty strings")
            if lab in index:
                raise ValueError(f"duplicate universe label {lab!r}")
            index[lab] = i
        self.labels = labels
        self._index = index

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> int:
        """Mask of the whole universe."""
        return (1 << len(self.labels)) - 1

    def index(self, label: str) -> int:
        try:
            return self._index[str(label)]
        except KeyError:
            raise ValueError(f"unknown element label {label!r}") from None

    def subset(self, labels: Iterable[str]) -> int:
        mask = 0
        for lab in labels:
            mask |= 1 << self.index(lab)
        return mask

    def singleton(self, label: str) -> int:
        return 1 << self.index(label)

    def labels_of(self, mask: int) -> tuple[str, ...]:
        self.check_mask(mask)
        return tuple(self.labels[i] for i in bits(mask))

    def check_mask(self, mask: int) -> None:
        if not isinstance(mask, int) or mask < 0 or mask >> len(self.labels):
            raise UniverseMismatch(f"not a subset mask of a {len(self.labels)}-element universe: {mask!r}")

    def graded_masks(self) -> Iterator[int]:
        """All subset masks ordered by (cardinality, element indices)."""
        yield from sorted(range(1 << len(self.labels)), key=lambda m: (m.bit_count(), tuple(bits(m))))

    def format_set(self, mask: int, braces: bool = False) -> str:
        """Render a subset: ``∅``, ``U``, and otherwise ``134`` for
        single-character label universes unless ``braces`` asks for ``{1,3,4}``."""
        if mask == 0:
            return "∅"
        if mask == self.full:
            return "U"
        labs = self.labels_of(mask)
        if not braces and all(len(l) == 1 for l in self.labels):
            return "".join(labs)
        return "{" + ",".join(labs) + "}"

    def format_pair(self, lower: int, upper: int) -> str:
        return f"({self.format_set(lower)},{self.format_set(upper)})"

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Universe) and self.labels == other.labels

    def __hash__(self) -> int:
        return hash(self.labels)

    def __repr__(self) -> str:
        return f"Universe({list(self.labels)!r})"


def _require_same_universe(a, b) -> None:
    if a.universe != b.universe:
        raise UniverseMismatch("operands are defined over different universes")


class Relation:
    """A binary relation stored as one neighbourhood mask per element."""

    __slots__ = ("universe", "rows")

    def __init__(self, universe: Universe, rows: Iterable[int]):
        rows = tuple(rows)
        if len(rows) != universe.size:
            raise ValueError(f"expected {universe.size} rows, got {len(rows)}")
        for row in rows:
            universe.check_mask(row)
        self.universe = universe
        self.rows = rows

    @classmethod
    def from_pairs(cls, universe: Universe, pairs: Iterable[tuple[str, str]]) -> "Relation":
        """Build from explicit label pairs; nothing is implied, not even reflexivity."""
        rows = [0] * universe.size
        for a, b in pairs:
            rows[universe.index(a)] |= 1 << universe.index(b)
        return cls(universe, rows)

    @classmethod
    def from_neighborhoods(cls, universe: Universe, neigh: Mapping[str, Iterable[str]]) -> "Relation":
        rows = [0] * universe.size
        for a, labs in neigh.items():
            rows[universe.index(a)] = universe.subset(labs)
        return cls(universe, rows)

    @classmethod
    def identity(cls, universe: Universe) -> "Relation":
        return cls(universe, (1 << i for i in range(universe.size)))

    @classmethod
    def full(cls, universe: Universe) -> "Relation":
        return cls(universe, (universe.full for _ in range(universe.size)))

    @classmethod
    def empty(cls, universe: Universe) -> "Relation":
        return cls(universe, (0 for _ in range(universe.size)))

    def neighborhood(self, label: str) -> int:
        """Mask of all elements related to ``label``."""
        return self.rows[self.universe.index(label)]

    def has(self, a: str, b: str) -> bool:
        return bool(self.rows[self.universe.index(a)] >> self.universe.index(b) & 1)

    def pairs(self) -> list[tuple[str, str]]:
        """All related label pairs, (row, column) sorted; reflexive pairs included."""
        labs = self.universe.labels
        return [(labs[i], labs[j]) for i, row in enumerate(self.rows) for j in bits(row)]

    def is_reflexive(self) -> bool:
        return all(row >> i & 1 for i, row in enumerate(self.rows))

    def is_symmetric(self) -> bool:
        rows = self.rows
        return all(rows[j] >> i & 1 for i, row in enumerate(rows) for j in bits(row))

    def is_transitive(self) -> bool:
        rows = self.rows
        return all(rows[j] & ~row == 0 for row in rows for j in bits(row))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Relation) and self.universe == other.universe and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.universe, self.rows))

    def __le__(self, other: "Relation") -> bool:
        """Subrelation test."""
        _require_same_universe(self, other)
        return all(a & ~b == 0 for a, b in zip(self.rows, other.rows))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.universe!r}, {list(self.rows)!r})"


class Tolerance(Relation):
    """A reflexive and symmetric relation; construction enforces both axioms."""

    __slots__ = ()

    def __init__(self, universe: Universe, rows: Iterable[int]):
        super().__init__(universe, rows)
        labs = universe.labels
        for i, row in enumerate(self.rows):
            if not row >> i & 1:
                raise ValueError(f"not reflexive: missing ({labs[i]}, {labs[i]})")
        for i, row in enumerate(self.rows):
            for j in bits(row):
                if not self.rows[j] >> i & 1:
                    raise ValueError(f"not symmetric: ({labs[i]}, {labs[j]}) without ({labs[j]}, {labs[i]})")


class Equivalence(Tolerance):
    """A reflexive, symmetric, transitive relation; all three checked eagerly."""

    __slots__ = ("_classes",)

    def __init__(self, universe: Universe, rows: Iterable[int]):
        super().__init__(universe, rows)
        labs = universe.labels
        for i, row in enumerate(self.rows):
            for j in bits(row):
                extra = self.rows[j] & ~row
                if extra:
                    k = next(bits(extra))
                    raise ValueError(
                        f"not transitive: ({labs[i]}, {labs[j]}) and ({labs[j]}, {labs[k]}) "
                        f"without ({labs[i]}, {labs[k]})"
                    )
        self._classes = None

    @classmethod
    def from_partition(cls, universe: Universe, parts: Iterable[Iterable[str]]) -> "Equivalence":
        rows = [0] * universe.size
        seen = 0
        for part in parts:
            mask = universe.subset(part)
            if mask == 0:
                raise ValueError("partition classes must be non-empty")
            if mask & seen:
                raise ValueError("partition classes must be disjoint")
            seen |= mask
            for i in bits(mask):
                rows[i] = mask
        if seen != universe.full:
            missing = universe.labels_of(universe.full & ~seen)
            raise ValueError(f"partition does not cover the universe; missing {missing}")
        return cls(universe, rows)

    def classes(self) -> tuple[int, ...]:
        """The distinct class masks, ascending as integers."""
        if self._classes is None:
            self._classes = tuple(sorted(set(self.rows)))
        return self._classes


def product(r: Relation, s: Relation) -> Relation:
    """Relational product: x related to y iff some z has x R z and z S y."""
    _require_same_universe(r, s)
    out = []
    for row in r.rows:
        acc = 0
        for z in bits(row):
            acc |= s.rows[z]
        out.append(acc)
    return Relation(r.universe, out)


def inverse(r: Relation) -> Relation:
    out = [0] * r.universe.size
    for i, row in enumerate(r.rows):
        for j in bits(row):
            out[j] |= 1 << i
    return Relation(r.universe, out)


def kernel(t: Tolerance) -> Equivalence:
    """The equivalence grouping elements with identical neighbourhoods."""
    groups: dict[int, int] = {}
    for i, row in enumerate(t.rows):
        groups[row] = groups.get(row, 0) | (1 << i)
    rows = [0] * t.universe.size
    for mask in groups.values():
        for i in bits(mask):
            rows[i] = mask
    return Equivalence(t.universe, rows)


def blocks(t: Tolerance) -> tuple[int, ...]:
    """All maximal cliques of the tolerance, ascending as masks.

    Bron-Kerbosch with pivoting; universes are small enough that the
    worst-case exponential cost is irrelevant.
    """
    n = t.universe.size
    adj = [t.rows[i] & ~(1 << i) for i in range(n)]
    found: list[int] = []

    def expand(clique: int, cand: int, done: int) -> None:
        if not cand and not done:
            found.append(clique)
            return
        pool = cand | done
        pivot, best = -1, -1
        m = pool
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            c = (cand & adj[u]).bit_count()
            if c > best:
                best, pivot = c, u
        todo = cand & ~adj[pivot]
        while todo:
            low = todo & -todo
            v = low.bit_length() - 1
            todo ^= low
            expand(clique | low, cand & adj[v], done & adj[v])
            cand &= ~low
            done |= low

    if n:
        expand(0, t.universe.full, 0)
    return tuple(sorted(found))


class Covering:
    """A family of non-empty subsets whose union is the whole universe."""

    __slots__ = ("universe", "members")

    def __init__(self, universe: Universe, members: Iterable[int]):
        members = tuple(sorted(set(members)))
        union = 0
        for m in members:
            universe.check_mask(m)
            if m == 0:
                raise ValueError("covering members must be non-empty")
            union |= m
        if union != universe.full:
            missing = universe.labels_of(universe.full & ~union)
            raise ValueError(f"not a covering; missing {missing}")
        self.universe = universe
        self.members = members

    @classmethod
    def from_labels(cls, universe: Universe, parts: Iterable[Iterable[str]]) -> "Covering":
        return cls(universe, (universe.subset(p) for p in parts))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Covering) and self.universe == other.universe and self.members == other.members

    def __hash__(self) -> int:
        return hash((self.universe, self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __repr__(self) -> str:
        sets = [self.universe.format_set(m) for m in self.members]
        return f"Covering({', '.join(sets)})"


def induced_tolerance(c: Covering) -> Tolerance:
    """x related to y iff some member contains both."""
    rows = [0] * c.universe.size
    for m in c.members:
        for i in bits(m):
            rows[i] |= m
    return Tolerance(c.universe, rows)


def is_irredundant(c: Covering) -> tuple[bool, int | None]:
    """Whether no member can be dropped; if one can, return it as witness."""
    for i, m in enumerate(c.members):
        rest = 0
        for j, other in enumerate(c.members):
            if j != i:
                rest |= other
        if rest == c.universe.full:
            return False, m
    return True, None


def membership_profile_kernel(c: Covering) -> Equivalence:
    """Equivalence relating elements that lie in exactly the same members.

    Only valid for irredundant coverings, where it coincides with the kernel
    of the induced tolerance; a redundant covering is rejected.
    """
    ok, removable = is_irredundant(c)
    if not ok:
        assert removable is not None
        raise HypothesisNotMet(
            f"covering is redundant (member {c.universe.format_set(removable)} is removable)"
        )
    groups: dict[tuple[int, ...], int] = {}
    for i in range(c.universe.size):
        profile = tuple(int(m >> i & 1) for m in c.members)
        groups[profile] = groups.get(profile, 0) | (1 << i)
    rows = [0] * c.universe.size
    for mask in groups.values():
        for i in bits(mask):
            rows[i] = mask
    return Equivalence(c.universe, rows)


def induced_irredundant_covering(t: Tolerance) -> Covering:
    """The unique irredundant covering inducing ``t``, when one exists.

    A tolerance induced by an irredundant covering is induced by exactly one:
    the family of neighbourhoods that are blocks.  We build that family and
    verify it; failure means no irredundant covering induces ``t``.
    """
    block_set = set(blocks(t))
    members = sorted({row for row in t.rows if row in block_set})
    union = 0
    for m in members:
        union |= m
    if union != t.universe.full:
        raise HypothesisNotMet("tolerance is not induced by an irredundant covering (block neighbourhoods do not cover)")
    cov = Covering(t.universe, members)
    if induced_tolerance(cov) != Tolerance(t.universe, t.rows):
        raise HypothesisNotMet("tolerance is not induced by an irredundant covering (block neighbourhoods induce a different relation)")
    ok, _ = is_irredundant(cov)
    if not ok:
        raise HypothesisNotMet("tolerance is not induced by an irredundant covering (block-neighbourhood covering is redundant)")
    return cov


# ---------------------------------------------------------------------------
# JSON interchange.  Relations: {"universe": [...], "pairs": [[a,b], ...]}
# with every pair listed explicitly.  Coverings: {"universe": [...],
# "blocks": [[...], ...]}.

def relation_to_dict(r: Relation) -> dict:
    return {"universe": list(r.universe.labels), "pairs": [list(p) for p in r.pairs()]}

def relation_from_dict(data: Mapping, cls: type[Relation] = Relation) -> Relation:
    u = Universe(data["universe"])
    return cls.from_pairs(u, ((a, b) for a, b in data["pairs"]))

def load_relation(path: str | Path, cls: type[Relation] = Relation) -> Relation:
    with open(path, encoding="utf-8") as fh:
        return relation_from_dict(json.load(fh), cls)

def save_relation(r: Relation, path: str | Path) -> None:
    Path(path).write_text(json.dumps(relation_to_dict(r), indent=2) + "\n", encoding="utf-8")

def covering_to_dict(c: Covering) -> dict:
    return {"universe": list(c.universe.labels), "blocks": [list(c.universe.labels_of(m)) for m in c.members]}

def covering_from_dict(data: Mapping) -> Covering:
    u = Universe(data["universe"])
    return Covering.from_labels(u, data["blocks"])

def load_covering(path: str | Path) -> Covering:
    with open(path, encoding="utf-8") as fh:
        return covering_from_dict(json.load(fh))

def save_covering(c: Covering, path: str | Path) -> None:
    Path(path).write_text(json.dumps(covering_to_dict(c), indent=2) + "\n", encoding="utf-8")
