"""Attribute tables and the relations they induce.

An information system is a total table: one value per (object, attribute).
Attributes are either symbolic (values compared as trimmed, case-sensitive
strings) or numeric with a non-negative threshold.  Numeric values are held
as exact decimals so that threshold comparisons are bit-exact and symmetric.

CSV layout:

    object,colour,size        <- header; first column holds object labels
    ,,0.5                      <- optional threshold row (empty first cell);
                                  blank cell = symbolic attribute
    o1,red,1.0
    o2,blue,1.4
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from pathlib import Path
from typing import Iterable

from .errors import CsvError
from .relations import Equivalence, Tolerance, Universe

__all__ = [
    "Attribute",
    "InformationSystem",
    "ind",
    "wind",
    "sim",
    "graded",
    "load_csv",
]


@dataclass(frozen=True)
class Attribute:
    name: str
    values: tuple  # str per object if symbolic, Decimal if numeric
    epsilon: Decimal | None = None  # None marks a symbolic attribute

    @property
    def numeric(self) -> bool:
        return self.epsilon is not None


@dataclass(frozen=True)
class InformationSystem:
    universe: Universe
    attributes: tuple[Attribute, ...]

    def __post_init__(self):
        names = set()
        for attr in self.attributes:
            if attr.name in names:
                raise ValueError(f"duplicate attribute name {attr.name!r}")
            names.add(attr.name)
            if len(attr.values) != self.universe.size:
                raise ValueError(f"attribute {attr.name!r} has {len(attr.values)} values for {self.universe.size} objects")
            if attr.epsilon is not None and attr.epsilon < 0:
                raise ValueError(f"attribute {attr.name!r} has a negative threshold")

    def attribute(self, name: str) -> Attribute:
        for attr in self.attributes:
            if attr.name == name:
                return attr
        raise ValueError(f"unknown attribute {name!r}")

    def names(self) -> tuple[str, ...]:
        return tuple(a.name for a in self.attributes)


def _pick(s: InformationSystem, names: Iterable[str]) -> list[Attribute]:
    picked = [s.attribute(n) for n in names]
    if not picked:
        raise ValueError("attribute selection must be non-empty")
    return picked


def _relation_rows(s: InformationSystem, related) -> list[int]:
    n = s.universe.size
    rows = [0] * n
    for i in range(n):
        rows[i] |= 1 << i
        for j in range(i + 1, n):
            if related(i, j):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return rows


def ind(s: InformationSystem, names: Iterable[str]) -> Equivalence:
    """Indiscernibility: objects agreeing on every selected attribute."""
    attrs = _pick(s, names)
    return Equivalence(
        s.universe,
        _relation_rows(s, lambda i, j: all(a.values[i] == a.values[j] for a in attrs)),
    )


def wind(s: InformationSystem, names: Iterable[str]) -> Tolerance:
    """Weak indiscernibility: objects agreeing on at least one selected attribute."""
    attrs = _pick(s, names)
    return Tolerance(
        s.universe,
        _relation_rows(s, lambda i, j: any(a.values[i] == a.values[j] for a in attrs)),
    )


def sim(s: InformationSystem, names: Iterable[str]) -> Tolerance:
    """Threshold similarity: values within each attribute's threshold."""
    attrs = _pick(s, names)
    for a in attrs:
        if not a.numeric:
            raise ValueError(f"attribute {a.name!r} is symbolic; threshold similarity needs numeric attributes")
    return Tolerance(
        s.universe,
        _relation_rows(s, lambda i, j: all(abs(a.values[i] - a.values[j]) <= a.epsilon for a in attrs)),
    )


def graded(s: InformationSystem, names: Iterable[str], k: int) -> Tolerance:
    """Graded similarity: objects agreeing on at least ``k`` selected attributes."""
    attrs = _pick(s, names)
    if not 0 < k <= len(attrs):
        raise ValueError(f"k must satisfy 0 < k <= {len(attrs)}, got {k}")
    return Tolerance(
        s.universe,
        _relation_rows(s, lambda i, j: sum(a.values[i] == a.values[j] for a in attrs) >= k),
    )


def load_csv(path: str | Path) -> InformationSystem:
    """Read an information system from CSV (layout in the module docstring)."""
    with open(path, newline="", encoding="utf-8") as fh:
        raw = [[cell.strip() for cell in row] for row in csv.reader(fh)]
    if not raw or len(raw[0]) < 2:
        raise CsvError("need a header row naming at least one attribute")
    header = raw[0]
    attr_names = header[1:]
    width = len(header)
    for r, row in enumerate(raw, start=1):
        if len(row) != width:
            raise CsvError(f"row {r}: expected {width} cells, got {len(row)}")

    body = raw[1:]
    epsilons: list[Decimal | None] = [None] * len(attr_names)
    has_eps_row = bool(body) and body[0][0] == ""
    if has_eps_row:
        for c, cell in enumerate(body[0][1:], start=2):
            if cell == "":
                continue
            try:
                eps = Decimal(cell)
            except InvalidOperation:
                raise CsvError(f"row 2, column {c}: bad threshold {cell!r}") from None
            if eps < 0:
                raise CsvError(f"row 2, column {c}: negative threshold {cell!r}")
            epsilons[c - 2] = eps
        body = body[1:]

    labels: list[str] = []
    seen: set[str] = set()
    columns: list[list] = [[] for _ in attr_names]
    for offset, row in enumerate(body):
        r = offset + (3 if has_eps_row else 2)
        label = row[0]
        if not label:
            raise CsvError(f"row {r}: empty object label")
        if label in seen:
            raise CsvError(f"row {r}: duplicate object label {label!r}")
        seen.add(label)
        labels.append(label)
        for c, cell in enumerate(row[1:]):
            if cell == "":
                raise CsvError(f"row {r}, column {c + 2}: missing value for attribute {attr_names[c]!r}")
            if epsilons[c] is not None:
                try:
                    columns[c].append(Decimal(cell))
                except InvalidOperation:
                    raise CsvError(
                        f"row {r}, column {c + 2}: non-numeric value {cell!r} under numeric attribute {attr_names[c]!r}"
                    ) from None
            else:
                columns[c].append(cell)

    universe = Universe(labels)
    attributes = tuple(
        Attribute(name, tuple(col), eps) for name, col, eps in zip(attr_names, columns, epsilons)
    )
    return InformationSystem(universe, attributes)
