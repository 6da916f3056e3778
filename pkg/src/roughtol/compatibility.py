"""Compatibility of a tolerance with an equivalence.

A tolerance T is compatible with an equivalence E when relating through E
first and T second never leaves T.  Three equivalent criteria exist: the
product inclusion E∘T ⊆ T, the kernel inclusion E ⊆ ker T, and every
T-block being a union of E-classes.  Normal builds evaluate all three and
abort on internal disagreement; under ``python -O`` only the cheapest
(kernel inclusion) runs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .approximation import is_definable
from .errors import NotCompatible
from .relations import Equivalence, Relation, Tolerance, _require_same_universe, bits, blocks, kernel, product

__all__ = [
    "CompatibilityReport",
    "is_compatible",
    "require_compatible",
    "is_similarity_extension",
    "isolated_elements",
]


@dataclass(frozen=True)
class CompatibilityReport:
    compatible: bool
    kernel_inclusion: bool
    blocks_definable: bool
    witness: tuple[str, str, str] | None  # (x, z, y): x E z and z T y but not x T y

    def describe(self) -> str:
        if self.compatible:
            return "compatible"
        x, z, y = self.witness
        return f"witness: {x} E {z} and {z} T {y} but not {x} T {y}"

    def to_json_dict(self) -> dict:
        return {
            "compatible": self.compatible,
            "kernel_inclusion": self.kernel_inclusion,
            "blocks_definable": self.blocks_definable,
            "witness": list(self.witness) if self.witness else None,
        }


def _subrelation(r: Relation, s: Relation) -> bool:
    return all(a & ~b == 0 for a, b in zip(r.rows, s.rows))


def _least_witness(e: Equivalence, t: Tolerance) -> tuple[str, str, str]:
    # Lexicographically least (x, z, y) violating the product inclusion.
    labs = e.universe.labels
    for x in range(e.universe.size):
        for z in bits(e.rows[x]):
            bad = t.rows[z] & ~t.rows[x]
            if bad:
                y = next(bits(bad))
                return labs[x], labs[z], labs[y]
    raise AssertionError("no witness found for an incompatible pair")


def is_compatible(e: Equivalence, t: Tolerance) -> CompatibilityReport:
    """Evaluate compatibility, reporting all criteria and a witness on failure."""
    _require_same_universe(e, t)
    ker = kernel(t)
    kernel_ok = _subrelation(e, ker)
    blocks_ok = kernel_ok
    if __debug__:
        product_ok = _subrelation(product(e, t), t)
        blocks_ok = all(is_definable(e, b) for b in blocks(t))
        assert kernel_ok == product_ok == blocks_ok, (
            "internal fault: compatibility criteria disagree "
            f"(kernel={kernel_ok}, product={product_ok}, blocks={blocks_ok})"
        )
    witness = None if kernel_ok else _least_witness(e, t)
    return CompatibilityReport(kernel_ok, kernel_ok, blocks_ok, witness)


def require_compatible(e: Equivalence, t: Tolerance) -> None:
    report = is_compatible(e, t)
    if not report.compatible:
        raise NotCompatible(report)


def is_similarity_extension(e: Equivalence, r: Relation) -> bool:
    """Whether ``r`` extends ``e``: each class sits inside its members'
    neighbourhoods, and neighbourhoods absorb whole classes."""
    _require_same_universe(e, r)
    for erow, rrow in zip(e.rows, r.rows):
        if erow & ~rrow:
            return False
    for rrow in r.rows:
        for y in bits(rrow):
            if e.rows[y] & ~rrow:
                return False
    return True


def isolated_elements(r: Relation) -> int:
    """Elements related to nothing but themselves.

    For an equivalence this is the union of its one-element classes; for a
    tolerance, the union of its one-element neighbourhoods.
    """
    out = 0
    bit = 1
    for row in r.rows:
        if row == bit:
            out |= bit
        bit <<= 1
    return out
