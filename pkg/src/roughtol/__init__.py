"""Rough approximation pairs over an equivalence and a compatible tolerance.

The lower approximation of a subset is taken through an equivalence (strict
knowledge), the upper approximation through a tolerance compatible with it
(soft knowledge).  The package builds the resulting ordered sets of pairs,
evaluates their closed-form joins and meets, and verifies the algebraic
structure against order-only searches.
"""

from .algebra import (
    AlgebraReport,
    PseudoQuad,
    Verdict,
    analyze,
    dual_pseudocomplement,
    find_diamond,
    find_pentagon,
    is_complete_sublattice,
    is_distributive,
    is_double_stone,
    is_heyting,
    is_lattice,
    is_regular_double_p_algebra,
    is_self_dual,
    is_stone,
    meet_closure_condition,
    meet_closure_condition_eq,
    pseudocomplement,
    pseudocomplement_formulas,
    relative_pseudocomplement,
)
from .approximation import (
    ENUMERATION_CAP,
    definable_family,
    is_definable,
    lower,
    lower_family,
    upper,
    upper_family,
)
from .compatibility import (
    CompatibilityReport,
    is_compatible,
    is_similarity_extension,
    isolated_elements,
    require_compatible,
)
from .errors import CapExceeded, CsvError, HypothesisNotMet, NotCompatible, UniverseMismatch
from .infosys import Attribute, InformationSystem, graded, ind, load_csv, sim, wind
from .lattice import (
    RoughLattice,
    RoughPair,
    approximation_lattice,
    family_join,
    family_meet,
    is_representable_pair,
    meet_correction,
    rough_pair,
    tolerance_pair_poset,
)
from .relations import (
    Covering,
    Equivalence,
    Relation,
    Tolerance,
    Universe,
    blocks,
    covering_from_dict,
    covering_to_dict,
    induced_irredundant_covering,
    induced_tolerance,
    inverse,
    is_irredundant,
    kernel,
    load_covering,
    load_relation,
    membership_profile_kernel,
    product,
    relation_from_dict,
    relation_to_dict,
    save_covering,
    save_relation,
)

__version__ = "0.1.0"
