"""Shared test utilities.

The oracle functions here work on label sets and dicts, never on bitmasks,
so they exercise a genuinely independent code path from the package core.
Instance generators use an explicit ``random.Random`` so counted sweeps are
reproducible.
"""

from itertools import combinations

from hypothesis import strategies as st

from roughtol import Covering, Equivalence, Tolerance, Universe
from roughtol.relations import bits

# --- label-set oracles -------------------------------------------------------

def neigh_map(rel) -> dict[str, frozenset]:
    u = rel.universe
    return {a: frozenset(u.labels_of(rel.neighborhood(a))) for a in u.labels}


def oracle_lower(neigh: dict, x: frozenset) -> frozenset:
    return frozenset(a for a, na in neigh.items() if na <= x)


def oracle_upper(neigh: dict, x: frozenset) -> frozenset:
    return frozenset(a for a, na in neigh.items() if na & x)


def oracle_blocks(neigh: dict) -> set[frozenset]:
    """Maximal cliques by exhaustive subset enumeration."""
    labs = sorted(neigh)
    cliques = [
        frozenset(combo)
        for r in range(1, len(labs) + 1)
        for combo in combinations(labs, r)
        if all(b in neigh[a] for a, b in combinations(combo, 2))
    ]
    return {c for c in cliques if not any(c < d for d in cliques)}


def all_subsets(labels) -> list[frozenset]:
    labels = list(labels)
    out = []
    for mask in range(1 << len(labels)):
        out.append(frozenset(lab for i, lab in enumerate(labels) if mask >> i & 1))
    return out


# --- exhaustive partition enumeration ---------------------------------------

def set_partitions(seq):
    seq = list(seq)
    if not seq:
        yield []
        return
    head, rest = seq[0], seq[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[head] + part[i]] + part[i + 1 :]
        yield [[head]] + part


def all_equivalences(u: Universe):
    for part in set_partitions(u.labels):
        yield Equivalence.from_partition(u, part)


# --- seeded random generators -------------------------------------------------

def rand_partition(rng, labels) -> list[list[str]]:
    parts: list[list[str]] = []
    for lab in labels:
        if parts and rng.random() < 0.6:
            rng.choice(parts).append(lab)
        else:
            parts.append([lab])
    return parts


def rand_equivalence(rng, u: Universe) -> Equivalence:
    return Equivalence.from_partition(u, rand_partition(rng, list(u.labels)))


def rand_tolerance(rng, u: Universe) -> Tolerance:
    n = u.size
    rows = [1 << i for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.45:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Tolerance(u, rows)


def rand_compatible_tolerance(rng, e: Equivalence) -> Tolerance:
    """Lift a random tolerance on the quotient of classes back to elements."""
    classes = e.classes()
    k = len(classes)
    related = [[i == j for j in range(k)] for i in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            if rng.random() < 0.5:
                related[i][j] = related[j][i] = True
    rows = [0] * e.universe.size
    for i, ci in enumerate(classes):
        mask = 0
        for j, cj in enumerate(classes):
            if related[i][j]:
                mask |= cj
        for x in bits(ci):
            rows[x] = mask
    return Tolerance(e.universe, rows)


def rand_refinement(rng, coarse: Equivalence) -> Equivalence:
    parts: list[list[str]] = []
    for cls in coarse.classes():
        labs = list(coarse.universe.labels_of(cls))
        rng.shuffle(labs)
        parts.extend(rand_partition(rng, labs))
    return Equivalence.from_partition(coarse.universe, parts)


def rand_irredundant_covering(rng, u: Universe) -> Covering:
    n = u.size
    members: set[int] = set()
    for _ in range(rng.randint(1, max(2, n))):
        m = 0
        for i in range(n):
            if rng.random() < 0.5:
                m |= 1 << i
        if m:
            members.add(m)
    covered = 0
    for m in members:
        covered |= m
    for i in range(n):
        if not covered >> i & 1:
            members.add(1 << i)
    pool = sorted(members)
    rng.shuffle(pool)
    changed = True
    while changed:
        changed = False
        for m in list(pool):
            rest = 0
            for other in pool:
                if other != m:
                    rest |= other
            if rest == u.full:
                pool.remove(m)
                changed = True
                break
    return Covering(u, pool)


# --- hypothesis strategies -----------------------------------------------------

def small_universes(max_size: int = 5):
    return st.integers(1, max_size).map(lambda n: Universe(str(i + 1) for i in range(n)))


@st.composite
def tolerances(draw, max_size: int = 5):
    u = draw(small_universes(max_size))
    n = u.size
    rows = [1 << i for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if draw(st.booleans()):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Tolerance(u, rows)


@st.composite
def equivalences(draw, max_size: int = 5):
    u = draw(small_universes(max_size))
    parts: list[list[str]] = []
    for lab in u.labels:
        k = draw(st.integers(0, len(parts)))
        if k == len(parts):
            parts.append([lab])
        else:
            parts[k].append(lab)
    return Equivalence.from_partition(u, parts)


@st.composite
def compatible_pairs(draw, max_size: int = 5):
    e = draw(equivalences(max_size))
    classes = e.classes()
    k = len(classes)
    rows = [0] * e.universe.size
    related = [[i == j for j in range(k)] for i in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            if draw(st.booleans()):
                related[i][j] = related[j][i] = True
    for i, ci in enumerate(classes):
        mask = 0
        for j, cj in enumerate(classes):
            if related[i][j]:
                mask |= cj
        for x in bits(ci):
            rows[x] = mask
    return e, Tolerance(e.universe, rows)


def subset_masks(u: Universe):
    return st.integers(0, u.full)
