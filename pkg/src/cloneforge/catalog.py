"""Built-in reference operations and their clones' majority-member tables.

Six generators ship with the package: m1, m2, m3 on {1,2,3} and M1, M2, M3
on {1,2,3,4}.  Each generates a minimal clone; the full majority-member
lists of those clones are embedded as independent data so that closure
computations can be compared against ground truth rather than against
themselves.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from .clones import MinimalityKind, is_minimal_majority, majority_members
from .operations import (
    Operation,
    TableError,
    find_isomorphism,
    is_majority,
    majority_from_distinct,
    restrict,
)

_ROWS_3 = ((1, 2, 3), (2, 3, 1), (3, 1, 2), (2, 1, 3), (1, 3, 2), (3, 2, 1))
_ROWS_LOW = _ROWS_3  # support {1,2,3} triples on the 4-element set
_ROWS_HIGH = ((4, 2, 3), (2, 3, 4), (3, 4, 2), (2, 4, 3), (4, 3, 2), (3, 2, 4))

THREE_SUBSETS_4 = (
    frozenset({1, 2, 3}),
    frozenset({1, 2, 4}),
    frozenset({1, 3, 4}),
    frozenset({2, 3, 4}),
)


def _three_op(values: tuple[int, ...]) -> Operation:
    return majority_from_distinct(3, dict(zip(_ROWS_3, values)))


def _iter_distinct4() -> list[tuple[int, int, int]]:
    import itertools

    return list(itertools.permutations((1, 2, 3, 4), 3))


def _four_op(low: tuple[int, ...], high: tuple[int, ...]) -> Operation:
    """Majority operation on {1..4}: given values on the {1,2,3}- and
    {2,3,4}-support triples, value 4 on every other distinct triple."""
    values: dict[tuple[int, int, int], int] = {}
    values.update(zip(_ROWS_LOW, low))
    values.update(zip(_ROWS_HIGH, high))
    return majority_from_distinct(4, {t: values.get(t, 4) for t in _iter_distinct4()})


# Majority members of the three minimal clones on {1,2,3}, one tuple of
# distinct-triple values per member, rows ordered as _ROWS_3.
_MEMBERS_3_DATA: dict[str, tuple[tuple[int, ...], ...]] = {
    "m1": ((1, 1, 1, 1, 1, 1),),
    "m2": (
        (1, 2, 3, 2, 1, 3),
        (2, 3, 1, 1, 3, 2),
        (3, 1, 2, 3, 2, 1),
    ),
    "m3": (
        (2, 2, 2, 3, 3, 3),
        (3, 2, 2, 3, 2, 3),
        (2, 2, 3, 2, 3, 3),
        (2, 3, 2, 3, 3, 2),
        (3, 3, 3, 2, 2, 2),
        (2, 3, 3, 2, 3, 2),
        (3, 3, 2, 3, 2, 2),
        (3, 2, 3, 2, 2, 3),
    ),
}

# Majority members of the clones of M1, M2, M3: values on the {1,2,3}-support
# rows and the {2,3,4}-support rows; every member maps all distinct triples
# inside {1,2,4} and {1,3,4} to 4.
_MEMBERS_4_DATA: dict[str, tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]] = {
    "M1": (((4, 4, 4, 4, 4, 4), (4, 4, 4, 4, 4, 4)),),
    "M2": (
        ((4, 2, 3, 2, 4, 3), (4, 2, 3, 2, 4, 3)),
        ((2, 3, 4, 4, 3, 2), (2, 3, 4, 4, 3, 2)),
        ((3, 4, 2, 3, 2, 4), (3, 4, 2, 3, 2, 4)),
    ),
    "M3": (
        ((3, 3, 3, 4, 4, 4), (3, 3, 3, 4, 4, 4)),
        ((3, 4, 3, 3, 4, 4), (3, 4, 3, 3, 4, 4)),
        ((4, 3, 3, 4, 4, 3), (4, 3, 3, 4, 4, 3)),
        ((3, 3, 4, 4, 3, 4), (3, 3, 4, 4, 3, 4)),
        ((4, 4, 4, 3, 3, 3), (4, 4, 4, 3, 3, 3)),
        ((4, 3, 4, 4, 3, 3), (4, 3, 4, 4, 3, 3)),
        ((3, 4, 4, 3, 3, 4), (3, 4, 4, 3, 3, 4)),
        ((4, 4, 3, 3, 4, 3), (4, 4, 3, 3, 4, 3)),
    ),
}

GENERATOR_NAMES = ("m1", "m2", "m3", "M1", "M2", "M3")


def generator(name: str) -> Operation:
    """One of the six built-in generators, by CLI name."""
    if name in _MEMBERS_3_DATA:
        return _three_op(_MEMBERS_3_DATA[name][0])
    if name in _MEMBERS_4_DATA:
        low, high = _MEMBERS_4_DATA[name][0]
        return _four_op(low, high)
    raise TableError(f"unknown table name {name!r}; expected one of {GENERATOR_NAMES}")


def m_table(i: int) -> Operation:
    """Generator m1, m2 or m3 on the 3-element set."""
    if i not in (1, 2, 3):
        raise TableError(f"index must be 1..3, got {i}")
    return generator(f"m{i}")


def M_table(i: int) -> Operation:
    """Generator M1, M2 or M3 on the 4-element set."""
    if i not in (1, 2, 3):
        raise TableError(f"index must be 1..3, got {i}")
    return generator(f"M{i}")


def embedded_members(name: str) -> tuple[Operation, ...]:
    """The embedded majority-member list of the named generator's clone."""
    if name in _MEMBERS_3_DATA:
        return tuple(_three_op(v) for v in _MEMBERS_3_DATA[name])
    if name in _MEMBERS_4_DATA:
        return tuple(_four_op(low, high) for low, high in _MEMBERS_4_DATA[name])
    raise TableError(f"unknown table name {name!r}; expected one of {GENERATOR_NAMES}")


# ---------------------------------------------------------------------------
# Classification of majority operations on a 3-element set
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ThreeElementClassification:
    minimal: bool
    type_index: Optional[int] = None  # 1, 2 or 3 when minimal
    bijection: Optional[tuple[int, ...]] = None  # carries m<type> onto a clone member


_TYPE_BY_MEMBER_COUNT = {1: 1, 3: 2, 8: 3}


def classify_three_element(f: Operation, cap: int = 100_000) -> ThreeElementClassification:
    """Type of the minimal clone generated by f, or a non-minimal verdict.

    Types are discriminated by majority-member count first (1, 3 or 8), then
    pinned down by an explicit isomorphism from the matching built-in
    generator onto some clone member.
    """
    if f.size != 3:
        raise TableError(f"three-element classification requires size 3, got {f.size}")
    if not is_majority(f):
        raise TableError("three-element classification requires a majority operation")
    verdict = is_minimal_majority(f, cap)
    if verdict.kind is not MinimalityKind.MINIMAL:
        return ThreeElementClassification(minimal=False)
    members = majority_members(f, cap)
    count = len(members)
    if count not in _TYPE_BY_MEMBER_COUNT:
        raise RuntimeError(f"minimal clone with unexpected majority-member count {count}")
    type_index = _TYPE_BY_MEMBER_COUNT[count]
    base = m_table(type_index)
    for member in members:
        phi = find_isomorphism(base, member)
        if phi is not None:
            return ThreeElementClassification(minimal=True, type_index=type_index, bijection=phi)
    raise RuntimeError(
        f"minimal clone with {count} members contains no copy of the type-{type_index} generator"
    )


# ---------------------------------------------------------------------------
# Conservative gluing on the 4-element set
# ---------------------------------------------------------------------------


def glue_conservative(components: Mapping[frozenset[int], Operation]) -> Operation:
    """The majority operation whose restriction to each 3-subset is prescribed.

    Every pairwise-distinct triple on {1..4} lies in exactly one 3-subset, so
    the glue exists and is unique; it is conservative because each component
    takes values inside its own subset.
    """
    if set(components) != set(THREE_SUBSETS_4):
        raise TableError("components must cover exactly the four 3-subsets of {1,2,3,4}")
    for subset, comp in components.items():
        if comp.size != 3 or comp.arity != 3:
            raise TableError(f"component for {sorted(subset)} must be ternary on 3 elements")
        if not is_majority(comp):
            raise TableError(f"component for {sorted(subset)} is not a majority operation")
    values: dict[tuple[int, int, int], int] = {}
    for t in _iter_distinct4():
        support = frozenset(t)
        comp = components[support]
        ordered = sorted(support)
        rank = {a: i + 1 for i, a in enumerate(ordered)}
        local = comp(rank[t[0]], rank[t[1]], rank[t[2]])
        values[t] = ordered[local - 1]
    return majority_from_distinct(4, values)


def conservative_components(f: Operation) -> dict[frozenset[int], Operation]:
    """Restrictions of a conservative majority operation to the four 3-subsets."""
    if f.size != 4:
        raise TableError(f"conservative components require size 4, got {f.size}")
    return {subset: restrict(f, subset) for subset in THREE_SUBSETS_4}
