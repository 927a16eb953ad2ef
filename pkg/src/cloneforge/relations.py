"""Finitary relations and the preservation (polymorphism) test.

An n-ary operation f preserves a k-ary relation when applying f componentwise
to any n tuples of the relation lands back in the relation.  Unary relations
are subsets; preserving one means the subset is closed under f.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .operations import Operation, TableError


@dataclass(frozen=True)
class Relation:
    """A k-ary relation on {1..size}, stored as an explicit tuple set."""

    arity: int
    size: int
    tuples: frozenset[tuple[int, ...]]

    def __post_init__(self) -> None:
        if self.arity < 1:
            raise TableError(f"relation arity must be >= 1, got {self.arity}")
        if self.size < 2:
            raise TableError(f"relation size must be >= 2, got {self.size}")
        for t in self.tuples:
            if len(t) != self.arity:
                raise TableError(f"tuple {t} has arity {len(t)}, expected {self.arity}")
            for a in t:
                if not 1 <= a <= self.size:
                    raise TableError(f"tuple entry out of range in {t}")


def make_relation(arity: int, size: int, tuples: Iterable[Sequence[int]]) -> Relation:
    return Relation(arity, size, frozenset(tuple(t) for t in tuples))


def subset_relation(members: Iterable[int], size: int) -> Relation:
    """The unary relation holding exactly the given subset."""
    return Relation(1, size, frozenset((a,) for a in members))


def preserves(f: Operation, rho: Relation) -> bool:
    """Exhaustive preservation test over all |rho|^arity tuple choices."""
    if f.size != rho.size:
        raise TableError(f"size mismatch: operation on {f.size}, relation on {rho.size}")
    rows = sorted(rho.tuples)
    members = rho.tuples
    for choice in itertools.product(rows, repeat=f.arity):
        image = tuple(f(*(choice[j][i] for j in range(f.arity))) for i in range(rho.arity))
        if image not in members:
            return False
    return True


def partition_relation(blocks: Iterable[Iterable[int]]) -> Relation:
    """The binary equivalence relation with the given blocks.

    Blocks must partition {1..k} where k is their total element count.
    """
    block_sets = [sorted(set(b)) for b in blocks]
    seen: set[int] = set()
    total = 0
    for b in block_sets:
        if not b:
            raise TableError("empty block")
        overlap = seen.intersection(b)
        if overlap:
            raise TableError(f"blocks overlap at {min(overlap)}")
        seen.update(b)
        total += len(b)
    if seen != set(range(1, total + 1)):
        gap = min(set(range(1, total + 1)) - seen)
        raise TableError(f"blocks leave a gap at {gap}")
    pairs = set()
    for b in block_sets:
        for x in b:
            for y in b:
                pairs.add((x, y))
    return Relation(2, total, frozenset(pairs))


def preserved_subsets(f: Operation) -> list[frozenset[int]]:
    """All nonempty subsets closed under f, ordered by size then lexicographically."""
    universe = range(1, f.size + 1)
    out = []
    for r in range(1, f.size + 1):
        for combo in itertools.combinations(universe, r):
            members = set(combo)
            if all(f(*t) in members for t in itertools.product(combo, repeat=f.arity)):
                out.append(frozenset(combo))
    return out


# ---------------------------------------------------------------------------
# Literal syntax: {(1,1),(1,4)} for tuple sets, {2,3,4} for subsets
# ---------------------------------------------------------------------------


def parse_relation(text: str, size: int) -> Relation:
    """Parse a relation literal against a known base-set size."""
    s = text.strip()
    if not (s.startswith("{") and s.endswith("}")):
        raise TableError(f"relation literal must be brace-delimited: {text!r}")
    body = s[1:-1].strip()
    if not body:
        raise TableError("empty relation literal")
    if "(" not in body:
        try:
            members = [int(tok.strip()) for tok in body.split(",") if tok.strip()]
        except ValueError:
            raise TableError(f"malformed subset literal: {text!r}") from None
        return subset_relation(members, size)
    tuples = []
    rest = body
    while rest:
        rest = rest.lstrip(", \t")
        if not rest:
            break
        if not rest.startswith("("):
            raise TableError(f"malformed tuple in relation literal: {rest!r}")
        end = rest.find(")")
        if end < 0:
            raise TableError(f"unterminated tuple in relation literal: {rest!r}")
        inner = rest[1:end]
        try:
            tuples.append(tuple(int(tok.strip()) for tok in inner.split(",")))
        except ValueError:
            raise TableError(f"malformed tuple ({inner})") from None
        rest = rest[end + 1 :]
    arities = {len(t) for t in tuples}
    if len(arities) != 1:
        raise TableError("mixed tuple arities in relation literal")
    return make_relation(arities.pop(), size, tuples)


def relation_to_string(rho: Relation) -> str:
    if rho.arity == 1:
        return "{" + ",".join(str(t[0]) for t in sorted(rho.tuples)) + "}"
    return "{" + ",".join("(" + ",".join(map(str, t)) + ")" for t in sorted(rho.tuples)) + "}"
