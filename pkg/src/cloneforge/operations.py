"""Finitary operations on small base sets, stored as flat value tables.

An operation of arity ``n`` on ``{1..k}`` is a table of ``k**n`` values in
``{1..k}``, indexed lexicographically by argument tuples with the *last*
argument varying fastest.  Elements are 1-based everywhere in the public API
so tables diff cleanly against printed references.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Optional, Sequence

MAX_SIZE = 8
MAX_ARITY = 4


class TableError(ValueError):
    """Raised when a value table is dimensionally or elementwise invalid."""


class SubsetNotClosedError(ValueError):
    """Raised when restricting an operation to a subset it does not preserve."""

    def __init__(self, message: str, violation: tuple[int, ...]):
        super().__init__(message)
        self.violation = violation


class FormatError(ValueError):
    """Raised on malformed operation text, carrying a 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Operation:
    """A total finitary operation on ``{1..size}``.

    ``table[i]`` is the value at the i-th argument tuple in lexicographic
    order (last argument fastest).  Instances validate on construction and
    are immutable, hashable values.
    """

    arity: int
    size: int
    table: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.arity <= MAX_ARITY:
            raise TableError(f"arity must be in 1..{MAX_ARITY}, got {self.arity}")
        if not 2 <= self.size <= MAX_SIZE:
            raise TableError(f"size must be in 2..{MAX_SIZE}, got {self.size}")
        expected = self.size**self.arity
        if not isinstance(self.table, tuple):
            object.__setattr__(self, "table", tuple(self.table))
        if len(self.table) != expected:
            raise TableError(f"table length {len(self.table)} != {expected}")
        for i, v in enumerate(self.table):
            if not isinstance(v, int) or not 1 <= v <= self.size:
                raise TableError(f"entry out of range at index {i}: {v!r}")

    def index(self, args: Sequence[int]) -> int:
        """Lexicographic table index of a 1-based argument tuple."""
        idx = 0
        for a in args:
            idx = idx * self.size + (a - 1)
        return idx

    def __call__(self, *args: int) -> int:
        if len(args) != self.arity:
            raise TableError(f"expected {self.arity} arguments, got {len(args)}")
        for a in args:
            if not 1 <= a <= self.size:
                raise TableError(f"argument out of range: {a}")
        return self.table[self.index(args)]

    def tuples(self) -> Iterable[tuple[int, ...]]:
        """All argument tuples in table order."""
        return itertools.product(range(1, self.size + 1), repeat=self.arity)

    def packed(self) -> bytes:
        """0-based table bytes; the canonical hash/dedup key for engines."""
        return bytes(v - 1 for v in self.table)


def make_operation(arity: int, size: int, table: Sequence[int]) -> Operation:
    """Validated construction from a flat value sequence."""
    return Operation(arity, size, tuple(table))


def operation_from_packed(arity: int, size: int, packed: bytes) -> Operation:
    """Inverse of :meth:`Operation.packed`."""
    return Operation(arity, size, tuple(v + 1 for v in packed))


def projection(arity: int, index: int, size: int) -> Operation:
    """The operation returning its ``index``-th argument everywhere."""
    if not 1 <= index <= arity:
        raise TableError(f"projection index {index} out of range 1..{arity}")
    table = tuple(t[index - 1] for t in itertools.product(range(1, size + 1), repeat=arity))
    return Operation(arity, size, table)


def compose(outer: Operation, inner: Sequence[Operation]) -> Operation:
    """Pointwise superposition ``outer(inner_1(t), ..., inner_n(t))``."""
    if len(inner) != outer.arity:
        raise TableError(f"need {outer.arity} inner operations, got {len(inner)}")
    if not inner:
        raise TableError("composition needs at least one inner operation")
    m = inner[0].arity
    for g in inner:
        if g.size != outer.size:
            raise TableError(f"size mismatch: {g.size} != {outer.size}")
        if g.arity != m:
            raise TableError(f"inner arity mismatch: {g.arity} != {m}")
    size = outer.size
    tabs = [g.table for g in inner]
    out = []
    for pos in range(size**m):
        idx = 0
        for tab in tabs:
            idx = idx * size + (tab[pos] - 1)
        out.append(outer.table[idx])
    return Operation(m, size, tuple(out))


# ---------------------------------------------------------------------------
# Structural predicates
# ---------------------------------------------------------------------------


def is_projection(f: Operation) -> Optional[int]:
    """Return the 1-based projection index if ``f`` is a projection, else None."""
    for i in range(1, f.arity + 1):
        if f == projection(f.arity, i, f.size):
            return i
    return None


def is_idempotent(f: Operation) -> bool:
    """``f(x, ..., x) == x`` for every element x."""
    return all(f(*([x] * f.arity)) == x for x in range(1, f.size + 1))


def _require_ternary(f: Operation, what: str) -> None:
    if f.arity != 3:
        raise TableError(f"{what} requires arity 3, got {f.arity}")


def is_majority(f: Operation) -> bool:
    """Ternary f with ``f(x,x,y) == f(x,y,x) == f(y,x,x) == x`` for all x, y."""
    _require_ternary(f, "is_majority")
    for x in range(1, f.size + 1):
        for y in range(1, f.size + 1):
            if f(x, x, y) != x or f(x, y, x) != x or f(y, x, x) != x:
                return False
    return True


def is_near_unanimity(f: Operation) -> bool:
    """Value x whenever at most one argument differs from x (arity >= 2)."""
    if f.arity < 2:
        raise TableError("near-unanimity requires arity >= 2")
    for x in range(1, f.size + 1):
        for y in range(1, f.size + 1):
            for i in range(f.arity):
                args = [x] * f.arity
                args[i] = y
                if f(*args) != x:
                    return False
    return True


def is_semiprojection(f: Operation) -> bool:
    """Some fixed argument is returned whenever arguments are not pairwise distinct."""
    candidates = set(range(f.arity))
    for t in f.tuples():
        if len(set(t)) == len(t):
            continue
        v = f(*t)
        candidates = {i for i in candidates if t[i] == v}
        if not candidates:
            return False
    return True


def is_cyclically_commutative(f: Operation) -> bool:
    """Invariant under cyclic rotation of the three arguments."""
    _require_ternary(f, "is_cyclically_commutative")
    for x, y, z in f.tuples():
        v = f(x, y, z)
        if f(y, z, x) != v or f(z, x, y) != v:
            return False
    return True


def is_conservative(f: Operation) -> bool:
    """The value always lies among the arguments (every subset is preserved)."""
    return all(f(*t) in t for t in f.tuples())


def is_boolean_minority(f: Operation) -> bool:
    """True iff ``f(x,y,z) = x + y + z`` under some Boolean-group labeling.

    Quantifies existentially over all group structures on the base set whose
    every element is self-inverse; the search fixes the image of element 1 at
    the group zero, which loses no generality (translation by a constant is a
    group automorphism of x + y + z).
    """
    _require_ternary(f, "is_boolean_minority")
    k = f.size
    if k & (k - 1):
        raise TableError(f"boolean minority requires size a power of 2, got {k}")
    rest = list(range(1, k))
    for perm in itertools.permutations(rest):
        label = (0,) + perm  # label[a-1] = group element of a, with 1 -> 0
        unlabel = [0] * k
        for a, g in enumerate(label):
            unlabel[g] = a + 1
        if all(f(x, y, z) == unlabel[label[x - 1] ^ label[y - 1] ^ label[z - 1]] for x, y, z in f.tuples()):
            return True
    return False


# ---------------------------------------------------------------------------
# Restriction and range
# ---------------------------------------------------------------------------


def restrict(f: Operation, subset: Iterable[int]) -> Operation:
    """Restrict ``f`` to a preserved subset, re-indexed over its sorted order."""
    members = sorted(set(subset))
    if not members:
        raise TableError("cannot restrict to the empty set")
    for a in members:
        if not 1 <= a <= f.size:
            raise TableError(f"subset element out of range: {a}")
    if len(members) < 2:
        raise TableError("restriction target must have at least 2 elements")
    rank = {a: i + 1 for i, a in enumerate(members)}
    table = []
    for t in itertools.product(members, repeat=f.arity):
        v = f(*t)
        if v not in rank:
            raise SubsetNotClosedError(
                f"subset {{{','.join(map(str, members))}}} not closed: f{t} = {v}", t
            )
        table.append(rank[v])
    return Operation(f.arity, len(members), tuple(table))


def preserves_subset(f: Operation, subset: Iterable[int]) -> bool:
    """True iff the subset is closed under ``f``."""
    members = sorted(set(subset))
    return all(f(*t) in set(members) for t in itertools.product(members, repeat=f.arity))


def range_of(f: Operation) -> frozenset[int]:
    """Values of a ternary operation over all pairwise-distinct argument triples."""
    _require_ternary(f, "range_of")
    return frozenset(f(*t) for t in itertools.permutations(range(1, f.size + 1), 3))


def distinct_triples(size: int) -> list[tuple[int, int, int]]:
    """All ordered pairwise-distinct triples over {1..size}, lexicographically."""
    return sorted(itertools.permutations(range(1, size + 1), 3))


def majority_from_distinct(size: int, values: Mapping[tuple[int, int, int], int]) -> Operation:
    """Majority operation with prescribed values on the pairwise-distinct triples.

    Non-distinct triples take the majority value; every distinct triple must be
    assigned exactly once.
    """
    need = set(distinct_triples(size))
    given = set(values)
    if given != need:
        missing = sorted(need - given)
        extra = sorted(given - need)
        if missing:
            raise TableError(f"missing distinct triple {missing[0]}")
        raise TableError(f"unexpected triple {extra[0]}")
    table = []
    for x, y, z in itertools.product(range(1, size + 1), repeat=3):
        if x == y or x == z:
            table.append(x)
        elif y == z:
            table.append(y)
        else:
            table.append(values[(x, y, z)])
    return Operation(3, size, tuple(table))


def distinct_values(f: Operation) -> dict[tuple[int, int, int], int]:
    """The distinct-triple slice of a ternary table."""
    _require_ternary(f, "distinct_values")
    return {t: f(*t) for t in distinct_triples(f.size)}


# ---------------------------------------------------------------------------
# Isomorphism and canonical form
# ---------------------------------------------------------------------------


def all_bijections(size: int) -> list[tuple[int, ...]]:
    """All bijections of {1..size} as value tuples, lexicographically ordered."""
    return [tuple(p) for p in itertools.permutations(range(1, size + 1))]


def conjugate(f: Operation, phi: Sequence[int]) -> Operation:
    """The conjugate operation ``phi . f . phi^{-1}`` (same table under relabeling)."""
    if sorted(phi) != list(range(1, f.size + 1)):
        raise TableError(f"not a bijection of 1..{f.size}: {phi}")
    table = [0] * len(f.table)
    for t in f.tuples():
        image = tuple(phi[a - 1] for a in t)
        table[f.index(image)] = phi[f(*t) - 1]
    return Operation(f.arity, f.size, tuple(table))


def find_isomorphism(f: Operation, g: Operation) -> Optional[tuple[int, ...]]:
    """A bijection ``phi`` with ``phi(f(t)) == g(phi(t))`` everywhere, or None.

    Brute force over all ``size!`` bijections, in lexicographic order, so the
    returned witness is deterministic.
    """
    if f.arity != g.arity or f.size != g.size:
        raise TableError("isomorphism requires equal arity and size")
    for phi in all_bijections(f.size):
        if conjugate(f, phi) == g:
            return phi
    return None


@lru_cache(maxsize=65536)
def canonical_form(f: Operation) -> Operation:
    """Lexicographically least table among all conjugates of ``f``.

    Two operations are isomorphic iff their canonical forms are equal.
    """
    return canonical_form_with_map(f)[0]


def canonical_form_with_map(f: Operation) -> tuple[Operation, tuple[int, ...]]:
    """Canonical form plus the first bijection (lex order) achieving it."""
    best: Optional[Operation] = None
    best_phi: Optional[tuple[int, ...]] = None
    for phi in all_bijections(f.size):
        c = conjugate(f, phi)
        if best is None or c.table < best.table:
            best, best_phi = c, phi
    assert best is not None and best_phi is not None
    return best, best_phi


def invert_bijection(phi: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(phi)
    for a, b in enumerate(phi, start=1):
        inv[b - 1] = a
    return tuple(inv)


# ---------------------------------------------------------------------------
# Text format: full tables and the majority shorthand
# ---------------------------------------------------------------------------


def serialize_operation(f: Operation) -> str:
    """Full-form text: header line, then one ``a1 .. an -> v`` line per tuple."""
    lines = [f"OPERATION arity={f.arity} size={f.size}"]
    for t in f.tuples():
        lines.append(" ".join(map(str, t)) + f" -> {f(*t)}")
    return "\n".join(lines) + "\n"


def serialize_majority(f: Operation) -> str:
    """Majority shorthand: one line per ordered pairwise-distinct triple."""
    if not is_majority(f):
        raise TableError("majority shorthand requires a majority operation")
    lines = [f"MAJORITY size={f.size}"]
    for t in distinct_triples(f.size):
        lines.append(" ".join(map(str, t)) + f" -> {f(*t)}")
    return "\n".join(lines) + "\n"


def _parse_header(line: str, lineno: int) -> tuple[str, dict[str, int]]:
    parts = line.split()
    kind = parts[0]
    fields: dict[str, int] = {}
    for part in parts[1:]:
        if "=" not in part:
            raise FormatError(f"malformed header field {part!r}", lineno)
        key, _, val = part.partition("=")
        try:
            fields[key] = int(val)
        except ValueError:
            raise FormatError(f"non-integer header value {part!r}", lineno) from None
    return kind, fields


def _parse_row(line: str, lineno: int) -> tuple[tuple[int, ...], int]:
    if "->" not in line:
        raise FormatError("expected 'a1 a2 ... -> v'", lineno)
    left, _, right = line.partition("->")
    try:
        args = tuple(int(tok) for tok in left.split())
        value = int(right.strip())
    except ValueError:
        raise FormatError("non-integer entry", lineno) from None
    if not args:
        raise FormatError("empty argument tuple", lineno)
    return args, value


def parse_operation(text: str) -> Operation:
    """Parse either text format; report duplicate/missing/malformed lines by number."""
    lines = text.splitlines()
    rows: dict[tuple[int, ...], int] = {}
    header: Optional[tuple[str, dict[str, int], int]] = None
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            kind, fields = _parse_header(line, lineno)
            if kind == "OPERATION":
                if set(fields) != {"arity", "size"}:
                    raise FormatError("OPERATION header needs arity=<n> size=<k>", lineno)
            elif kind == "MAJORITY":
                if set(fields) != {"size"}:
                    raise FormatError("MAJORITY header needs size=<k>", lineno)
            else:
                raise FormatError(f"unknown header {kind!r}", lineno)
            header = (kind, fields, lineno)
            continue
        args, value = _parse_row(line, lineno)
        kind, fields, _ = header
        size = fields["size"]
        arity = fields["arity"] if kind == "OPERATION" else 3
        if len(args) != arity:
            raise FormatError(f"expected {arity} arguments, got {len(args)}", lineno)
        if any(not 1 <= a <= size for a in args) or not 1 <= value <= size:
            raise FormatError(f"entry out of range 1..{size}", lineno)
        if kind == "MAJORITY" and len(set(args)) != 3:
            raise FormatError(f"non-distinct triple {args} not allowed in MAJORITY form", lineno)
        if args in rows:
            raise FormatError(f"duplicate tuple {args}", lineno)
        rows[args] = value
    if header is None:
        raise FormatError("missing header line", max(1, len(lines)))
    kind, fields, header_line = header
    size = fields["size"]
    if kind == "MAJORITY":
        expected = distinct_triples(size)
        if len(rows) != len(expected):
            missing = sorted(set(expected) - set(rows))[0]
            raise FormatError(f"missing tuple {missing}", len(lines))
        return majority_from_distinct(size, rows)
    arity = fields["arity"]
    if len(rows) != size**arity:
        all_tuples = itertools.product(range(1, size + 1), repeat=arity)
        missing = sorted(set(all_tuples) - set(rows))[0]
        raise FormatError(f"missing tuple {missing}", len(lines))
    probe = Operation(arity, size, tuple([1] * (size**arity)))
    table = [0] * (size**arity)
    for args, value in rows.items():
        table[probe.index(args)] = value
    return Operation(arity, size, tuple(table))
