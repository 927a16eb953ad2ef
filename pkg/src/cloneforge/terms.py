"""Terms over one ternary symbol, named superpositions, and the star operator.

A term is a composition tree over variables x, y, z and a single ternary
function symbol f.  Evaluating a term at a concrete ternary operation yields
the table of the corresponding term function; this is the constructive face
of clone membership.

The star machinery deals with the identity

    g(g(x,y,z), g(y,z,x), g(z,x,y)) == g(x,y,z)

which every majority clone satisfies at some member of the cyclic
self-composition sequence f, f*f, ...; ``hat`` locates that member by cycle
detection on the sequence of tables.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Union

from .operations import (
    Operation,
    TableError,
    compose,
    distinct_triples,
    is_majority,
    majority_from_distinct,
    projection,
)
from .reports import FAIL, PASS, Report


@dataclass(frozen=True)
class Variable:
    index: int  # 1, 2 or 3

    def __post_init__(self) -> None:
        if self.index not in (1, 2, 3):
            raise TableError(f"variable index must be 1..3, got {self.index}")


@dataclass(frozen=True)
class Node:
    a: "Term"
    b: "Term"
    c: "Term"


Term = Union[Variable, Node]

X, Y, Z = Variable(1), Variable(2), Variable(3)


def eval_term(term: Term, f: Operation) -> Operation:
    """Table of the term function; Variable(i) evaluates to the i-th projection.

    Evaluation memoizes on node identity, so terms built with shared subtrees
    cost one composition per distinct node.
    """
    if f.arity != 3:
        raise TableError("term evaluation requires a ternary operation")
    memo: dict[int, Operation] = {}

    def walk(t: Term) -> Operation:
        got = memo.get(id(t))
        if got is not None:
            return got
        if isinstance(t, Variable):
            out = projection(3, t.index, f.size)
        else:
            out = compose(f, [walk(t.a), walk(t.b), walk(t.c)])
        memo[id(t)] = out
        return out

    return walk(term)


def graft(term: Term, replacements: tuple[Term, Term, Term]) -> Term:
    """Substitute terms for the variables x, y, z."""
    if isinstance(term, Variable):
        return replacements[term.index - 1]
    return Node(
        graft(term.a, replacements),
        graft(term.b, replacements),
        graft(term.c, replacements),
    )


# ---------------------------------------------------------------------------
# Term text syntax: f(z,y,f(x,y,z))
# ---------------------------------------------------------------------------


def parse_term(text: str) -> Term:
    """Parse the CLI term syntax with variables x, y, z and symbol f."""
    pos = 0

    def skip_ws() -> None:
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def expect(ch: str) -> None:
        nonlocal pos
        skip_ws()
        if pos >= len(text) or text[pos] != ch:
            found = text[pos] if pos < len(text) else "end of input"
            raise TableError(f"term syntax: expected {ch!r} at position {pos}, found {found!r}")
        pos += 1

    def atom() -> Term:
        nonlocal pos
        skip_ws()
        if pos >= len(text):
            raise TableError("term syntax: unexpected end of input")
        ch = text[pos]
        if ch in "xyz":
            pos += 1
            return Variable("xyz".index(ch) + 1)
        if ch == "f":
            pos += 1
            expect("(")
            a = atom()
            expect(",")
            b = atom()
            expect(",")
            c = atom()
            expect(")")
            return Node(a, b, c)
        raise TableError(f"term syntax: unexpected {ch!r} at position {pos}")

    out = atom()
    skip_ws()
    if pos != len(text):
        raise TableError(f"term syntax: trailing input at position {pos}")
    return out


def term_to_string(term: Term) -> str:
    if isinstance(term, Variable):
        return "xyz"[term.index - 1]
    return f"f({term_to_string(term.a)},{term_to_string(term.b)},{term_to_string(term.c)})"


# ---------------------------------------------------------------------------
# Named superpositions
# ---------------------------------------------------------------------------

SUPERPOSITION_NAMES = ("x", "y", "z", "zy")


def named_superposition(name: str, f: Operation) -> Operation:
    """One of the self-substitution composites.

    'x' replaces the first variable of f by f itself, so f(f(x,y,z),y,z);
    'y' and 'z' likewise for the other argument slots; 'zy' is the 'y'
    substitution applied to the 'z' composite.
    """
    if f.arity != 3:
        raise TableError("named superpositions require a ternary operation")
    e1, e2, e3 = (projection(3, i, f.size) for i in (1, 2, 3))
    if name == "x":
        return compose(f, [f, e2, e3])
    if name == "y":
        return compose(f, [e1, f, e3])
    if name == "z":
        return compose(f, [e1, e2, f])
    if name == "zy":
        fz = compose(f, [e1, e2, f])
        return compose(fz, [e1, fz, e3])
    raise TableError(f"unknown superposition name {name!r}; expected one of {SUPERPOSITION_NAMES}")


def rotate_arguments(f: Operation) -> Operation:
    """g(x,y,z) = f(y,z,x)."""
    if f.arity != 3:
        raise TableError("argument rotation requires a ternary operation")
    e1, e2, e3 = (projection(3, i, f.size) for i in (1, 2, 3))
    return compose(f, [e2, e3, e1])


def star_compose(g: Operation, h: Operation) -> Operation:
    """(g * h)(x,y,z) = g(h(x,y,z), h(y,z,x), h(z,x,y))."""
    if g.size != h.size:
        raise TableError(f"size mismatch: {g.size} != {h.size}")
    if g.arity != 3 or h.arity != 3:
        raise TableError("star composition requires ternary operations")
    h1 = rotate_arguments(h)
    h2 = rotate_arguments(h1)
    return compose(g, [h, h1, h2])


def iterate_star(f: Operation, k: int) -> Operation:
    """k-th member of the self-composition sequence: f, f*f, f*(f*f), ..."""
    if k < 1:
        raise TableError(f"star iterate needs k >= 1, got {k}")
    out = f
    for _ in range(k - 1):
        out = star_compose(f, out)
    return out


def satisfies_star(f: Operation) -> bool:
    """Whether f * f == f, i.e. f is idempotent for the star product."""
    return star_compose(f, f) == f


class StarIdentityError(ValueError):
    """Raised when a star-idempotence precondition is violated."""


def hat_exponent(f: Operation) -> int:
    """Smallest k with the k-th star iterate star-idempotent.

    The iterate sequence is eventually periodic; with tail length t and
    period p, the answer is the least k >= t divisible by p.
    """
    if not is_majority(f):
        raise TableError("hat requires a majority operation")
    seen: dict[tuple[int, ...], int] = {}
    g = f
    k = 1
    while g.table not in seen:
        seen[g.table] = k
        g = star_compose(f, g)
        k += 1
    tail = seen[g.table]
    period = k - tail
    k_star = tail if tail % period == 0 else tail + (period - tail % period)
    return k_star


def hat(f: Operation) -> Operation:
    """The star-idempotent member of f's self-composition sequence."""
    result = iterate_star(f, hat_exponent(f))
    assert satisfies_star(result)
    return result


def hat_witness_chain(f: Operation) -> list[Operation]:
    """The successive star iterates up to hat(f), a replayable membership proof.

    Each entry arises from the previous one by a single composition with f and
    two argument rotations, so every entry is a term function of f.
    """
    return [iterate_star(f, k) for k in range(1, hat_exponent(f) + 1)]


# ---------------------------------------------------------------------------
# Structural consequences of star idempotence
# ---------------------------------------------------------------------------


def check_star_value_pattern(f: Operation) -> bool:
    """For star-idempotent majority f, check the distinct-triple value pattern.

    For every pairwise-distinct (a,b,c) with values u=f(a,b,c), v=f(b,c,a),
    w=f(c,a,b): the set {u,v,w} never has exactly two elements, and when
    u,v,w are pairwise distinct, f returns its first argument on each of
    (u,v,w), (v,w,u), (w,u,v).

    Raises StarIdentityError when f is not star-idempotent (a precondition
    violation, distinct from the check failing).
    """
    if f.arity != 3:
        raise TableError("star value pattern requires a ternary operation")
    if not satisfies_star(f):
        raise StarIdentityError("operation is not star-idempotent")
    for a, b, c in distinct_triples(f.size):
        u, v, w = f(a, b, c), f(b, c, a), f(c, a, b)
        n = len({u, v, w})
        if n == 2:
            return False
        if n == 3:
            if f(u, v, w) != u or f(v, w, u) != v or f(w, u, v) != w:
                return False
    return True


# ---------------------------------------------------------------------------
# Exhaustive local check of the double-substitution fallback chain
# ---------------------------------------------------------------------------


def _zy_value(f: Operation, a: int, b: int, c: int) -> int:
    """f_zy(a,b,c) evaluated by direct nested composition."""

    def fz(x: int, y: int, z: int) -> int:
        return f(x, y, f(x, y, z))

    return fz(a, fz(a, b, c), c)


def zy_chain_prediction(f: Operation, a: int, b: int, c: int, d: int) -> int:
    """Predicted f_zy(a,b,c) from the four values f(a,b,c), f(a,b,d), f(a,d,c), f(a,d,b).

    Chain: f(a,b,c) if it differs from d; else f(a,b,d) if that differs from d;
    else f(a,d,c) if that differs from b; else f(a,d,b).
    """
    v1 = f(a, b, c)
    if v1 != d:
        return v1
    v2 = f(a, b, d)
    if v2 != d:
        return v2
    v3 = f(a, d, c)
    if v3 != b:
        return v3
    return f(a, d, b)


def verify_zy_case_chain() -> Report:
    """Exhaustively validate the fallback chain on a 4-element base set.

    For each of the 24 ordered distinct triples (a,b,c) and each of the 256
    assignments of the four relevant values, build the majority operation
    with those values (every other distinct triple mapping to its first
    argument), evaluate f_zy(a,b,c) by direct composition, and compare with
    the chain prediction.
    """
    t0 = time.perf_counter()
    size = 4
    base = {t: t[0] for t in distinct_triples(size)}
    failures = []
    cases = 0
    for a, b, c in distinct_triples(size):
        d = ({1, 2, 3, 4} - {a, b, c}).pop()
        spots = [(a, b, c), (a, b, d), (a, d, c), (a, d, b)]
        for vals in itertools.product(range(1, size + 1), repeat=4):
            cases += 1
            assignment = dict(base)
            for spot, v in zip(spots, vals):
                assignment[spot] = v
            f = majority_from_distinct(size, assignment)
            actual = _zy_value(f, a, b, c)
            predicted = zy_chain_prediction(f, a, b, c, d)
            if actual != predicted:
                failures.append(
                    {
                        "case": [a, b, c],
                        "values": list(vals),
                        "expected": predicted,
                        "actual": actual,
                    }
                )
    return Report(
        check="lemma31",
        status=PASS if not failures else FAIL,
        counters={"cases": cases, "mismatches": len(failures)},
        failures=failures,
        wall_ms=(time.perf_counter() - t0) * 1000,
    )
