"""Ternary clone closure, membership, and majority-clone minimality.

The ternary fragment of the clone generated by a ternary operation f is the
least set containing the three projections and f that is closed under
``h = f(g1, g2, g3)`` with the ``g_i`` already in the set (structural
induction on three-variable terms).  Fragments are built incrementally by a
resumable worklist engine over 0-based byte tables, with numpy batching for
the production sweeps and global memoization so repeated generation queries
share work.

Minimality decision: a majority operation f is minimal exactly when every
majority member g of its ternary fragment generates f back.  (A nontrivial
member of a majority clone is a near-unanimity operation, so every minimal
subclone is generated by a ternary majority member; checking the ternary
fragment therefore decides minimality.)  The decision procedure interleaves
fragment growth, cheap sound witnesses (a member preserving a subset the
generator does not, or a member whose range misses the generator's range),
and budgeted back-generation checks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Optional, Sequence

import numpy as np

from . import _pack
from .operations import (
    Operation,
    TableError,
    canonical_form_with_map,
    conjugate,
    invert_bijection,
    is_majority,
    operation_from_packed,
    projection,
)
from .terms import Node, Term, Variable

DEFAULT_CAP = 100_000

_PROD_SLAB_START = 4096
_PROD_SLAB_MIN = 16384
_PROD_SLAB_MAX = 1 << 21
_BUDGET_START = 256


class CloneCapExceeded(RuntimeError):
    """A closure or generation query could not be decided within its cap."""


class MinimalityKind(Enum):
    MINIMAL = "minimal"
    NOT_MINIMAL = "not-minimal"
    INCONCLUSIVE = "inconclusive"


class WitnessReason(Enum):
    SUBSET_ESCAPE = "subset-escape"
    RANGE_ESCAPE = "range-escape"
    NO_RETURN_GENERATION = "no-return-generation"


@dataclass(frozen=True)
class MinimalityVerdict:
    kind: MinimalityKind
    witness: Optional[Operation] = None
    reason: Optional[WitnessReason] = None

    @property
    def minimal(self) -> bool:
        return self.kind is MinimalityKind.MINIMAL


@dataclass(frozen=True)
class CloneFragment:
    """The ternary members of [generator], canonically sorted.

    ``closed`` is False when the member cap was hit first, in which case the
    member list is a genuine but incomplete lower set of the fragment.
    """

    generator: Operation
    members: tuple[Operation, ...]
    closed: bool
    cap: int

    def tables(self) -> frozenset[bytes]:
        return frozenset(m.packed() for m in self.members)


# ---------------------------------------------------------------------------
# Cached combinatorial helpers on raw tables
# ---------------------------------------------------------------------------


@lru_cache(maxsize=8)
def _projection_tables(size: int) -> tuple[bytes, bytes, bytes]:
    return tuple(projection(3, i, size).packed() for i in (1, 2, 3))  # type: ignore[return-value]


@lru_cache(maxsize=8)
def _distinct_positions(size: int) -> tuple[np.ndarray, list[tuple[int, int, int]]]:
    pos = []
    triples = []
    q = 0
    for x in range(size):
        for y in range(size):
            for z in range(size):
                if x != y and x != z and y != z:
                    pos.append(q)
                    triples.append((x, y, z))
                q += 1
    return np.array(pos, dtype=np.int32), triples


@lru_cache(maxsize=8)
def _majority_positions(size: int) -> tuple[np.ndarray, np.ndarray]:
    """Non-distinct table positions and their forced majority values (0-based)."""
    pos = []
    vals = []
    q = 0
    for x in range(size):
        for y in range(size):
            for z in range(size):
                if x == y or x == z:
                    pos.append(q)
                    vals.append(x)
                elif y == z:
                    pos.append(q)
                    vals.append(y)
                q += 1
    return np.array(pos, dtype=np.int32), np.array(vals, dtype=np.uint8)


@lru_cache(maxsize=64)
def _subset_positions(size: int, members: tuple[int, ...]) -> np.ndarray:
    """Table positions of all argument triples drawn from a 0-based subset."""
    out = []
    for x in members:
        for y in members:
            for z in members:
                out.append((x * size + y) * size + z)
    return np.array(out, dtype=np.int32)


@lru_cache(maxsize=8)
def _proper_subsets(size: int) -> tuple[tuple[int, ...], ...]:
    """0-based subsets of size 2..size-1, in (size, lex) order."""
    out = []
    for r in range(2, size):
        out.extend(itertools.combinations(range(size), r))
    return tuple(out)


def _tab_is_majority(tab: bytes, size: int) -> bool:
    pos, vals = _majority_positions(size)
    return all(tab[p] == v for p, v in zip(pos.tolist(), vals.tolist()))


def _tab_range(tab: bytes, size: int) -> frozenset[int]:
    pos, _ = _distinct_positions(size)
    return frozenset(tab[p] for p in pos.tolist())


def _tab_preserves(tab: bytes, size: int, members: tuple[int, ...]) -> bool:
    allowed = set(members)
    return all(tab[p] in allowed for p in _subset_positions(size, members).tolist())


def _closed_proper_subsets(tab: bytes, size: int) -> set[tuple[int, ...]]:
    return {B for B in _proper_subsets(size) if _tab_preserves(tab, size, B)}


def _restrict_tab(tab: bytes, size: int, members: tuple[int, ...]) -> Optional[bytes]:
    """Restriction of a raw table to a 0-based subset, or None if not closed."""
    rank = {a: i for i, a in enumerate(members)}
    out = bytearray()
    for p in _subset_positions(size, members).tolist():
        v = tab[p]
        if v not in rank:
            return None
        out.append(rank[v])
    return bytes(out)


# ---------------------------------------------------------------------------
# Resumable fragment builder
# ---------------------------------------------------------------------------

_GROW_CLOSED = "closed"
_GROW_PAUSED = "paused"
_GROW_FOUND = "found"

_PROJ_KEY_BASE = np.uint64(1) << np.uint64(62)


@lru_cache(maxsize=8)
def _key_layout(size: int) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Column/value layouts for exact single-word member keys.

    Members of a majority (or projection) generator's fragment are majority
    operations or projections, so a table is pinned down by its values on the
    distinct-triple positions plus a projection tag.  The packed key is
    ``payload << 3`` for majority-completed tables and a reserved high range
    for the three projections.
    """
    dpos, _ = _distinct_positions(size)
    npos, nvals = _majority_positions(size)
    weights = (np.uint64(1) << (np.uint64(2) * np.arange(len(dpos), dtype=np.uint64)))[::-1]
    return dpos, npos, nvals, weights


def _key_of_table(tab: bytes, size: int) -> Optional[np.uint64]:
    """Scalar twin of the chunk keying; None when the table has no key."""
    projections = _projection_tables(size)
    if tab in projections:
        return _PROJ_KEY_BASE + np.uint64(projections.index(tab) + 1)
    if not _tab_is_majority(tab, size):
        return None
    dpos, _, _, weights = _key_layout(size)
    arr = np.frombuffer(tab, dtype=np.uint8)
    payload = (arr[dpos].astype(np.uint64) * weights).sum(dtype=np.uint64)
    return payload << np.uint64(3)


class _FragmentBuilder:
    """Incremental closure of {e1, e2, e3, gen} under gen-outer productions.

    Productions are explored in waves: a wave covers every index triple over
    the members existing at its start that touches at least one member from
    the newest layer.  Within a wave, triples are consumed in a fixed linear
    order in numpy chunks, so growth is deterministic and can pause/resume at
    chunk granularity.

    For majority or projection generators, chunk deduplication runs on exact
    single-word keys (distinct-triple payload plus projection tag); this is
    valid because every produced member is majority or a projection, which
    the builder also verifies as it goes.
    """

    def __init__(self, gen_tab: bytes, size: int):
        self.size = size
        self.length = size**3
        self.gen_tab = gen_tab
        self._ftab = np.frombuffer(gen_tab, dtype=np.uint8)
        self._packed_keys = _tab_is_majority(gen_tab, size) or gen_tab in _projection_tables(size)
        self._proj_rows = np.stack(
            [np.frombuffer(p, dtype=np.uint8) for p in _projection_tables(size)]
        )
        self._arr = np.zeros((8, self.length), dtype=np.int16)
        self.tables: list[bytes] = []
        self.index: dict[bytes, int] = {}
        self.parents: list[Optional[tuple[int, int, int]]] = []
        self._known_keys = np.empty(0, dtype=np.uint64)
        self._pending_keys: list[int] = []
        for tab in sorted(set(_projection_tables(size)) | {gen_tab}):
            self._append(tab, None)
        self._flush_keys()
        self.frontier_lo = 0
        self.frontier_hi = len(self.tables)
        self.wave_pos = 0
        self.closed = False

    @property
    def member_count(self) -> int:
        return len(self.tables)

    def _append(self, tab: bytes, parent: Optional[tuple[int, int, int]]) -> None:
        i = len(self.tables)
        if i >= self._arr.shape[0]:
            grown = np.zeros((self._arr.shape[0] * 2, self.length), dtype=np.int16)
            grown[:i] = self._arr[:i]
            self._arr = grown
        self._arr[i] = np.frombuffer(tab, dtype=np.uint8)
        self.tables.append(tab)
        self.index[tab] = i
        self.parents.append(parent)
        if self._packed_keys:
            key = _key_of_table(tab, self.size)
            if key is None:
                raise RuntimeError("closure invariant broken: non-majority nontrivial member produced")
            self._pending_keys.append(int(key))

    def _flush_keys(self) -> None:
        if self._pending_keys:
            merged = np.concatenate(
                [self._known_keys, np.array(self._pending_keys, dtype=np.uint64)]
            )
            self._known_keys = np.sort(merged)
            self._pending_keys = []

    def _wave_total(self) -> int:
        flo, fhi = self.frontier_lo, self.frontier_hi
        new = fhi - flo
        return new * fhi * fhi + flo * new * fhi + flo * flo * new

    def _triples_at(self, pos: int, count: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        flo, fhi = self.frontier_lo, self.frontier_hi
        new = fhi - flo
        n_a = new * fhi * fhi
        n_b = flo * new * fhi
        outs_i, outs_j, outs_k = [], [], []
        offs = np.arange(pos, pos + count, dtype=np.int64)
        in_a = offs < n_a
        if in_a.any():
            o = offs[in_a]
            outs_i.append(flo + o // (fhi * fhi))
            rem = o % (fhi * fhi)
            outs_j.append(rem // fhi)
            outs_k.append(rem % fhi)
        in_b = (~in_a) & (offs < n_a + n_b)
        if in_b.any():
            o = offs[in_b] - n_a
            outs_i.append(o // (new * fhi))
            rem = o % (new * fhi)
            outs_j.append(flo + rem // fhi)
            outs_k.append(rem % fhi)
        in_c = offs >= n_a + n_b
        if in_c.any():
            o = offs[in_c] - n_a - n_b
            outs_i.append(o // (flo * new))
            rem = o % (flo * new)
            outs_j.append(rem // new)
            outs_k.append(flo + rem % new)
        return (
            np.concatenate(outs_i),
            np.concatenate(outs_j),
            np.concatenate(outs_k),
        )

    def _chunk_keys(self, produced: np.ndarray) -> np.ndarray:
        """Exact single-word keys for the produced tables (packed mode only)."""
        dpos, npos, nvals, weights = _key_layout(self.size)
        keys = (produced[:, dpos].astype(np.uint64) @ weights) << np.uint64(3)
        majority_rows = (produced[:, npos] == nvals).all(axis=1)
        if not majority_rows.all():
            others = np.flatnonzero(~majority_rows)
            sub = produced[others]
            tagged = np.zeros(len(others), dtype=np.uint64)
            for p_i in range(3):
                hits = (sub == self._proj_rows[p_i]).all(axis=1)
                tagged[hits] = _PROJ_KEY_BASE + np.uint64(p_i + 1)
            if (tagged == 0).any():
                raise RuntimeError("closure invariant broken: non-majority nontrivial member produced")
            keys[others] = tagged
        return keys

    def grow(
        self,
        max_productions: Optional[int] = None,
        member_limit: Optional[int] = None,
        find: Optional[bytes] = None,
    ) -> str:
        """Consume productions until closed, a bound is hit, or ``find`` appears."""
        if find is not None and find in self.index:
            return _GROW_FOUND
        if self.closed:
            return _GROW_CLOSED
        size = self.size
        consumed = 0
        while True:
            if member_limit is not None and self.member_count >= member_limit:
                return _GROW_PAUSED
            total = self._wave_total()
            if self.wave_pos >= total:
                if self.member_count == self.frontier_hi:
                    self.closed = True
                    return _GROW_CLOSED
                self.frontier_lo = self.frontier_hi
                self.frontier_hi = self.member_count
                self.wave_pos = 0
                continue
            # keep chunks small under a tight member limit so overshoot past
            # the limit (appends are only checked between chunks) stays small
            if member_limit is None:
                chunk_cap = _PROD_SLAB_MAX
            else:
                chunk_cap = min(
                    _PROD_SLAB_MAX,
                    max(_PROD_SLAB_MIN, 64 * (member_limit - self.member_count)),
                )
            chunk = min(chunk_cap, total - self.wave_pos)
            if max_productions is not None:
                if consumed >= max_productions:
                    return _GROW_PAUSED
                chunk = min(chunk, max_productions - consumed)
            idx_i, idx_j, idx_k = self._triples_at(self.wave_pos, chunk)
            t = self._arr
            flat = (t[idx_i] * size + t[idx_j]) * size + t[idx_k]
            produced = self._ftab[flat]
            self.wave_pos += chunk
            consumed += chunk
            if self._packed_keys:
                first_hits = self._dedup_packed(produced)
            else:
                first_hits = self._dedup_bytes(produced)
            hit = False
            for fi in first_hits:
                tab = produced[fi].tobytes()
                if tab not in self.index:
                    self._append(tab, (int(idx_i[fi]), int(idx_j[fi]), int(idx_k[fi])))
                    if find is not None and tab == find:
                        hit = True
            self._flush_keys()
            if hit:
                return _GROW_FOUND

    def _dedup_packed(self, produced: np.ndarray) -> list[int]:
        keys = self._chunk_keys(produced)
        pos = np.searchsorted(self._known_keys, keys)
        pos[pos >= len(self._known_keys)] = len(self._known_keys) - 1
        fresh = self._known_keys[pos] != keys
        if not fresh.any():
            return []
        rows = np.flatnonzero(fresh)
        _, first = np.unique(keys[rows], return_index=True)
        return rows[np.sort(first)].tolist()

    def _dedup_bytes(self, produced: np.ndarray) -> list[int]:
        keys = _pack.pack_rows(produced)
        _, first = np.unique(keys, axis=0, return_index=True)[:2]
        return np.sort(first).tolist()

    def run_to_close(self, cap: int) -> bool:
        """Grow to the fixpoint; False when the cap was exceeded first."""
        while not self.closed:
            status = self.grow(member_limit=cap + 1)
            if status == _GROW_PAUSED and self.member_count > cap:
                return False
        return True

    def production_chain(self, target: bytes) -> list[tuple[int, Optional[tuple[int, int, int]]]]:
        """Ancestor productions of a member, in replayable (index-ascending) order."""
        need = [self.index[target]]
        seen = set(need)
        chain = []
        while need:
            i = need.pop()
            chain.append(i)
            parent = self.parents[i]
            if parent is not None:
                for p in parent:
                    if p not in seen:
                        seen.add(p)
                        need.append(p)
        return [(i, self.parents[i]) for i in sorted(set(chain))]


# ---------------------------------------------------------------------------
# Engine context: shared builders and verdict memoization
# ---------------------------------------------------------------------------


class EngineContext:
    def __init__(self) -> None:
        self.builders: dict[bytes, _FragmentBuilder] = {}
        self.verdicts: dict[bytes, MinimalityVerdict] = {}

    def builder_for(self, tab: bytes, size: int) -> _FragmentBuilder:
        b = self.builders.get(tab)
        if b is None:
            b = _FragmentBuilder(tab, size)
            self.builders[tab] = b
        return b

    def contains_budget(self, gen_tab: bytes, target: bytes, size: int, budget: int) -> Optional[bool]:
        """Does target lie in the ternary fragment of gen?  None = undecided at budget."""
        b = self.builder_for(gen_tab, size)
        if target in b.index:
            return True
        while True:
            status = b.grow(member_limit=budget, find=target)
            if status == _GROW_FOUND:
                return True
            if status == _GROW_CLOSED:
                return target in b.index
            if b.member_count >= budget:
                return None


_CTX = EngineContext()


def clear_caches() -> None:
    """Drop all memoized fragments and verdicts (mainly for tests)."""
    global _CTX
    _CTX = EngineContext()


# ---------------------------------------------------------------------------
# Public fragment API
# ---------------------------------------------------------------------------


def _require_ternary(f: Operation) -> None:
    if f.arity != 3:
        raise TableError(f"clone engine handles ternary operations, got arity {f.arity}")
    if f.size > 4:
        raise TableError("ternary closures are supported for base sets of size <= 4")


def ternary_closure(f: Operation, cap: int = DEFAULT_CAP) -> CloneFragment:
    """The ternary fragment of [f] as an explicit member set.

    When the cap is exceeded the fragment is returned partially built and
    flagged not closed.
    """
    _require_ternary(f)
    if cap < 4:
        raise TableError(f"cap must be at least 4, got {cap}")
    b = _CTX.builder_for(f.packed(), f.size)
    closed = b.run_to_close(cap)
    tabs = sorted(b.tables) if closed else sorted(b.tables[: cap + 1])
    members = tuple(operation_from_packed(3, f.size, t) for t in tabs)
    return CloneFragment(generator=f, members=members, closed=closed, cap=cap)


def contains(frag: CloneFragment, g: Operation) -> bool:
    """Membership of g's table in a *closed* fragment."""
    if not frag.closed:
        raise CloneCapExceeded("cannot query membership in an unclosed fragment")
    if g.arity != 3 or g.size != frag.generator.size:
        raise TableError("membership requires a ternary operation on the same base set")
    return g.packed() in frag.tables()


def generates(f: Operation, g: Operation, cap: int = DEFAULT_CAP) -> bool:
    """Whether g lies in the ternary fragment of [f]; raises when cap-bound."""
    _require_ternary(f)
    _require_ternary(g)
    if f.size != g.size:
        raise TableError(f"size mismatch: {f.size} != {g.size}")
    res = _CTX.contains_budget(f.packed(), g.packed(), f.size, cap)
    if res is None:
        raise CloneCapExceeded(f"generation undecided within cap {cap}")
    return res


def membership_witness_term(f: Operation, g: Operation, cap: int = DEFAULT_CAP) -> Term:
    """A term t over f with eval_term(t, f) == g, from the stored productions."""
    if not generates(f, g, cap):
        raise TableError("no witness: operation is not in the fragment")
    b = _CTX.builder_for(f.packed(), f.size)
    projections = _projection_tables(f.size)
    terms: dict[int, Term] = {}
    for i, parent in b.production_chain(g.packed()):
        tab = b.tables[i]
        if parent is None:
            if tab == f.packed():
                terms[i] = Node(Variable(1), Variable(2), Variable(3))
            else:
                terms[i] = Variable(projections.index(tab) + 1)
        else:
            p1, p2, p3 = parent
            terms[i] = Node(terms[p1], terms[p2], terms[p3])
    return terms[b.index[g.packed()]]


def majority_members(f: Operation, cap: int = DEFAULT_CAP, allow_partial: bool = False) -> list[Operation]:
    """All majority members of the ternary fragment, canonically sorted."""
    if not is_majority(f):
        raise TableError("majority_members requires a majority generator")
    frag = ternary_closure(f, cap)
    if not frag.closed and not allow_partial:
        raise CloneCapExceeded(f"fragment exceeded cap {cap}")
    return [m for m in frag.members if _tab_is_majority(m.packed(), f.size)]


def quick_nonminimality_witness(
    f: Operation, cap: int = DEFAULT_CAP
) -> Optional[tuple[Operation, WitnessReason]]:
    """First member escaping f by preserved subset or by disjoint range, if any.

    Scans members in canonical order as the closure grows; both escape kinds
    soundly certify non-minimality (an escaping member cannot generate f,
    because generated operations inherit every preserved relation).
    """
    if not is_majority(f):
        raise TableError("quick_nonminimality_witness requires a majority operation")
    _require_ternary(f)
    size = f.size
    tab = f.packed()
    b = _CTX.builder_for(tab, size)
    escaped = _escape_scan(b, tab, size, cap)
    if escaped is not None:
        g_tab, reason = escaped
        return operation_from_packed(3, size, g_tab), reason
    return None


def _escape_scan(
    b: _FragmentBuilder, f_tab: bytes, size: int, cap: int
) -> Optional[tuple[bytes, WitnessReason]]:
    f_closed_subsets = _closed_proper_subsets(f_tab, size)
    escapable = [B for B in _proper_subsets(size) if B not in f_closed_subsets]
    f_range = _tab_range(f_tab, size)
    projections = set(_projection_tables(size))
    watermark = 0
    while True:
        new = sorted(b.tables[watermark : b.member_count])
        watermark = b.member_count
        for g_tab in new:
            if g_tab in projections or g_tab == f_tab:
                continue
            for B in escapable:
                if _tab_preserves(g_tab, size, B):
                    return g_tab, WitnessReason.SUBSET_ESCAPE
            if not (_tab_range(g_tab, size) & f_range):
                return g_tab, WitnessReason.RANGE_ESCAPE
        if b.closed:
            return None
        status = b.grow(member_limit=cap + 1)
        if status == _GROW_PAUSED and b.member_count > cap:
            return None


# ---------------------------------------------------------------------------
# Minimality decision
# ---------------------------------------------------------------------------


def is_minimal_majority(f: Operation, cap: int = DEFAULT_CAP) -> MinimalityVerdict:
    """Decide whether [f] is a minimal clone, for majority f.

    Minimal iff every majority member of the ternary fragment generates f
    back.  Decided verdicts are memoized by canonical form; the witness is
    mapped back into f's own labeling.
    """
    if not is_majority(f):
        raise TableError("is_minimal_majority requires a majority operation")
    _require_ternary(f)
    canon, phi = canonical_form_with_map(f)
    key = canon.packed()
    verdict = _CTX.verdicts.get(key)
    if verdict is None:
        verdict = decide_minimality(canon, cap, shortcuts=True)
        if verdict.kind is not MinimalityKind.INCONCLUSIVE:
            _CTX.verdicts[key] = verdict
    if verdict.witness is None or f == canon:
        return verdict
    back = conjugate(verdict.witness, invert_bijection(phi))
    return MinimalityVerdict(verdict.kind, back, verdict.reason)


def decide_minimality(f: Operation, cap: int = DEFAULT_CAP, shortcuts: bool = True) -> MinimalityVerdict:
    """Decision loop; with shortcuts=False it runs on back-generation alone.

    The shortcut-free mode is the definition-level oracle used by the
    exhaustive sweeps: for every majority member g (discovered in canonical
    order as the fragment grows) it checks generates(g, f) directly.
    """
    size = f.size
    f_tab = f.packed()
    b = _CTX.builder_for(f_tab, size)
    projections = set(_projection_tables(size))

    if shortcuts and size >= 4:
        screened = _restriction_screen(f_tab, size, cap)
        if screened is not None:
            return MinimalityVerdict(
                MinimalityKind.NOT_MINIMAL,
                operation_from_packed(3, size, screened),
                WitnessReason.NO_RETURN_GENERATION,
            )

    if shortcuts:
        f_closed_subsets = _closed_proper_subsets(f_tab, size)
        escapable = [B for B in _proper_subsets(size) if B not in f_closed_subsets]
        f_range = _tab_range(f_tab, size)

    pending: list[bytes] = []
    watermark = 0
    slab = _PROD_SLAB_START
    while True:
        capped = b.member_count > cap
        if not b.closed and not capped:
            b.grow(max_productions=slab, member_limit=cap + 1)
            capped = b.member_count > cap
        new = sorted(b.tables[watermark : b.member_count])
        watermark = b.member_count
        for g_tab in new:
            if g_tab in projections or g_tab == f_tab:
                continue
            if shortcuts:
                hit_reason = None
                for B in escapable:
                    if _tab_preserves(g_tab, size, B):
                        hit_reason = WitnessReason.SUBSET_ESCAPE
                        break
                if hit_reason is None and not (_tab_range(g_tab, size) & f_range):
                    hit_reason = WitnessReason.RANGE_ESCAPE
                if hit_reason is not None:
                    return MinimalityVerdict(
                        MinimalityKind.NOT_MINIMAL,
                        operation_from_packed(3, size, g_tab),
                        hit_reason,
                    )
            pending.append(g_tab)
        # A member's fragment is contained in f's fragment, so a budget one
        # past f's member count decides every back-generation query once f's
        # fragment is closed, and never over-grows a member's builder.
        if b.closed:
            budget = b.member_count + 1
        else:
            budget = min(max(_BUDGET_START, b.member_count + 1), cap + 1)
        still: list[bytes] = []
        for g_tab in sorted(pending):
            res = _CTX.contains_budget(g_tab, f_tab, size, budget)
            if res is False:
                return MinimalityVerdict(
                    MinimalityKind.NOT_MINIMAL,
                    operation_from_packed(3, size, g_tab),
                    WitnessReason.NO_RETURN_GENERATION,
                )
            if res is None:
                still.append(g_tab)
        pending = still
        if b.closed:
            if not pending:
                return MinimalityVerdict(MinimalityKind.MINIMAL)
            raise RuntimeError("back-generation undecided inside a closed fragment")
        if capped:
            return MinimalityVerdict(MinimalityKind.INCONCLUSIVE)
        slab = min(slab * 2, _PROD_SLAB_MAX)


def _restriction_screen(f_tab: bytes, size: int, cap: int) -> Optional[bytes]:
    """Non-minimal restriction to a preserved 3-subset, lifted to a full witness.

    If f preserves B and f|B has a majority member h failing to generate f|B,
    then replaying h's production chain over f yields a member g of [f] with
    g|B = h; g cannot generate f (restriction of a generating term for f
    would make h generate f|B).
    """
    for members in itertools.combinations(range(size), 3):
        rtab = _restrict_tab(f_tab, size, members)
        if rtab is None:
            continue
        sub = is_minimal_majority(operation_from_packed(3, 3, rtab), cap)
        if sub.kind is not MinimalityKind.NOT_MINIMAL:
            continue
        assert sub.witness is not None
        return _lift_through_restriction(f_tab, size, members, rtab, sub.witness.packed(), cap)
    return None


def _lift_through_restriction(
    f_tab: bytes,
    size: int,
    members: tuple[int, ...],
    rtab: bytes,
    sub_witness: bytes,
    cap: int,
) -> bytes:
    sub_builder = _CTX.builder_for(rtab, 3)
    status = sub_builder.grow(member_limit=cap + 1, find=sub_witness)
    while status not in (_GROW_FOUND, _GROW_CLOSED) and sub_witness not in sub_builder.index:
        status = sub_builder.grow(member_limit=cap + 1, find=sub_witness)
    sub_projections = _projection_tables(3)
    big_projections = _projection_tables(size)
    ftab_arr = np.frombuffer(f_tab, dtype=np.uint8)
    lifted: dict[int, np.ndarray] = {}
    for i, parent in sub_builder.production_chain(sub_witness):
        tab = sub_builder.tables[i]
        if parent is None:
            if tab == rtab:
                lifted[i] = np.frombuffer(f_tab, dtype=np.uint8)
            else:
                p = sub_projections.index(tab)
                lifted[i] = np.frombuffer(big_projections[p], dtype=np.uint8)
        else:
            g1, g2, g3 = (lifted[p] for p in parent)
            flat = (g1.astype(np.int16) * size + g2) * size + g3
            lifted[i] = ftab_arr[flat]
    return lifted[sub_builder.index[sub_witness]].tobytes()
