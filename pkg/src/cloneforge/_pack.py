"""Vectorized table packing, conjugation, and canonicalization (internal).

Tables are (N, L) uint8 arrays of 0-based values, L = size**3.  Packing is
big-endian base-``size`` into a (hi, lo) pair of uint64 words, so integer
order on (hi, lo) equals lexicographic order on tables; canonical keys and
sort orders computed here therefore agree with the scalar definitions in
:mod:`cloneforge.operations`.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

_U64 = np.uint64


def pack_rows(tables: np.ndarray) -> np.ndarray:
    """(N, L) uint8 -> (N, 2) uint64 big-endian keys; entries must be < 4.

    Covers ternary tables on base sets of size <= 4 (L <= 64, 2-bit fields).
    """
    n, length = tables.shape
    assert length <= 64, "packed keys support ternary tables up to size 4"
    out = np.zeros((n, 2), dtype=_U64)
    split = max(0, length - 32)  # low word holds the last up-to-32 entries
    for i in range(split):
        out[:, 0] = (out[:, 0] << _U64(2)) | tables[:, i].astype(_U64)
    for i in range(split, length):
        out[:, 1] = (out[:, 1] << _U64(2)) | tables[:, i].astype(_U64)
    return out


def pack_row(table: bytes) -> tuple[int, int]:
    """Scalar twin of :func:`pack_rows`."""
    hi = 0
    lo = 0
    split = max(0, len(table) - 32)
    for v in table[:split]:
        hi = (hi << 2) | v
    for v in table[split:]:
        lo = (lo << 2) | v
    return hi, lo


def lex_argsort(tables: np.ndarray) -> np.ndarray:
    """Stable ordering of rows by lexicographic table order."""
    keys = pack_rows(tables)
    return np.lexsort((keys[:, 1], keys[:, 0]))


@lru_cache(maxsize=8)
def conjugation_maps(size: int) -> tuple[np.ndarray, np.ndarray]:
    """Position and value maps for all size! bijections, in lex bijection order.

    For bijection phi, the conjugate table is ``val_map[tab[pos_map]]``:
    ``pos_map[q] = index(phi^{-1} applied to the tuple at q)`` and
    ``val_map[v] = phi(v)`` (all 0-based).
    """
    length = size**3
    perms = list(itertools.permutations(range(size)))
    pos_maps = np.empty((len(perms), length), dtype=np.int32)
    val_maps = np.empty((len(perms), size), dtype=np.uint8)
    for p_i, phi in enumerate(perms):
        inv = [0] * size
        for a, b in enumerate(phi):
            inv[b] = a
        val_maps[p_i] = np.array(phi, dtype=np.uint8)
        pos = np.empty(length, dtype=np.int32)
        q = 0
        for x in range(size):
            for y in range(size):
                for z in range(size):
                    pos[q] = (inv[x] * size + inv[y]) * size + inv[z]
                    q += 1
        pos_maps[p_i] = pos
    return pos_maps, val_maps


def bulk_canonical(tables: np.ndarray, size: int) -> tuple[np.ndarray, np.ndarray]:
    """Canonical (lex-least conjugate) of every row.

    Returns (canonical tables (N, L) uint8, canonical keys (N, 2) uint64).
    """
    pos_maps, val_maps = conjugation_maps(size)
    best = None
    best_keys = None
    for p_i in range(pos_maps.shape[0]):
        conj = val_maps[p_i][tables[:, pos_maps[p_i]]]
        keys = pack_rows(conj)
        if best is None:
            best, best_keys = conj, keys
            continue
        less = (keys[:, 0] < best_keys[:, 0]) | (
            (keys[:, 0] == best_keys[:, 0]) & (keys[:, 1] < best_keys[:, 1])
        )
        best[less] = conj[less]
        best_keys[less] = keys[less]
    assert best is not None and best_keys is not None
    return best, best_keys


def unique_rows(keys: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """np.unique over (N, 2) uint64 keys: (unique_keys, first_index, inverse)."""
    uniq, first, inverse = np.unique(keys, axis=0, return_index=True, return_inverse=True)
    return uniq, first, inverse.reshape(-1)
