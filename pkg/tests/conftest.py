from __future__ import annotations

import itertools

import numpy as np
import pytest

from cloneforge import operations as ops
from cloneforge.catalog import generator


@pytest.fixture(scope="session")
def catalog_ops():
    return {name: generator(name) for name in ("m1", "m2", "m3", "M1", "M2", "M3")}


ROW_ORDER_3 = ((1, 2, 3), (2, 3, 1), (3, 1, 2), (2, 1, 3), (1, 3, 2), (3, 2, 1))


def majority_with(size: int, values: tuple[int, ...]):
    """Majority operation on 3 elements from values in cyclic-class row order."""
    assert size == 3 and len(values) == 6
    return ops.majority_from_distinct(size, dict(zip(ROW_ORDER_3, values)))


def random_majority_op(size: int, seed: int):
    rng = np.random.default_rng(seed)
    triples = ops.distinct_triples(size)
    vals = rng.integers(1, size + 1, size=len(triples))
    return ops.majority_from_distinct(size, {t: int(v) for t, v in zip(triples, vals)})


def all_ternary_tables(size: int):
    return itertools.product(range(1, size + 1), repeat=size**3)
