from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from cloneforge import operations as ops
from cloneforge.operations import (
    Operation,
    SubsetNotClosedError,
    TableError,
    all_bijections,
    canonical_form,
    compose,
    conjugate,
    distinct_triples,
    find_isomorphism,
    is_boolean_minority,
    is_conservative,
    is_cyclically_commutative,
    is_idempotent,
    is_majority,
    is_near_unanimity,
    is_projection,
    is_semiprojection,
    majority_from_distinct,
    make_operation,
    projection,
    range_of,
    restrict,
)

from conftest import majority_with, random_majority_op


def table_strategy(arity: int, size: int):
    length = size**arity
    return st.lists(st.integers(1, size), min_size=length, max_size=length).map(
        lambda t: Operation(arity, size, tuple(t))
    )


class TestConstruction:
    def test_identity_on_two(self):
        f = make_operation(1, 2, [1, 2])
        assert f(1) == 1 and f(2) == 2

    def test_length_mismatch_reports_both_numbers(self):
        with pytest.raises(TableError, match=r"63 != 64"):
            make_operation(3, 4, [1] * 63)

    def test_out_of_range_entry_reports_index(self):
        table = [1] * 27
        table[11] = 4
        with pytest.raises(TableError, match=r"index 11"):
            make_operation(3, 3, table)

    def test_bounds(self):
        with pytest.raises(TableError):
            make_operation(0, 3, [])
        with pytest.raises(TableError):
            make_operation(5, 2, [1] * 32)
        with pytest.raises(TableError):
            make_operation(1, 9, [1] * 9)

    def test_evaluation_round_trip(self):
        f = majority_with(3, (1, 2, 3, 2, 1, 3))
        for pos, t in enumerate(f.tuples()):
            assert f.table[f.index(t)] == f.table[pos]

    def test_packed_round_trip(self):
        f = majority_with(3, (2, 2, 2, 3, 3, 3))
        assert ops.operation_from_packed(3, 3, f.packed()) == f


class TestProjectionCompose:
    def test_projection_returns_argument(self):
        e1 = projection(3, 1, 4)
        assert all(e1(*t) == t[0] for t in e1.tuples())
        assert projection(1, 1, 4) == make_operation(1, 4, [1, 2, 3, 4])
        e2 = projection(3, 2, 3)
        assert all(e2(*t) == t[1] for t in e2.tuples())

    def test_projection_index_out_of_range(self):
        with pytest.raises(TableError):
            projection(3, 4, 3)

    @settings(max_examples=40, deadline=None)
    @given(table_strategy(3, 3))
    def test_compose_with_projections_is_identity(self, f):
        es = [projection(3, i, 3) for i in (1, 2, 3)]
        assert compose(f, es) == f

    @settings(max_examples=40, deadline=None)
    @given(table_strategy(3, 3), table_strategy(3, 3), table_strategy(3, 3))
    def test_projection_composed_picks_component(self, g1, g2, g3):
        e1 = projection(3, 1, 3)
        assert compose(e1, [g1, g2, g3]) == g1

    def test_composition_example_on_catalog_table(self, catalog_ops):
        m2 = catalog_ops["M2"]
        e2, e3 = projection(3, 2, 4), projection(3, 3, 4)
        h = compose(m2, [e3, e2, m2])
        assert h(1, 2, 3) == 3

    def test_compose_mismatch_errors(self):
        f3 = projection(3, 1, 3)
        f4 = projection(3, 1, 4)
        with pytest.raises(TableError):
            compose(f3, [f3, f3])
        with pytest.raises(TableError):
            compose(f3, [f3, f3, f4])


class TestPredicates:
    def test_majority_catalog(self, catalog_ops):
        assert is_majority(catalog_ops["M1"])
        assert all(is_majority(op) for op in catalog_ops.values())

    def test_cyclic_commutativity_counterexample(self, catalog_ops):
        m2 = catalog_ops["M2"]
        assert m2(1, 2, 3) == 4 and m2(2, 3, 1) == 2
        assert not is_cyclically_commutative(m2)
        assert is_cyclically_commutative(catalog_ops["M1"])

    def test_conservative(self, catalog_ops):
        assert is_conservative(catalog_ops["m2"])
        assert not is_conservative(catalog_ops["M1"])

    def test_near_unanimity_projection(self):
        assert not is_near_unanimity(projection(3, 1, 3))

    @settings(max_examples=120, deadline=None)
    @given(table_strategy(3, 3))
    def test_ternary_near_unanimity_equals_majority(self, f):
        assert is_near_unanimity(f) == is_majority(f)

    @settings(max_examples=60, deadline=None)
    @given(table_strategy(3, 3))
    def test_majority_definition_recheck(self, f):
        expected = all(
            f(x, x, y) == x and f(x, y, x) == x and f(y, x, x) == x
            for x in (1, 2, 3)
            for y in (1, 2, 3)
        )
        assert is_majority(f) == expected

    def test_projection_detection(self):
        assert is_projection(projection(3, 2, 4)) == 2
        assert is_projection(majority_with(3, (1,) * 6)) is None

    def test_idempotent(self, catalog_ops):
        assert is_idempotent(catalog_ops["M3"])
        assert not is_idempotent(make_operation(1, 2, [2, 1]))

    def test_semiprojection(self, catalog_ops):
        assert is_semiprojection(projection(3, 1, 4))
        assert not is_semiprojection(catalog_ops["m1"])

    def test_arity_preconditions(self):
        binary = make_operation(2, 3, [1] * 9)
        with pytest.raises(TableError):
            is_majority(binary)
        with pytest.raises(TableError):
            is_cyclically_commutative(binary)

    def test_boolean_minority_on_two_elements(self):
        # x + y + z over the 2-element group: value flips with each 2
        table = [1 if (x + y + z) % 2 == 1 else 2 for x, y, z in itertools.product((1, 2), repeat=3)]
        f = make_operation(3, 2, table)
        assert is_boolean_minority(f)

    def test_boolean_minority_on_four_elements(self):
        # label i -> i-1 as bit patterns, value = xor of labels
        f = make_operation(
            3, 4, [((x - 1) ^ (y - 1) ^ (z - 1)) + 1 for x, y, z in itertools.product(range(1, 5), repeat=3)]
        )
        assert is_boolean_minority(f)
        # relabeled copy is still recognized (existential over labelings)
        phi = (3, 1, 4, 2)
        assert is_boolean_minority(conjugate(f, phi))

    def test_boolean_minority_negative_and_precondition(self, catalog_ops):
        assert not is_boolean_minority(catalog_ops["M1"])
        with pytest.raises(TableError):
            is_boolean_minority(projection(3, 1, 3))


class TestRestrictRange:
    def test_restrict_catalog_to_234(self, catalog_ops):
        r = restrict(catalog_ops["M2"], {2, 3, 4})
        # first-argument pattern on every distinct triple of the restricted set
        assert all(r(*t) == t[0] for t in distinct_triples(3))

    def test_restrict_not_closed_names_tuple(self, catalog_ops):
        with pytest.raises(SubsetNotClosedError) as err:
            restrict(catalog_ops["M1"], {1, 2, 3})
        assert err.value.violation == (1, 2, 3)

    def test_restrict_whole_set_is_identity(self, catalog_ops):
        m3 = catalog_ops["m3"]
        assert restrict(m3, {1, 2, 3}) == m3

    def test_ranges(self, catalog_ops):
        assert range_of(catalog_ops["M1"]) == {4}
        assert range_of(catalog_ops["M2"]) == {2, 3, 4}
        assert range_of(catalog_ops["m1"]) == {1}

    def test_restriction_commutes_with_composition(self, catalog_ops):
        f = catalog_ops["M2"]
        gs = [catalog_ops["M2"], projection(3, 2, 4), projection(3, 3, 4)]
        subset = {2, 3, 4}
        lhs = restrict(compose(f, gs), subset)
        rhs = compose(restrict(f, subset), [restrict(g, subset) for g in gs])
        assert lhs == rhs


class TestIsomorphism:
    def test_self_isomorphism_is_identity(self, catalog_ops):
        assert find_isomorphism(catalog_ops["M3"], catalog_ops["M3"]) == (1, 2, 3, 4)

    def test_m1_m2_not_isomorphic(self, catalog_ops):
        assert find_isomorphism(catalog_ops["M1"], catalog_ops["M2"]) is None
        assert len(range_of(catalog_ops["M1"])) != len(range_of(catalog_ops["M2"]))

    @settings(max_examples=25, deadline=None)
    @given(table_strategy(3, 3), st.sampled_from(all_bijections(3)))
    def test_isomorphism_symmetry_and_witness(self, f, phi):
        g = conjugate(f, phi)
        found = find_isomorphism(f, g)
        assert found is not None
        assert conjugate(f, found) == g
        back = find_isomorphism(g, f)
        assert back is not None
        assert conjugate(g, back) == f

    def test_canonical_form_constant_on_conjugates(self, catalog_ops):
        m3 = catalog_ops["M3"]
        canon = canonical_form(m3)
        assert canonical_form(canon) == canon
        for phi in all_bijections(4):
            assert canonical_form(conjugate(m3, phi)) == canon

    def test_canonical_form_separates_classes(self, catalog_ops):
        assert canonical_form(catalog_ops["M1"]) != canonical_form(catalog_ops["M3"])


class TestMajorityFromDistinct:
    def test_missing_triple(self):
        values = {t: 1 for t in distinct_triples(3)}
        values.pop((1, 2, 3))
        with pytest.raises(TableError, match=r"missing"):
            majority_from_distinct(3, values)

    def test_unexpected_triple(self):
        values = {t: 1 for t in distinct_triples(3)}
        values[(1, 1, 2)] = 1
        with pytest.raises(TableError, match=r"unexpected"):
            majority_from_distinct(3, values)

    def test_majority_rule_on_repeats(self):
        f = majority_from_distinct(4, {t: 1 for t in distinct_triples(4)})
        assert f(2, 2, 4) == 2 and f(2, 4, 2) == 2 and f(4, 2, 2) == 2 and f(3, 3, 3) == 3

    def test_spec_example_from_random_op(self):
        f = random_majority_op(4, seed=5)
        assert is_majority(f)
