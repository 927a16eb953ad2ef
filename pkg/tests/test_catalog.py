from __future__ import annotations

import itertools

import pytest

from cloneforge.catalog import (
    GENERATOR_NAMES,
    THREE_SUBSETS_4,
    M_table,
    classify_three_element,
    conservative_components,
    embedded_members,
    generator,
    glue_conservative,
    m_table,
)
from cloneforge.clones import is_minimal_majority, majority_members, MinimalityKind
from cloneforge.operations import (
    TableError,
    all_bijections,
    conjugate,
    distinct_triples,
    is_conservative,
    is_majority,
    majority_from_distinct,
    range_of,
    restrict,
)
from cloneforge.relations import partition_relation, preserves
from cloneforge.terms import satisfies_star

from conftest import majority_with


class TestEmbeddedTables:
    def test_three_element_spot_values(self):
        m3 = m_table(3)
        assert m3(1, 2, 3) == 2 and m3(2, 3, 1) == 2 and m3(3, 1, 2) == 2
        m2 = m_table(2)
        assert all(m2(*t) == t[0] for t in distinct_triples(3))
        assert all(m_table(1)(*t) == 1 for t in distinct_triples(3))

    def test_four_element_spot_values(self):
        M2 = M_table(2)
        assert M2(2, 3, 1) == 2 and M2(3, 1, 2) == 3 and M2(1, 3, 2) == 4
        assert all(M_table(1)(*t) == 4 for t in distinct_triples(4))

    def test_index_bounds(self):
        with pytest.raises(TableError):
            m_table(4)
        with pytest.raises(TableError):
            generator("M4")

    def test_embedded_majority_and_star(self):
        for name in GENERATOR_NAMES:
            op = generator(name)
            assert is_majority(op)
            assert satisfies_star(op)

    def test_four_element_structural_properties(self):
        rho = partition_relation([{1, 4}, {2}, {3}])
        for i in (1, 2, 3):
            op = M_table(i)
            assert 1 not in range_of(op)
            assert preserves(op, rho)

    def test_m2_bracket_and_restriction_patterns(self):
        M2 = M_table(2)
        bracket = tuple(M2(*t) for t in ((1, 2, 3), (2, 3, 1), (3, 1, 2), (2, 1, 3), (1, 3, 2), (3, 2, 1)))
        assert bracket == (4, 2, 3, 2, 4, 3)
        for cls in (((2, 3, 4), (3, 4, 2), (4, 2, 3)), ((3, 2, 4), (2, 4, 3), (4, 3, 2))):
            assert all(M2(*t) == t[0] for t in cls)
        for t in distinct_triples(4):
            if set(t) in ({1, 2, 4}, {1, 3, 4}):
                assert M2(*t) == 4

    def test_member_counts(self):
        for name, count in (("m1", 1), ("m2", 3), ("m3", 8), ("M1", 1), ("M2", 3), ("M3", 8)):
            assert len(embedded_members(name)) == count

    def test_embedded_members_match_computed_closures(self):
        for name in GENERATOR_NAMES:
            got = {m.table for m in majority_members(generator(name))}
            want = {m.table for m in embedded_members(name)}
            assert got == want, name


class TestClassifyThreeElement:
    def test_type_one_identity_bijection(self):
        result = classify_three_element(m_table(1))
        assert result.minimal and result.type_index == 1
        assert result.bijection == (1, 2, 3)

    def test_second_variable_is_type_two(self):
        f = majority_from_distinct(3, {t: t[1] for t in distinct_triples(3)})
        result = classify_three_element(f)
        assert result.minimal and result.type_index == 2

    def test_known_non_minimal(self):
        result = classify_three_element(majority_with(3, (1, 1, 2, 1, 1, 1)))
        assert not result.minimal and result.type_index is None

    def test_isomorphism_invariance_and_totality(self):
        for i in (1, 2, 3):
            base = m_table(i)
            for phi in all_bijections(3):
                result = classify_three_element(conjugate(base, phi))
                assert result.minimal and result.type_index == i
                assert result.bijection is not None

    def test_preconditions(self):
        with pytest.raises(TableError):
            classify_three_element(M_table(1))


class TestConservativeGlue:
    def test_all_first_argument_components(self):
        comp = m_table(2)
        glued = glue_conservative({s: comp for s in THREE_SUBSETS_4})
        assert all(glued(*t) == t[0] for t in distinct_triples(4))
        assert is_conservative(glued)
        for s in THREE_SUBSETS_4:
            assert restrict(glued, s) == comp

    def test_glue_restrict_round_trip(self):
        components = {
            frozenset({1, 2, 3}): m_table(3),
            frozenset({1, 2, 4}): m_table(2),
            frozenset({1, 3, 4}): m_table(1),
            frozenset({2, 3, 4}): conjugate(m_table(3), (2, 3, 1)),
        }
        glued = glue_conservative(components)
        assert conservative_components(glued) == components

    def test_components_of_glue_dominate_majority_rule(self):
        glued = glue_conservative({s: m_table(1) for s in THREE_SUBSETS_4})
        # each 3-subset maps its distinct triples to its least element
        assert glued(2, 3, 4) == 2 and glued(1, 3, 4) == 1
        assert glued(4, 4, 2) == 4

    def test_minimality_recorded_not_presumed(self):
        components = {s: m_table(2) for s in THREE_SUBSETS_4}
        components[frozenset({2, 3, 4})] = conjugate(m_table(3), (3, 1, 2))
        glued = glue_conservative(components)
        verdict = is_minimal_majority(glued)
        assert verdict.kind in (MinimalityKind.MINIMAL, MinimalityKind.NOT_MINIMAL)

    def test_component_validation(self):
        bad = {s: m_table(2) for s in THREE_SUBSETS_4}
        bad[frozenset({1, 2, 3})] = conjugate(m_table(2), (1, 2, 3))  # still majority: fine
        glue_conservative(bad)
        from cloneforge.operations import projection

        bad[frozenset({1, 2, 3})] = projection(3, 1, 3)
        with pytest.raises(TableError, match="majority"):
            glue_conservative(bad)
        with pytest.raises(TableError, match="3-subsets"):
            glue_conservative({frozenset({1, 2, 3}): m_table(2)})

    def test_components_precondition(self):
        with pytest.raises(TableError):
            conservative_components(m_table(1))
