from __future__ import annotations

import itertools

import pytest

from cloneforge.clones import (
    CloneCapExceeded,
    MinimalityKind,
    WitnessReason,
    contains,
    decide_minimality,
    generates,
    is_minimal_majority,
    majority_members,
    membership_witness_term,
    quick_nonminimality_witness,
    ternary_closure,
)
from cloneforge.operations import (
    Operation,
    all_bijections,
    compose,
    conjugate,
    distinct_triples,
    is_majority,
    is_projection,
    majority_from_distinct,
    projection,
)
from cloneforge.terms import Node, Variable, eval_term

from conftest import majority_with, random_majority_op


class TestClosure:
    def test_fragment_sizes(self, catalog_ops):
        assert len(ternary_closure(catalog_ops["M1"]).members) == 4
        assert len(ternary_closure(catalog_ops["m3"]).members) == 11
        assert len(ternary_closure(projection(3, 1, 4)).members) == 3

    def test_fragment_contains_projections_and_generator(self, catalog_ops):
        frag = ternary_closure(catalog_ops["M2"])
        tables = frag.tables()
        for i in (1, 2, 3):
            assert projection(3, i, 4).packed() in tables
        assert catalog_ops["M2"].packed() in tables

    def test_closed_fragment_is_a_fixpoint(self, catalog_ops):
        frag = ternary_closure(catalog_ops["M3"])
        f = catalog_ops["M3"]
        tables = frag.tables()
        for g1, g2, g3 in itertools.product(frag.members, repeat=3):
            assert compose(f, [g1, g2, g3]).packed() in tables

    def test_nontrivial_members_are_majority(self, catalog_ops):
        for name in ("m2", "M2", "M3"):
            for member in ternary_closure(catalog_ops[name]).members:
                assert is_projection(member) is not None or is_majority(member)

    def test_cap_overflow_flags_partial(self):
        f = random_majority_op(4, 77)
        frag = ternary_closure(f, cap=40)
        assert not frag.closed
        with pytest.raises(CloneCapExceeded):
            contains(frag, f)

    def test_closure_matches_term_enumeration(self, catalog_ops):
        # independent micro-oracle: evaluate every term of depth <= 3 with
        # early saturation and compare against the worklist closure
        f = catalog_ops["m2"]
        depth0 = [Variable(1), Variable(2), Variable(3)]
        terms = list(depth0)
        tables = {eval_term(t, f).packed() for t in terms}
        for _ in range(3):
            new_terms = [
                Node(a, b, c)
                for a, b, c in itertools.product(terms, repeat=3)
            ]
            added = False
            for t in new_terms:
                key = eval_term(t, f).packed()
                if key not in tables:
                    tables.add(key)
                    terms.append(t)
                    added = True
            if not added:
                break
        assert tables == ternary_closure(f).tables()


class TestGeneration:
    def test_generates_self(self, catalog_ops):
        assert generates(catalog_ops["M3"], catalog_ops["M3"])

    def test_members_generate_each_other(self, catalog_ops):
        members = majority_members(catalog_ops["M2"])
        assert len(members) == 3
        for g, h in itertools.permutations(members, 2):
            assert generates(g, h)

    def test_m2_does_not_generate_m1(self, catalog_ops):
        assert not generates(catalog_ops["M2"], catalog_ops["M1"])

    def test_generation_transitivity_spot(self, catalog_ops):
        members = majority_members(catalog_ops["M3"])
        f, g, h = members[0], members[3], members[7]
        assert generates(f, g) and generates(g, h) and generates(f, h)

    def test_membership_witness_terms(self, catalog_ops):
        f = catalog_ops["M3"]
        for member in ternary_closure(f).members:
            term = membership_witness_term(f, member)
            assert eval_term(term, f) == member

    def test_witness_for_non_member_rejected(self, catalog_ops):
        with pytest.raises(Exception):
            membership_witness_term(catalog_ops["M2"], catalog_ops["M1"])


class TestQuickWitness:
    def test_none_for_minimal(self, catalog_ops):
        assert quick_nonminimality_witness(catalog_ops["M1"]) is None
        assert quick_nonminimality_witness(catalog_ops["m2"]) is None

    def test_outcome_recorded_for_skew_table(self):
        # constant 4 on one cyclic class, constant 1 on all other distinct triples
        values = {t: 1 for t in distinct_triples(4)}
        for t in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
            values[t] = 4
        f = majority_from_distinct(4, values)
        outcome = quick_nonminimality_witness(f, cap=5000)
        if outcome is not None:
            witness, reason = outcome
            assert isinstance(witness, Operation)
            assert reason in (WitnessReason.SUBSET_ESCAPE, WitnessReason.RANGE_ESCAPE)


class TestMinimality:
    def test_catalog_minimal(self, catalog_ops):
        for name in ("M1", "M2", "M3", "m1", "m2", "m3"):
            verdict = is_minimal_majority(catalog_ops[name])
            assert verdict.kind is MinimalityKind.MINIMAL, name

    def test_known_non_minimal_three_element(self):
        f = majority_with(3, (1, 1, 2, 1, 1, 1))
        verdict = is_minimal_majority(f)
        assert verdict.kind is MinimalityKind.NOT_MINIMAL
        assert verdict.witness is not None
        assert not generates(verdict.witness, f)

    def test_not_minimal_witness_is_member(self):
        f = majority_with(3, (1, 1, 2, 1, 1, 1))
        verdict = is_minimal_majority(f)
        assert contains(ternary_closure(f), verdict.witness)

    def test_verdict_is_isomorphism_invariant(self, catalog_ops):
        samples = [catalog_ops["M1"], catalog_ops["M2"], catalog_ops["M3"], random_majority_op(4, 3)]
        for f in samples:
            base = is_minimal_majority(f, cap=200_000).kind
            for phi in all_bijections(4):
                assert is_minimal_majority(conjugate(f, phi), cap=200_000).kind is base

    def test_minimal_members_share_the_clone(self, catalog_ops):
        for name in ("M2", "M3"):
            f = catalog_ops[name]
            want = {m.table for m in majority_members(f)}
            for g in majority_members(f):
                assert {m.table for m in majority_members(g)} == want

    def test_oracle_mode_agrees_on_samples(self):
        for seed in range(12):
            f = random_majority_op(3, seed)
            engine = is_minimal_majority(f)
            oracle = decide_minimality(f, shortcuts=False)
            assert engine.kind is oracle.kind

    def test_requires_majority(self):
        with pytest.raises(Exception):
            is_minimal_majority(projection(3, 1, 3))
