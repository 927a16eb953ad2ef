from __future__ import annotations

import pytest

from cloneforge.operations import (
    FormatError,
    distinct_triples,
    make_operation,
    parse_operation,
    projection,
    serialize_majority,
    serialize_operation,
)

from conftest import majority_with, random_majority_op


def test_full_format_round_trip_bit_exact(catalog_ops):
    for op in catalog_ops.values():
        text = serialize_operation(op)
        again = parse_operation(text)
        assert again == op
        assert serialize_operation(again) == text


def test_majority_format_round_trip_bit_exact(catalog_ops):
    for op in catalog_ops.values():
        text = serialize_majority(op)
        again = parse_operation(text)
        assert again == op
        assert serialize_majority(again) == text


def test_full_format_other_arities():
    for op in (projection(1, 1, 4), make_operation(2, 3, list(range(1, 4)) * 3), random_majority_op(4, 9)):
        assert parse_operation(serialize_operation(op)) == op


def test_majority_shorthand_rejects_non_majority():
    with pytest.raises(Exception):
        serialize_majority(projection(3, 1, 3))


def test_parse_tolerates_order_comments_blanks():
    text = (
        "# a comment\n"
        "OPERATION arity=1 size=2  # trailing comment\n"
        "\n"
        "2 -> 1\n"
        "1 -> 2\n"
    )
    op = parse_operation(text)
    assert op(1) == 2 and op(2) == 1


def test_duplicate_tuple_line_number():
    text = "OPERATION arity=1 size=2\n1 -> 1\n1 -> 2\n"
    with pytest.raises(FormatError, match=r"line 3.*duplicate"):
        parse_operation(text)


def test_missing_tuple_reported():
    text = "OPERATION arity=1 size=2\n1 -> 1\n"
    with pytest.raises(FormatError, match=r"missing tuple \(2,\)"):
        parse_operation(text)


def test_malformed_line_number():
    text = "OPERATION arity=1 size=2\n1 -> 1\nnot a row\n"
    with pytest.raises(FormatError, match=r"line 3"):
        parse_operation(text)


def test_unknown_header():
    with pytest.raises(FormatError, match=r"line 1"):
        parse_operation("TABLE size=3\n")


def test_entry_out_of_range_line():
    text = "OPERATION arity=1 size=2\n1 -> 3\n2 -> 1\n"
    with pytest.raises(FormatError, match=r"line 2"):
        parse_operation(text)


def test_majority_format_rejects_repeats_and_requires_all():
    ok = serialize_majority(majority_with(3, (1, 2, 3, 2, 1, 3)))
    with_repeat = ok + "1 1 2 -> 1\n"
    with pytest.raises(FormatError, match=r"non-distinct"):
        parse_operation(with_repeat)
    truncated = "\n".join(ok.splitlines()[:-1]) + "\n"
    with pytest.raises(FormatError, match=r"missing tuple"):
        parse_operation(truncated)


def test_majority_format_fills_by_majority_rule():
    from cloneforge.operations import majority_from_distinct

    op = majority_from_distinct(4, {t: t[0] for t in distinct_triples(4)})
    parsed = parse_operation(serialize_majority(op))
    assert parsed(1, 1, 4) == 1 and parsed(4, 2, 4) == 4 and parsed(3, 2, 2) == 2
