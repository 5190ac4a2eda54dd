"""Span geometry and code-point slicing, checked against point-set oracles."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from recap.errors import OutOfRange
from recap.model import (
    Document,
    EntitySpan,
    LabelPriorityTable,
    Phase,
    Source,
    canonical_order,
    contains,
    overlaps,
    slice_text,
)


def span(start, end, label="X"):
    return EntitySpan(start, end, (label,), Source.GOLD, "")


def oracle_overlaps(a, b):
    """Interval oracle: compare explicit point sets."""
    return bool(set(range(a.start, a.end)) & set(range(b.start, b.end)))


def oracle_contains(outer, inner):
    po, pi = set(range(outer.start, outer.end)), set(range(inner.start, inner.end))
    return pi <= po and len(po) > len(pi)


def all_spans(limit):
    return [span(s, e) for s in range(limit) for e in range(s + 1, limit + 1)]


def test_contains_examples():
    assert contains(span(10, 32, "ADDRESS"), span(10, 12, "AGE"))
    assert not contains(span(5, 9), span(5, 9))
    assert not contains(span(0, 4), span(3, 7))


def test_overlaps_examples():
    assert overlaps(span(0, 4), span(3, 7))
    assert not overlaps(span(0, 4), span(4, 8))
    assert overlaps(span(2, 6), span(0, 10))


def test_half_open_algebra_exhaustive():
    """Containment implies overlap; overlap symmetric; containment
    antisymmetric and irreflexive. All spans with end <= 12."""
    spans = all_spans(12)
    for a in spans:
        assert not contains(a, a)
        for b in spans:
            assert overlaps(a, b) == oracle_overlaps(a, b)
            assert contains(a, b) == oracle_contains(a, b)
            assert overlaps(a, b) == overlaps(b, a)
            if contains(a, b):
                assert overlaps(a, b)
                assert not contains(b, a)


def test_slice_devanagari():
    text = "नमस्ते दुनिया"
    # Independent oracle: assemble the prefix code point by code point.
    expected = "".join(list(text)[0:6])
    assert slice_text(text, 0, 6) == expected == "नमस्ते"


def test_slice_trivial():
    assert slice_text("abc", 0, 3) == "abc"
    assert slice_text("abc", 2, 2) == ""
    assert slice_text("", 0, 0) == ""


def test_slice_bounds():
    with pytest.raises(OutOfRange):
        slice_text("abc", 0, 4)
    with pytest.raises(OutOfRange):
        slice_text("abc", -1, 2)
    with pytest.raises(OutOfRange):
        slice_text("abc", 3, 2)


@given(st.text(min_size=1, max_size=60), st.data())
def test_offset_round_trip(text, data):
    start = data.draw(st.integers(0, len(text) - 1))
    end = data.draw(st.integers(start + 1, len(text)))
    entity = EntitySpan.from_text(text, start, end, ("X",), Source.GOLD)
    assert slice_text(text, start, end) == entity.surface
    assert len(entity.surface) == end - start


def test_entity_invariants():
    with pytest.raises(ValueError):
        EntitySpan(3, 3, ("X",), Source.GOLD, "")
    with pytest.raises(ValueError):
        EntitySpan(0, 2, (), Source.GOLD, "ab")
    with pytest.raises(ValueError):
        Document("", "text", "sv_SE")


def test_phase_ordering():
    assert Phase.BASELINE < Phase.MULTILABEL < Phase.CONSOLIDATION
    assert [p.value for p in Phase] == [1, 2, 3]


def test_canonical_order():
    items = [span(5, 9, "B"), span(0, 4, "A"), span(5, 12, "A"), span(5, 9, "A")]
    ordered = canonical_order(items)
    assert [(e.start, e.end, e.labels[0]) for e in ordered] == [
        (0, 4, "A"), (5, 12, "A"), (5, 9, "A"), (5, 9, "B"),
    ]


def test_priority_table():
    table = LabelPriorityTable({"ADDRESS": 95, "AGE": 10, "CVV": 15})
    assert table.priority("ADDRESS") == 95
    assert table.rank_labels(["AGE", "CVV", "ADDRESS"]) == ("ADDRESS", "CVV", "AGE")
    assert "AGE" in table and "PHONE" not in table
    from recap.errors import UnknownLabel
    with pytest.raises(UnknownLabel):
        table.priority("PHONE")
