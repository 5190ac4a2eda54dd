"""Phase orchestration, consolidation sweeps, context windows, redaction."""

from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from recap.errors import MockMiss, MultiLabelRemains, OverlappingEntities, UnsupportedLocale
from recap.llm import ChatResponse, OracleAdapter
from recap.model import (
    Document,
    EntitySpan,
    LabelPriorityTable,
    Phase,
    Source,
    contains,
)
from recap.pipeline import (
    PipelineConfig,
    extract_context_window,
    filter_false_positives,
    redact,
    resolve_multilabel,
    resolve_overlaps,
    run_phase1,
    run_pipeline,
    split_sentences,
)


def span(start, end, labels, source=Source.REGEX, surface=""):
    if isinstance(labels, str):
        labels = (labels,)
    return EntitySpan(start, end, tuple(labels), source, surface)


TABLE = LabelPriorityTable({
    "ADDRESS": 95, "NAME": 90, "PASSPORT": 80, "PHONE": 50, "BANK": 58,
    "CVV": 15, "AGE": 10,
})


class ScriptedAdapter:
    """Returns a fixed text for every request and counts calls."""

    def __init__(self, text):
        self.text = text
        self.calls = 0

    def complete(self, req):
        self.calls += 1
        return ChatResponse(text=self.text)


class FailingAdapter:
    def __init__(self):
        self.calls = 0

    def complete(self, req):
        self.calls += 1
        raise MockMiss("nope")


# --- phase 1 -----------------------------------------------------------------

def oracle_for(records):
    return OracleAdapter(records)


class _Rec:
    def __init__(self, rec_id, text, gold):
        self.id, self.text, self.gold = rec_id, text, gold


class _G:
    def __init__(self, start, end, label):
        self.start, self.end, self.label = start, end, label


def test_phase1_union_regex_and_llm(registry):
    text = "An klantnummer bij ons: kijk op 10.0.0.1 voor details."
    record = _Rec("d1", text, [_G(0, 2, "NAME")])
    doc = Document("d1", text, "nl_NL")
    entities = run_phase1(doc, registry, oracle_for([record]))
    by_label = {e.labels[0]: e for e in entities}
    assert by_label["NAME"].source is Source.LLM
    assert by_label["IP_ADDRESS"].source is Source.REGEX
    assert len(entities) == 2


def test_phase1_empty_text(registry):
    record = _Rec("d1", "", [])
    entities = run_phase1(Document("d1", "", "sv_SE"), registry, oracle_for([record]))
    assert entities == []


def test_phase1_fail_open_counts_errors(registry):
    doc = Document("d1", "geen regex hier", "nl_NL")
    adapter = FailingAdapter()
    diag = Counter()
    entities = run_phase1(doc, registry, adapter, diagnostics=diag)
    assert entities == []
    assert diag["llm_errors"] == 4  # one per unstructured label
    assert adapter.calls == 4


def test_phase1_fail_closed_propagates(registry):
    doc = Document("d1", "tekst", "nl_NL")
    config = PipelineConfig(fail_open_on_llm_error=False)
    with pytest.raises(MockMiss):
        run_phase1(doc, registry, FailingAdapter(), config)


def test_phase1_unparseable_is_counted_not_fatal(registry):
    doc = Document("d1", "tekst zonder pii", "nl_NL")
    diag = Counter()
    entities = run_phase1(doc, registry, ScriptedAdapter("no json at all"),
                          diagnostics=diag)
    assert entities == []
    assert diag["unparseable_responses"] == 4
    assert diag["llm_errors"] == 0


def test_phase1_merges_identical_spans(registry):
    # The oracle returns the full 10-digit number as a NAME surface; the same
    # span is also a regex match, so the label sets merge.
    text = "id 9876543210 x"
    record = _Rec("d1", text, [_G(3, 13, "NAME")])
    doc = Document("d1", text, "hi_IN")
    entities = run_phase1(doc, registry, oracle_for([record]))
    assert len(entities) == 1
    assert set(entities[0].labels) == {"NAME", "PHONE_IN", "BANK_ACCOUNT_IN"}
    assert entities[0].labels[0] == "NAME"  # highest priority first


# --- phase 2 -----------------------------------------------------------------

def test_resolve_multilabel_via_oracle(registry):
    text = "khata 9876543210 me"
    record = _Rec("d1", text, [_G(6, 16, "PHONE_IN")])
    doc = Document("d1", text, "hi_IN")
    entities = run_phase1(doc, registry, oracle_for([record]))
    assert entities[0].labels == ("BANK_ACCOUNT_IN", "PHONE_IN")
    resolved = resolve_multilabel(doc, entities, oracle_for([record]),
                                  registry.priorities)
    assert [e.labels for e in resolved] == [("PHONE_IN",)]


def test_resolve_multilabel_passthrough_and_counts(registry):
    doc = Document("d1", "plain", "sv_SE")
    singles = [span(0, 5, "NAME", Source.LLM, "plain")]
    adapter = ScriptedAdapter("irrelevant")
    assert resolve_multilabel(doc, singles, adapter, registry.priorities) == singles
    assert adapter.calls == 0


def test_resolve_multilabel_fallback():
    doc = Document("d1", "24", "sv_SE")
    entity = span(0, 2, ("CVV", "AGE"), surface="24")
    diag = Counter()
    resolved = resolve_multilabel(doc, [entity], ScriptedAdapter("neither"),
                                  TABLE, diagnostics=diag)
    assert resolved[0].labels == ("CVV",)  # higher priority wins the fallback
    assert diag["fallback_disambiguations"] == 1


def test_resolve_multilabel_fallback_tie_is_lexicographic():
    table = LabelPriorityTable({"B_LBL": 50, "A_LBL": 50})
    doc = Document("d1", "xx", "sv_SE")
    entity = span(0, 2, ("B_LBL", "A_LBL"), surface="xx")
    resolved = resolve_multilabel(doc, [entity], ScriptedAdapter("?"), table)
    assert resolved[0].labels == ("A_LBL",)


def test_resolve_multilabel_preserves_spans_and_cardinality(registry):
    text = "a 9876543210 b 9876501234 c"
    doc = Document("d1", text, "hi_IN")
    entities = run_phase1(doc, registry, FailingAdapter())
    resolved = resolve_multilabel(doc, entities, ScriptedAdapter("junk"),
                                  registry.priorities)
    assert len(resolved) == len(entities)
    assert [(e.start, e.end) for e in resolved] == [(e.start, e.end) for e in entities]
    assert all(len(e.labels) == 1 for e in resolved)


# --- phase 3: overlap resolution ----------------------------------------------

def test_resolve_overlaps_drops_contained_lower_priority():
    address = span(10, 32, "ADDRESS")
    age = span(10, 12, "AGE")
    assert resolve_overlaps([age, address], TABLE) == [address]


def test_resolve_overlaps_disjoint_unchanged():
    a, b = span(0, 4, "AGE"), span(6, 9, "CVV")
    assert resolve_overlaps([a, b], TABLE) == [a, b]


def test_resolve_overlaps_keeps_high_priority_inside_low():
    passport = span(5, 14, "PASSPORT")
    address = span(0, 40, "ADDRESS")
    table = LabelPriorityTable({"PASSPORT": 80, "ADDRESS": 50})
    kept = resolve_overlaps([passport, address], table)
    assert set((e.start, e.end) for e in kept) == {(5, 14), (0, 40)}


def test_resolve_overlaps_equal_priority_drops_contained():
    outer = span(0, 10, "PHONE")
    inner = span(2, 6, "PHONE")
    assert resolve_overlaps([inner, outer], TABLE) == [outer]


def test_resolve_overlaps_rejects_multilabel():
    with pytest.raises(MultiLabelRemains):
        resolve_overlaps([span(0, 4, ("AGE", "CVV"))], TABLE)


def oracle_containment_free(entities, table):
    """Brute-force pairwise check of the survivor invariant."""
    for a in entities:
        for b in entities:
            if a is not b and contains(a, b) and \
                    table.priority(a.labels[0]) >= table.priority(b.labels[0]):
                return False
    return True


LABELS = sorted(TABLE.priorities)


@settings(max_examples=300)
@given(st.lists(st.tuples(st.integers(0, 30), st.integers(1, 12),
                          st.sampled_from(LABELS)), max_size=10))
def test_resolve_overlaps_invariant_and_idempotence(raw):
    entities = [span(s, s + l, lab) for s, l, lab in raw]
    once = resolve_overlaps(entities, TABLE)
    assert oracle_containment_free(once, TABLE)
    assert resolve_overlaps(once, TABLE) == once
    assert len(once) <= len(entities)


# --- sentence segmentation and context windows ---------------------------------

def test_split_sentences_covers_text():
    text = "A. B holds 042. C!"
    segments = split_sentences(text)
    assert segments == [(0, 2), (2, 15), (15, 18)]
    assert "".join(text[s:e] for s, e in segments) == text


def test_split_sentences_multiscript():
    text = "पहला वाक्य।दूसरा।"
    segments = split_sentences(text)
    assert len(segments) == 2
    text2 = "第一句。第二句!"
    assert len(split_sentences(text2)) == 2


def test_split_sentences_blank_line():
    text = "para one\n\npara two"
    segments = split_sentences(text)
    assert len(segments) == 2
    assert text[segments[1][0]:segments[1][1]] == "para two"


def test_split_terminator_runs():
    assert len(split_sentences("What?! Really...")) == 2


def test_context_window_examples():
    text = "A. B holds 042. C!"
    doc = Document("d", text, "sv_SE")
    hit = span(text.index("042"), text.index("042") + 3, "CVV", surface="042")
    window = extract_context_window(doc, hit, 1)
    assert (window.start, window.end) == (0, len(text))
    assert window.text == text


def test_context_window_clamps():
    doc = Document("d", "Only one sentence here", "sv_SE")
    window = extract_context_window(doc, span(5, 8, "AGE"), 5)
    assert window.text == doc.text


def test_context_window_zero_is_own_sentence():
    text = "First one. Second two. Third three."
    doc = Document("d", text, "sv_SE")
    hit = span(text.index("two"), text.index("two") + 3, "AGE")
    window = extract_context_window(doc, hit, 0)
    assert window.text.strip() == "Second two."


def test_context_window_contains_span_always():
    text = "Aaa bbb. Ccc ddd. Eee fff. Ggg hhh."
    doc = Document("d", text, "sv_SE")
    for start in range(0, len(text) - 1):
        w = extract_context_window(doc, span(start, start + 1, "AGE"), 1)
        assert w.start <= start < start + 1 <= w.end


# --- phase 3: contextual FP filter ---------------------------------------------

def test_fp_filter_retains_confirmed(registry):
    text = "my card code is 482 ok."
    record = _Rec("d1", text, [_G(16, 19, "CVV")])
    doc = Document("d1", text, "nl_NL")
    entity = span(16, 19, "CVV", surface="482")
    kept = filter_false_positives(doc, [entity], oracle_for([record]))
    assert kept == [entity]


def test_fp_filter_removes_denied(registry):
    text = "zaal 24 is vrij."
    record = _Rec("d1", text, [])  # no gold: the oracle answers NO
    doc = Document("d1", text, "nl_NL")
    entity = span(5, 7, "AGE", surface="24")
    diag = Counter()
    kept = filter_false_positives(doc, [entity], oracle_for([record]),
                                  diagnostics=diag)
    assert kept == []
    assert diag["fp_filter_removals"] == 1


def test_fp_filter_skips_non_numeric_labels():
    doc = Document("d1", "Anna woont hier", "nl_NL")
    adapter = ScriptedAdapter("NO")
    entity = span(0, 4, "NAME", Source.LLM, "Anna")
    kept = filter_false_positives(doc, [entity], adapter)
    assert kept == [entity]
    assert adapter.calls == 0


def test_fp_filter_inconclusive_retains():
    doc = Document("d1", "code 482 hier.", "nl_NL")
    entity = span(5, 8, "CVV", surface="482")
    diag = Counter()
    kept = filter_false_positives(doc, [entity], ScriptedAdapter("maybe"),
                                  diagnostics=diag)
    assert kept == [entity]
    assert diag["verification_inconclusive"] == 1


def test_fp_filter_error_retains_under_fail_open():
    doc = Document("d1", "code 482 hier.", "nl_NL")
    entity = span(5, 8, "CVV", surface="482")
    diag = Counter()
    kept = filter_false_positives(doc, [entity], FailingAdapter(), diagnostics=diag)
    assert kept == [entity]
    assert diag["llm_errors"] == 1


# --- full pipeline ---------------------------------------------------------------

def test_run_pipeline_staging(registry):
    text = "bel 06-12345678 nu"
    record = _Rec("d1", text, [_G(4, 15, "PHONE_NL")])
    doc = Document("d1", text, "nl_NL")
    config = PipelineConfig(run_through=Phase.BASELINE)
    adapter = oracle_for([record])
    result = run_pipeline(doc, registry, adapter, config)
    assert set(result.snapshots) == {Phase.BASELINE}
    assert result.final == result.snapshots[Phase.BASELINE]


def test_run_pipeline_snapshots_monotone_cardinality(registry):
    text = "Adres: Kerkstraat 24, Amsterdam. Kamer 7 is vrij."
    record = _Rec("d1", text, [_G(7, 31, "ADDRESS")])
    doc = Document("d1", text, "nl_NL")
    result = run_pipeline(doc, registry, oracle_for([record]))
    sizes = [len(result.snapshots[p]) for p in Phase]
    assert sizes[0] == sizes[1] >= sizes[2]
    assert [e.labels[0] for e in result.final] == ["ADDRESS"]
    assert result.diagnostics["overlap_removals"] == 1  # the 24 inside the address
    assert result.diagnostics["fp_filter_removals"] == 1  # standalone room number


def test_run_pipeline_empty_doc(registry):
    record = _Rec("d1", "niets", [])
    result = run_pipeline(Document("d1", "niets", "nl_NL"), registry,
                          oracle_for([record]))
    assert all(snap == () for snap in result.snapshots.values())


def test_run_pipeline_unsupported_locale(registry):
    with pytest.raises(UnsupportedLocale):
        run_pipeline(Document("d", "x", "xx_XX"), registry, ScriptedAdapter("[]"))


def test_post_phase2_single_label_randomized(registry):
    """Any adapter output, including junk, leaves phase 2 all-single-label."""
    import random
    rng = random.Random(5)
    doc = Document("d", "n " + "9876543210" + " k", "hi_IN")
    for _ in range(40):
        adapter = ScriptedAdapter(rng.choice(["junk", "PHONE_IN", "[]", "no", ""]))
        entities = run_phase1(doc, registry, adapter)
        resolved = resolve_multilabel(doc, entities, adapter, registry.priorities)
        assert all(len(e.labels) == 1 for e in resolved)


# --- redaction -------------------------------------------------------------------

def test_redact_label_style():
    text = "ip 10.0.0.1 ok"
    doc = Document("d", text, "nl_NL")
    entity = span(3, 11, "IP_ADDRESS", surface="10.0.0.1")
    assert redact(doc, [entity], "label") == "ip [IP_ADDRESS] ok"


def test_redact_mask_style():
    doc = Document("d", "pin 1234 end", "nl_NL")
    entity = span(4, 8, "CVV", surface="1234")
    assert redact(doc, [entity], "mask") == "pin **** end"


def test_redact_no_entities_identity():
    doc = Document("d", "unchanged", "nl_NL")
    assert redact(doc, [], "label") == "unchanged"


def test_redact_rejects_overlaps():
    doc = Document("d", "abcdefgh", "nl_NL")
    with pytest.raises(OverlappingEntities):
        redact(doc, [span(0, 4, "A"), span(3, 6, "B")], "label")


def test_redact_rejects_multilabel():
    doc = Document("d", "abcdefgh", "nl_NL")
    with pytest.raises(MultiLabelRemains):
        redact(doc, [span(0, 4, ("A", "B"))], "mask")


def oracle_redact(text, spans_with_labels, style):
    """String-surgery oracle: rebuild char by char."""
    out = []
    i = 0
    spans = sorted(spans_with_labels)
    for start, end, label in spans:
        out.append(text[i:start])
        out.append(f"[{label}]" if style == "label" else "*" * (end - start))
        i = end
    out.append(text[i:])
    return "".join(out)


@settings(max_examples=200)
@given(st.text(alphabet="xyz ", min_size=0, max_size=40), st.data())
def test_redact_matches_oracle(text, data):
    doc = Document("d", text or "x", "nl_NL")
    text = doc.text
    n = data.draw(st.integers(0, min(3, (len(text) + 1) // 2)))
    cuts = sorted(data.draw(st.sets(st.integers(0, len(text)), min_size=2 * n,
                                    max_size=2 * n)))
    spans = []
    for i in range(0, len(cuts) - 1, 2):
        if cuts[i] < cuts[i + 1]:
            spans.append((cuts[i], cuts[i + 1], "X"))
    entities = [span(s, e, lab, surface=text[s:e]) for s, e, lab in spans]
    for style in ("label", "mask"):
        got = redact(doc, entities, style)
        assert got == oracle_redact(text, spans, style)
        repl = sum((len("[X]") if style == "label" else e - s) for s, e, _ in spans)
        assert len(got) == len(text) - sum(e - s for s, e, _ in spans) + repl
