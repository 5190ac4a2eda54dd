"""Prompt rendering, response parsing, grounding, and adapter behavior."""

import json
import threading
from collections import Counter
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

import pytest
from hypothesis import given
from hypothesis import strategies as st

from recap.errors import (
    BudgetExhausted,
    MissingPlaceholder,
    MockMiss,
    TransportError,
    UnparseableResponse,
)
from recap.llm import (
    AdapterConfig,
    ChatRequest,
    ChatResponse,
    FixtureAdapter,
    HttpAdapter,
    LlmTask,
    OracleAdapter,
    PromptLibrary,
    PromptTemplate,
    TaskKind,
    ground_spans,
    parse_extraction,
    parse_label_choice,
    parse_verification,
)
from recap.model import Document, Source


def resp(text):
    return ChatResponse(text=text)


# --- templates -------------------------------------------------------------

def test_render_is_deterministic():
    lib = PromptLibrary()
    task = LlmTask(TaskKind.EXTRACT, "vi_VN", "NAME")
    bindings = {"locale": "vi_VN", "text": "xin chào", "label": "NAME", "doc_id": "d1"}
    first = lib.get(task).render(bindings)
    second = lib.get(task).render(bindings)
    assert first == second
    assert first.temperature == 0.0


def test_name_prompt_carries_locale_rules():
    lib = PromptLibrary()
    req = lib.get(LlmTask(TaskKind.EXTRACT, "vi_VN", "NAME")).render(
        {"locale": "vi_VN", "text": "t", "label": "NAME", "doc_id": "d"})
    assert "vi_VN" in req.system
    assert "family name" in req.system
    assert 'LOCALE: vi_VN' in req.user


def test_missing_placeholder():
    template = PromptTemplate("disambiguate", "sys", "pick from {candidate_labels}")
    with pytest.raises(MissingPlaceholder) as err:
        template.render({"locale": "sv_SE"})
    assert err.value.name == "candidate_labels"


def test_bound_values_are_not_reinterpreted():
    template = PromptTemplate("extract", "s", "TEXT: {text}")
    req = template.render({"text": "literal {locale} stays"})
    assert req.user == "TEXT: literal {locale} stays"


def test_locale_override_wins(tmp_path):
    (tmp_path / "disambiguate.sv_SE.txt").write_text("custom sys\n---\ncustom {text}",
                                                     encoding="utf-8")
    lib = PromptLibrary(tmp_path)
    swedish = lib.get(LlmTask(TaskKind.DISAMBIGUATE, "sv_SE"))
    other = lib.get(LlmTask(TaskKind.DISAMBIGUATE, "fi_FI"))
    assert swedish.system == "custom sys"
    assert swedish.user == "custom {text}"
    assert other.system != "custom sys"


def test_fingerprint_ignores_binding_order():
    a = ChatRequest("s", "u", "extract", {"x": "1", "y": "2"})
    b = ChatRequest("s", "u", "extract", dict(reversed({"x": "1", "y": "2"}.items())))
    assert a.fingerprint() == b.fingerprint()
    c = ChatRequest("s", "u", "extract", {"x": "1", "y": "3"})
    assert a.fingerprint() != c.fingerprint()


# --- parsers ---------------------------------------------------------------

def test_parse_extraction_plain():
    assert parse_extraction(resp('["Nguyễn Văn An", "Trần Thị B"]')) == \
        ["Nguyễn Văn An", "Trần Thị B"]


def test_parse_extraction_empty_list():
    assert parse_extraction(resp("[]")) == []


def test_parse_extraction_fenced():
    assert parse_extraction(resp('Sure! Here are the names: ```json\n["A"]\n```')) == ["A"]


def test_parse_extraction_skips_non_string_arrays():
    assert parse_extraction(resp('[1, 2] then ["ok", "fine"]')) == ["ok", "fine"]
    # The inner string array is the first well-formed one in scan order.
    assert parse_extraction(resp('[[1], ["nested"], "x"] but ["y"]')) == ["nested"]


def test_parse_extraction_preserves_duplicates_and_whitespace():
    assert parse_extraction(resp('["a b ", "a b "]')) == ["a b ", "a b "]


def test_parse_extraction_unparseable():
    for raw in ("no list here", "[unclosed", "{}", ""):
        with pytest.raises(UnparseableResponse):
            parse_extraction(resp(raw))


def test_parse_label_choice():
    assert parse_label_choice(resp("PHONE_IN"), ["PHONE_IN", "BANK_ACCOUNT_IN"]) == "PHONE_IN"
    assert parse_label_choice(resp("neither applies"), ["AGE", "CVV"]) is None
    assert parse_label_choice(
        resp("It is a PHONE_IN, not a BANK_ACCOUNT_IN"),
        ["PHONE_IN", "BANK_ACCOUNT_IN"]) is None


def test_parse_label_choice_whole_token():
    # AGE appearing only inside AGE_X must not count as a mention of AGE.
    assert parse_label_choice(resp("AGE_X"), ["AGE", "AGE_X"]) == "AGE_X"
    assert parse_label_choice(resp("the label is phone_in."), ["PHONE_IN", "CVV"]) == "PHONE_IN"


def test_parse_verification():
    assert parse_verification(resp("YES")) is True
    assert parse_verification(resp("No, this is a street number.")) is False
    assert parse_verification(resp("possibly")) is None
    assert parse_verification(resp("12345")) is None
    assert parse_verification(resp("")) is None
    assert parse_verification(resp("  yes, confirmed")) is True


# --- grounding ---------------------------------------------------------------

def oracle_occurrences(text, needle):
    """Naive left-to-right non-overlapping substring scan."""
    spans, i = [], 0
    while i + len(needle) <= len(text):
        if text[i:i + len(needle)] == needle:
            spans.append((i, i + len(needle)))
            i += len(needle)
        else:
            i += 1
    return spans


def test_ground_spans_every_occurrence():
    doc = Document("d", "Call An. An lives here.", "vi_VN")
    expected = oracle_occurrences(doc.text, "An")
    spans = ground_spans(doc, ["An"], "NAME")
    assert [(e.start, e.end) for e in spans] == expected
    assert len(expected) == 2
    assert all(e.source is Source.LLM and e.labels == ("NAME",) for e in spans)


def test_ground_spans_miss_counted():
    doc = Document("d", "nothing here", "sv_SE")
    diag = Counter()
    assert ground_spans(doc, ["Zzz"], "NAME", diag) == []
    assert diag["grounding_misses"] == 1


def test_ground_spans_empty_dropped():
    doc = Document("d", "text", "sv_SE")
    diag = Counter()
    assert ground_spans(doc, ["", "   "], "NAME", diag) == []
    assert diag["grounding_misses"] == 0


def test_ground_spans_case_fallback():
    doc = Document("d", "ANNA lives here", "sv_SE")
    spans = ground_spans(doc, ["Anna"], "NAME")
    assert [(e.start, e.end) for e in spans] == [(0, 4)]
    assert spans[0].surface == "ANNA"


def test_ground_spans_dedup():
    doc = Document("d", "An An", "vi_VN")
    spans = ground_spans(doc, ["An", "An"], "NAME")
    assert [(e.start, e.end) for e in spans] == [(0, 2), (3, 5)]


@given(st.text(alphabet="ab ", min_size=1, max_size=30),
       st.text(alphabet="ab", min_size=1, max_size=4))
def test_grounding_soundness(text, needle):
    doc = Document("d", text, "sv_SE")
    for entity in ground_spans(doc, [needle], "NAME"):
        assert doc.text[entity.start:entity.end] == needle == entity.surface


# --- mock adapters -----------------------------------------------------------

def test_fixture_adapter_roundtrip(tmp_path):
    req = ChatRequest("s", "u", "extract", {"doc_id": "d", "label": "NAME"})
    path = tmp_path / "fixture.json"
    path.write_text(json.dumps({req.fingerprint(): '["X"]'}), encoding="utf-8")
    adapter = FixtureAdapter.from_file(path)
    assert adapter.complete(req).text == '["X"]'


def test_fixture_adapter_miss_names_fingerprint():
    adapter = FixtureAdapter({})
    req = ChatRequest("s", "u", "extract", {"doc_id": "d"})
    with pytest.raises(MockMiss) as err:
        adapter.complete(req)
    assert req.fingerprint() in str(err.value)


class _Record:
    def __init__(self, rec_id, text, gold):
        self.id = rec_id
        self.text = text
        self.gold = gold


class _Gold:
    def __init__(self, start, end, label):
        self.start, self.end, self.label = start, end, label


@pytest.fixture
def oracle():
    record = _Record("doc1", "An lives at 24 Main St. PIN 9876543210.", [
        _Gold(0, 2, "NAME"),
        _Gold(12, 22, "ADDRESS"),
        _Gold(28, 38, "PHONE_IN"),
    ])
    return OracleAdapter([record])


def test_oracle_extraction(oracle):
    req = ChatRequest("s", "u", "extract", {"doc_id": "doc1", "label": "NAME"})
    assert json.loads(oracle.complete(req).text) == ["An"]
    req = ChatRequest("s", "u", "extract", {"doc_id": "doc1", "label": "PASSWORD"})
    assert json.loads(oracle.complete(req).text) == []


def test_oracle_disambiguation(oracle):
    req = ChatRequest("s", "u", "disambiguate", {
        "doc_id": "doc1", "span_start": "28", "span_end": "38",
        "candidate_labels": "BANK_ACCOUNT_IN, PHONE_IN",
    })
    assert oracle.complete(req).text == "PHONE_IN"
    req = ChatRequest("s", "u", "disambiguate", {
        "doc_id": "doc1", "span_start": "0", "span_end": "1",
        "candidate_labels": "AGE, CVV",
    })
    assert oracle.complete(req).text == "NONE"


def test_oracle_verification(oracle):
    yes = ChatRequest("s", "u", "verify", {
        "doc_id": "doc1", "span_start": "28", "span_end": "38", "label": "PHONE_IN"})
    no = ChatRequest("s", "u", "verify", {
        "doc_id": "doc1", "span_start": "28", "span_end": "38", "label": "CVV"})
    assert oracle.complete(yes).text == "YES"
    assert oracle.complete(no).text == "NO"


def test_oracle_unknown_doc(oracle):
    req = ChatRequest("s", "u", "extract", {"doc_id": "ghost", "label": "NAME"})
    with pytest.raises(MockMiss):
        oracle.complete(req)


# --- HTTP adapter -------------------------------------------------------------

class _StubHandler(BaseHTTPRequestHandler):
    failures_left = 0
    status_on_fail = 500
    seen_bodies: list = []

    def do_POST(self):
        length = int(self.headers["Content-Length"])
        body = json.loads(self.rfile.read(length))
        type(self).seen_bodies.append(body)
        if type(self).failures_left > 0:
            type(self).failures_left -= 1
            self.send_response(type(self).status_on_fail)
            self.end_headers()
            return
        payload = {"choices": [{"message": {"content": "YES"},
                                "finish_reason": "stop"}]}
        data = json.dumps(payload).encode()
        self.send_response(200)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(data)))
        self.end_headers()
        self.wfile.write(data)

    def log_message(self, *args):
        pass


@pytest.fixture
def stub_server():
    server = ThreadingHTTPServer(("127.0.0.1", 0), _StubHandler)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    _StubHandler.seen_bodies = []
    yield f"http://127.0.0.1:{server.server_address[1]}"
    server.shutdown()


def _request():
    return ChatRequest("sys", "user", "verify", {"doc_id": "d"})


def test_http_adapter_retries_then_succeeds(stub_server):
    _StubHandler.failures_left = 2
    adapter = HttpAdapter(AdapterConfig(endpoint=stub_server, model="m",
                                        retry_budget=3, backoff_base=0.01))
    response = adapter.complete(_request())
    assert response.text == "YES"
    assert response.retries == 2
    assert adapter.retries_total == 2


def test_http_adapter_budget_exhausted(stub_server):
    _StubHandler.failures_left = 99
    adapter = HttpAdapter(AdapterConfig(endpoint=stub_server, model="m",
                                        retry_budget=1, backoff_base=0.01))
    with pytest.raises(BudgetExhausted):
        adapter.complete(_request())
    _StubHandler.failures_left = 0


def test_http_adapter_client_error_fails_fast(stub_server):
    _StubHandler.failures_left = 1
    _StubHandler.status_on_fail = 404
    adapter = HttpAdapter(AdapterConfig(endpoint=stub_server, model="m",
                                        retry_budget=3, backoff_base=0.01))
    with pytest.raises(TransportError):
        adapter.complete(_request())
    assert adapter.retries_total == 0
    _StubHandler.status_on_fail = 500


def test_http_adapter_wire_shape(stub_server):
    _StubHandler.failures_left = 0
    adapter = HttpAdapter(AdapterConfig(endpoint=stub_server, model="model-x"))
    adapter.complete(_request())
    body = _StubHandler.seen_bodies[-1]
    assert body["model"] == "model-x"
    assert body["temperature"] == 0.0
    assert [m["role"] for m in body["messages"]] == ["system", "user"]


def test_adapter_config_validation():
    with pytest.raises(ValueError):
        AdapterConfig(endpoint="http://x", model="m", retry_budget=-1)
    with pytest.raises(ValueError):
        AdapterConfig(endpoint="http://x", model="m", max_in_flight=0)


def test_adapter_config_from_env(monkeypatch):
    monkeypatch.setenv("RECAP_LLM_ENDPOINT", "http://backend.test/v1")
    monkeypatch.setenv("RECAP_LLM_API_KEY", "sekrit")
    monkeypatch.setenv("RECAP_LLM_MODEL", "chat-large")
    cfg = AdapterConfig.from_env()
    assert (cfg.endpoint, cfg.api_key, cfg.model) == \
        ("http://backend.test/v1", "sekrit", "chat-large")
    monkeypatch.delenv("RECAP_LLM_ENDPOINT")
    with pytest.raises(TransportError):
        AdapterConfig.from_env()
