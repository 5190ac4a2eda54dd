"""Chat-model integration: prompt templates, response parsing, grounding.

The pipeline talks to any OpenAI-compatible chat backend through a small
adapter interface. Two mock adapters ship alongside the HTTP one: a fixture
adapter that replays scripted responses keyed by request fingerprint, and an
oracle adapter that answers from gold annotations, which pins down the
pipeline's best-case behavior in tests.

Model output is never trusted: temperature is fixed at 0 and every parser is
total, mapping any byte string to either a value or a counted diagnostic.
"""

from __future__ import annotations

import hashlib
import json
import os
import re
import threading
import time
import urllib.error
import urllib.request
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping, Protocol, Sequence

from .errors import (
    AdapterTimeout,
    BudgetExhausted,
    MissingPlaceholder,
    MockMiss,
    TransportError,
    UnparseableResponse,
)
from .model import UNSTRUCTURED_LABELS, Document, EntitySpan, Source, canonical_order

ENV_ENDPOINT = "RECAP_LLM_ENDPOINT"
ENV_API_KEY = "RECAP_LLM_API_KEY"
ENV_MODEL = "RECAP_LLM_MODEL"


class TaskKind(Enum):
    EXTRACT = "extract"
    DISAMBIGUATE = "disambiguate"
    VERIFY = "verify"


@dataclass(frozen=True)
class LlmTask:
    kind: TaskKind
    locale: str
    label: str | None = None  # extraction target; required for EXTRACT

    def __post_init__(self):
        if self.kind is TaskKind.EXTRACT and self.label not in UNSTRUCTURED_LABELS:
            raise ValueError(f"extraction label must be unstructured, got {self.label!r}")


_PLACEHOLDER = re.compile(r"\{([a-z_]+)\}")


@dataclass(frozen=True)
class ChatRequest:
    """One chat call. `task_kind` and `bindings` are kept for fingerprinting
    and audit; only model/messages/temperature/max_tokens go on the wire."""

    system: str
    user: str
    task_kind: str
    bindings: Mapping[str, str]
    model: str = ""
    temperature: float = 0.0
    max_tokens: int | None = None

    def fingerprint(self) -> str:
        """Stable digest of (task kind, bound values); field order irrelevant."""
        payload = json.dumps(
            {"task": self.task_kind, "bindings": dict(sorted(self.bindings.items()))},
            sort_keys=True, ensure_ascii=False,
        )
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()

    def wire_body(self, default_model: str = "") -> dict:
        body = {
            "model": self.model or default_model,
            "messages": [
                {"role": "system", "content": self.system},
                {"role": "user", "content": self.user},
            ],
            "temperature": self.temperature,
        }
        if self.max_tokens is not None:
            body["max_tokens"] = self.max_tokens
        return body


@dataclass(frozen=True)
class ChatResponse:
    text: str
    finish_reason: str = "stop"
    latency: float = 0.0
    retries: int = 0


@dataclass(frozen=True)
class PromptTemplate:
    task_kind: str
    system: str
    user: str

    @property
    def placeholders(self) -> frozenset[str]:
        return frozenset(_PLACEHOLDER.findall(self.system) + _PLACEHOLDER.findall(self.user))

    def render(self, bindings: Mapping[str, str]) -> ChatRequest:
        """Deterministic single-pass substitution; placeholders introduced by
        bound values are left untouched."""
        missing = self.placeholders - set(bindings)
        if missing:
            raise MissingPlaceholder(sorted(missing)[0])

        def fill(text: str) -> str:
            return _PLACEHOLDER.sub(lambda m: str(bindings[m.group(1)]), text)

        return ChatRequest(
            system=fill(self.system),
            user=fill(self.user),
            task_kind=self.task_kind,
            bindings={k: str(v) for k, v in bindings.items()},
        )


def render_prompt(template: PromptTemplate, bindings: Mapping[str, str]) -> ChatRequest:
    return template.render(bindings)


_TEMPLATE_SEPARATOR = "\n---\n"


def _parse_template_file(task_kind: str, raw: str) -> PromptTemplate:
    if _TEMPLATE_SEPARATOR not in raw:
        raise ValueError(f"template for {task_kind!r} lacks a '---' system/user separator")
    system, user = raw.split(_TEMPLATE_SEPARATOR, 1)
    return PromptTemplate(task_kind, system.strip(), user.strip())


class PromptLibrary:
    """Loads task templates from a directory, falling back to the packaged
    defaults. A file named `<stem>.<locale>.txt` overrides `<stem>.txt` for
    that locale."""

    def __init__(self, directory: str | Path | None = None):
        self._dir = Path(directory) if directory is not None else None
        self._cache: dict[tuple[str, str | None], PromptTemplate] = {}

    @staticmethod
    def _stem(task: LlmTask) -> str:
        if task.kind is TaskKind.EXTRACT:
            return f"extract_{task.label.lower()}"
        if task.kind is TaskKind.DISAMBIGUATE:
            return "disambiguate"
        return "verify_numeric"

    def _read(self, filename: str) -> str | None:
        if self._dir is not None:
            candidate = self._dir / filename
            if candidate.is_file():
                return candidate.read_text(encoding="utf-8")
        ref = resources.files("recap.data.prompts").joinpath(filename)
        if ref.is_file():
            return ref.read_text(encoding="utf-8")
        return None

    def get(self, task: LlmTask) -> PromptTemplate:
        stem = self._stem(task)
        for key in ((stem, task.locale), (stem, None)):
            if key in self._cache:
                return self._cache[key]
            name = f"{stem}.{key[1]}.txt" if key[1] else f"{stem}.txt"
            raw = self._read(name)
            if raw is not None:
                template = _parse_template_file(task.kind.value, raw)
                self._cache[key] = template
                return template
        raise FileNotFoundError(f"no prompt template for task {stem!r}")


# --- response parsing ----------------------------------------------------

_decoder = json.JSONDecoder()


def parse_extraction(resp: ChatResponse) -> list[str]:
    """Pull the first well-formed JSON array of strings out of the raw text.

    Surrounding prose and code fences are tolerated; duplicates and interior
    whitespace are preserved. Raises UnparseableResponse when no such array
    exists anywhere in the text.
    """
    text = resp.text
    pos = 0
    while True:
        start = text.find("[", pos)
        if start < 0:
            raise UnparseableResponse(f"no JSON string array in response: {text[:80]!r}")
        try:
            value, _ = _decoder.raw_decode(text, start)
        except ValueError:
            pos = start + 1
            continue
        if isinstance(value, list) and all(isinstance(v, str) for v in value):
            return value
        pos = start + 1


def parse_label_choice(resp: ChatResponse, candidates: Sequence[str]) -> str | None:
    """Return the unique candidate named as a whole token (case-insensitive),
    or None when zero or several candidates are mentioned."""
    if not candidates:
        raise ValueError("candidates must be non-empty")
    mentioned = []
    for cand in dict.fromkeys(candidates):
        if re.search(rf"(?<!\w){re.escape(cand)}(?!\w)", resp.text, re.IGNORECASE):
            mentioned.append(cand)
    return mentioned[0] if len(mentioned) == 1 else None


_ALPHA_TOKEN = re.compile(r"[^\W\d_]+")


def parse_verification(resp: ChatResponse) -> bool | None:
    """True/False from a leading yes/no; None for anything else."""
    m = _ALPHA_TOKEN.search(resp.text)
    if m is None:
        return None
    token = m.group(0).casefold()
    if token == "yes":
        return True
    if token == "no":
        return False
    return None


# --- grounding -----------------------------------------------------------

def _literal_occurrences(text: str, needle: str) -> list[tuple[int, int]]:
    spans = []
    pos = 0
    while True:
        idx = text.find(needle, pos)
        if idx < 0:
            return spans
        spans.append((idx, idx + len(needle)))
        pos = idx + len(needle)


def ground_spans(doc: Document, extracted: Iterable[str], label: str,
                 diagnostics: Counter | None = None) -> list[EntitySpan]:
    """Recover character spans for model-returned surface strings.

    Every non-overlapping literal occurrence is annotated (exact match first,
    case-insensitive as a fallback); strings that never occur are dropped and
    counted under `grounding_misses`.
    """
    found: set[tuple[int, int]] = set()
    for raw in extracted:
        needle = raw.strip()
        if not needle:
            continue
        occurrences = _literal_occurrences(doc.text, needle)
        if not occurrences:
            occurrences = [m.span() for m in
                           re.finditer(re.escape(needle), doc.text, re.IGNORECASE)]
        if not occurrences:
            if diagnostics is not None:
                diagnostics["grounding_misses"] += 1
            continue
        found.update(occurrences)
    return canonical_order(
        EntitySpan.from_text(doc.text, s, e, (label,), Source.LLM) for s, e in found
    )


# --- adapters ------------------------------------------------------------

class ChatAdapter(Protocol):
    def complete(self, req: ChatRequest) -> ChatResponse: ...


@dataclass(frozen=True)
class AdapterConfig:
    endpoint: str
    model: str
    api_key: str = ""
    timeout: float = 30.0
    retry_budget: int = 2
    max_in_flight: int = 4
    backoff_base: float = 0.5

    def __post_init__(self):
        if self.retry_budget < 0:
            raise ValueError("retry budget must be >= 0")
        if self.max_in_flight < 1:
            raise ValueError("max in-flight must be >= 1")

    @classmethod
    def from_env(cls, **overrides) -> "AdapterConfig":
        endpoint = os.environ.get(ENV_ENDPOINT, "")
        if not endpoint:
            raise TransportError(f"{ENV_ENDPOINT} is not set")
        return cls(
            endpoint=endpoint,
            model=os.environ.get(ENV_MODEL, ""),
            api_key=os.environ.get(ENV_API_KEY, ""),
            **overrides,
        )


class HttpAdapter:
    """OpenAI-compatible chat-completions client with bounded concurrency and
    exponential backoff on transport and 5xx failures."""

    def __init__(self, config: AdapterConfig):
        self.config = config
        self._slots = threading.Semaphore(config.max_in_flight)
        self._lock = threading.Lock()
        self.retries_total = 0

    def _post(self, body: dict) -> dict:
        url = self.config.endpoint.rstrip("/") + "/chat/completions"
        data = json.dumps(body).encode("utf-8")
        headers = {"Content-Type": "application/json"}
        if self.config.api_key:
            headers["Authorization"] = f"Bearer {self.config.api_key}"
        request = urllib.request.Request(url, data=data, headers=headers, method="POST")
        with urllib.request.urlopen(request, timeout=self.config.timeout) as resp:
            return json.loads(resp.read().decode("utf-8"))

    def complete(self, req: ChatRequest) -> ChatResponse:
        body = req.wire_body(self.config.model)
        attempts = self.config.retry_budget + 1
        last_error: Exception | None = None
        with self._slots:
            started = time.monotonic()
            for attempt in range(attempts):
                if attempt:
                    time.sleep(self.config.backoff_base * (2 ** (attempt - 1)))
                    with self._lock:
                        self.retries_total += 1
                try:
                    payload = self._post(body)
                except urllib.error.HTTPError as exc:
                    if exc.code >= 500:
                        last_error = exc
                        continue
                    raise TransportError(f"HTTP {exc.code}: {exc.reason}") from exc
                except TimeoutError as exc:
                    last_error = AdapterTimeout(str(exc) or "request timed out")
                    continue
                except urllib.error.URLError as exc:
                    if isinstance(exc.reason, TimeoutError):
                        last_error = AdapterTimeout(str(exc.reason))
                    else:
                        last_error = TransportError(str(exc.reason))
                    continue
                try:
                    choice = payload["choices"][0]
                    text = choice["message"]["content"]
                    finish = choice.get("finish_reason", "stop")
                except (KeyError, IndexError, TypeError) as exc:
                    raise TransportError(f"malformed completion payload: {exc}") from exc
                return ChatResponse(text=text, finish_reason=finish,
                                    latency=time.monotonic() - started, retries=attempt)
        raise BudgetExhausted(attempts, last_error)


class FixtureAdapter:
    """Replays scripted responses from a fingerprint -> text JSON map."""

    def __init__(self, responses: Mapping[str, str]):
        self._responses = dict(responses)

    @classmethod
    def from_file(cls, path: str | Path) -> "FixtureAdapter":
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        if not isinstance(data, dict) or not all(
            isinstance(k, str) and isinstance(v, str) for k, v in data.items()
        ):
            raise ValueError(f"fixture file {path} must map fingerprints to strings")
        return cls(data)

    def complete(self, req: ChatRequest) -> ChatResponse:
        fp = req.fingerprint()
        try:
            return ChatResponse(text=self._responses[fp])
        except KeyError:
            raise MockMiss(fp) from None


class OracleAdapter:
    """Answers every task from gold annotations.

    Extraction returns the gold surfaces of the requested label, label choice
    returns the gold label of the span, and verification confirms exactly the
    spans present in gold. Useful as the pipeline's best-case test double.
    """

    def __init__(self, records: Iterable):
        self._by_id = {r.id: r for r in records}

    def _record(self, req: ChatRequest):
        doc_id = req.bindings.get("doc_id", "")
        try:
            return self._by_id[doc_id]
        except KeyError:
            raise MockMiss(req.fingerprint()) from None

    def complete(self, req: ChatRequest) -> ChatResponse:
        record = self._record(req)
        bindings = req.bindings
        if req.task_kind == TaskKind.EXTRACT.value:
            label = bindings["label"]
            surfaces = [record.text[g.start:g.end] for g in record.gold if g.label == label]
            return ChatResponse(text=json.dumps(surfaces, ensure_ascii=False))
        if req.task_kind == TaskKind.DISAMBIGUATE.value:
            start, end = int(bindings["span_start"]), int(bindings["span_end"])
            candidates = [c.strip() for c in bindings.get("candidate_labels", "").split(",")]
            at_span = [g.label for g in record.gold if (g.start, g.end) == (start, end)]
            for label in at_span:
                if label in candidates:
                    return ChatResponse(text=label)
            return ChatResponse(text=at_span[0] if at_span else "NONE")
        if req.task_kind == TaskKind.VERIFY.value:
            start, end = int(bindings["span_start"]), int(bindings["span_end"])
            label = bindings["label"]
            hit = any((g.start, g.end, g.label) == (start, end, label) for g in record.gold)
            return ChatResponse(text="YES" if hit else "NO")
        raise MockMiss(req.fingerprint())


class RecordingAdapter:
    """Wraps another adapter and captures fingerprint -> response pairs, so a
    live or oracle session can be frozen into a fixture file."""

    def __init__(self, inner: ChatAdapter):
        self._inner = inner
        self._lock = threading.Lock()
        self.recorded: dict[str, str] = {}

    def complete(self, req: ChatRequest) -> ChatResponse:
        resp = self._inner.complete(req)
        with self._lock:
            self.recorded[req.fingerprint()] = resp.text
        return resp

    def dump(self, path: str | Path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.recorded, fh, ensure_ascii=False, indent=0, sort_keys=True)
