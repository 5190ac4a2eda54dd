"""Three-phase detection pipeline and deterministic consolidation.

Phase 1 unions regex matches with chat-model extractions. Phase 2 collapses
multi-label spans to a single label using surrounding context. Phase 3 first
resolves span containment by priority (pure geometry, no model calls), then
asks the model to confirm short numeric entities in their local context.

On model failure the pipeline fails open by default: detections are kept and
the failure is counted, because a dropped entity is a potential data leak
while a kept one merely over-redacts.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .errors import (
    AdapterError,
    MultiLabelRemains,
    OverlappingEntities,
    UnparseableResponse,
    UnsupportedLocale,
)
from .llm import (
    ChatAdapter,
    LlmTask,
    PromptLibrary,
    TaskKind,
    ground_spans,
    parse_extraction,
    parse_label_choice,
    parse_verification,
)
from .model import (
    SHORT_NUMERIC_LABELS,
    UNSTRUCTURED_LABELS,
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
from .registry import CompiledRegistry, match_structured

# Sentence terminators across the supported scripts: Latin, CJK fullwidth,
# Arabic question mark, Devanagari danda.
SENTENCE_TERMINATORS = frozenset({".", "!", "?", "。", "！", "？", "؟", "।"})


@dataclass(frozen=True)
class PipelineConfig:
    run_through: Phase = Phase.CONSOLIDATION
    context_sentences: int = 1
    short_numeric_labels: frozenset[str] = SHORT_NUMERIC_LABELS
    unstructured_labels: frozenset[str] = UNSTRUCTURED_LABELS
    fail_open_on_llm_error: bool = True

    def __post_init__(self):
        if self.context_sentences < 0:
            raise ValueError("context_sentences must be >= 0")
        if self.short_numeric_labels & self.unstructured_labels:
            raise ValueError("short-numeric and unstructured label sets must be disjoint")


@dataclass(frozen=True)
class DetectionResult:
    document_id: str
    final: tuple[EntitySpan, ...]
    snapshots: dict[Phase, tuple[EntitySpan, ...]]
    diagnostics: Counter = field(default_factory=Counter)


@dataclass(frozen=True)
class ContextWindow:
    text: str
    start: int
    end: int


def _complete_or_none(adapter: ChatAdapter, request, config: PipelineConfig,
                      diagnostics: Counter):
    try:
        return adapter.complete(request)
    except AdapterError:
        if not config.fail_open_on_llm_error:
            raise
        diagnostics["llm_errors"] += 1
        return None


def run_phase1(doc: Document, reg: CompiledRegistry, adapter: ChatAdapter,
               config: PipelineConfig | None = None,
               prompts: PromptLibrary | None = None,
               diagnostics: Counter | None = None) -> list[EntitySpan]:
    """Baseline hybrid detection: regex matches plus grounded extractions.

    Regex and model spans with identical [start, end) merge into one entity
    with the label sets unioned, so the multi-label phase sees one candidate
    set per span.
    """
    config = config or PipelineConfig()
    prompts = prompts or PromptLibrary()
    diagnostics = diagnostics if diagnostics is not None else Counter()

    entities = match_structured(doc, reg)
    for label in sorted(config.unstructured_labels):
        task = LlmTask(TaskKind.EXTRACT, doc.locale, label)
        request = prompts.get(task).render({
            "locale": doc.locale,
            "text": doc.text,
            "label": label,
            "doc_id": doc.id,
        })
        response = _complete_or_none(adapter, request, config, diagnostics)
        if response is None:
            continue
        try:
            surfaces = parse_extraction(response)
        except UnparseableResponse:
            diagnostics["unparseable_responses"] += 1
            continue
        entities.extend(ground_spans(doc, surfaces, label, diagnostics))

    merged: dict[tuple[int, int], list[EntitySpan]] = {}
    for entity in entities:
        merged.setdefault((entity.start, entity.end), []).append(entity)
    out = []
    for (start, end), group in merged.items():
        if len(group) == 1:
            out.append(group[0])
            continue
        labels = reg.priorities.rank_labels(l for e in group for l in e.labels)
        source = (Source.REGEX if any(e.source is Source.REGEX for e in group)
                  else group[0].source)
        out.append(EntitySpan(start, end, labels, source, group[0].surface))
    return canonical_order(out)


def resolve_multilabel(doc: Document, entities: Sequence[EntitySpan],
                       adapter: ChatAdapter, priorities: LabelPriorityTable,
                       config: PipelineConfig | None = None,
                       prompts: PromptLibrary | None = None,
                       diagnostics: Counter | None = None) -> list[EntitySpan]:
    """Collapse every multi-label entity to its single contextually best label.

    The fallback when the model declines or fails is the highest-priority
    candidate (ties broken by name); spans and cardinality never change.
    """
    config = config or PipelineConfig()
    prompts = prompts or PromptLibrary()
    diagnostics = diagnostics if diagnostics is not None else Counter()

    out = []
    for entity in entities:
        if len(entity.labels) == 1:
            out.append(entity)
            continue
        candidates = list(entity.labels)
        task = LlmTask(TaskKind.DISAMBIGUATE, doc.locale)
        request = prompts.get(task).render({
            "locale": doc.locale,
            "text": doc.text,
            "span_text": entity.surface,
            "candidate_labels": ", ".join(candidates),
            "span_start": str(entity.start),
            "span_end": str(entity.end),
            "doc_id": doc.id,
        })
        response = _complete_or_none(adapter, request, config, diagnostics)
        choice = parse_label_choice(response, candidates) if response is not None else None
        if choice is None:
            choice = min(candidates, key=lambda l: (-priorities.priority(l), l))
            diagnostics["fallback_disambiguations"] += 1
        out.append(entity.relabeled(choice))
    return out


def resolve_overlaps(entities: Sequence[EntitySpan],
                     priorities: LabelPriorityTable) -> list[EntitySpan]:
    """Drop entities strictly contained in an already-kept span of equal or
    higher priority. Deterministic sweep over (start, priority desc, length
    desc); a contained entity that outranks its container survives alongside
    it. Pure function, idempotent."""
    for entity in entities:
        if len(entity.labels) != 1:
            raise MultiLabelRemains(
                f"entity at [{entity.start}, {entity.end}) still has labels {entity.labels}"
            )
    ordered = sorted(
        entities,
        key=lambda e: (e.start, -priorities.priority(e.label), -e.length, e.end, e.label),
    )
    kept: list[EntitySpan] = []
    for entity in ordered:
        rank = priorities.priority(entity.label)
        dominated = any(
            contains(other, entity) and priorities.priority(other.label) >= rank
            for other in kept
        )
        if not dominated:
            kept.append(entity)
    return canonical_order(kept)


def split_sentences(text: str) -> list[tuple[int, int]]:
    """Contiguous sentence segments covering the whole text.

    A run of terminator characters ends a sentence (the terminators attach to
    it); a blank line also ends one. The segment list partitions [0, len).
    """
    if not text:
        return []
    cuts = set()
    i = 0
    n = len(text)
    while i < n:
        if text[i] in SENTENCE_TERMINATORS:
            j = i
            while j + 1 < n and text[j + 1] in SENTENCE_TERMINATORS:
                j += 1
            cuts.add(j + 1)
            i = j + 1
        elif text[i] == "\n":
            j = i + 1
            seen_second = False
            while j < n and text[j] in " \t\r\n":
                if text[j] == "\n":
                    seen_second = True
                j += 1
            if seen_second:
                cuts.add(j)
            i = j
        else:
            i += 1
    cuts.add(n)
    segments = []
    prev = 0
    for cut in sorted(cuts):
        if cut > prev:
            segments.append((prev, cut))
            prev = cut
    return segments


def extract_context_window(doc: Document, span: EntitySpan, n: int) -> ContextWindow:
    """The sentence(s) containing the span plus n sentences each side,
    clamped to the document; always covers the span itself."""
    if n < 0:
        raise ValueError("context size must be >= 0")
    slice_text(doc.text, span.start, span.end)  # bounds check
    segments = split_sentences(doc.text)
    first = last = None
    for idx, (seg_start, seg_end) in enumerate(segments):
        if seg_start <= span.start < seg_end and first is None:
            first = idx
        if seg_start <= span.end - 1 < seg_end:
            last = idx
    assert first is not None and last is not None
    lo = segments[max(0, first - n)][0]
    hi = segments[min(len(segments) - 1, last + n)][1]
    return ContextWindow(doc.text[lo:hi], lo, hi)


def filter_false_positives(doc: Document, entities: Sequence[EntitySpan],
                           adapter: ChatAdapter, config: PipelineConfig | None = None,
                           prompts: PromptLibrary | None = None,
                           diagnostics: Counter | None = None) -> list[EntitySpan]:
    """Contextual check for short numeric entities.

    Each is confirmed against its local context window; an explicit "no"
    removes it, anything inconclusive keeps it (recall-safe).
    """
    config = config or PipelineConfig()
    prompts = prompts or PromptLibrary()
    diagnostics = diagnostics if diagnostics is not None else Counter()

    out = []
    for entity in entities:
        if len(entity.labels) != 1:
            raise MultiLabelRemains(
                f"entity at [{entity.start}, {entity.end}) still has labels {entity.labels}"
            )
        if entity.label not in config.short_numeric_labels:
            out.append(entity)
            continue
        window = extract_context_window(doc, entity, config.context_sentences)
        task = LlmTask(TaskKind.VERIFY, doc.locale)
        request = prompts.get(task).render({
            "locale": doc.locale,
            "context_window": window.text,
            "span_text": entity.surface,
            "candidate_labels": entity.label,
            "label": entity.label,
            "span_start": str(entity.start),
            "span_end": str(entity.end),
            "doc_id": doc.id,
        })
        response = _complete_or_none(adapter, request, config, diagnostics)
        verdict = parse_verification(response) if response is not None else None
        if verdict is False:
            diagnostics["fp_filter_removals"] += 1
            continue
        if verdict is None:
            diagnostics["verification_inconclusive"] += 1
        out.append(entity)
    return canonical_order(out)


def run_pipeline(doc: Document, reg: CompiledRegistry, adapter: ChatAdapter,
                 config: PipelineConfig | None = None,
                 prompts: PromptLibrary | None = None) -> DetectionResult:
    """Execute phases 1..run_through, snapshotting after each.

    Phase 3 runs geometry before verification so that contained numerics are
    discarded without spending a model call on them.
    """
    config = config or PipelineConfig()
    prompts = prompts or PromptLibrary()
    diagnostics: Counter = Counter()
    if doc.locale not in reg.locales:
        raise UnsupportedLocale(doc.locale)

    snapshots: dict[Phase, tuple[EntitySpan, ...]] = {}
    entities = run_phase1(doc, reg, adapter, config, prompts, diagnostics)
    snapshots[Phase.BASELINE] = tuple(entities)

    if config.run_through >= Phase.MULTILABEL:
        entities = resolve_multilabel(doc, entities, adapter, reg.priorities,
                                      config, prompts, diagnostics)
        snapshots[Phase.MULTILABEL] = tuple(entities)

    if config.run_through >= Phase.CONSOLIDATION:
        before = len(entities)
        entities = resolve_overlaps(entities, reg.priorities)
        diagnostics["overlap_removals"] += before - len(entities)
        entities = filter_false_positives(doc, entities, adapter, config,
                                          prompts, diagnostics)
        snapshots[Phase.CONSOLIDATION] = tuple(entities)

    return DetectionResult(doc.id, snapshots[config.run_through], snapshots, diagnostics)


def redact(doc: Document, entities: Sequence[EntitySpan], style: str = "label") -> str:
    """Replace detected spans with "[LABEL]" tags or per-code-point masks.

    Requires non-overlapping single-label entities; replacements are applied
    right to left so earlier offsets never shift.
    """
    if style not in ("label", "mask"):
        raise ValueError(f"unknown redaction style {style!r}")
    ordered = canonical_order(entities)
    for i, entity in enumerate(ordered):
        if len(entity.labels) != 1:
            raise MultiLabelRemains(f"entity at [{entity.start}, {entity.end})")
        if i and overlaps(ordered[i - 1], entity):
            raise OverlappingEntities(
                f"[{ordered[i - 1].start}, {ordered[i - 1].end}) overlaps "
                f"[{entity.start}, {entity.end})"
            )
    text = doc.text
    for entity in reversed(ordered):
        replacement = (f"[{entity.label}]" if style == "label"
                       else "*" * (entity.end - entity.start))
        text = text[:entity.start] + replacement + text[entity.end:]
    return text
