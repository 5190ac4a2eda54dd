"""Hybrid locale-aware PII detection and exact-span evaluation."""

from .corpus import (
    CorpusRecord,
    corpus_stats,
    generate,
    make_ambiguity_corpus,
    read_corpus,
    word_count,
    write_corpus,
)
from .evaluation import (
    AggregateReport,
    EvalCategoryCounts,
    LocaleReport,
    Metrics,
    ablation_report,
    aggregate_weighted,
    compute_metrics,
    delta_percent,
    evaluate_corpus,
    match_exact,
)
from .llm import (
    AdapterConfig,
    ChatRequest,
    ChatResponse,
    FixtureAdapter,
    HttpAdapter,
    OracleAdapter,
    PromptLibrary,
    PromptTemplate,
    RecordingAdapter,
    ground_spans,
    parse_extraction,
    parse_label_choice,
    parse_verification,
    render_prompt,
)
from .model import (
    SUPPORTED_LOCALES,
    UNSTRUCTURED_LABELS,
    Document,
    EntitySpan,
    LabelPriorityTable,
    Phase,
    Source,
    contains,
    overlaps,
    slice_text,
)
from .pipeline import (
    DetectionResult,
    PipelineConfig,
    extract_context_window,
    filter_false_positives,
    redact,
    resolve_multilabel,
    resolve_overlaps,
    run_phase1,
    run_pipeline,
)
from .registry import (
    CompiledRegistry,
    PatternSpec,
    default_registry,
    lint_registry,
    load_registry,
    luhn_valid,
    match_structured,
)

__version__ = "0.1.0"
