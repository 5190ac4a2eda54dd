"""Exact-span evaluation: categorization, metrics, locale aggregation, ablation.

A prediction is correct only when its [start, end) equals a gold span exactly
(span-only by default; an optional strict mode also requires the label).
Predictions that merely overlap a gold span count as incorrect, consuming
both; leftovers are spurious (prediction side) or missed (gold side). Derived
metrics use tp = correct, fp = actual - correct, fn = possible - correct,
with true negatives fixed at zero: span detection has no natural TN count.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .errors import EmptyInput
from .llm import ChatAdapter
from .model import Document, EntitySpan, Phase, overlaps
from .pipeline import PipelineConfig, PromptLibrary, run_pipeline
from .registry import CompiledRegistry


@dataclass(frozen=True)
class EvalCategoryCounts:
    correct: int = 0
    incorrect: int = 0
    missed: int = 0
    spurious: int = 0

    @property
    def possible(self) -> int:
        """Gold-side total: correct + incorrect + missed."""
        return self.correct + self.incorrect + self.missed

    @property
    def actual(self) -> int:
        """Prediction-side total: correct + incorrect + spurious."""
        return self.correct + self.incorrect + self.spurious

    def __add__(self, other: "EvalCategoryCounts") -> "EvalCategoryCounts":
        return EvalCategoryCounts(
            self.correct + other.correct,
            self.incorrect + other.incorrect,
            self.missed + other.missed,
            self.spurious + other.spurious,
        )


@dataclass(frozen=True)
class Metrics:
    tp: int
    fp: int
    fn: int
    accuracy: float
    precision: float
    recall: float
    f1: float


def _safe_div(num: float, den: float) -> float:
    return num / den if den else 0.0


def compute_metrics(counts: EvalCategoryCounts) -> Metrics:
    """Accuracy, precision, recall, F1 from exact-scheme counts; every
    zero denominator yields 0.0."""
    tp = counts.correct
    fp = counts.actual - counts.correct
    fn = counts.possible - counts.correct
    precision = _safe_div(tp, tp + fp)
    recall = _safe_div(tp, tp + fn)
    f1 = _safe_div(2 * precision * recall, precision + recall)
    accuracy = _safe_div(tp, tp + fp + fn)
    return Metrics(tp, fp, fn, accuracy, precision, recall, f1)


def _doc_order(entities: Iterable[EntitySpan]) -> list[EntitySpan]:
    return sorted(entities, key=lambda e: (e.start, e.end, e.labels[0]))


def match_exact(gold: Sequence[EntitySpan], pred: Sequence[EntitySpan],
                strict_labels: bool = False) -> EvalCategoryCounts:
    """Two-pass categorization of predictions against gold.

    Pass 1 pairs predictions with golds at the identical span (plus identical
    primary label in strict mode), each gold consumed at most once. Pass 2
    walks the remaining predictions in document order and pairs each with the
    first remaining gold it overlaps; those pairs are incorrect. Unpaired
    predictions are spurious, unpaired golds missed.
    """
    golds = _doc_order(gold)
    preds = _doc_order(pred)

    def key(e: EntitySpan):
        return (e.start, e.end, e.labels[0]) if strict_labels else (e.start, e.end)

    available: dict = defaultdict(list)
    for idx, g in enumerate(golds):
        available[key(g)].append(idx)
    gold_taken = [False] * len(golds)

    correct = 0
    leftover_preds: list[EntitySpan] = []
    for p in preds:
        slot = available.get(key(p))
        if slot:
            gold_taken[slot.pop(0)] = True
            correct += 1
        else:
            leftover_preds.append(p)

    incorrect = 0
    for p in leftover_preds:
        for idx, g in enumerate(golds):
            if not gold_taken[idx] and overlaps(p, g):
                gold_taken[idx] = True
                incorrect += 1
                break

    spurious = len(preds) - correct - incorrect
    missed = len(golds) - correct - incorrect
    return EvalCategoryCounts(correct, incorrect, missed, spurious)


@dataclass(frozen=True)
class LocaleReport:
    locale: str
    counts: EvalCategoryCounts
    metrics: Metrics

    @property
    def support(self) -> int:
        return self.counts.possible


@dataclass(frozen=True)
class AggregateReport:
    locales: tuple[LocaleReport, ...]
    metrics: Metrics
    weights: dict[str, float] = field(default_factory=dict)


def aggregate_weighted(reports: Sequence[LocaleReport]) -> AggregateReport:
    """Support-weighted mean of each metric, support = locale gold count."""
    if not reports:
        raise EmptyInput("no locale reports to aggregate")
    total = sum(r.support for r in reports)
    if total == 0:
        raise EmptyInput("aggregate requires at least one gold entity")
    weights = {r.locale: r.support / total for r in reports}

    def wmean(pick: Callable[[Metrics], float]) -> float:
        return sum(pick(r.metrics) * weights[r.locale] for r in reports)

    summed = EvalCategoryCounts()
    for r in reports:
        summed = summed + r.counts
    metrics = Metrics(
        tp=summed.correct,
        fp=summed.actual - summed.correct,
        fn=summed.possible - summed.correct,
        accuracy=wmean(lambda m: m.accuracy),
        precision=wmean(lambda m: m.precision),
        recall=wmean(lambda m: m.recall),
        f1=wmean(lambda m: m.f1),
    )
    return AggregateReport(tuple(reports), metrics, weights)


def _evaluate_counts(pairs: Iterable[tuple[str, EvalCategoryCounts]]) -> list[LocaleReport]:
    per_locale: dict[str, EvalCategoryCounts] = defaultdict(EvalCategoryCounts)
    for locale, counts in pairs:
        per_locale[locale] = per_locale[locale] + counts
    return [LocaleReport(locale, counts, compute_metrics(counts))
            for locale, counts in sorted(per_locale.items())]


def evaluate_predictions(records: Sequence, predictions: dict[str, Sequence[EntitySpan]],
                         strict_labels: bool = False) -> AggregateReport:
    """Score precomputed predictions (doc id -> spans) against gold records."""
    pairs = [
        (r.locale, match_exact(r.gold, predictions.get(r.id, ()), strict_labels))
        for r in records
    ]
    return aggregate_weighted(_evaluate_counts(pairs))


def evaluate_corpus(records: Sequence, reg: CompiledRegistry, adapter: ChatAdapter,
                    config: PipelineConfig | None = None,
                    prompts: PromptLibrary | None = None,
                    strict_labels: bool = False,
                    run: Callable | None = None) -> AggregateReport:
    """Run the pipeline over a gold corpus and score the final entities."""
    if not records:
        raise EmptyInput("empty corpus")
    run = run or run_pipeline
    predictions = {}
    for record in records:
        doc = Document(record.id, record.text, record.locale)
        predictions[record.id] = run(doc, reg, adapter, config, prompts).final
    return evaluate_predictions(records, predictions, strict_labels)


def delta_percent(f1_before: float, f1_after: float) -> float | None:
    """Relative gain (f1_after - f1_before) / f1_before as a percentage;
    None when the baseline is zero."""
    if f1_before == 0:
        return None
    return (f1_after - f1_before) / f1_before * 100.0


@dataclass(frozen=True)
class AblationRow:
    locale: str
    f1_by_phase: dict[Phase, float]
    deltas: dict[str, float | None]  # "1->2", "2->3", "1->3"
    support: int


@dataclass(frozen=True)
class AblationReport:
    rows: tuple[AblationRow, ...]
    aggregate_f1: dict[Phase, float]
    aggregate_deltas: dict[str, float | None]


def ablation_report(records: Sequence, reg: CompiledRegistry, adapter: ChatAdapter,
                    base_config: PipelineConfig | None = None,
                    prompts: PromptLibrary | None = None,
                    strict_labels: bool = False) -> AblationReport:
    """Per-locale F1 for each phase snapshot plus relative deltas.

    A single run through the final phase provides all snapshots; by the
    staging contract the snapshot after phase k equals a run stopped at k.
    """
    if not records:
        raise EmptyInput("empty corpus")
    config = base_config or PipelineConfig()
    phases = [p for p in Phase if p <= config.run_through]
    by_phase: dict[Phase, list[tuple[str, EvalCategoryCounts]]] = {p: [] for p in phases}
    for record in records:
        doc = Document(record.id, record.text, record.locale)
        result = run_pipeline(doc, reg, adapter, config, prompts)
        for phase in phases:
            counts = match_exact(record.gold, result.snapshots[phase], strict_labels)
            by_phase[phase].append((record.locale, counts))

    reports = {p: {r.locale: r for r in _evaluate_counts(by_phase[p])} for p in phases}
    aggregates = {p: aggregate_weighted(tuple(reports[p].values())) for p in phases}

    def deltas(f1s: dict[Phase, float]) -> dict[str, float | None]:
        out: dict[str, float | None] = {}
        for a, b in ((Phase.BASELINE, Phase.MULTILABEL),
                     (Phase.MULTILABEL, Phase.CONSOLIDATION),
                     (Phase.BASELINE, Phase.CONSOLIDATION)):
            if a in f1s and b in f1s:
                out[f"{a.value}->{b.value}"] = delta_percent(f1s[a], f1s[b])
        return out

    rows = []
    for locale in sorted(reports[Phase.BASELINE]):
        f1s = {p: reports[p][locale].metrics.f1 for p in phases}
        rows.append(AblationRow(locale, f1s, deltas(f1s),
                                reports[Phase.BASELINE][locale].support))
    agg_f1 = {p: aggregates[p].metrics.f1 for p in phases}
    return AblationReport(tuple(rows), agg_f1, deltas(agg_f1))
