"""Command-line surface: detect, redact, evaluate, ablate, gen-corpus,
lint-registry.

Exit codes: 0 success, 1 configuration error (registry, flags, locales),
2 processing error (bad corpus data, document failure under fail-closed),
3 adapter exhaustion (transport budget spent or fixture fingerprint gap).

Machine output is stable: canonical key order, floats fixed to three
decimals, document order preserved regardless of worker scheduling.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from contextlib import nullcontext
from pathlib import Path

from .corpus import (
    CorpusRecord,
    corpus_stats,
    generate,
    read_corpus,
    write_corpus,
)
from .errors import (
    AdapterError,
    ConfigError,
    EmptyInput,
    ProcessingError,
    RecapError,
    UnsupportedLocale,
)
from .evaluation import (
    AggregateReport,
    ablation_report,
    evaluate_corpus,
    evaluate_predictions,
)
from .llm import AdapterConfig, FixtureAdapter, HttpAdapter, OracleAdapter, PromptLibrary
from .model import Document, EntitySpan, Phase, Source
from .pipeline import PipelineConfig, redact, run_pipeline
from .registry import default_registry_bytes, lint_registry, load_registry

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_PROCESSING = 2
EXIT_ADAPTER = 3


def _fmt(x: float) -> str:
    return f"{x:.3f}"


def _load_registry_arg(path: str | None):
    if path is None:
        return load_registry(default_registry_bytes())
    return load_registry(Path(path).read_bytes())


def _make_adapter(spec: str, records: list[CorpusRecord] | None):
    if spec == "live":
        return HttpAdapter(AdapterConfig.from_env())
    if spec == "oracle":
        if records is None:
            raise ConfigError("the oracle adapter needs a gold-annotated corpus")
        return OracleAdapter(records)
    if spec.startswith("fixture:"):
        return FixtureAdapter.from_file(spec.split(":", 1)[1])
    raise ConfigError(f"unknown adapter {spec!r}; use live, oracle, or fixture:PATH")


def _make_config(args) -> PipelineConfig:
    kwargs = {}
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            raw = json.load(fh)
        if "run_through" in raw:
            raw["run_through"] = Phase(raw["run_through"])
        for key in ("short_numeric_labels", "unstructured_labels"):
            if key in raw:
                raw[key] = frozenset(raw[key])
        kwargs.update(raw)
    if getattr(args, "phase", None):
        kwargs["run_through"] = Phase(args.phase)
    if getattr(args, "fail_closed", False):
        kwargs["fail_open_on_llm_error"] = False
    if getattr(args, "fail_open", False):
        kwargs["fail_open_on_llm_error"] = True
    return PipelineConfig(**kwargs)


def _open_out(path: str | None):
    return open(path, "w", encoding="utf-8") if path else nullcontext(sys.stdout)


def _read_input_records(args, reg) -> list[CorpusRecord]:
    """Documents from --in JSONL, or a single stdin document with --locale."""
    if args.infile:
        return read_corpus(args.infile, known_labels=reg.known_labels)
    if not args.locale:
        raise ConfigError("reading from stdin requires --locale")
    if args.locale not in reg.locales:
        raise UnsupportedLocale(args.locale)
    text = sys.stdin.read().rstrip("\n")
    return [CorpusRecord("stdin-0", args.locale, text, ())]


def _run_documents(records, reg, adapter, config, prompts, jobs):
    """Pipeline over documents with bounded parallelism; result order equals
    input order."""
    def one(record: CorpusRecord):
        doc = Document(record.id, record.text, record.locale)
        return run_pipeline(doc, reg, adapter, config, prompts)

    if jobs <= 1 or len(records) <= 1:
        return [one(r) for r in records]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(one, records))


def _entity_json(e: EntitySpan) -> dict:
    return {
        "end": e.end,
        "label": e.labels[0] if len(e.labels) == 1 else None,
        "labels": list(e.labels),
        "source": e.source.value,
        "start": e.start,
    }


def _detection_json(result) -> str:
    payload = {
        "diagnostics": dict(sorted(result.diagnostics.items())),
        "entities": [_entity_json(e) for e in result.final],
        "id": result.document_id,
        "phase_sizes": {str(p.value): len(snap) for p, snap in
                        sorted(result.snapshots.items())},
    }
    return json.dumps(payload, ensure_ascii=False, sort_keys=True, separators=(",", ":"))


def cmd_detect(args) -> int:
    reg = _load_registry_arg(args.registry)
    records = _read_input_records(args, reg)
    adapter = _make_adapter(args.adapter, records or None)
    config = _make_config(args)
    prompts = PromptLibrary(args.prompts)
    results = _run_documents(records, reg, adapter, config, prompts, args.jobs)
    with _open_out(args.out) as out:
        for result in results:
            out.write(_detection_json(result) + "\n")
    return EXIT_OK


def cmd_redact(args) -> int:
    reg = _load_registry_arg(args.registry)
    records = _read_input_records(args, reg)
    adapter = _make_adapter(args.adapter, records or None)
    config = _make_config(args)
    prompts = PromptLibrary(args.prompts)
    results = _run_documents(records, reg, adapter, config, prompts, args.jobs)
    with _open_out(args.out) as out:
        for record, result in zip(records, results):
            doc = Document(record.id, record.text, record.locale)
            redacted = redact(doc, result.final, args.style)
            if args.infile:
                out.write(json.dumps({"id": record.id, "redacted": redacted},
                                     ensure_ascii=False, sort_keys=True,
                                     separators=(",", ":")) + "\n")
            else:
                out.write(redacted + "\n")
    return EXIT_OK


def _report_json(report: AggregateReport) -> dict:
    def row(locale, counts, metrics, support):
        return {
            "accuracy": _fmt(metrics.accuracy),
            "correct": counts.correct,
            "f1": _fmt(metrics.f1),
            "fn": metrics.fn,
            "fp": metrics.fp,
            "incorrect": counts.incorrect,
            "locale": locale,
            "missed": counts.missed,
            "precision": _fmt(metrics.precision),
            "recall": _fmt(metrics.recall),
            "spurious": counts.spurious,
            "support": support,
            "tn": 0,
            "tp": metrics.tp,
        }

    locales = [row(r.locale, r.counts, r.metrics, r.support) for r in report.locales]
    total = {
        "accuracy": _fmt(report.metrics.accuracy),
        "f1": _fmt(report.metrics.f1),
        "fn": report.metrics.fn,
        "fp": report.metrics.fp,
        "locale": "all",
        "precision": _fmt(report.metrics.precision),
        "recall": _fmt(report.metrics.recall),
        "tn": 0,
        "tp": report.metrics.tp,
        "weights": {k: _fmt(v) for k, v in sorted(report.weights.items())},
    }
    return {"aggregate": total, "locales": locales}


def _report_text(report: AggregateReport) -> str:
    header = (f"{'Locale':<8} {'Acc':>6} {'Prec':>6} {'Rec':>6} {'F1':>6} "
              f"{'TP':>6} {'FP':>6} {'TN':>4} {'FN':>6}")
    lines = [header]
    for r in report.locales:
        m = r.metrics
        lines.append(f"{r.locale:<8} {_fmt(m.accuracy):>6} {_fmt(m.precision):>6} "
                     f"{_fmt(m.recall):>6} {_fmt(m.f1):>6} {m.tp:>6} {m.fp:>6} "
                     f"{0:>4} {m.fn:>6}")
    m = report.metrics
    lines.append(f"{'all':<8} {_fmt(m.accuracy):>6} {_fmt(m.precision):>6} "
                 f"{_fmt(m.recall):>6} {_fmt(m.f1):>6} {m.tp:>6} {m.fp:>6} "
                 f"{0:>4} {m.fn:>6}")
    return "\n".join(lines)


def _load_predictions(path: str, records) -> dict[str, list[EntitySpan]]:
    by_id = {r.id: r for r in records}
    predictions: dict[str, list[EntitySpan]] = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if not line.strip() or line.startswith("#"):
                continue
            raw = json.loads(line)
            record = by_id.get(raw["id"])
            if record is None:
                raise ProcessingError(f"prediction for unknown document {raw['id']!r}")
            spans = [
                EntitySpan.from_text(record.text, e["start"], e["end"],
                                     (e.get("label", "ENTITY"),), Source.REGEX)
                for e in raw["entities"]
            ]
            predictions[raw["id"]] = spans
    return predictions


def cmd_evaluate(args) -> int:
    reg = _load_registry_arg(args.registry)
    records = read_corpus(args.infile, known_labels=reg.known_labels)
    if not records:
        raise EmptyInput("empty corpus")
    if args.pred:
        report = evaluate_predictions(records, _load_predictions(args.pred, records),
                                      strict_labels=args.strict)
    else:
        adapter = _make_adapter(args.adapter, records)
        config = _make_config(args)
        report = evaluate_corpus(records, reg, adapter, config,
                                 PromptLibrary(args.prompts),
                                 strict_labels=args.strict)
    with _open_out(args.out) as out:
        if args.format == "json":
            out.write(json.dumps(_report_json(report), ensure_ascii=False,
                                 sort_keys=True, separators=(",", ":")) + "\n")
        else:
            out.write(_report_text(report) + "\n")
    return EXIT_OK


def cmd_ablate(args) -> int:
    reg = _load_registry_arg(args.registry)
    records = read_corpus(args.infile, known_labels=reg.known_labels)
    adapter = _make_adapter(args.adapter, records)
    config = _make_config(args)
    report = ablation_report(records, reg, adapter, config,
                             PromptLibrary(args.prompts), strict_labels=args.strict)

    def fmt_delta(d):
        return "-" if d is None else f"{d:+.2f}%"

    with _open_out(args.out) as out:
        if args.format == "json":
            payload = {
                "aggregate": {
                    "deltas": {k: (None if v is None else round(v, 2))
                               for k, v in report.aggregate_deltas.items()},
                    "f1": {str(p.value): _fmt(v) for p, v in report.aggregate_f1.items()},
                },
                "locales": [
                    {
                        "deltas": {k: (None if v is None else round(v, 2))
                                   for k, v in row.deltas.items()},
                        "f1": {str(p.value): _fmt(v) for p, v in row.f1_by_phase.items()},
                        "locale": row.locale,
                        "support": row.support,
                    }
                    for row in report.rows
                ],
            }
            out.write(json.dumps(payload, ensure_ascii=False, sort_keys=True,
                                 separators=(",", ":")) + "\n")
        else:
            phases = sorted(report.aggregate_f1)
            head = f"{'Locale':<8}" + "".join(f" {'F1.' + str(p.value):>7}" for p in phases)
            head += "".join(f" {'D' + k:>9}" for k in report.aggregate_deltas)
            lines = [head]
            for row in report.rows:
                line = f"{row.locale:<8}"
                line += "".join(f" {_fmt(row.f1_by_phase[p]):>7}" for p in phases)
                line += "".join(f" {fmt_delta(row.deltas[k]):>9}" for k in row.deltas)
                lines.append(line)
            line = f"{'all':<8}"
            line += "".join(f" {_fmt(report.aggregate_f1[p]):>7}" for p in phases)
            line += "".join(f" {fmt_delta(report.aggregate_deltas[k]):>9}"
                            for k in report.aggregate_deltas)
            lines.append(line)
            out.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_gen_corpus(args) -> int:
    reg = _load_registry_arg(args.registry)
    records = generate(args.n, args.seed, reg,
                       locales=args.locales.split(",") if args.locales else None)
    with _open_out(args.out) as out:
        write_corpus(records, out)
    if args.stats:
        stats = corpus_stats(records)
        print(f"records={stats.total} locales={len(stats.per_locale)} "
              f"labels={len(stats.per_label)}", file=sys.stderr)
    return EXIT_OK


def cmd_lint_registry(args) -> int:
    reg = _load_registry_arg(args.registry)
    report = lint_registry(reg)
    with _open_out(args.out) as out:
        out.write(f"patterns: {report.pattern_count}\n")
        out.write(f"labels: {report.label_count}\n")
        out.write("locale coverage (total/dedicated):\n")
        for locale in sorted(report.per_locale):
            out.write(f"  {locale}: {report.per_locale[locale]}"
                      f"/{report.locale_specific[locale]}\n")
        if report.warnings:
            out.write("warnings:\n")
            for w in report.warnings:
                out.write(f"  - {w}\n")
        else:
            out.write("no warnings\n")
    return EXIT_OK


def _add_common(p: argparse.ArgumentParser, adapter_default: str | None = None):
    p.add_argument("--registry", help="registry TOML (default: packaged)")
    p.add_argument("--config", help="pipeline config JSON")
    p.add_argument("--prompts", help="prompt template directory override")
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("--format", choices=("json", "text"), default="json")
    if adapter_default is not None:
        p.add_argument("--adapter", default=adapter_default,
                       help="live | oracle | fixture:PATH")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="recap",
        description="Hybrid locale-aware PII detection, redaction, and evaluation",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("detect", help="detect PII in documents")
    _add_common(p, adapter_default="live")
    p.add_argument("--in", dest="infile", help="JSONL corpus input")
    p.add_argument("--locale", help="locale for stdin input")
    p.add_argument("--phase", type=int, choices=(1, 2, 3),
                   help="run through this phase (default 3)")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--fail-closed", action="store_true",
                   help="abort on chat-backend errors instead of keeping going")
    p.set_defaults(fn=cmd_detect)

    p = sub.add_parser("redact", help="replace detected spans")
    _add_common(p, adapter_default="live")
    p.add_argument("--in", dest="infile")
    p.add_argument("--locale")
    p.add_argument("--style", choices=("label", "mask"), default="label")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--fail-closed", action="store_true")
    p.set_defaults(fn=cmd_redact)

    p = sub.add_parser("evaluate", help="score the pipeline against gold")
    _add_common(p, adapter_default="oracle")
    p.add_argument("--in", dest="infile", required=True, help="gold JSONL corpus")
    p.add_argument("--pred", help="precomputed predictions JSONL (skips the pipeline)")
    p.add_argument("--counts-only", dest="pred_only", action="store_true",
                   help="alias kept for symmetry; implied by --pred")
    p.add_argument("--strict", action="store_true",
                   help="require label match in addition to span match")
    p.add_argument("--fail-open", action="store_true",
                   help="absorb chat-backend errors (benchmarks fail closed by default)")
    p.set_defaults(fn=cmd_evaluate, fail_closed_default=True)

    p = sub.add_parser("ablate", help="per-phase F1 and deltas")
    _add_common(p, adapter_default="oracle")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--phase", type=int, choices=(1, 2, 3))
    p.add_argument("--strict", action="store_true")
    p.add_argument("--fail-open", action="store_true")
    p.set_defaults(fn=cmd_ablate, fail_closed_default=True)

    p = sub.add_parser("gen-corpus", help="generate a synthetic gold corpus")
    _add_common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--locales", help="comma-separated locale tags (default: all)")
    p.add_argument("--stats", action="store_true", help="print summary to stderr")
    p.set_defaults(fn=cmd_gen_corpus)

    p = sub.add_parser("lint-registry", help="validate a registry file")
    _add_common(p)
    p.set_defaults(fn=cmd_lint_registry)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "fail_closed_default", False) and not getattr(args, "fail_open", False):
        args.fail_closed = True
    try:
        return args.fn(args)
    except AdapterError as exc:
        print(f"recap: adapter: {exc}", file=sys.stderr)
        return EXIT_ADAPTER
    except ConfigError as exc:
        print(f"recap: config: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ProcessingError as exc:
        print(f"recap: {exc}", file=sys.stderr)
        return EXIT_PROCESSING
    except FileNotFoundError as exc:
        print(f"recap: config: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except RecapError as exc:
        print(f"recap: {exc}", file=sys.stderr)
        return EXIT_PROCESSING


if __name__ == "__main__":
    sys.exit(main())
