"""Locale-aware structured-PII regex registry: loading, validation, matching.

The registry is a TOML data file: a `[priorities]` table (label -> integer)
and a `[[pattern]]` array. Patterns are either universal or scoped to a list
of locale tags. Matching is pure and deterministic; equal-span matches from
different patterns collapse into one multi-label entity.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from .errors import (
    BadPattern,
    DuplicatePatternId,
    NonDigitInput,
    RegistryParseError,
    UnknownLabel,
    UnknownLocale,
    UnsupportedLocale,
)
from .model import (
    SUPPORTED_LOCALES,
    UNSTRUCTURED_LABELS,
    Document,
    EntitySpan,
    LabelPriorityTable,
    Source,
    canonical_order,
)

UNIVERSAL = "universal"

_VALIDATORS = ("luhn",)


def luhn_valid(digits: str) -> bool:
    """Standard mod-10 checksum over an ASCII digit string (length >= 2)."""
    if len(digits) < 2 or not digits.isascii() or not digits.isdigit():
        raise NonDigitInput(f"luhn input must be >=2 ASCII digits, got {digits!r}")
    total = 0
    for i, ch in enumerate(reversed(digits)):
        d = ord(ch) - 48
        if i % 2 == 1:
            d *= 2
            if d > 9:
                d -= 9
        total += d
    return total % 10 == 0


@dataclass(frozen=True)
class PatternSpec:
    id: str
    label: str
    scope: tuple[str, ...]  # empty tuple = universal
    pattern: str
    priority: int
    validator: str | None = None
    word_boundary: bool = True

    @property
    def is_universal(self) -> bool:
        return not self.scope

    def applies_to(self, locale: str) -> bool:
        return self.is_universal or locale in self.scope


@dataclass(frozen=True)
class CompiledPattern:
    spec: PatternSpec
    regex: re.Pattern[str]


@dataclass(frozen=True)
class CompiledRegistry:
    """Immutable, thread-safe compiled form of a registry file."""

    patterns: tuple[CompiledPattern, ...]
    priorities: LabelPriorityTable
    locales: frozenset[str]
    by_locale: dict[str, tuple[CompiledPattern, ...]] = field(default_factory=dict)

    @property
    def labels(self) -> frozenset[str]:
        return frozenset(p.spec.label for p in self.patterns)

    @property
    def known_labels(self) -> frozenset[str]:
        """Every label a document may legitimately carry: regex plus unstructured."""
        return self.labels | UNSTRUCTURED_LABELS

    def patterns_for(self, locale: str) -> tuple[CompiledPattern, ...]:
        if locale not in self.locales:
            raise UnsupportedLocale(locale)
        return self.by_locale[locale]


def _compile_pattern(spec: PatternSpec) -> CompiledPattern:
    source = spec.pattern
    if spec.word_boundary:
        # Lookaround guards rather than \b: robust for sources that start or
        # end with non-word characters such as '+' or '('.
        source = rf"(?<!\w)(?:{source})(?!\w)"
    try:
        regex = re.compile(source)
    except re.error as exc:
        raise BadPattern(spec.id, str(exc)) from exc
    return CompiledPattern(spec, regex)


def _parse_pattern_table(entry: dict, index: int) -> PatternSpec:
    def need(key: str, kind: type):
        if key not in entry:
            raise RegistryParseError(f"pattern #{index}: missing key {key!r}")
        value = entry[key]
        if not isinstance(value, kind):
            raise RegistryParseError(f"pattern #{index}: key {key!r} must be {kind.__name__}")
        return value

    pid = need("id", str)
    label = need("label", str)
    pattern = need("pattern", str)
    scope_raw = entry.get("scope", UNIVERSAL)
    if scope_raw == UNIVERSAL:
        scope: tuple[str, ...] = ()
    elif isinstance(scope_raw, list) and all(isinstance(s, str) for s in scope_raw):
        for tag in scope_raw:
            if tag not in SUPPORTED_LOCALES:
                raise UnknownLocale(tag, f"pattern {pid!r}")
        scope = tuple(scope_raw)
    else:
        raise RegistryParseError(
            f"pattern {pid!r}: scope must be \"universal\" or a list of locale tags"
        )
    validator = entry.get("validator")
    if validator is not None and validator not in _VALIDATORS:
        raise RegistryParseError(f"pattern {pid!r}: unknown validator {validator!r}")
    word_boundary = entry.get("word_boundary", True)
    if not isinstance(word_boundary, bool):
        raise RegistryParseError(f"pattern {pid!r}: word_boundary must be a bool")
    priority = entry.get("priority")
    if priority is not None and not isinstance(priority, int):
        raise RegistryParseError(f"pattern {pid!r}: priority must be an integer")
    return PatternSpec(pid, label, scope, pattern, -1 if priority is None else priority,
                       validator, word_boundary)


def load_registry(source: bytes) -> CompiledRegistry:
    """Parse, validate, and compile a registry document.

    Rejects duplicate ids, unknown locales and labels, non-compiling
    patterns, and priority values inconsistent with the priority table;
    every error names the offending pattern.
    """
    try:
        data = tomllib.loads(source.decode("utf-8"))
    except (UnicodeDecodeError, tomllib.TOMLDecodeError) as exc:
        raise RegistryParseError(f"not a valid registry document: {exc}") from exc

    priorities_raw = data.get("priorities")
    if not isinstance(priorities_raw, dict) or not priorities_raw:
        raise RegistryParseError("registry must define a non-empty [priorities] table")
    for label, value in priorities_raw.items():
        if not isinstance(value, int):
            raise RegistryParseError(f"priority for {label!r} must be an integer")
    priorities = LabelPriorityTable(dict(priorities_raw))

    for label in UNSTRUCTURED_LABELS:
        if label not in priorities:
            raise RegistryParseError(f"priority table is missing unstructured label {label!r}")
    for structural in ("ADDRESS", "NAME"):
        for short in ("AGE", "CVV"):
            if structural in priorities and short in priorities and \
                    priorities.priority(structural) <= priorities.priority(short):
                raise RegistryParseError(
                    f"{structural} must outrank {short} in the priority table"
                )

    entries = data.get("pattern")
    if not isinstance(entries, list) or not entries:
        raise RegistryParseError("registry must define at least one [[pattern]]")

    seen: set[str] = set()
    specs: list[PatternSpec] = []
    for index, entry in enumerate(entries):
        spec = _parse_pattern_table(entry, index)
        if spec.id in seen:
            raise DuplicatePatternId(spec.id)
        seen.add(spec.id)
        if spec.label not in priorities:
            raise UnknownLabel(spec.label, f"pattern {spec.id!r} has no priority entry")
        table_priority = priorities.priority(spec.label)
        if spec.priority == -1:
            spec = PatternSpec(spec.id, spec.label, spec.scope, spec.pattern,
                               table_priority, spec.validator, spec.word_boundary)
        elif spec.priority != table_priority:
            raise RegistryParseError(
                f"pattern {spec.id!r}: priority {spec.priority} conflicts with "
                f"table entry {table_priority} for {spec.label!r}"
            )
        specs.append(spec)

    compiled = tuple(_compile_pattern(s) for s in specs)
    by_locale = {
        locale: tuple(p for p in compiled if p.spec.applies_to(locale))
        for locale in sorted(SUPPORTED_LOCALES)
    }
    for locale, plist in by_locale.items():
        if not plist:
            raise RegistryParseError(f"locale {locale!r} resolves to an empty pattern list")
    return CompiledRegistry(compiled, priorities, frozenset(SUPPORTED_LOCALES), by_locale)


def default_registry_bytes() -> bytes:
    return resources.files("recap.data").joinpath("registry.toml").read_bytes()


def default_registry() -> CompiledRegistry:
    """The shipped registry: ~30 entity types across the 13 locales."""
    return load_registry(default_registry_bytes())


def _passes_validator(spec: PatternSpec, surface: str) -> bool:
    if spec.validator == "luhn":
        digits = "".join(ch for ch in surface if ch.isascii() and ch.isdigit())
        return len(digits) >= 2 and luhn_valid(digits)
    return True


def match_structured(doc: Document, reg: CompiledRegistry) -> list[EntitySpan]:
    """Run every applicable pattern over the document.

    Matches at the exact same [start, end) with different labels merge into
    one entity whose label set is ordered by descending priority then name.
    Matches failing their validator are dropped. Output order is canonical
    and independent of pattern file order.
    """
    spans: dict[tuple[int, int], set[str]] = {}
    for cp in reg.patterns_for(doc.locale):
        for m in cp.regex.finditer(doc.text):
            if m.start() == m.end():
                continue
            if not _passes_validator(cp.spec, m.group(0)):
                continue
            spans.setdefault((m.start(), m.end()), set()).add(cp.spec.label)
    entities = [
        EntitySpan.from_text(doc.text, start, end,
                             reg.priorities.rank_labels(labels), Source.REGEX)
        for (start, end), labels in spans.items()
    ]
    return canonical_order(entities)


@dataclass(frozen=True)
class LintReport:
    pattern_count: int
    label_count: int
    per_locale: dict[str, int]            # locale -> applicable pattern count
    locale_specific: dict[str, int]       # locale -> dedicated pattern count
    warnings: tuple[str, ...]

    @property
    def clean(self) -> bool:
        return not self.warnings


def lint_registry(reg: CompiledRegistry) -> LintReport:
    """Coverage summary plus style warnings for a loaded registry."""
    warnings: list[str] = []
    per_locale: dict[str, int] = {}
    locale_specific: dict[str, int] = {}
    for locale in sorted(reg.locales):
        plist = reg.patterns_for(locale)
        per_locale[locale] = len(plist)
        dedicated = sum(1 for p in plist if not p.spec.is_universal)
        locale_specific[locale] = dedicated
        if dedicated == 0:
            warnings.append(f"locale {locale} has no locale-specific pattern")
    used = reg.labels
    for label in sorted(reg.priorities.labels()):
        if label not in used and label not in UNSTRUCTURED_LABELS:
            warnings.append(f"priority entry {label} is not used by any pattern")
    for cp in reg.patterns:
        if cp.regex.match(""):
            warnings.append(f"pattern {cp.spec.id} can match the empty string")
    return LintReport(len(reg.patterns), len(used), per_locale, locale_specific,
                      tuple(warnings))
