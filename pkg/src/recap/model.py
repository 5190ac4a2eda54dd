"""Core domain vocabulary: documents, entity spans, labels, and span geometry.

Offsets are Unicode code points throughout (Python string indices), half-open
[start, end). Everything here is an immutable value; instances can be shared
freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum, IntEnum
from typing import Iterable, Mapping

from .errors import OutOfRange, UnknownLabel

# Locale tags with a dedicated detector. Registries, corpora, and CLI flags
# are validated against this set.
SUPPORTED_LOCALES: frozenset[str] = frozenset({
    "sv_SE", "vi_VN", "zh_CN", "zh_SG", "pt_BR", "pt_PT", "pl_PL",
    "hi_IN", "fi_FI", "ar_AE", "nl_NL", "nl_BE", "no_NO",
})

# Entity types extracted by the chat model rather than by regex.
UNSTRUCTURED_LABELS: frozenset[str] = frozenset({"NAME", "ADDRESS", "USERNAME", "PASSWORD"})

# Default short numeric types subject to contextual false-positive filtering.
SHORT_NUMERIC_LABELS: frozenset[str] = frozenset({"AGE", "CVV"})


class Source(Enum):
    REGEX = "regex"
    LLM = "llm"
    GOLD = "gold"


class Phase(IntEnum):
    """Pipeline stages; running through phase k implies all phases below it."""

    BASELINE = 1
    MULTILABEL = 2
    CONSOLIDATION = 3


@dataclass(frozen=True)
class Document:
    id: str
    text: str
    locale: str

    def __post_init__(self):
        if not self.id:
            raise ValueError("document id must be non-empty")


def slice_text(text: str, start: int, end: int) -> str:
    """Return the code-point slice [start, end) of text.

    Python strings are sequences of code points, so plain indexing never
    splits a character in any script; only the bounds need checking.
    """
    if not (0 <= start <= end <= len(text)):
        raise OutOfRange(f"span [{start}, {end}) outside text of length {len(text)}")
    return text[start:end]


@dataclass(frozen=True)
class EntitySpan:
    """One detected or gold PII occurrence.

    `labels` is the ordered candidate set: more than one entry only between
    baseline detection and multi-label resolution. `surface` caches the
    document slice at [start, end).
    """

    start: int
    end: int
    labels: tuple[str, ...]
    source: Source
    surface: str = ""

    def __post_init__(self):
        if not (0 <= self.start < self.end):
            raise ValueError(f"invalid span [{self.start}, {self.end})")
        if not self.labels:
            raise ValueError("entity requires at least one label")

    @classmethod
    def from_text(cls, text: str, start: int, end: int,
                  labels: Iterable[str], source: Source) -> "EntitySpan":
        return cls(start, end, tuple(labels), source, slice_text(text, start, end))

    @property
    def label(self) -> str:
        """Primary label: the single label after resolution, else the first candidate."""
        return self.labels[0]

    @property
    def length(self) -> int:
        return self.end - self.start

    def relabeled(self, label: str) -> "EntitySpan":
        return EntitySpan(self.start, self.end, (label,), self.source, self.surface)


def overlaps(a: EntitySpan, b: EntitySpan) -> bool:
    """True iff the two half-open spans share at least one code point."""
    return max(a.start, b.start) < min(a.end, b.end)


def contains(outer: EntitySpan, inner: EntitySpan) -> bool:
    """Strict containment: inner lies within outer and outer is longer.

    Identical spans are not containment; same-span label conflicts are a
    multi-label problem, not a geometry problem.
    """
    return (outer.start <= inner.start and inner.end <= outer.end
            and outer.length > inner.length)


def canonical_order(entities: Iterable[EntitySpan]) -> list[EntitySpan]:
    """Sort to the package-wide output order: start asc, end desc, first label."""
    return sorted(entities, key=lambda e: (e.start, -e.end, e.labels[0]))


@dataclass(frozen=True)
class LabelPriorityTable:
    """Label -> integer rank; higher rank wins containment conflicts."""

    priorities: Mapping[str, int] = field(default_factory=dict)

    def priority(self, label: str) -> int:
        try:
            return self.priorities[label]
        except KeyError:
            raise UnknownLabel(label, "no priority entry") from None

    def __contains__(self, label: str) -> bool:
        return label in self.priorities

    def labels(self) -> frozenset[str]:
        return frozenset(self.priorities)

    def rank_labels(self, labels: Iterable[str]) -> tuple[str, ...]:
        """Order candidate labels by descending priority, ties by name."""
        return tuple(sorted(set(labels), key=lambda l: (-self.priority(l), l)))
