"""Error taxonomy shared across the package.

Three families, mirroring the CLI exit codes: configuration problems
(bad registry, bad flags), data/processing problems (bad corpus lines,
contract violations), and adapter problems (transport, budget, fixture
gaps).
"""

from __future__ import annotations


class RecapError(Exception):
    """Base class for all errors raised by this package."""


# --- configuration -----------------------------------------------------

class ConfigError(RecapError):
    """Invalid registry, template, or pipeline configuration."""


class RegistryParseError(ConfigError):
    pass


class DuplicatePatternId(ConfigError):
    def __init__(self, pattern_id: str):
        super().__init__(f"duplicate pattern id: {pattern_id!r}")
        self.pattern_id = pattern_id


class UnknownLocale(ConfigError):
    def __init__(self, locale: str, context: str = ""):
        msg = f"unknown locale: {locale!r}"
        if context:
            msg += f" ({context})"
        super().__init__(msg)
        self.locale = locale


class UnknownLabel(ConfigError):
    def __init__(self, label: str, context: str = ""):
        msg = f"unknown label: {label!r}"
        if context:
            msg += f" ({context})"
        super().__init__(msg)
        self.label = label


class BadPattern(ConfigError):
    def __init__(self, pattern_id: str, reason: str):
        super().__init__(f"pattern {pattern_id!r} does not compile: {reason}")
        self.pattern_id = pattern_id


class MissingPlaceholder(ConfigError):
    def __init__(self, name: str):
        super().__init__(f"unbound template placeholder: {name!r}")
        self.name = name


class MissingProvider(ConfigError):
    def __init__(self, label: str, locale: str):
        super().__init__(f"no value provider for label {label!r} in locale {locale!r}")
        self.label = label
        self.locale = locale


class UnsupportedLocale(ConfigError):
    def __init__(self, locale: str):
        super().__init__(f"locale {locale!r} is not supported by the loaded registry")
        self.locale = locale


class EmptyInput(ConfigError):
    pass


# --- data / processing --------------------------------------------------

class ProcessingError(RecapError):
    """Invalid input data or a violated operation precondition."""


class OutOfRange(ProcessingError):
    pass


class CorpusParseError(ProcessingError):
    def __init__(self, line_no: int, reason: str):
        super().__init__(f"corpus line {line_no}: {reason}")
        self.line_no = line_no


class NonDigitInput(ProcessingError):
    pass


class MultiLabelRemains(ProcessingError):
    pass


class OverlappingEntities(ProcessingError):
    pass


class UnparseableResponse(ProcessingError):
    """Model output did not contain the expected structure.

    Counted as a diagnostic by the pipeline, never fatal there.
    """


# --- adapter ------------------------------------------------------------

class AdapterError(RecapError):
    """Chat-backend failure."""


class TransportError(AdapterError):
    pass


class AdapterTimeout(AdapterError):
    pass


class BudgetExhausted(AdapterError):
    def __init__(self, attempts: int, last_error: Exception | None = None):
        super().__init__(f"retry budget exhausted after {attempts} attempt(s): {last_error}")
        self.attempts = attempts
        self.last_error = last_error


class MockMiss(AdapterError):
    def __init__(self, fingerprint: str):
        super().__init__(f"no scripted response for fingerprint {fingerprint}")
        self.fingerprint = fingerprint
