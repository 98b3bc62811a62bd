"""Exception hierarchy for the docstring corpus toolchain."""

from typing import Dict, Optional


class CorpusToolError(Exception):
    """Base class for every error the toolchain reports to the user."""


class ConfigError(CorpusToolError):
    """Invalid or incomplete pipeline configuration."""


class ParseFailure(CorpusToolError):
    """A source file that is not parseable Python 2.7."""

    def __init__(self, path: str, line: int, reason: str):
        self.path = path
        self.line = line
        self.reason = reason
        super().__init__(f"{path}:{line}: {reason}")


class ScanError(CorpusToolError):
    """The repository root itself cannot be scanned."""


class MalformedLine(CorpusToolError):
    """A corpus line that does not follow the DCNL/DCSP marker grammar."""

    def __init__(self, reason: str, line_number: Optional[int] = None, path: Optional[str] = None):
        self.reason = reason
        self.line_number = line_number
        self.path = path
        where = ""
        if path is not None:
            where = f"{path}:{line_number}: " if line_number is not None else f"{path}: "
        elif line_number is not None:
            where = f"line {line_number}: "
        super().__init__(where + reason)


class AlignmentError(CorpusToolError):
    """Parallel corpus files with differing line counts."""

    def __init__(self, counts: Dict[str, int]):
        self.counts = dict(counts)
        listing = ", ".join(f"{path} has {count} lines" for path, count in self.counts.items())
        super().__init__(f"corpus files are not aligned: {listing}")


class SpecTooLarge(CorpusToolError):
    """A split asks for more held-out examples than the corpus holds."""

    def __init__(self, requested: int, available: int):
        self.requested = requested
        self.available = available
        super().__init__(
            f"split needs more than {requested} examples but the corpus has {available}"
        )


class BacktranslationMismatch(CorpusToolError):
    """Synthetic docstrings do not line up with the code-only corpus."""

    def __init__(self, synthetic_count: int, code_only_count: int):
        self.synthetic_count = synthetic_count
        self.code_only_count = code_only_count
        super().__init__(
            f"{synthetic_count} synthetic docstrings for {code_only_count} code-only examples"
        )


class MalformedSequence(CorpusToolError):
    """A subtoken sequence whose continuation markers cannot be resolved."""


class ModelFormatError(CorpusToolError):
    """A BPE model file that cannot be read."""


class BleuInputError(CorpusToolError):
    """Candidate and reference files that cannot be scored together."""


class RoundtripError(CorpusToolError):
    """Corpus examples whose code does not survive unescape and reparse."""

    def __init__(self, failures):
        self.failures = list(failures)
        super().__init__(f"{len(self.failures)} examples failed the round trip")
