"""Deduplication, splitting, statistics, task pairs and backtranslation assembly over corpora."""

import logging
import math
import statistics
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

from typing_extensions import Literal

from .errors import BacktranslationMismatch, ConfigError, SpecTooLarge
from .serialize import DCNL, CorpusFiles, CorpusTriple, read_corpus, read_lines, write_triples
from .utils import write_lines_atomic

logger = logging.getLogger(__name__)

MASK64 = (1 << 64) - 1

TOKEN_DEFINITION = "whitespace-separated, DCNL/DCSP included"
STD_DEFINITION = "population"
MEDIAN_DEFINITION = "lower-middle for even counts"


class SplitMix64:
    """Random Number Generator

    SplitMix64, the 64-bit generator used to seed xoshiro generators
    https://prng.di.unimi.it/splitmix64.c
    """

    increment = 0x9E3779B97F4A7C15

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def __call__(self) -> int:
        self.state = (self.state + self.increment) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by rejection sampling."""
        threshold = (1 << 64) % bound
        while True:
            value = self()
            if value >= threshold:
                return value % bound


def permutation(n: int, seed: int) -> List[int]:
    """Seeded Fisher-Yates permutation of ``range(n)``."""
    rng = SplitMix64(seed)
    order = list(range(n))
    for i in range(n - 1, 0, -1):
        j = rng.below(i + 1)
        order[i], order[j] = order[j], order[i]
    return order


def dedup(triples: Sequence[CorpusTriple]) -> List[CorpusTriple]:
    """First occurrence of each (decl, docstring, body); metadata is not part of the key."""
    seen = set()
    survivors = []
    for triple in triples:
        if triple.key in seen:
            continue
        seen.add(triple.key)
        survivors.append(triple)
    return survivors


@dataclass(frozen=True)
class SplitSpec:
    valid_size: int = 2000
    test_size: int = 2000
    seed: int = 1234

    def check(self, available: int) -> None:
        if self.valid_size < 0 or self.test_size < 0:
            raise ConfigError("split sizes must not be negative")
        requested = self.valid_size + self.test_size
        if requested >= available:
            raise SpecTooLarge(requested, available)


@dataclass
class SplitResult:
    train: List[CorpusTriple]
    valid: List[CorpusTriple]
    test: List[CorpusTriple]


def split(triples: Sequence[CorpusTriple], spec: SplitSpec) -> SplitResult:
    """Shuffle with the seeded permutation; test first, then valid, rest is train."""
    spec.check(len(triples))
    order = permutation(len(triples), spec.seed)
    test_end = spec.test_size
    valid_end = test_end + spec.valid_size
    return SplitResult(
        train=[triples[i] for i in order[valid_end:]],
        valid=[triples[i] for i in order[test_end:valid_end]],
        test=[triples[i] for i in order[:test_end]],
    )


def write_split(result: SplitResult, out_prefix: Union[str, Path], with_docstrings: bool) -> Dict[str, int]:
    sizes = {}
    for name in ("train", "valid", "test"):
        part = getattr(result, name)
        sizes[name] = write_triples(part, CorpusFiles.at(f"{out_prefix}.{name}", with_docstrings))
    return sizes


# Statistics

@dataclass
class ElementStats:
    tokens: int
    mean: float
    std: float
    median: int
    locs: Optional[int] = None


@dataclass
class StatsReport:
    examples: int
    elements: Dict[str, ElementStats] = field(default_factory=dict)
    definitions: Dict[str, str] = field(default_factory=lambda: {
        "token": TOKEN_DEFINITION,
        "std": STD_DEFINITION,
        "median": MEDIAN_DEFINITION,
    })


def token_count(line: str) -> int:
    return len(line.split())


def loc_count(line: str) -> int:
    return 1 + line.split().count(DCNL)


def element_stats(lines: Sequence[str], with_locs: bool) -> ElementStats:
    counts = [token_count(line) for line in lines]
    total = sum(counts)
    if not counts:
        return ElementStats(tokens=0, mean=0.0, std=0.0, median=0, locs=0 if with_locs else None)
    return ElementStats(
        tokens=total,
        mean=total / len(counts),
        std=statistics.pstdev(counts),
        median=statistics.median_low(counts),
        locs=sum(loc_count(line) for line in lines) if with_locs else None,
    )


def stats_for_triples(triples: Sequence[CorpusTriple], with_docstrings: bool) -> StatsReport:
    report = StatsReport(examples=len(triples))
    report.elements["declarations"] = element_stats([t.decl_line for t in triples], True)
    report.elements["bodies"] = element_stats([t.body_line for t in triples], True)
    if with_docstrings:
        report.elements["docstrings"] = element_stats([t.docstring_line or "" for t in triples], False)
    return report


def compute_stats(files: CorpusFiles) -> StatsReport:
    """Examples, tokens, lines of code and per-example token statistics.

    A code-only corpus reports declarations and bodies only.
    """
    return stats_for_triples(read_corpus(files), files.has_docstrings)


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def format_stats_table(report: StatsReport) -> str:
    rows = [f"{'':<14}{'Examples':>10}{'Tokens':>14}{'LoC':>12}{'Mean':>10}{'Std.':>10}{'Median':>8}"]
    for name, element in report.elements.items():
        locs = "-" if element.locs is None else str(element.locs)
        rows.append(
            f"{name.capitalize():<14}{report.examples:>10}{element.tokens:>14}{locs:>12}"
            f"{_fmt(element.mean):>10}{_fmt(element.std):>10}{element.median:>8}"
        )
    rows.append(
        f"tokens: {report.definitions['token']}; std: {report.definitions['std']}; "
        f"median: {report.definitions['median']}"
    )
    return "\n".join(rows)


def format_stats_keyvalues(report: StatsReport) -> str:
    lines = [f"examples={report.examples}"]
    for name, element in report.elements.items():
        lines.append(f"{name}.tokens={element.tokens}")
        if element.locs is not None:
            lines.append(f"{name}.locs={element.locs}")
        lines.append(f"{name}.mean={element.mean!r}")
        lines.append(f"{name}.std={element.std!r}")
        lines.append(f"{name}.median={element.median}")
    lines.extend(f"definition.{key}={value}" for key, value in report.definitions.items())
    return "\n".join(lines)


def check_stats_consistency(report: StatsReport) -> bool:
    """Whether mean times examples gives back every token total."""
    return all(
        math.isclose(element.mean * report.examples, element.tokens, rel_tol=0, abs_tol=1e-6)
        for element in report.elements.values()
    )


# Backtranslation

PARALLEL = "parallel"
SYNTHETIC = "synthetic"


@dataclass
class AssemblyReport:
    parallel: int
    synthetic: int

    @property
    def combined(self) -> int:
        return self.parallel + self.synthetic


def provenance_path(out_prefix: Union[str, Path]) -> Path:
    return Path(f"{out_prefix}.provenance")


def assemble_backtranslation(
    parallel: CorpusFiles,
    code_only: CorpusFiles,
    synthetic_docstrings: Union[str, Path],
    out_prefix: Union[str, Path],
) -> AssemblyReport:
    """Parallel training corpus followed by synthetic-docstring examples.

    Line i of ``synthetic_docstrings`` documents example i of the code-only
    corpus. ``<out_prefix>.provenance`` tags every output line.
    """
    real = read_corpus(parallel)
    code = read_corpus(code_only)
    synthetic = read_lines(synthetic_docstrings)
    if len(synthetic) != len(code):
        raise BacktranslationMismatch(len(synthetic), len(code))

    augmented = [
        CorpusTriple(t.decl_line, t.body_line, t.metadata_line, docstring)
        for t, docstring in zip(code, synthetic)
    ]
    write_triples(real + augmented, CorpusFiles.at(out_prefix, with_docstrings=True))
    write_lines_atomic(provenance_path(out_prefix), [PARALLEL] * len(real) + [SYNTHETIC] * len(augmented))
    logger.info("Assembled %d parallel and %d synthetic examples", len(real), len(augmented))
    return AssemblyReport(parallel=len(real), synthetic=len(augmented))


# Translation task pairs

DOCUMENTATION = "documentation"
GENERATION = "generation"
TASK_DIRECTIONS = (DOCUMENTATION, GENERATION)

Direction = Literal["documentation", "generation"]


@dataclass
class TaskPairReport:
    direction: str
    examples: int
    with_targets: bool


def task_pair(triple: CorpusTriple, direction: Direction) -> Tuple[str, Optional[str]]:
    """Source and target line of one example; the declaration always goes on the source side.

    Documentation reads the declaration and body and produces the docstring.
    Generation reads the declaration and docstring and produces the body.
    """
    if direction == DOCUMENTATION:
        return f"{triple.decl_line} {DCNL} {triple.body_line}", triple.docstring_line
    if direction == GENERATION:
        if triple.docstring_line is None:
            raise ConfigError(f"{triple.metadata_line}: generation needs a docstring")
        return f"{triple.decl_line} {DCNL} {triple.docstring_line}", triple.body_line
    raise ConfigError(f"unknown task direction {direction!r}; expected one of {', '.join(TASK_DIRECTIONS)}")


def make_task_pairs(files: CorpusFiles, direction: Direction, out_prefix: Union[str, Path]) -> TaskPairReport:
    """Write ``<out_prefix>.src`` and ``<out_prefix>.tgt`` for one translation direction.

    A code-only corpus only yields documentation sources; the ``.tgt`` file
    is then not written.
    """
    if direction not in TASK_DIRECTIONS:
        raise ConfigError(f"unknown task direction {direction!r}; expected one of {', '.join(TASK_DIRECTIONS)}")
    if direction == GENERATION and not files.has_docstrings:
        raise ConfigError("generation pairs need a corpus with docstrings")
    pairs = [task_pair(triple, direction) for triple in read_corpus(files)]
    write_lines_atomic(f"{out_prefix}.src", [source for source, _ in pairs])
    if files.has_docstrings:
        write_lines_atomic(f"{out_prefix}.tgt", [target for _, target in pairs])
    logger.info("Wrote %d %s pairs to %s", len(pairs), direction, out_prefix)
    return TaskPairReport(direction=direction, examples=len(pairs), with_targets=files.has_docstrings)
