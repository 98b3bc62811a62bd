"""Corpus-level BLEU over pre-tokenized lines, unsmoothed and case-sensitive."""

from dataclasses import dataclass
from pathlib import Path
from typing import List, Sequence, Tuple, Union

from sacrebleu.metrics import BLEU

from .errors import BleuInputError
from .serialize import read_lines


@dataclass(frozen=True)
class BleuReport:
    bleu: float
    precisions: Tuple[float, float, float, float]
    brevity_penalty: float
    candidate_length: int
    reference_length: int
    matches: Tuple[int, ...] = ()
    totals: Tuple[int, ...] = ()

    @property
    def ratio(self) -> float:
        if self.reference_length == 0:
            return 0.0
        return self.candidate_length / self.reference_length


class BleuScorer:
    """Four-gram corpus BLEU with a single reference per candidate.

    Lines are scored as already tokenized; an n-gram order with no matches
    makes the whole score zero.
    """

    def __init__(self):
        self.metric = BLEU(tokenize="none", smooth_method="none", lowercase=False, force=True)

    def corpus_bleu(self, candidates: Sequence[str], references: Sequence[str]) -> BleuReport:
        if len(candidates) != len(references):
            raise BleuInputError(f"{len(candidates)} candidates for {len(references)} references")
        if not candidates:
            raise BleuInputError("cannot score an empty corpus")
        # normalize spacing; lines are whitespace-tokenized as-is
        candidates = [" ".join(line.split()) for line in candidates]
        references = [" ".join(line.split()) for line in references]
        result = self.metric.corpus_score(candidates, [references])
        precisions = tuple(
            matched / total if total else 0.0 for matched, total in zip(result.counts, result.totals)
        )
        return BleuReport(
            bleu=result.score,
            precisions=precisions,
            brevity_penalty=result.bp,
            candidate_length=result.sys_len,
            reference_length=result.ref_len,
            matches=tuple(result.counts),
            totals=tuple(result.totals),
        )


def corpus_bleu(candidates: Sequence[str], references: Sequence[str]) -> BleuReport:
    return BleuScorer().corpus_bleu(candidates, references)


def score_files(candidates_path: Union[str, Path], references_path: Union[str, Path]) -> BleuReport:
    candidates = read_lines(candidates_path)
    references = read_lines(references_path)
    if len(candidates) != len(references):
        raise BleuInputError(
            f"{candidates_path} has {len(candidates)} lines but {references_path} has {len(references)}"
        )
    return corpus_bleu(candidates, references)


def format_report(report: BleuReport) -> str:
    """The familiar one-line summary followed by key=value fields."""
    precisions = "/".join(f"{100 * p:.1f}" for p in report.precisions)
    lines: List[str] = [
        f"BLEU = {report.bleu:.2f}, {precisions} (BP={report.brevity_penalty:.3f}, "
        f"ratio={report.ratio:.3f}, hyp_len={report.candidate_length}, ref_len={report.reference_length})",
        f"bleu={report.bleu:.2f}",
    ]
    lines.extend(f"p{n}={p!r}" for n, p in enumerate(report.precisions, start=1))
    lines.append(f"bp={report.brevity_penalty!r}")
    lines.append(f"hyp_len={report.candidate_length}")
    lines.append(f"ref_len={report.reference_length}")
    return "\n".join(lines)
