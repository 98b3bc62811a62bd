"""Punctuation splitting and Byte-Pair Encoding of corpus lines.

Every non-final subtoken of a token carries the ``@@`` continuation marker,
so ``"w_size"`` may become ``["w_@@", "size"]`` and reverts losslessly.
"""

import logging
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import regex as re

from .errors import ModelFormatError, MalformedSequence
from .serialize import MARKERS, CorpusFiles, CorpusTriple, read_corpus, write_triples
from .utils import write_lines_atomic

logger = logging.getLogger(__name__)

END_OF_TOKEN = "</w>"
CONTINUATION = "@@"
MODEL_VERSION = 1
MODEL_HEADER = f"#bpe-version: {MODEL_VERSION}"
DEFAULT_PROTECTED = frozenset(MARKERS)

Pair = Tuple[str, str]

_PIECE = re.compile(r"[\p{L}\p{M}\p{N}_]+|[^\p{L}\p{M}\p{N}_\s]")


def punct_split(line: str, protected: Iterable[str] = DEFAULT_PROTECTED) -> List[str]:
    """Whitespace tokens with every punctuation character split off on its own.

    ``np.dot`` gives ``np . dot``; protected tokens are never split.
    """
    protected = frozenset(protected)
    tokens: List[str] = []
    for token in line.split():
        if token in protected:
            tokens.append(token)
        else:
            tokens.extend(_PIECE.findall(token))
    return tokens


def line_tokens(line: str, split_punctuation: bool, protected: Iterable[str] = DEFAULT_PROTECTED) -> List[str]:
    return punct_split(line, protected) if split_punctuation else line.split()


def count_tokens(
    lines: Iterable[str],
    split_punctuation: bool = True,
    protected: Iterable[str] = DEFAULT_PROTECTED,
) -> Counter:
    """Token frequencies for learning; protected markers are left out."""
    protected = frozenset(protected)
    counts: Counter = Counter()
    for line in lines:
        counts.update(t for t in line_tokens(line, split_punctuation, protected) if t not in protected)
    return counts


def _symbols(token: str) -> Tuple[str, ...]:
    return tuple(token[:-1]) + (token[-1] + END_OF_TOKEN,)


def _merge_word(word: Sequence[str], pair: Pair) -> Tuple[str, ...]:
    left, right = pair
    merged: List[str] = []
    i = 0
    while i < len(word):
        if i < len(word) - 1 and word[i] == left and word[i + 1] == right:
            merged.append(left + right)
            i += 2
        else:
            merged.append(word[i])
            i += 1
    return tuple(merged)


@dataclass(frozen=True)
class BpeModel:
    merges: Tuple[Pair, ...] = ()
    continuation_marker: str = CONTINUATION
    version: int = MODEL_VERSION
    _cache: Dict[str, Tuple[str, ...]] = field(default_factory=dict, compare=False, repr=False)

    @cached_property
    def ranks(self) -> Dict[Pair, int]:
        return {pair: rank for rank, pair in enumerate(self.merges)}

    def segment(self, token: str) -> Tuple[str, ...]:
        """Symbols of one token after applying merges by rank, sentinel removed."""
        cached = self._cache.get(token)
        if cached is not None:
            return cached
        word = _symbols(token)
        while len(word) > 1:
            candidates = [pair for pair in zip(word, word[1:]) if pair in self.ranks]
            if not candidates:
                break
            word = _merge_word(word, min(candidates, key=self.ranks.__getitem__))
        segmented = word[:-1] + (word[-1][: -len(END_OF_TOKEN)],)
        self._cache[token] = segmented
        return segmented

    def save(self, path: Union[str, Path]) -> None:
        write_lines_atomic(path, [MODEL_HEADER] + [f"{left} {right}" for left, right in self.merges])

    @classmethod
    def load(cls, path: Union[str, Path]) -> "BpeModel":
        lines = Path(path).read_text(encoding="utf-8").split("\n")
        if not lines or lines[0] != MODEL_HEADER:
            raise ModelFormatError(f"{path}: missing header {MODEL_HEADER!r}")
        merges: List[Pair] = []
        for number, line in enumerate(lines[1:], start=2):
            if not line:
                continue
            parts = line.split(" ")
            if len(parts) != 2 or not all(parts):
                raise ModelFormatError(f"{path}:{number}: expected 'left right', got {line!r}")
            merges.append((parts[0], parts[1]))
        if len(set(merges)) != len(merges):
            raise ModelFormatError(f"{path}: duplicate merges")
        return cls(merges=tuple(merges))


def bpe_learn(token_frequencies: Mapping[str, int], num_merges: int) -> BpeModel:
    """Learn up to ``num_merges`` merges of the most frequent adjacent symbol pair.

    Ties go to the lexicographically smallest ``(left, right)``. Learning
    stops early once no pair occurs at least twice.
    """
    words = [
        [_symbols(token), freq]
        for token, freq in sorted(token_frequencies.items())
        if token and freq > 0
    ]
    stats: Counter = Counter()
    indices: Dict[Pair, Counter] = defaultdict(Counter)
    for i, (word, freq) in enumerate(words):
        for pair in zip(word, word[1:]):
            stats[pair] += freq
            indices[pair][i] += 1

    merges: List[Pair] = []
    while len(merges) < num_merges and stats:
        best, freq = min(stats.items(), key=lambda item: (-item[1], item[0]))
        if freq < 2:
            break
        merges.append(best)
        touched = set()
        for i, occurrences in list(indices[best].items()):
            if occurrences <= 0:
                continue
            old, word_freq = words[i]
            new = _merge_word(old, best)
            for pair in zip(old, old[1:]):
                stats[pair] -= word_freq
                indices[pair][i] -= 1
                touched.add(pair)
            for pair in zip(new, new[1:]):
                stats[pair] += word_freq
                indices[pair][i] += 1
            words[i][0] = new
        for pair in touched:
            if stats[pair] <= 0:
                del stats[pair]
                indices.pop(pair, None)
    logger.debug("Learned %d of %d requested merges", len(merges), num_merges)
    return BpeModel(merges=tuple(merges))


def bpe_apply(model: BpeModel, tokens: Iterable[str], protected: Iterable[str] = DEFAULT_PROTECTED) -> List[str]:
    protected = frozenset(protected)
    marker = model.continuation_marker
    out: List[str] = []
    for token in tokens:
        if token in protected:
            out.append(token)
            continue
        symbols = model.segment(token)
        out.extend(symbol + marker for symbol in symbols[:-1])
        out.append(symbols[-1])
    return out


def bpe_revert(subtokens: Iterable[str], continuation_marker: str = CONTINUATION) -> List[str]:
    tokens: List[str] = []
    pending: Optional[str] = None
    for subtoken in subtokens:
        if subtoken.endswith(continuation_marker):
            pending = (pending or "") + subtoken[: -len(continuation_marker)]
        else:
            tokens.append((pending or "") + subtoken)
            pending = None
    if pending is not None:
        raise MalformedSequence(f"dangling {continuation_marker!r} at the end of the sequence")
    return tokens


# Corpus level

def corpus_text_lines(triples: Iterable[CorpusTriple]) -> Iterable[str]:
    """Declaration, body and docstring lines; metadata is never subtokenized."""
    for triple in triples:
        yield triple.decl_line
        yield triple.body_line
        if triple.docstring_line is not None:
            yield triple.docstring_line


def learn_from_corpus(
    files: CorpusFiles,
    num_merges: int,
    split_punctuation: bool = True,
    protected: Iterable[str] = DEFAULT_PROTECTED,
) -> BpeModel:
    """One joint model over declarations, bodies and docstrings."""
    counts = count_tokens(corpus_text_lines(read_corpus(files)), split_punctuation, protected)
    return bpe_learn(counts, num_merges)


@dataclass
class ApplyReport:
    written: int = 0
    marker_collisions: int = 0
    dropped: List[str] = field(default_factory=list)


def apply_to_corpus(
    model: BpeModel,
    files: CorpusFiles,
    out_prefix: Union[str, Path],
    split_punctuation: bool = True,
    protected: Iterable[str] = DEFAULT_PROTECTED,
) -> ApplyReport:
    """Subtokenize every text field of an aligned corpus.

    Examples with a token ending in the continuation marker are dropped from
    every output file, since reverting them would be ambiguous.
    """
    protected = frozenset(protected)
    report = ApplyReport()

    def encode(line: str) -> Optional[str]:
        tokens = line_tokens(line, split_punctuation, protected)
        if any(token.endswith(model.continuation_marker) for token in tokens):
            return None
        return " ".join(bpe_apply(model, tokens, protected))

    def encoded_triples():
        for triple in read_corpus(files):
            decl, body = encode(triple.decl_line), encode(triple.body_line)
            docstring = encode(triple.docstring_line) if triple.docstring_line is not None else ""
            if decl is None or body is None or docstring is None:
                report.marker_collisions += 1
                report.dropped.append(triple.metadata_line)
                logger.warning("Dropping %s: token collides with %r", triple.metadata_line, model.continuation_marker)
                continue
            yield CorpusTriple(decl, body, triple.metadata_line, docstring if files.has_docstrings else None)

    report.written = write_triples(encoded_triples(), CorpusFiles.at(out_prefix, files.has_docstrings))
    return report


def revert_lines(lines: Iterable[str], continuation_marker: str = CONTINUATION) -> List[str]:
    """Undo BPE on plain subtokenized lines; raises on the first dangling marker."""
    reverted = []
    for number, line in enumerate(lines, start=1):
        try:
            reverted.append(" ".join(bpe_revert(line.split(), continuation_marker)))
        except MalformedSequence as exc:
            raise MalformedSequence(f"line {number}: {exc}") from exc
    return reverted
