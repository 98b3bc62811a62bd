"""Line-aligned corpus files with DCNL/DCSP escaping.

A multi-line code fragment becomes one corpus line: every physical line is
prefixed by one ``DCSP`` token per indentation level and lines are joined
by ``DCNL`` tokens.
"""

import logging
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import TYPE_CHECKING, Dict, Iterable, List, Optional, Sequence, Union

from typing_extensions import Literal

from .errors import AlignmentError, MalformedLine, ParseFailure
from .pyparse import parse_module, tree_equal
from .unparse import Line, render_source, unparse_canonical
from .utils import atomic_outputs

if TYPE_CHECKING:
    from .extract import FunctionRecord

logger = logging.getLogger(__name__)

DCNL = "DCNL"
DCSP = "DCSP"
MARKERS = (DCNL, DCSP)

Field = Literal["decl", "bodies", "docstring", "metadata"]

_NEWLINE_SEP = f" {DCNL} "
_INDENT_PREFIX = f"{DCSP} "
_MARKER_TOKEN = re.compile(r"\bDC(?:NL|SP)\b")
_STANDALONE_MARKER = re.compile(r"(?<!\S)DC(?:NL|SP)(?!\S)")


def escape_body(body_lines: Iterable[Line]) -> str:
    return _NEWLINE_SEP.join(_INDENT_PREFIX * level + text for level, text in body_lines)


def unescape_body(body_line: str) -> List[Line]:
    """Inverse of :func:`escape_body`.

    Text after the leading ``DCSP`` tokens is kept verbatim so string
    literals with inner spacing survive.
    """
    lines: List[Line] = []
    for segment in body_line.split(_NEWLINE_SEP):
        level = 0
        while segment.startswith(_INDENT_PREFIX):
            level += 1
            segment = segment[len(_INDENT_PREFIX):]
        if not segment or segment == DCSP:
            raise MalformedLine("empty line segment")
        if _STANDALONE_MARKER.search(segment):
            raise MalformedLine("marker token inside a line segment")
        lines.append((level, segment))
    return lines


def escape_declaration(decl: str) -> str:
    return _NEWLINE_SEP.join(decl.split("\n"))


def unescape_declaration(decl_line: str) -> str:
    return "\n".join(text for _, text in unescape_body(decl_line))


def _quote(text: str) -> str:
    return "'" + text.replace("\\", "\\\\").replace("'", "\\'") + "'"


def clean_docstring(docstring_raw: Optional[str]) -> Optional[str]:
    """Single-line quoted docstring, or None when no line has an alphanumeric character."""
    if docstring_raw is None:
        return None
    kept = []
    for line in docstring_raw.split("\n"):
        if any(char.isalnum() for char in line):
            kept.append(" ".join(line.split()))
    if not kept:
        return None
    return _quote(_NEWLINE_SEP.join(kept))


def has_marker_collision(*texts: Optional[str]) -> bool:
    return any(text is not None and _MARKER_TOKEN.search(text) for text in texts)


@dataclass(frozen=True)
class CorpusTriple:
    decl_line: str
    body_line: str
    metadata_line: str
    docstring_line: Optional[str] = None

    @property
    def key(self):
        return (self.decl_line, self.docstring_line, self.body_line)


@dataclass(frozen=True)
class CorpusFiles:
    """Aligned corpus files; the docstring file is absent for a code-only corpus."""
    decl_path: Path
    body_path: Path
    metadata_path: Path
    docstring_path: Optional[Path] = None

    @classmethod
    def at(cls, prefix: Union[str, Path], with_docstrings: bool = True) -> "CorpusFiles":
        prefix = str(prefix)
        return cls(
            decl_path=Path(prefix + ".decl"),
            body_path=Path(prefix + ".bodies"),
            metadata_path=Path(prefix + ".metadata"),
            docstring_path=Path(prefix + ".docstring") if with_docstrings else None,
        )

    @classmethod
    def detect(cls, prefix: Union[str, Path]) -> "CorpusFiles":
        """Files at ``prefix``, with docstrings only if that file exists."""
        return cls.at(prefix, with_docstrings=Path(str(prefix) + ".docstring").exists())

    @property
    def has_docstrings(self) -> bool:
        return self.docstring_path is not None

    def paths(self) -> Dict[Field, Path]:
        paths: Dict[Field, Path] = {"decl": self.decl_path, "bodies": self.body_path}
        if self.docstring_path is not None:
            paths["docstring"] = self.docstring_path
        paths["metadata"] = self.metadata_path
        return paths


@dataclass
class WriteReport:
    written: int = 0
    marker_collisions: int = 0
    dropped: List[str] = field(default_factory=list)


def triple_for(record: "FunctionRecord", prefix: str = "github", with_docstring: bool = True) -> Optional[CorpusTriple]:
    """Corpus triple for one record, or None on a DCNL/DCSP collision."""
    texts = [record.decl] + [text for _, text in record.body_lines]
    if has_marker_collision(*texts) or (with_docstring and has_marker_collision(record.docstring_raw)):
        return None
    return CorpusTriple(
        decl_line=escape_declaration(record.decl),
        body_line=escape_body(record.body_lines),
        metadata_line=record.metadata_line(prefix),
        docstring_line=clean_docstring(record.docstring_raw) if with_docstring else None,
    )


def write_triples(triples: Iterable[CorpusTriple], files: CorpusFiles) -> int:
    """Write triples in order; returns the number written."""
    paths = files.paths()
    count = 0
    with atomic_outputs(list(paths.values())) as handles:
        outputs = dict(zip(paths, handles))
        for triple in triples:
            outputs["decl"].write(triple.decl_line + "\n")
            outputs["bodies"].write(triple.body_line + "\n")
            outputs["metadata"].write(triple.metadata_line + "\n")
            if "docstring" in outputs:
                outputs["docstring"].write((triple.docstring_line or "") + "\n")
            count += 1
    return count


def write_corpus(records: Iterable["FunctionRecord"], files: CorpusFiles, prefix: str = "github") -> WriteReport:
    report = WriteReport()

    def triples():
        for record in records:
            triple = triple_for(record, prefix, files.has_docstrings)
            if triple is None:
                report.marker_collisions += 1
                report.dropped.append(record.metadata_line(prefix))
                logger.warning("Dropping %s: source contains a DCNL/DCSP token", record.metadata_line(prefix))
                continue
            yield triple

    report.written = write_triples(triples(), files)
    return report


def read_lines(path: Union[str, Path]) -> List[str]:
    """Lines of a UTF-8 corpus file without their LF terminators."""
    with open(path, encoding="utf-8", newline="") as handle:
        text = handle.read()
    if not text:
        return []
    lines = text.split("\n")
    if lines[-1] == "":
        lines.pop()
    return lines


def read_aligned(paths: Dict[str, Path]) -> Dict[str, List[str]]:
    """Read several files that must have identical line counts."""
    columns = {name: read_lines(path) for name, path in paths.items()}
    counts = {str(paths[name]): len(lines) for name, lines in columns.items()}
    if len(set(counts.values())) > 1:
        raise AlignmentError(counts)
    return columns


def read_corpus(files: CorpusFiles) -> List[CorpusTriple]:
    """Read and validate an aligned corpus."""
    columns = read_aligned(files.paths())
    docstrings: Sequence[Optional[str]] = columns.get("docstring") or [None] * len(columns["decl"])
    triples = []
    for number, (decl, body, metadata, docstring) in enumerate(
        zip(columns["decl"], columns["bodies"], columns["metadata"], docstrings), start=1
    ):
        for path, value in ((files.decl_path, decl), (files.body_path, body)):
            try:
                unescape_body(value)
            except MalformedLine as exc:
                raise MalformedLine(exc.reason, number, str(path)) from exc
        triples.append(CorpusTriple(decl, body, metadata, docstring))
    return triples


def reassemble_source(triple: CorpusTriple) -> str:
    """Function source rebuilt from a triple's declaration and body lines."""
    lines = unescape_body(triple.decl_line) + unescape_body(triple.body_line)
    return render_source(lines)


def roundtrip_problem(triple: CorpusTriple) -> Optional[str]:
    """Why the triple's code is not a fixed point of parse and unparse, or None.

    The reassembled function must parse, unparse back to the stored lines,
    and reparse from those lines to an equal tree.
    """
    try:
        stored = unescape_body(triple.decl_line) + unescape_body(triple.body_line)
        tree = parse_module(render_source(stored), triple.metadata_line)
    except (MalformedLine, ParseFailure) as exc:
        return str(exc)
    if len(tree.body) != 1 or tree.body[0].kind != "function-def":
        return "does not reassemble to a single function"
    regenerated = unparse_canonical(tree)
    if regenerated != stored:
        return "canonical form changed after reparsing"
    if not tree_equal(tree, parse_module(render_source(regenerated), triple.metadata_line)):
        return "reparsed tree differs"
    return None
