"""Locate top-level functions in repository trees and split them into
declaration, docstring and body.
"""

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Iterator, List, Optional, Tuple, Union

from tqdm import tqdm

from .errors import ParseFailure, ScanError
from .nodes import ModuleTree, StatementNode
from .pyparse import parse_module
from .serialize import clean_docstring
from .unparse import Line, unparse_canonical, unparse_header

logger = logging.getLogger(__name__)

PASS_STATEMENT = StatementNode(kind="pass", indent_level=1)


@dataclass(frozen=True)
class FunctionRecord:
    """One extracted top-level function with its provenance."""
    owner: str
    repo: str
    rel_path: str
    line: int
    decl: str
    docstring_raw: Optional[str]
    body_lines: Tuple[Line, ...]

    def metadata_line(self, prefix: str = "github") -> str:
        return f"{prefix}/{self.owner}/{self.repo}/{self.rel_path} {self.line}"

    @property
    def sort_key(self) -> Tuple[str, str, str, int]:
        return (self.owner, self.repo, self.rel_path, self.line)


@dataclass
class ScanReport:
    """Counters for one scan; failures hold ``path:line: reason`` strings."""
    files_seen: int = 0
    parse_failures: int = 0
    unreadable: int = 0
    functions_total: int = 0
    parallel: int = 0
    code_only: int = 0
    failures: List[str] = field(default_factory=list)


@dataclass
class ScanResult:
    parallel: List[FunctionRecord]
    code_only: List[FunctionRecord]
    report: ScanReport


def normalized_function(node: StatementNode) -> StatementNode:
    """The function with its docstring removed and an empty body replaced by ``pass``."""
    body = node.body or (replace(PASS_STATEMENT, indent_level=node.indent_level + 1),)
    return replace(node, children=body)


def _docstring_text(value: Union[str, bytes, None]) -> Optional[str]:
    if isinstance(value, bytes):
        return value.decode("utf-8", errors="replace")
    return value


def function_record(node: StatementNode, owner: str, repo: str, rel_path: str) -> FunctionRecord:
    decl = "\n".join(text for _, text in unparse_header(node))
    body_lines: List[Line] = []
    for statement in normalized_function(node).children:
        body_lines.extend(unparse_canonical(statement))
    return FunctionRecord(
        owner=owner,
        repo=repo,
        rel_path=rel_path,
        line=node.line,
        decl=decl,
        docstring_raw=_docstring_text(node.docstring),
        body_lines=tuple(body_lines),
    )


def extract_functions(tree: ModuleTree, owner: str, repo: str, rel_path: str) -> List[FunctionRecord]:
    """One record per module-level function, in file order.

    Methods and nested functions are not records of their own.
    """
    return [
        function_record(statement, owner, repo, rel_path)
        for statement in tree.body
        if statement.kind == "function-def"
    ]


@dataclass(frozen=True)
class _FileTask:
    path: str
    owner: str
    repo: str
    rel_path: str


@dataclass
class _FileOutcome:
    records: List[FunctionRecord] = field(default_factory=list)
    failure: Optional[str] = None
    unreadable: Optional[str] = None


def _extract_file(task: _FileTask) -> _FileOutcome:
    try:
        source = Path(task.path).read_bytes()
    except OSError as exc:
        return _FileOutcome(unreadable=f"{task.path}: {exc.strerror or exc}")
    try:
        tree = parse_module(source, task.path)
    except ParseFailure as exc:
        return _FileOutcome(failure=str(exc))
    return _FileOutcome(records=extract_functions(tree, task.owner, task.repo, task.rel_path))


def _walk_python_files(root: Path) -> Iterator[Path]:
    def on_error(exc: OSError) -> None:
        logger.warning("Cannot list %s: %s", exc.filename, exc.strerror)

    for directory, subdirs, files in os.walk(root, onerror=on_error, followlinks=False):
        subdirs.sort()
        for name in sorted(files):
            path = Path(directory) / name
            if name.endswith(".py") and not path.is_symlink():
                yield path


def _task_for(path: Path, root: Path, layout_levels: int) -> Optional[_FileTask]:
    parts = path.relative_to(root).parts
    if layout_levels == 2:
        if len(parts) < 3:
            return None
        owner, repo, rest = parts[0], parts[1], parts[2:]
    else:
        if len(parts) < 2:
            return None
        owner, repo, rest = root.name, parts[0], parts[1:]
    return _FileTask(str(path), owner, repo, "/".join(rest))


def collect_tasks(root: Path, layout_levels: int = 2) -> List[_FileTask]:
    if layout_levels not in (1, 2):
        raise ScanError(f"layout must have 1 or 2 directory levels, got {layout_levels}")
    if not root.is_dir() or not os.access(root, os.R_OK | os.X_OK):
        raise ScanError(f"cannot read repository root {root}")
    tasks = []
    for path in _walk_python_files(root):
        task = _task_for(path, root, layout_levels)
        if task is None:
            logger.debug("Skipping %s: outside the owner/repo layout", path)
            continue
        tasks.append(task)
    return tasks


def scan_tree(
    root: Union[str, Path],
    layout_levels: int = 2,
    workers: int = 1,
    show_progress: bool = True,
) -> ScanResult:
    """Extract every ``.py`` file under ``root`` and route records by docstring.

    With ``layout_levels=2`` files live at ``root/<owner>/<repo>/...``; with 1
    at ``root/<repo>/...`` and the owner is the root directory name. Records
    come back sorted by (owner, repo, rel_path, line) whatever ``workers`` is.
    """
    root = Path(root)
    tasks = collect_tasks(root, layout_levels)
    report = ScanReport(files_seen=len(tasks))
    records: List[FunctionRecord] = []

    progress = dict(total=len(tasks), desc="scanning", unit="file", disable=None if show_progress else True)
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = tqdm(pool.map(_extract_file, tasks, chunksize=16), **progress)
            _collect(tasks, outcomes, records, report)
    else:
        _collect(tasks, tqdm(map(_extract_file, tasks), **progress), records, report)

    records.sort(key=lambda record: record.sort_key)
    parallel = [r for r in records if r.docstring_raw is not None and clean_docstring(r.docstring_raw) is not None]
    parallel_keys = {id(r) for r in parallel}
    code_only = [r for r in records if id(r) not in parallel_keys]
    report.functions_total = len(records)
    report.parallel = len(parallel)
    report.code_only = len(code_only)
    return ScanResult(parallel=parallel, code_only=code_only, report=report)


def _collect(tasks, outcomes, records: List[FunctionRecord], report: ScanReport) -> None:
    for task, outcome in zip(tasks, outcomes):
        if outcome.unreadable is not None:
            report.unreadable += 1
            logger.warning("Unreadable file %s", outcome.unreadable)
        elif outcome.failure is not None:
            report.parse_failures += 1
            report.failures.append(outcome.failure)
            logger.warning("Parse failure %s", outcome.failure)
        else:
            logger.debug("%s: %d functions", task.path, len(outcome.records))
            records.extend(outcome.records)
