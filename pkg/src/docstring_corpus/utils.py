"""Utility functions and classes for the docstring corpus toolchain."""

import os
import tempfile
from contextlib import contextmanager
from datetime import datetime
from pathlib import Path
from typing import IO, Any, Dict, Iterator, List, Optional, Sequence, Union


class MessageFormatter:
    """Handles message formatting and output for different message types."""

    @staticmethod
    def format_message(message_type: str, message: Dict[str, Any]) -> str:
        """Format a message based on its type."""
        formatters = {
            'status': lambda m: f"[Status] {m['message']}",
            'config': lambda m: "[Config] " + " ".join(f"{k}={v}" for k, v in m['values'].items()),
            'report': lambda m: f"[{m.get('title', 'Report')}]\n"
            + "\n".join(f"  {k}: {v}" for k, v in m['values'].items()),
            'table': lambda m: f"[{m.get('title', 'Table')}]\n{'-' * 80}\n{m['content']}\n{'-' * 80}",
            'failure': lambda m: f"[Failure] {m['message']}",
            'default': lambda m: m.get('content', '') or ""
        }

        formatter = formatters.get(message_type, formatters['default'])
        return formatter(message)


class OutputManager:
    """Manages output to the console and, optionally, a run log file."""

    def __init__(self, run_log: Optional[Union[str, Path]] = None, echo: bool = True):
        self.file: Optional[IO[str]] = None
        self.echo = echo
        self.formatter = MessageFormatter()
        if run_log is not None:
            self.setup_output_file(Path(run_log))

    def setup_output_file(self, path: Path):
        """Open the run log for appending, stamped with the start time."""
        path.parent.mkdir(parents=True, exist_ok=True)
        self.file = open(path, 'a', encoding='utf-8')
        self.file.write(f"# run started {datetime.now().isoformat(timespec='seconds')}\n")

    def write(self, message: Dict[str, Any]) -> str:
        """Write a formatted message to the console and the run log."""
        formatted_text = self.formatter.format_message(message.get('type', ''), message)
        if self.echo:
            print(formatted_text)
        if self.file:
            self.file.write(formatted_text + "\n")
            self.file.flush()
        return formatted_text

    def close(self):
        if self.file:
            self.file.close()
            self.file = None

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.close()


@contextmanager
def atomic_outputs(paths: Sequence[Union[str, Path]]) -> Iterator[List[IO[str]]]:
    """Open temporary siblings of ``paths`` and rename them into place on success.

    On any exception the temporaries are removed and existing files are left
    untouched.
    """
    handles: List[IO[str]] = []
    temp_names: List[str] = []
    try:
        for path in paths:
            path = Path(path)
            path.parent.mkdir(parents=True, exist_ok=True)
            fd, temp_name = tempfile.mkstemp(prefix=f".{path.name}.", suffix=".tmp", dir=path.parent)
            temp_names.append(temp_name)
            handles.append(os.fdopen(fd, 'w', encoding='utf-8', newline='\n'))
        yield handles
        for handle in handles:
            handle.close()
        for temp_name, path in zip(temp_names, paths):
            os.replace(temp_name, path)
    except BaseException:
        for handle in handles:
            handle.close()
        for temp_name in temp_names:
            if os.path.exists(temp_name):
                os.remove(temp_name)
        raise


def write_lines_atomic(path: Union[str, Path], lines: Sequence[str]) -> None:
    with atomic_outputs([path]) as (handle,):
        for line in lines:
            handle.write(line + "\n")
