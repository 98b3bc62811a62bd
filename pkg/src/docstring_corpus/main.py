"""Main entry point for the docstring corpus toolchain."""

import argparse
import logging
import sys
from typing import List, Optional

from .commands import PipelineCommands
from .config import LOG_LEVELS, PipelineConfig
from .errors import CorpusToolError
from .registry import FunctionRegistry
from .utils import OutputManager

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    """Global options plus one sub-command per ``cmd_*`` method."""
    parser = argparse.ArgumentParser(
        prog="docstring_corpus",
        description="Build and evaluate a parallel corpus of Python functions and their docstrings.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--config", help="dotenv-format file with CORPUS_* settings")
    parser.add_argument("--log-level", type=str.upper, choices=LOG_LEVELS, help="logging verbosity")
    parser.add_argument("--run-log", help="also append every report to this file")
    commands = PipelineCommands.__dict__
    functions = {name: commands[name] for name in sorted(commands) if name.startswith("cmd_")}
    return FunctionRegistry.build_parser(functions, parser)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    options = vars(args)
    config_path = options.pop("config")
    log_level = options.pop("log_level")
    run_log = options.pop("run_log")
    name = options.pop("command")
    options.pop("command_name")

    logging.basicConfig(level=log_level or "INFO", format="%(levelname)s: %(message)s")
    try:
        config = PipelineConfig.from_file(config_path) if config_path else PipelineConfig()
        config = config.with_overrides(log_level=log_level)
        logging.getLogger().setLevel(config.log_level.upper())
        with OutputManager(run_log) as output:
            commands = PipelineCommands(config, output)
            commands.get_command_mapping()[name](**options)
    except (CorpusToolError, OSError) as exc:
        logger.error("%s", exc)
        return EXIT_FAILURE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
