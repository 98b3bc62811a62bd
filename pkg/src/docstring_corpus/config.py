"""Configuration management for the docstring corpus toolchain."""

from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Any, Callable, Dict, Optional, Tuple, Union

from dotenv import dotenv_values

from .datasetops import SplitSpec
from .errors import ConfigError
from .serialize import MARKERS

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


@dataclass(frozen=True)
class BpeConfig:
    """Settings for subtokenization."""
    num_merges: int = 89500
    protected: Tuple[str, ...] = MARKERS
    punct_split: bool = True


@dataclass(frozen=True)
class PipelineConfig:
    """Complete configuration for one toolchain run."""
    input_root: Optional[str] = None
    output_dir: Optional[str] = None
    metadata_prefix: str = "github"
    layout_levels: int = 2
    workers: int = 1
    log_level: str = "INFO"
    split: SplitSpec = field(default_factory=SplitSpec)
    bpe: BpeConfig = field(default_factory=BpeConfig)

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "PipelineConfig":
        """Read ``CORPUS_*`` keys from a dotenv-format file."""
        path = Path(path)
        if not path.is_file():
            raise ConfigError(f"config file {path} does not exist")
        values = {key: value for key, value in dotenv_values(path).items() if value is not None}
        unknown = sorted(key for key in values if key not in _KEYS)
        if unknown:
            raise ConfigError(f"{path}: unknown keys {', '.join(unknown)}")
        flags = {}
        for key, value in values.items():
            name, parse = _KEYS[key]
            try:
                flags[name] = parse(value)
            except ValueError as exc:
                raise ConfigError(f"{path}: {key}={value!r} is invalid: {exc}") from exc
        return cls().with_overrides(**flags)

    def with_overrides(self, **flags: Any) -> "PipelineConfig":
        """Copy with the given flags applied; ``None`` means not given."""
        top, split, bpe = {}, {}, {}
        for name, value in flags.items():
            if value is None:
                continue
            if name in _SPLIT_FLAGS:
                split[_SPLIT_FLAGS[name]] = value
            elif name in _BPE_FLAGS:
                bpe[_BPE_FLAGS[name]] = tuple(value) if name == "protected" else value
            elif name in _TOP_FLAGS:
                top[name] = value
            else:
                raise ConfigError(f"unknown setting {name}")
        config = replace(
            self,
            split=replace(self.split, **split),
            bpe=replace(self.bpe, **bpe),
            **top,
        )
        config.validate()
        return config

    def validate(self) -> None:
        if self.layout_levels not in (1, 2):
            raise ConfigError(f"layout_levels must be 1 or 2, got {self.layout_levels}")
        if self.workers < 1:
            raise ConfigError(f"workers must be at least 1, got {self.workers}")
        if self.log_level.upper() not in LOG_LEVELS:
            raise ConfigError(f"log_level must be one of {', '.join(LOG_LEVELS)}")
        if self.split.valid_size < 0 or self.split.test_size < 0:
            raise ConfigError("split sizes must not be negative")
        if self.bpe.num_merges < 0:
            raise ConfigError("num_merges must not be negative")
        if self.input_root is not None and not Path(self.input_root).is_dir():
            raise ConfigError(f"input root {self.input_root} is not a directory")

    def describe(self) -> Dict[str, Any]:
        """Flat view of every setting, echoed at the start of each command."""
        values: Dict[str, Any] = {}
        for item in fields(self):
            value = getattr(self, item.name)
            if item.name in ("split", "bpe"):
                for sub in fields(value):
                    sub_value = getattr(value, sub.name)
                    if isinstance(sub_value, tuple):
                        sub_value = ",".join(sub_value)
                    values[f"{item.name}.{sub.name}"] = sub_value
            else:
                values[item.name] = value
        return values


def _parse_bool(value: str) -> bool:
    lowered = value.strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise ValueError("expected true or false")


def _parse_list(value: str) -> Tuple[str, ...]:
    return tuple(item.strip() for item in value.split(",") if item.strip())


_KEYS: Dict[str, Tuple[str, Callable[[str], Any]]] = {
    "CORPUS_INPUT_ROOT": ("input_root", str),
    "CORPUS_OUTPUT_DIR": ("output_dir", str),
    "CORPUS_METADATA_PREFIX": ("metadata_prefix", str),
    "CORPUS_LAYOUT_LEVELS": ("layout_levels", int),
    "CORPUS_WORKERS": ("workers", int),
    "CORPUS_LOG_LEVEL": ("log_level", str.upper),
    "CORPUS_VALID_SIZE": ("valid_size", int),
    "CORPUS_TEST_SIZE": ("test_size", int),
    "CORPUS_SEED": ("seed", int),
    "CORPUS_BPE_MERGES": ("num_merges", int),
    "CORPUS_BPE_PROTECTED": ("protected", _parse_list),
    "CORPUS_PUNCT_SPLIT": ("punct_split", _parse_bool),
}

_TOP_FLAGS = {"input_root", "output_dir", "metadata_prefix", "layout_levels", "workers", "log_level"}
_SPLIT_FLAGS = {"valid_size": "valid_size", "test_size": "test_size", "seed": "seed"}
_BPE_FLAGS = {"num_merges": "num_merges", "protected": "protected", "punct_split": "punct_split"}
