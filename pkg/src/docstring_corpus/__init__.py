"""Docstring corpus toolchain package."""

from .bleu import BleuReport, corpus_bleu
from .config import BpeConfig, PipelineConfig
from .datasetops import (
    SplitSpec,
    StatsReport,
    assemble_backtranslation,
    compute_stats,
    dedup,
    make_task_pairs,
    split,
)
from .extract import FunctionRecord, ScanReport, extract_functions, scan_tree
from .pyparse import parse_module, tree_equal
from .serialize import (
    CorpusFiles,
    CorpusTriple,
    clean_docstring,
    escape_body,
    read_corpus,
    unescape_body,
    write_corpus,
)
from .subtok import BpeModel, bpe_apply, bpe_learn, bpe_revert, punct_split
from .unparse import unparse_canonical

__all__ = [
    'BleuReport',
    'BpeConfig',
    'BpeModel',
    'CorpusFiles',
    'CorpusTriple',
    'FunctionRecord',
    'PipelineConfig',
    'ScanReport',
    'SplitSpec',
    'StatsReport',
    'assemble_backtranslation',
    'bpe_apply',
    'bpe_learn',
    'bpe_revert',
    'clean_docstring',
    'compute_stats',
    'corpus_bleu',
    'dedup',
    'escape_body',
    'extract_functions',
    'make_task_pairs',
    'parse_module',
    'punct_split',
    'read_corpus',
    'scan_tree',
    'split',
    'tree_equal',
    'unescape_body',
    'unparse_canonical',
    'write_corpus',
]
