"""Pipeline commands exposed on the command line."""

import logging
from pathlib import Path
from typing import Any, Callable, Dict, Optional

from . import bleu, datasetops, subtok
from .config import PipelineConfig
from .errors import ConfigError, RoundtripError
from .extract import scan_tree
from .serialize import CorpusFiles, read_corpus, read_lines, roundtrip_problem, write_corpus, write_triples
from .utils import OutputManager, write_lines_atomic

logger = logging.getLogger(__name__)


class PipelineCommands:
    """Each ``cmd_*`` method is one sub-command; its docstring documents the options."""

    def __init__(self, config: PipelineConfig, output: OutputManager):
        self.config = config
        self.output = output

    def _resolve(self, **flags: Any) -> PipelineConfig:
        config = self.config.with_overrides(**flags)
        logger.info("Resolved config: %s", config.describe())
        self.output.write({'type': 'config', 'values': config.describe()})
        return config

    def _status(self, message: str) -> None:
        self.output.write({'type': 'status', 'message': message})

    def _report(self, title: str, values: Dict[str, Any]) -> None:
        self.output.write({'type': 'report', 'title': title, 'values': values})

    def cmd_extract(
        self,
        root: Optional[str] = None,
        out: Optional[str] = None,
        layout_levels: Optional[int] = None,
        workers: Optional[int] = None,
        metadata_prefix: Optional[str] = None,
        progress: bool = True,
    ) -> Dict:
        """Extract the parallel and code-only corpora from a tree of repositories.
        :param root: Directory holding the repositories (defaults to the configured input root)
        :param out: Output directory for parallel.* and code_only.* files
        :param layout_levels: Directory levels naming a repository: 2 for owner/repo, 1 for repo
        :enum layout_levels: 1,2
        :param workers: Number of worker processes for parsing
        :param metadata_prefix: Label that starts every metadata line
        :param progress: Show a progress bar while scanning
        """
        config = self._resolve(
            input_root=root,
            output_dir=out,
            layout_levels=layout_levels,
            workers=workers,
            metadata_prefix=metadata_prefix,
        )
        if config.input_root is None or config.output_dir is None:
            raise ConfigError("extract needs an input root and an output directory")
        self._status(f"Scanning {config.input_root}")

        result = scan_tree(config.input_root, config.layout_levels, config.workers, show_progress=progress)
        out_dir = Path(config.output_dir)
        parallel = write_corpus(result.parallel, CorpusFiles.at(out_dir / "parallel"), config.metadata_prefix)
        code_only = write_corpus(
            result.code_only, CorpusFiles.at(out_dir / "code_only", with_docstrings=False), config.metadata_prefix
        )

        summary = {
            'files_seen': result.report.files_seen,
            'parse_failures': result.report.parse_failures,
            'unreadable': result.report.unreadable,
            'functions_total': result.report.functions_total,
            'parallel': parallel.written,
            'code_only': code_only.written,
            'marker_collisions': parallel.marker_collisions + code_only.marker_collisions,
        }
        self._report('Scan report', summary)
        return summary

    def cmd_dedup(self, corpus: str, out: str) -> Dict:
        """Remove exact duplicate examples, keeping the first occurrence.
        :param corpus: Prefix of the input corpus files
        :param out: Prefix for the deduplicated corpus
        """
        self._resolve()
        files = CorpusFiles.detect(corpus)
        triples = read_corpus(files)
        survivors = datasetops.dedup(triples)
        write_triples(survivors, CorpusFiles.at(out, files.has_docstrings))
        summary = {'examples': len(triples), 'kept': len(survivors), 'removed': len(triples) - len(survivors)}
        self._report('Dedup', summary)
        return summary

    def cmd_split(
        self,
        corpus: str,
        out: str,
        valid_size: Optional[int] = None,
        test_size: Optional[int] = None,
        seed: Optional[int] = None,
    ) -> Dict:
        """Shuffle a corpus with a seed and split it into train, valid and test.
        :param corpus: Prefix of the input corpus files
        :param out: Prefix for <out>.train, <out>.valid and <out>.test
        :param valid_size: Number of validation examples
        :param test_size: Number of test examples
        :param seed: Seed of the shuffle
        """
        config = self._resolve(valid_size=valid_size, test_size=test_size, seed=seed)
        files = CorpusFiles.detect(corpus)
        triples = read_corpus(files)
        config.split.check(len(triples))
        result = datasetops.split(triples, config.split)
        sizes = datasetops.write_split(result, out, files.has_docstrings)
        summary = {**sizes, 'seed': config.split.seed}
        self._report('Split', summary)
        return summary

    def cmd_stats(self, corpus: str, style: str = "both") -> Dict:
        """Print example, token and line-of-code statistics of a corpus.
        :param corpus: Prefix of the corpus files
        :param style: Output layout
        :enum style: table,keyvalue,both
        """
        self._resolve()
        report = datasetops.compute_stats(CorpusFiles.detect(corpus))
        if style in ("table", "both"):
            self.output.write({'type': 'table', 'title': f'Statistics for {corpus}',
                               'content': datasetops.format_stats_table(report)})
        if style in ("keyvalue", "both"):
            self.output.write({'type': 'default', 'content': datasetops.format_stats_keyvalues(report)})
        return {'examples': report.examples, 'consistent': datasetops.check_stats_consistency(report)}

    def cmd_learn_bpe(
        self,
        corpus: str,
        model: str,
        num_merges: Optional[int] = None,
        punct_split: Optional[bool] = None,
    ) -> Dict:
        """Learn a joint BPE model over declarations, bodies and docstrings.
        :param corpus: Prefix of the corpus files to learn from
        :param model: Path of the model file to write
        :param num_merges: Number of merge operations to learn
        :param punct_split: Split punctuation off identifiers before learning
        """
        config = self._resolve(num_merges=num_merges, punct_split=punct_split)
        learned = subtok.learn_from_corpus(
            CorpusFiles.detect(corpus), config.bpe.num_merges, config.bpe.punct_split, config.bpe.protected
        )
        learned.save(model)
        summary = {'merges': len(learned.merges), 'requested': config.bpe.num_merges, 'model': model}
        self._report('BPE model', summary)
        return summary

    def cmd_apply_bpe(self, model: str, corpus: str, out: str, punct_split: Optional[bool] = None) -> Dict:
        """Subtokenize every text field of a corpus with a BPE model.
        :param model: Path of the model file
        :param corpus: Prefix of the input corpus files
        :param out: Prefix for the subtokenized corpus
        :param punct_split: Split punctuation off identifiers before applying
        """
        config = self._resolve(punct_split=punct_split)
        loaded = subtok.BpeModel.load(model)
        report = subtok.apply_to_corpus(
            loaded, CorpusFiles.detect(corpus), out, config.bpe.punct_split, config.bpe.protected
        )
        summary = {'written': report.written, 'marker_collisions': report.marker_collisions}
        self._report('BPE applied', summary)
        return summary

    def cmd_revert_bpe(self, source: str, out: str) -> Dict:
        """Join subtokens back into tokens, line by line.
        :param source: Subtokenized text file
        :param out: Path of the reverted text file
        """
        self._resolve()
        reverted = subtok.revert_lines(read_lines(source))
        write_lines_atomic(out, reverted)
        summary = {'lines': len(reverted)}
        self._report('BPE reverted', summary)
        return summary

    def cmd_bleu(self, candidates: str, references: str) -> Dict:
        """Score candidate lines against reference lines with corpus BLEU.
        :param candidates: File of tokenized candidate lines
        :param references: File of tokenized reference lines, aligned with the candidates
        """
        self._resolve()
        report = bleu.score_files(candidates, references)
        self.output.write({'type': 'default', 'content': bleu.format_report(report)})
        return {'bleu': round(report.bleu, 2)}

    def cmd_assemble_bt(self, parallel: str, code_only: str, synthetic: str, out: str) -> Dict:
        """Append code-only examples with synthetic docstrings to a parallel corpus.
        :param parallel: Prefix of the parallel training corpus
        :param code_only: Prefix of the code-only corpus
        :param synthetic: File with one synthetic docstring per code-only example
        :param out: Prefix for the combined corpus and its .provenance file
        """
        self._resolve()
        report = datasetops.assemble_backtranslation(
            CorpusFiles.at(parallel), CorpusFiles.at(code_only, with_docstrings=False), synthetic, out
        )
        summary = {'parallel': report.parallel, 'synthetic': report.synthetic, 'combined': report.combined}
        self._report('Backtranslation corpus', summary)
        return summary

    def cmd_prepare_task(self, corpus: str, out: str, direction: str = "documentation") -> Dict:
        """Write source and target files for one translation direction.
        :param corpus: Prefix of the corpus files
        :param out: Prefix for the .src and .tgt files
        :param direction: documentation reads code and writes docstrings, generation the reverse
        :enum direction: documentation,generation
        """
        self._resolve()
        report = datasetops.make_task_pairs(CorpusFiles.detect(corpus), direction, out)
        summary = {'direction': report.direction, 'examples': report.examples, 'targets': report.with_targets}
        self._report('Task pairs', summary)
        return summary

    def cmd_roundtrip_check(self, corpus: str) -> Dict:
        """Check that every example reassembles, reparses and unparses to itself.
        :param corpus: Prefix of the corpus files
        """
        self._resolve()
        triples = read_corpus(CorpusFiles.detect(corpus))
        failures = []
        for triple in triples:
            problem = roundtrip_problem(triple)
            if problem is not None:
                failures.append(triple.metadata_line)
                self.output.write({'type': 'failure', 'message': f"{triple.metadata_line}: {problem}"})
        summary = {'examples': len(triples), 'failures': len(failures)}
        self._report('Round trip', summary)
        if failures:
            raise RoundtripError(failures)
        return summary

    def get_command_mapping(self) -> Dict[str, Callable]:
        """Get mapping of command names to their implementations."""
        return {
            'cmd_extract': self.cmd_extract,
            'cmd_dedup': self.cmd_dedup,
            'cmd_split': self.cmd_split,
            'cmd_stats': self.cmd_stats,
            'cmd_learn_bpe': self.cmd_learn_bpe,
            'cmd_apply_bpe': self.cmd_apply_bpe,
            'cmd_revert_bpe': self.cmd_revert_bpe,
            'cmd_bleu': self.cmd_bleu,
            'cmd_assemble_bt': self.cmd_assemble_bt,
            'cmd_prepare_task': self.cmd_prepare_task,
            'cmd_roundtrip_check': self.cmd_roundtrip_check,
        }
