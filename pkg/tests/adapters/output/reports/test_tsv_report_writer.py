"""
Unit tests for TsvReportWriter and PlainSentenceWriter
"""
import io

import pandas as pd
import pytest

from src.adapters.output.reports.sentence_writer import PlainSentenceWriter
from src.adapters.output.reports.tsv_report_writer import (
    EXPERIMENT_COLUMNS,
    REJECTION_COLUMNS,
    TsvReportWriter,
)
from src.domain.entities.experiment import Effect, ExperimentReport, RejectionRow, SourceSummary


@pytest.fixture
def writer():
    return TsvReportWriter()


@pytest.fixture
def report():
    return ExperimentReport(
        language='afrikaans', source='LCC-wiki-30K', source_kind='LCC',
        base_pp=2248.49, exp_pp=2241.58, raw_diff=2241.58 - 2248.49,
        relative_diff=-0.0030208, diff_from_median=0.00298591, effect=Effect.STRONGER,
        n_test_ngrams=2287, kept=41276, rejected=8724, pct_rejected=17.448,
    )


class TestTsvReportWriter:
    """Test cases for TsvReportWriter"""

    def test_write_experiments(self, writer, report, tmp_path):
        """Test header and full-precision values"""
        path = str(tmp_path / "experiments.tsv")
        writer.write_experiments([report], path)

        frame = pd.read_csv(path, sep='\t')
        assert list(frame.columns) == EXPERIMENT_COLUMNS
        assert frame.loc[0, 'language'] == 'afrikaans'
        assert frame.loc[0, 'effect'] == 'stronger'
        assert frame.loc[0, 'divisor'] == 'ngrams'
        assert frame.loc[0, 'pct_rejected'] == pytest.approx(17.448)
        assert frame.loc[0, 'raw_diff'] == pytest.approx(-6.91)

    def test_write_rejections_to_stdout(self, writer, capsys):
        row = RejectionRow(language='hausa', source='AC', source_kind='AC-words', kept=1047, rejected=27, pct_rejected=2.5)
        writer.write_rejections([row], '-')
        lines = capsys.readouterr().out.splitlines()
        assert lines[0].split('\t') == REJECTION_COLUMNS
        assert lines[1] == "hausa\tAC\tAC-words\t1047\t27\t2.5"

    def test_missing_value_is_empty_cell(self, writer, report, tmp_path):
        path = tmp_path / "experiments.tsv"
        writer.write_experiments([report.model_copy(update={'diff_from_median': None, 'effect': None})], str(path))
        values = path.read_text(encoding='utf-8').splitlines()[1].split('\t')
        assert values[EXPERIMENT_COLUMNS.index('diff_from_median')] == ''
        assert values[EXPERIMENT_COLUMNS.index('effect')] == ''

    def test_render_rounds_for_display(self, writer, report, tmp_path):
        """Test the aligned table uses round-half-up display precision"""
        path = str(tmp_path / "experiments.tsv")
        writer.write_experiments([report], path)
        table = writer.render(path)
        assert "-6.91" in table
        assert "17.45" in table
        assert "0.00298591" in table
        assert "17.448" not in table

    def test_render_summaries(self, writer, tmp_path):
        path = str(tmp_path / "summary.tsv")
        writer.write_summaries([SourceSummary(group='AC', count=2, average=17.962, median=17.962)], path)
        table = writer.render(path)
        assert "AC" in table
        assert "17.96" in table

    def test_empty_table_has_header(self, writer, tmp_path):
        path = tmp_path / "empty.tsv"
        writer.write_rejections([], str(path))
        assert path.read_text(encoding='utf-8').strip().split('\t') == REJECTION_COLUMNS


class TestPlainSentenceWriter:
    """Test cases for PlainSentenceWriter"""

    def test_write(self):
        stream = io.StringIO()
        assert PlainSentenceWriter().write(["firy izao", "", "amin'ny"], stream) == 3
        assert stream.getvalue() == "firy izao\n\namin'ny\n"
