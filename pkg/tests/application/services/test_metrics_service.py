"""
Unit tests for MetricsService
"""
import pytest

from src.application.services.metrics_service import (
    MetricsService,
    format_fixed,
    round_half_up,
    source_groups,
)
from src.domain.entities.experiment import Effect, ExperimentReport, RejectionRow, RelativeDivisor
from src.domain.exceptions import EmptyCorpusError


def _report(relative, raw=1.0, **overrides):
    fields = dict(
        language='hausa', source='AC', source_kind='AC-words',
        base_pp=100.0, exp_pp=100.0 + raw, raw_diff=raw, relative_diff=relative,
        n_test_ngrams=10, kept=9, rejected=1, pct_rejected=10.0,
    )
    fields.update(overrides)
    return ExperimentReport(**fields)


def _row(pct, source='UD', source_kind='UD'):
    return RejectionRow(language='x', source=source, source_kind=source_kind, kept=0, rejected=0, pct_rejected=pct)


class TestRounding:
    """Test cases for the display helpers"""

    def test_round_half_up(self):
        assert str(round_half_up(2.345, 2)) == "2.35"
        assert str(round_half_up(2.5, 0)) == "3"

    def test_format_fixed(self):
        assert format_fixed(17.448, 2) == "17.45"
        assert format_fixed(0.0, 2) == "0.00"
        assert format_fixed(None, 2) == ""


class TestMetricsService:
    """Test cases for MetricsService"""

    @pytest.mark.parametrize("kept, rejected, expected", [
        (1047, 27, "2.51"),
        (8, 171, "95.53"),
        (41276, 8724, "17.45"),
        (12, 0, "0.00"),
    ])
    def test_rejection_stats(self, metrics, kept, rejected, expected):
        assert format_fixed(metrics.rejection_stats(kept, rejected), 2) == expected

    def test_rejection_stats_empty(self, metrics):
        with pytest.raises(EmptyCorpusError):
            metrics.rejection_stats(0, 0)

    def test_raw_difference(self, metrics):
        raw, relative, from_median = metrics.compute_metrics(2248.49, 2241.58, 1000)
        assert format_fixed(raw, 2) == "-6.91"
        assert relative == pytest.approx(raw / 1000)
        assert from_median is None

    def test_difference_from_median(self, metrics):
        others = [-0.00302080, -0.00003489, 0.00010000]
        from_median = metrics.difference_from_median(-0.00302080, others)
        assert format_fixed(from_median, 8) == "0.00298591"

    def test_compute_metrics_with_run_list(self, metrics):
        _, relative, from_median = metrics.compute_metrics(10.0, 8.0, 4, [-0.5, 0.0, 1.0])
        assert relative == -0.5
        assert from_median == 0.5

    def test_base_divisor(self):
        service = MetricsService(RelativeDivisor.BASE)
        _, relative, _ = service.compute_metrics(200.0, 150.0, 7)
        assert relative == pytest.approx(-0.25)

    def test_divisor_override(self, metrics):
        _, relative, _ = metrics.compute_metrics(200.0, 150.0, 7, divisor='base')
        assert relative == pytest.approx(-0.25)

    def test_ngram_divisor_requires_ngrams(self, metrics):
        with pytest.raises(ValueError):
            metrics.compute_metrics(1.0, 2.0, 0)

    @pytest.mark.parametrize("raw, from_median, effect", [
        (0.0, 5.0, Effect.NONE),
        (-3.0, 0.2, Effect.STRONGER),
        (-3.0, -0.2, Effect.WEAKER),
    ])
    def test_classify(self, metrics, raw, from_median, effect):
        assert metrics.classify(raw, from_median) == effect

    def test_finalize(self, metrics):
        reports = [_report(-0.3, language='a'), _report(-0.1, language='b'), _report(0.2, language='c')]
        finalized = metrics.finalize(reports)
        assert [r.diff_from_median for r in finalized] == pytest.approx([0.2, 0.0, -0.3])
        assert [r.effect for r in finalized] == [Effect.STRONGER, Effect.WEAKER, Effect.WEAKER]
        assert reports[0].diff_from_median is None

    def test_finalize_empty(self, metrics):
        assert metrics.finalize([]) == []

    # ---- resumos ----

    def test_summary_ac(self, metrics):
        rows = [
            _row(metrics.rejection_stats(41276, 8724), 'AC', 'AC-words'),
            _row(metrics.rejection_stats(40762, 9238), 'AC', 'AC-bigrams'),
        ]
        [summary] = metrics.summarize_by_source(rows)
        assert summary.group == 'AC'
        assert summary.count == 2
        assert format_fixed(summary.average, 2) == "17.96"
        assert format_fixed(summary.median, 2) == "17.96"

    def test_summary_ud(self, metrics):
        [summary] = metrics.summarize_by_source([_row(2.51), _row(5.02)])
        assert summary.average == pytest.approx(3.765)

    def test_summary_group_order(self, metrics):
        rows = [
            _row(1.0, 'LCC-wiki-30K', 'LCC'),
            _row(2.0, 'OSCAR', 'OSCAR'),
            _row(3.0, 'UD', 'UD'),
            _row(4.0, 'LCC-news-10K', 'LCC'),
        ]
        groups = [s.group for s in metrics.summarize_by_source(rows)]
        assert groups == ['UD', 'OSCAR', 'LCC-news', 'LCC-wiki', 'LCC-all']

    def test_summary_accepts_reports(self, metrics):
        [summary] = metrics.summarize_by_source([_report(0.0)])
        assert summary.group == 'AC'
        assert summary.average == 10.0

    @pytest.mark.parametrize("source, kind, groups", [
        ('LCC-wiki-30K', 'LCC', ['LCC-wiki', 'LCC-all']),
        ('LCC_mixed_2016', 'LCC', ['LCC-mixed', 'LCC-all']),
        ('lcc-2019', 'LCC', ['LCC-all']),
        ('UD', 'UD', ['UD']),
        ('AC', 'AC-bigrams', ['AC']),
        ('notes', 'plain', ['plain']),
    ])
    def test_source_groups(self, source, kind, groups):
        assert source_groups(source, kind) == groups
