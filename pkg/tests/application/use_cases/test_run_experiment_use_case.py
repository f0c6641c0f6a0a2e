"""
Unit tests for RunExperimentUseCase
"""
import pytest

from src.application.services.metrics_service import MetricsService
from src.application.use_cases.run_experiment_use_case import RunExperimentUseCase
from src.domain.entities.corpus import Corpus, CorpusSource, SourceKind
from src.domain.entities.experiment import Effect, ExperimentPlanEntry, RelativeDivisor, Scoring
from src.domain.entities.ngram_model import SplitSpec
from src.domain.exceptions import EmptyAfterFilteringError

SUBJECTS = ["ek", "jy", "hy", "sy", "ons"]
OBJECTS = ["dit", "die boek", "die huis", "hom"]
VERBS = ["gesien", "gekoop", "gemaak", "gehoor"]


def afrikaans_corpus(size=500, contracted=True):
    """Sentenças 'sujeito het/'t objeto verbo', alternando a forma do auxiliar pelo índice"""
    sentences = []
    for i in range(size):
        auxiliary = "'t" if contracted and i % 2 else "het"
        sentences.append(f"{SUBJECTS[i % 5]} {auxiliary} {OBJECTS[(i // 5) % 4]} {VERBS[(i // 20) % 4]}.")
    return sentences


class TestRunExperimentUseCase:
    """Test cases for RunExperimentUseCase"""

    @pytest.fixture
    def use_case(self, mock_reader, profiles, rules_service, language_model, metrics):
        return RunExperimentUseCase(
            reader=mock_reader,
            profiles=profiles,
            rules=rules_service,
            language_model=language_model,
            metrics=metrics,
            max_workers=2,
        )

    @pytest.fixture
    def source(self):
        return CorpusSource(kind=SourceKind.PLAIN, path="af.txt")

    def test_use_case_initialization(self, use_case):
        """Test use case initialization"""
        assert use_case.reader is not None
        assert use_case.language_model is not None
        assert use_case.max_workers == 2

    def test_contractions_lower_perplexity(self, use_case, mock_reader, profiles, source):
        """Test expanding 't to het makes the experiment model less perplexed"""
        mock_reader.read.return_value = Corpus(sentences=afrikaans_corpus())
        report = use_case.run_experiment(source, profiles.get('afrikaans'), spec=SplitSpec(seed=0))

        assert report.exp_pp < report.base_pp
        assert report.raw_diff < 0
        assert report.relative_diff == pytest.approx(report.raw_diff / report.n_test_ngrams)
        assert report.kept == 500
        assert report.rejected == 0
        assert report.diff_from_median is None

    def test_no_contractions_same_perplexity(self, use_case, mock_reader, profiles, source):
        mock_reader.read.return_value = Corpus(sentences=afrikaans_corpus(contracted=False))
        report = use_case.run_experiment(source, profiles.get('afrikaans'))
        assert report.exp_pp == report.base_pp
        assert report.raw_diff == 0

    def test_language_without_rules(self, use_case, mock_reader, profiles, source):
        mock_reader.read.return_value = Corpus(sentences=[f"wax {i} ayaa jira" for i in range(40)])
        report = use_case.run_experiment(source, profiles.get('somali'), scoring=Scoring.BIGRAMS)
        assert report.raw_diff == 0

    def test_everything_rejected(self, use_case, mock_reader, profiles, source):
        mock_reader.read.return_value = Corpus(sentences=["собака"] * 10)
        with pytest.raises(EmptyAfterFilteringError):
            use_case.run_experiment(source, profiles.get('afrikaans'))

    def test_report_carries_divisor(self, mock_reader, profiles, rules_service, language_model, source):
        use_case = RunExperimentUseCase(
            mock_reader, profiles, rules_service, language_model, MetricsService(RelativeDivisor.BASE)
        )
        mock_reader.read.return_value = Corpus(sentences=afrikaans_corpus(100))
        report = use_case.run_experiment(source, profiles.get('afrikaans'))
        assert report.divisor == RelativeDivisor.BASE
        assert report.relative_diff == pytest.approx(report.raw_diff / report.base_pp)

    def test_execute_plan(self, use_case, mock_reader):
        """Test failed entries are omitted and the rest are finalized in plan order"""
        corpora = {
            "af.txt": afrikaans_corpus(),
            "so.txt": [f"wax {i} ayaa jira" for i in range(40)],
            "ru.txt": ["собака"] * 10,
        }
        mock_reader.read.side_effect = lambda source: Corpus(sentences=corpora[source.path])
        plan = [
            ExperimentPlanEntry(language='afrikaans', kind=SourceKind.PLAIN, path="af.txt"),
            ExperimentPlanEntry(language='klingon', kind=SourceKind.PLAIN, path="af.txt"),
            ExperimentPlanEntry(language='somali', kind=SourceKind.PLAIN, path="so.txt"),
            ExperimentPlanEntry(language='zulu', kind=SourceKind.PLAIN, path="ru.txt"),
        ]

        reports = use_case.execute(plan)

        assert [r.language for r in reports] == ['afrikaans', 'somali']
        assert all(r.diff_from_median is not None for r in reports)
        median = (reports[0].relative_diff + reports[1].relative_diff) / 2
        assert reports[0].diff_from_median == pytest.approx(median - reports[0].relative_diff)
        assert reports[0].effect == Effect.STRONGER
        assert reports[1].effect == Effect.NONE

    def test_execute_with_direction(self, use_case, mock_reader):
        mock_reader.read.return_value = Corpus(sentences=["\u01b4a ya"] * 10)
        plan = [ExperimentPlanEntry(language='hausa', kind=SourceKind.PLAIN, path="ha.txt", direction='nigeria')]
        [report] = use_case.execute(plan)
        assert report.language == 'hausa'

    def test_execute_empty_plan(self, use_case):
        assert use_case.execute([]) == []
