"""
Use Case: Run Experiment
Compara o normalizador base com o normalizador com regras do idioma
"""
import logging
import threading
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence

from src.application.ports.corpus_reader_port import CorpusReaderPort
from src.application.ports.profile_repository_port import ProfileRepositoryPort
from src.application.services.language_model_service import LanguageModelService
from src.application.services.language_rules_service import LanguageRulesService
from src.application.services.metrics_service import MetricsService
from src.application.services.normalization_service import NormalizationService
from src.domain.entities.corpus import CorpusSource
from src.domain.entities.experiment import ExperimentPlanEntry, ExperimentReport, Scoring
from src.domain.entities.language_profile import FilterMode, LanguageProfile
from src.domain.entities.ngram_model import SplitSpec
from src.domain.exceptions import EmptyAfterFilteringError

logger = logging.getLogger(__name__)


class RunExperimentUseCase:
    """Experimentos de perplexidade base x experimento"""

    def __init__(
        self,
        reader: CorpusReaderPort,
        profiles: ProfileRepositoryPort,
        rules: LanguageRulesService,
        language_model: LanguageModelService,
        metrics: MetricsService,
        max_workers: int = 1,
    ):
        """
        Args:
            reader: Leitor de corpus
            profiles: Repositório de perfis de idioma
            rules: Serviço de cascatas de regras
            language_model: Serviço do modelo de n-gramas
            metrics: Serviço de métricas
            max_workers: Experimentos executados ao mesmo tempo
        """
        self.reader = reader
        self.profiles = profiles
        self.rules = rules
        self.language_model = language_model
        self.metrics = metrics
        self.max_workers = max_workers
        logger.info("RunExperimentUseCase inicializado")

    def run_experiment(
        self,
        source: CorpusSource,
        profile: LanguageProfile,
        mode: FilterMode = FilterMode.SENTENCE,
        spec: SplitSpec = SplitSpec(),
        scoring: Scoring = Scoring.EVERYGRAMS,
    ) -> ExperimentReport:
        """
        Normaliza duas vezes, particiona com a mesma semente e avalia os dois modelos

        Returns:
            ExperimentReport sem a diferença da mediana (calculada em finalize)

        Raises:
            EmptyAfterFilteringError: nenhuma sentença sobreviveu à filtragem
        """
        logger.info(f"=== [Thread-{threading.current_thread().name}] {profile.language} / {source.display_label} ===")
        corpus = self.reader.read(source)
        normalizer = NormalizationService(profile, self.rules.build_cascade(profile))

        base = normalizer.normalize_lines(corpus.sentences, mode, apply_rules=False)
        experiment = normalizer.normalize_lines(corpus.sentences, mode, apply_rules=True)

        if not experiment.kept:
            raise EmptyAfterFilteringError(
                f"Nenhuma sentença restou em {source.display_label} ({experiment.rejected_count} rejeitadas)"
            )

        base_train, base_test = self.language_model.split(base.kept, spec)
        exp_train, exp_test = self.language_model.split(experiment.kept, spec)

        base_report = self.language_model.perplexity(self.language_model.fit(base_train), base_test, scoring)
        exp_report = self.language_model.perplexity(self.language_model.fit(exp_train), exp_test, scoring)

        raw, relative, _ = self.metrics.compute_metrics(
            base_report.perplexity, exp_report.perplexity, exp_report.n_ngrams
        )

        report = ExperimentReport(
            language=profile.language,
            source=source.display_label,
            source_kind=source.kind.value,
            base_pp=base_report.perplexity,
            exp_pp=exp_report.perplexity,
            raw_diff=raw,
            relative_diff=relative,
            n_test_ngrams=exp_report.n_ngrams,
            kept=experiment.kept_count,
            rejected=experiment.rejected_count,
            pct_rejected=self.metrics.rejection_stats(experiment.kept_count, experiment.rejected_count),
            divisor=self.metrics.divisor,
        )
        logger.info(
            f"✅ {profile.language} / {source.display_label}: base {report.base_pp:.2f}, "
            f"experimento {report.exp_pp:.2f}, diferença {report.raw_diff:.2f}"
        )
        return report

    def _run_entry(
        self,
        entry: ExperimentPlanEntry,
        mode: FilterMode,
        spec: SplitSpec,
        scoring: Scoring,
    ) -> Optional[ExperimentReport]:
        try:
            profile = self.profiles.get(entry.language).with_direction(entry.direction)
            return self.run_experiment(entry.to_source(), profile, mode, spec, scoring)
        except Exception as e:
            logger.error(f"❌ Experimento {entry.language} / {entry.label or entry.path} falhou: {e}", exc_info=True)
            return None

    def execute(
        self,
        plan: Sequence[ExperimentPlanEntry],
        mode: FilterMode = FilterMode.SENTENCE,
        spec: SplitSpec = SplitSpec(),
        scoring: Scoring = Scoring.EVERYGRAMS,
    ) -> List[ExperimentReport]:
        """
        Executa o plano em paralelo; experimentos com erro ficam fora do relatório

        Returns:
            Relatórios na ordem do plano, com diferença da mediana e efeito
        """
        logger.info(f"🚀 Executando {len(plan)} experimento(s) com {self.max_workers} worker(s)")

        with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            futures = [executor.submit(self._run_entry, entry, mode, spec, scoring) for entry in plan]
            results = [future.result() for future in futures]

        reports = [report for report in results if report is not None]
        failed = len(results) - len(reports)
        if failed:
            logger.warning(f"⚠️ {failed} experimento(s) falharam e foram omitidos")

        return self.metrics.finalize(reports)
