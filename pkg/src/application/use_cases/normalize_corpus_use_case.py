"""
Use Case: Normalize Corpus
Lê uma fonte, normaliza e conta sentenças mantidas/rejeitadas
"""
import logging
from typing import Optional, Tuple

from src.application.ports.corpus_reader_port import CorpusReaderPort
from src.application.ports.profile_repository_port import ProfileRepositoryPort
from src.application.services.language_rules_service import LanguageRulesService
from src.application.services.metrics_service import MetricsService
from src.application.services.normalization_service import NormalizationService
from src.domain.entities.corpus import CorpusSource
from src.domain.entities.experiment import RejectionRow
from src.domain.entities.language_profile import FilterMode, LanguageProfile, NormalizationBatch

logger = logging.getLogger(__name__)


class NormalizeCorpusUseCase:
    """Normalização de uma fonte de corpus com um perfil de idioma"""

    def __init__(
        self,
        reader: CorpusReaderPort,
        profiles: ProfileRepositoryPort,
        rules: LanguageRulesService,
        metrics: MetricsService,
    ):
        self.reader = reader
        self.profiles = profiles
        self.rules = rules
        self.metrics = metrics
        logger.info("NormalizeCorpusUseCase inicializado")

    def profile_for(self, language: str, direction: Optional[str] = None) -> LanguageProfile:
        return self.profiles.get(language).with_direction(direction)

    def normalizer_for(self, profile: LanguageProfile) -> NormalizationService:
        return NormalizationService(profile, self.rules.build_cascade(profile))

    def execute(
        self,
        source: CorpusSource,
        profile: LanguageProfile,
        mode: FilterMode = FilterMode.SENTENCE,
        apply_rules: bool = True,
    ) -> Tuple[NormalizationBatch, RejectionRow]:
        """
        Args:
            source: Fonte a ser lida
            profile: Perfil do idioma
            mode: Filtragem por sentença ou por token
            apply_rules: False executa o normalizador base

        Returns:
            (lote normalizado, linha da tabela de rejeição)
        """
        logger.info(f"=== Normalizando {source.display_label} ({profile.language}) ===")
        corpus = self.reader.read(source)
        batch = self.normalizer_for(profile).normalize_lines(corpus.sentences, mode, apply_rules)

        row = RejectionRow(
            language=profile.language,
            source=source.display_label,
            source_kind=source.kind.value,
            kept=batch.kept_count,
            rejected=batch.rejected_count,
            pct_rejected=self.metrics.rejection_stats(batch.kept_count, batch.rejected_count),
        )
        logger.info(f"✅ {source.display_label}: {row.pct_rejected:.2f}% rejeitadas")
        return batch, row
