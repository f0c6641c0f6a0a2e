"""
Metrics Service
Diferenças de perplexidade, taxa de rejeição e resumos por fonte
"""
import logging
from decimal import ROUND_HALF_UP, Decimal
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from src.domain.entities.corpus import SourceKind
from src.domain.entities.experiment import (
    Effect,
    ExperimentReport,
    RejectionRow,
    RelativeDivisor,
    SourceSummary,
)
from src.domain.exceptions import EmptyCorpusError

logger = logging.getLogger(__name__)

LCC_GENRES = ('mixed', 'news', 'newscrawl', 'web', 'wiki')
GROUP_ORDER = ('UD', 'OSCAR', 'AC') + tuple(f'LCC-{genre}' for genre in LCC_GENRES) + ('LCC-all',)

# Casas decimais de exibição
PERCENT_PLACES = 2
PERPLEXITY_PLACES = 2
RELATIVE_PLACES = 8


def round_half_up(value: float, places: int) -> Decimal:
    """Arredonda a partir da representação decimal mais curta do float"""
    return Decimal(repr(float(value))).quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_UP)


def format_fixed(value: Optional[float], places: int) -> str:
    if value is None:
        return ''
    return f"{round_half_up(value, places):.{places}f}"


def source_groups(source: str, source_kind: str) -> List[str]:
    """Famílias de fonte de uma linha (LCC entra também em LCC-all)"""
    kind = str(source_kind)
    if kind == SourceKind.UD.value:
        return ['UD']
    if kind == SourceKind.OSCAR.value:
        return ['OSCAR']
    if kind in (SourceKind.AC_WORDS.value, SourceKind.AC_BIGRAMS.value, 'AC'):
        return ['AC']
    if kind == SourceKind.LCC.value:
        parts = source.lower().replace('_', '-').split('-')
        genres = [f'LCC-{part}' for part in parts if part in LCC_GENRES]
        return genres[:1] + ['LCC-all']
    return [kind]


class MetricsService:
    """Métricas das tabelas de resultados"""

    def __init__(self, divisor: RelativeDivisor = RelativeDivisor.NGRAMS):
        self.divisor = RelativeDivisor(divisor)
        logger.info(f"MetricsService inicializado (divisor relativo: {self.divisor.value})")

    @staticmethod
    def difference_from_median(relative: float, all_relative_diffs: Sequence[float]) -> float:
        return float(np.median(np.asarray(all_relative_diffs, dtype=float))) - relative

    def compute_metrics(
        self,
        base_pp: float,
        exp_pp: float,
        n_test_ngrams: int,
        all_relative_diffs: Optional[Sequence[float]] = None,
        divisor: Optional[RelativeDivisor] = None,
    ) -> Tuple[float, float, Optional[float]]:
        """
        Args:
            base_pp: Perplexidade do normalizador base
            exp_pp: Perplexidade do normalizador com regras
            n_test_ngrams: N-gramas avaliados no teste
            all_relative_diffs: Diferenças relativas de todos os experimentos da execução
            divisor: ngrams (padrão) ou base

        Returns:
            (raw, relative, from_median); from_median é None sem a lista global
        """
        divisor = RelativeDivisor(divisor or self.divisor)
        raw = exp_pp - base_pp

        if divisor == RelativeDivisor.NGRAMS:
            if n_test_ngrams <= 0:
                raise ValueError("n_test_ngrams deve ser positivo")
            relative = raw / n_test_ngrams
        else:
            relative = raw / base_pp

        from_median = None
        if all_relative_diffs is not None:
            from_median = self.difference_from_median(relative, list(all_relative_diffs) or [relative])
        return raw, relative, from_median

    @staticmethod
    def rejection_stats(kept: int, rejected: int) -> float:
        """Porcentagem de sentenças rejeitadas, em precisão total"""
        total = kept + rejected
        if total <= 0:
            raise EmptyCorpusError("Nenhuma sentença para calcular a taxa de rejeição")
        return 100.0 * rejected / total

    @staticmethod
    def classify(raw: float, from_median: float) -> Effect:
        if raw == 0:
            return Effect.NONE
        return Effect.STRONGER if from_median > 0 else Effect.WEAKER

    def finalize(self, reports: Sequence[ExperimentReport]) -> List[ExperimentReport]:
        """Calcula a diferença da mediana depois que todos os experimentos terminaram"""
        if not reports:
            return []
        relatives = [report.relative_diff for report in reports]
        median = float(np.median(relatives))
        logger.info(f"📊 Mediana das diferenças relativas: {median:.8f} ({len(reports)} experimentos)")

        finalized = []
        for report in reports:
            from_median = median - report.relative_diff
            finalized.append(report.model_copy(update={
                'diff_from_median': from_median,
                'effect': self.classify(report.raw_diff, from_median),
            }))
        return finalized

    @staticmethod
    def summarize_by_source(rows: Sequence[Union[RejectionRow, ExperimentReport]]) -> List[SourceSummary]:
        """Média e mediana da porcentagem de rejeição por família de fonte"""
        groups: Dict[str, List[float]] = {}
        for row in rows:
            for group in source_groups(row.source, row.source_kind):
                groups.setdefault(group, []).append(row.pct_rejected)

        ordered = [g for g in GROUP_ORDER if g in groups] + sorted(g for g in groups if g not in GROUP_ORDER)
        return [
            SourceSummary(
                group=group,
                count=len(groups[group]),
                average=float(np.mean(groups[group])),
                median=float(np.median(groups[group])),
            )
            for group in ordered
        ]
