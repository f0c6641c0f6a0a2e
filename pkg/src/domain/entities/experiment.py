"""
Experiment Entities
Relatórios de experimento e resumos por fonte
"""
from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from src.domain.entities.corpus import CorpusSource, SourceKind


class Scoring(str, Enum):
    BIGRAMS = 'bigrams'
    EVERYGRAMS = 'everygrams'


class RelativeDivisor(str, Enum):
    NGRAMS = 'ngrams'
    BASE = 'base'


class Effect(str, Enum):
    """Marcação da tabela de resultados: negrito, nenhum, itálico"""
    STRONGER = 'stronger'
    NONE = 'none'
    WEAKER = 'weaker'


class ExperimentReport(BaseModel):
    """Resultado de um experimento base x experimento"""
    model_config = ConfigDict(frozen=True)

    language: str
    source: str
    source_kind: str
    base_pp: float
    exp_pp: float
    raw_diff: float
    relative_diff: float
    diff_from_median: Optional[float] = None
    effect: Optional[Effect] = None
    n_test_ngrams: int
    kept: int
    rejected: int
    pct_rejected: float
    divisor: RelativeDivisor = RelativeDivisor.NGRAMS


class RejectionRow(BaseModel):
    """Linha da tabela de sentenças mantidas/rejeitadas"""
    model_config = ConfigDict(frozen=True)

    language: str
    source: str
    source_kind: str
    kept: int
    rejected: int
    pct_rejected: float


class SourceSummary(BaseModel):
    """Média e mediana da porcentagem de rejeição por família de fonte"""
    model_config = ConfigDict(frozen=True)

    group: str
    count: int
    average: float
    median: float


class ExperimentPlanEntry(BaseModel):
    """Uma linha do plano de experimentos (YAML ou flags da CLI)"""
    model_config = ConfigDict(frozen=True)

    language: str
    kind: SourceKind
    path: str
    label: Optional[str] = None
    words_path: Optional[str] = None
    line_limit: Optional[int] = Field(default=None, ge=1)
    direction: Optional[str] = None

    def to_source(self) -> CorpusSource:
        return CorpusSource(
            kind=self.kind,
            path=self.path,
            line_limit=self.line_limit,
            words_path=self.words_path,
            label=self.label,
        )
