"""
Corpus Entities
Fonte de corpus, estatísticas de leitura e sentenças lidas
"""
from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field


class SourceKind(str, Enum):
    """Formatos de corpus suportados"""
    UD = 'UD'
    LCC = 'LCC'
    OSCAR = 'OSCAR'
    AC_WORDS = 'AC-words'
    AC_BIGRAMS = 'AC-bigrams'
    PLAIN = 'plain'


class CorpusSource(BaseModel):
    """Arquivo de corpus a ser lido"""
    model_config = ConfigDict(frozen=True)

    kind: SourceKind
    path: str
    line_limit: Optional[int] = Field(default=None, ge=1)
    words_path: Optional[str] = None  # apenas AC-bigrams
    label: Optional[str] = None  # rótulo do relatório, ex.: LCC-wiki-30K

    @property
    def display_label(self) -> str:
        return self.label or self.kind.value


class ReadStats(BaseModel):
    """Estatísticas de uma leitura"""

    units: int = 0
    skipped: int = 0
    word_types: int = 0
    distinct_scalars: int = 0


class Corpus(BaseModel):
    """Sentenças lidas de uma fonte, na ordem do arquivo"""
    model_config = ConfigDict(frozen=True)

    sentences: List[str]
    stats: ReadStats = Field(default_factory=ReadStats)

    def __len__(self) -> int:
        return len(self.sentences)
