"""
N-gram Model Entity
Contagens de unigramas e bigramas, partição treino/teste e relatório de perplexidade
"""
from typing import Dict, FrozenSet, Tuple

from pydantic import BaseModel, ConfigDict, Field

START_TOKEN = '<s>'
END_TOKEN = '</s>'
UNK_TOKEN = '<UNK>'
RESERVED_TOKENS = (START_TOKEN, END_TOKEN, UNK_TOKEN)


class NgramModel(BaseModel):
    """Modelo de bigramas com suavização de Laplace"""
    model_config = ConfigDict(frozen=True)

    vocabulary: FrozenSet[str]
    unigram_counts: Dict[str, int]
    bigram_counts: Dict[Tuple[str, str], int]
    history_counts: Dict[str, int]
    n_train: int = Field(ge=0)

    @property
    def vocab_size(self) -> int:
        return len(self.vocabulary)

    def lookup(self, token: str) -> str:
        """Mapeia tokens fora do vocabulário para <UNK>"""
        return token if token in self.vocabulary else UNK_TOKEN

    def count(self, token: str) -> int:
        return self.unigram_counts.get(token, 0)

    def bigram_count(self, history: str, token: str) -> int:
        return self.bigram_counts.get((history, token), 0)

    def history_count(self, history: str) -> int:
        return self.history_counts.get(history, 0)


class SplitSpec(BaseModel):
    """Parâmetros da partição treino/teste"""
    model_config = ConfigDict(frozen=True)

    train_fraction: float = Field(default=0.8, gt=0.0, lt=1.0)
    seed: int = 0


class PerplexityReport(BaseModel):
    """Perplexidade de um conjunto de teste"""
    model_config = ConfigDict(frozen=True)

    perplexity: float = Field(gt=0.0)
    n_ngrams: int = Field(gt=0)
    log_prob_sum: float
