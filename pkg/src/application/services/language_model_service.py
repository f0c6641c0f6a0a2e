"""
Language Model Service
Modelo de bigramas com suavização de Laplace, partição treino/teste e perplexidade
"""
import logging
import math
import warnings
from typing import Iterable, List, Sequence, Tuple

import numpy as np
from nltk import FreqDist
from nltk.lm.preprocessing import pad_both_ends
from nltk.util import bigrams

from src.domain.entities.experiment import Scoring
from src.domain.entities.ngram_model import (
    RESERVED_TOKENS,
    NgramModel,
    PerplexityReport,
    SplitSpec,
)
from src.domain.exceptions import (
    DegenerateSplitWarning,
    EmptyCorpusError,
    EmptyTestError,
    EmptyTrainingError,
)

logger = logging.getLogger(__name__)


def _tokens(sentence: str) -> List[str]:
    return sentence.split()


class LanguageModelService:
    """Treino e avaliação do modelo de n-gramas"""

    def __init__(self):
        logger.info("LanguageModelService inicializado")

    def split(self, corpus: Sequence[str], spec: SplitSpec = SplitSpec()) -> Tuple[List[str], List[str]]:
        """
        Embaralha com semente fixa e separa as primeiras ⌊fração·n⌋ sentenças para treino

        Raises:
            EmptyCorpusError: corpus vazio
        """
        n = len(corpus)
        if n == 0:
            raise EmptyCorpusError("Não é possível particionar um corpus vazio")

        order = np.random.default_rng(spec.seed).permutation(n)
        cut = math.floor(spec.train_fraction * n + 1e-9)
        train = [corpus[i] for i in order[:cut]]
        test = [corpus[i] for i in order[cut:]]

        if not train or not test:
            message = f"Partição degenerada: {len(train)} treino / {len(test)} teste"
            logger.warning(f"⚠️ {message}")
            warnings.warn(message, DegenerateSplitWarning, stacklevel=2)

        return train, test

    def fit(self, train: Sequence[str]) -> NgramModel:
        """
        Conta unigramas e bigramas das sentenças delimitadas por <s> ... </s>

        Raises:
            EmptyTrainingError: nenhuma sentença de treino
        """
        if not train:
            raise EmptyTrainingError("Conjunto de treino vazio")

        unigrams: FreqDist = FreqDist()
        pairs: FreqDist = FreqDist()
        histories: FreqDist = FreqDist()

        for sentence in train:
            padded = list(pad_both_ends(_tokens(sentence), n=2))
            unigrams.update(padded)
            for history, token in bigrams(padded):
                pairs[(history, token)] += 1
                histories[history] += 1

        model = NgramModel(
            vocabulary=frozenset(unigrams) | frozenset(RESERVED_TOKENS),
            unigram_counts=dict(unigrams),
            bigram_counts=dict(pairs),
            history_counts=dict(histories),
            n_train=unigrams.N(),
        )
        logger.debug(f"Modelo treinado: |V|={model.vocab_size}, N={model.n_train}")
        return model

    def merge(self, models: Iterable[NgramModel]) -> NgramModel:
        """Soma as contagens de modelos treinados em partes disjuntas do corpus"""
        unigrams: FreqDist = FreqDist()
        pairs: FreqDist = FreqDist()
        histories: FreqDist = FreqDist()
        vocabulary = set(RESERVED_TOKENS)
        total = 0

        for model in models:
            unigrams.update(model.unigram_counts)
            pairs.update(model.bigram_counts)
            histories.update(model.history_counts)
            vocabulary |= model.vocabulary
            total += model.n_train

        if total == 0:
            raise EmptyTrainingError("Nenhum modelo para combinar")

        return NgramModel(
            vocabulary=frozenset(vocabulary),
            unigram_counts=dict(unigrams),
            bigram_counts=dict(pairs),
            history_counts=dict(histories),
            n_train=total,
        )

    def prob(self, model: NgramModel, history: str, token: str) -> float:
        """P(w|h) = (c(h,w)+1) / (c(h)+|V|)"""
        history, token = model.lookup(history), model.lookup(token)
        return (model.bigram_count(history, token) + 1) / (model.history_count(history) + model.vocab_size)

    def unigram_prob(self, model: NgramModel, token: str) -> float:
        """P(w) = (c(w)+1) / (N+|V|)"""
        token = model.lookup(token)
        return (model.count(token) + 1) / (model.n_train + model.vocab_size)

    def perplexity(
        self,
        model: NgramModel,
        test: Sequence[str],
        scoring: Scoring = Scoring.EVERYGRAMS,
    ) -> PerplexityReport:
        """
        PP = exp(-(1/N) Σ ln P) sobre os n-gramas do conjunto de teste

        Args:
            model: Modelo treinado
            test: Sentenças de teste (tokens fora do vocabulário viram <UNK>)
            scoring: bigrams ou everygrams (unigramas + bigramas)

        Raises:
            EmptyTestError: conjunto de teste vazio
        """
        if not test:
            raise EmptyTestError("Conjunto de teste vazio")
        scoring = Scoring(scoring)

        logs: List[float] = []
        for sentence in test:
            padded = list(pad_both_ends([model.lookup(t) for t in _tokens(sentence)], n=2))
            if scoring == Scoring.EVERYGRAMS:
                logs.extend(math.log(self.unigram_prob(model, token)) for token in padded)
            logs.extend(math.log(self.prob(model, history, token)) for history, token in bigrams(padded))

        log_sum = math.fsum(logs)
        n = len(logs)
        return PerplexityReport(perplexity=math.exp(-log_sum / n), n_ngrams=n, log_prob_sum=log_sum)
