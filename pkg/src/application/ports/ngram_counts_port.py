"""
Port for n-gram count persistence
"""
from abc import ABC, abstractmethod

from src.domain.entities.ngram_model import NgramModel


class NgramCountsPort(ABC):
    """Interface para exportar/importar as contagens de um modelo"""

    @abstractmethod
    def export_counts(self, model: NgramModel, path: str) -> None:
        """Grava vocabulário, unigramas e bigramas no formato texto"""
        pass

    @abstractmethod
    def import_counts(self, path: str) -> NgramModel:
        """Reconstrói o modelo a partir do arquivo de contagens"""
        pass
