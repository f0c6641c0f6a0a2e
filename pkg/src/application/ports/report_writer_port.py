"""
Port for report and sentence output
"""
from abc import ABC, abstractmethod
from typing import Iterable, List, TextIO

from src.domain.entities.experiment import ExperimentReport, RejectionRow, SourceSummary


class ReportWriterPort(ABC):
    """Interface para escrita das tabelas de resultados"""

    @abstractmethod
    def write_experiments(self, reports: List[ExperimentReport], path: str) -> None:
        """Tabela de perplexidades em TSV"""
        pass

    @abstractmethod
    def write_rejections(self, rows: List[RejectionRow], path: str) -> None:
        """Tabela de sentenças mantidas/rejeitadas em TSV"""
        pass

    @abstractmethod
    def write_summaries(self, summaries: List[SourceSummary], path: str) -> None:
        """Resumo por família de fonte em TSV"""
        pass

    @abstractmethod
    def render(self, path: str) -> str:
        """Renderiza um TSV como tabela alinhada, com o arredondamento de exibição"""
        pass


class SentenceWriterPort(ABC):
    """Interface para escrita de sentenças, uma por linha"""

    @abstractmethod
    def write(self, sentences: Iterable[str], stream: TextIO) -> int:
        """
        Escreve as sentenças no stream

        Returns:
            Número de sentenças escritas
        """
        pass
