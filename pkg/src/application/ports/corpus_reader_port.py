"""
Port for corpus readers
"""
from abc import ABC, abstractmethod
from typing import Optional

from src.domain.entities.corpus import Corpus, CorpusSource


class CorpusReaderPort(ABC):
    """Interface para leitura dos formatos de corpus"""

    @abstractmethod
    def read_ud(self, path: str) -> Corpus:
        """Uma sentença por comentário '# text =' de um arquivo CoNLL-U"""
        pass

    @abstractmethod
    def read_lcc(self, path: str) -> Corpus:
        """Arquivo de sentenças LCC: ID<TAB>sentença"""
        pass

    @abstractmethod
    def read_oscar(self, path: str, line_limit: Optional[int] = None) -> Corpus:
        """Linhas de documento OSCAR, no máximo line_limit unidades"""
        pass

    @abstractmethod
    def read_ac(self, words_path: Optional[str], bigrams_path: str, expand_frequencies: bool = False) -> Corpus:
        """Arquivos de frequência AC: cada bigrama vira uma sentença de dois tokens"""
        pass

    @abstractmethod
    def read_plain(self, path: str) -> Corpus:
        """Uma sentença por linha, sem nenhuma alteração"""
        pass

    @abstractmethod
    def read(self, source: CorpusSource) -> Corpus:
        """Lê uma fonte de acordo com o seu formato"""
        pass
