"""
Port for language profile storage
"""
from abc import ABC, abstractmethod
from typing import List

from src.domain.entities.language_profile import LanguageProfile


class ProfileRepositoryPort(ABC):
    """Interface para obtenção dos perfis de idioma"""

    @abstractmethod
    def get(self, language: str) -> LanguageProfile:
        """
        Busca o perfil de um idioma

        Args:
            language: Identificador do idioma (ex.: 'malagasy')

        Returns:
            LanguageProfile validado

        Raises:
            ProfileError: idioma desconhecido
        """
        pass

    @abstractmethod
    def list_languages(self) -> List[str]:
        """Idiomas disponíveis"""
        pass
