"""
Repositório de perfis de idioma em YAML
"""
import logging
from typing import Dict, List, Optional

import yaml
from pydantic import ValidationError

from src.application.ports.profile_repository_port import ProfileRepositoryPort
from src.config.settings import BUILTIN_PROFILES_PATH
from src.domain.entities.language_profile import LanguageProfile
from src.domain.exceptions import ProfileError

logger = logging.getLogger(__name__)


class YamlProfileRepository(ProfileRepositoryPort):
    """Perfis embutidos, sobrescritos por entrada de um arquivo do usuário"""

    def __init__(self, path: Optional[str] = None, builtin_path: str = BUILTIN_PROFILES_PATH):
        """
        Args:
            path: Arquivo YAML do usuário (opcional)
            builtin_path: Arquivo com os perfis embutidos
        """
        self._entries: Dict[str, dict] = {}
        self._profiles: Dict[str, LanguageProfile] = {}

        self._entries.update(self._load(builtin_path))
        if path and path != builtin_path:
            self._entries.update(self._load(path))

        logger.info(f"Repositório de perfis carregado: {', '.join(sorted(self._entries))}")

    @staticmethod
    def _load(path: str) -> Dict[str, dict]:
        try:
            with open(path, encoding='utf-8') as handle:
                document = yaml.safe_load(handle) or {}
        except (OSError, yaml.YAMLError) as e:
            raise ProfileError(f"Não foi possível ler os perfis em {path}: {e}") from e

        profiles = document.get('profiles') if isinstance(document, dict) else None
        if not isinstance(profiles, dict):
            raise ProfileError(f"Arquivo de perfis sem a seção 'profiles': {path}")
        return {str(name): dict(entry or {}) for name, entry in profiles.items()}

    def get(self, language: str) -> LanguageProfile:
        if language in self._profiles:
            return self._profiles[language]

        entry = self._entries.get(language)
        if entry is None:
            raise ProfileError(f"Perfil desconhecido: {language}")

        try:
            profile = LanguageProfile(language=language, **entry)
        except ValidationError as e:
            raise ProfileError(f"Perfil inválido para {language}: {e}") from e

        self._profiles[language] = profile
        return profile

    def list_languages(self) -> List[str]:
        return sorted(self._entries)
