"""
Pytest configuration and fixtures
"""
import os

import pytest
from unittest.mock import Mock

# Setup environment variables before any other imports
os.environ.setdefault('LOG_LEVEL', 'INFO')
os.environ.setdefault('LOG_FORMAT', 'text')
os.environ.setdefault('APP_NAME', 'test-app')
os.environ.setdefault('MAX_WORKERS', '2')
os.environ.setdefault('DEFAULT_SEED', '0')
os.environ.setdefault('TRAIN_FRACTION', '0.8')

from src.adapters.output.persistence.yaml_profile_repository import YamlProfileRepository
from src.application.services.language_model_service import LanguageModelService
from src.application.services.language_rules_service import LanguageRulesService
from src.application.services.metrics_service import MetricsService
from src.application.services.normalization_service import NormalizationService
from src.domain.entities.corpus import Corpus


@pytest.fixture(scope='session')
def profiles():
    """Built-in language profiles"""
    return YamlProfileRepository()


@pytest.fixture(scope='session')
def rules_service():
    """Shared rules service (compiled cascades are cached)"""
    return LanguageRulesService()


@pytest.fixture
def language_model():
    return LanguageModelService()


@pytest.fixture
def metrics():
    return MetricsService()


@pytest.fixture
def normalizer_for(profiles, rules_service):
    """Factory: normalizer for a built-in language"""
    def build(language, direction=None):
        profile = profiles.get(language).with_direction(direction)
        return NormalizationService(profile, rules_service.build_cascade(profile))
    return build


@pytest.fixture
def mock_reader():
    """Mock corpus reader port"""
    reader = Mock()
    reader.read = Mock(return_value=Corpus(sentences=[]))
    return reader


@pytest.fixture
def write_file(tmp_path):
    """Writes UTF-8 text (or bytes) to a temporary file and returns its path"""
    def write(name, content):
        path = tmp_path / name
        if isinstance(content, bytes):
            path.write_bytes(content)
        else:
            path.write_text(content, encoding='utf-8')
        return str(path)
    return write


@pytest.fixture(autouse=True)
def setup_env_vars(monkeypatch):
    """Setup environment variables for testing"""
    monkeypatch.setenv('LOG_LEVEL', 'INFO')
    monkeypatch.setenv('LOG_FORMAT', 'text')
    monkeypatch.setenv('APP_NAME', 'test-app')
    monkeypatch.setenv('MAX_WORKERS', '2')
