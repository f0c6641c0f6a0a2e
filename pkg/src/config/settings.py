"""
Configurações da aplicação
"""
import os
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()

BUILTIN_PROFILES_PATH = str(Path(__file__).with_name('profiles.yaml'))


class Settings:
    """Classe de configuração da aplicação"""

    # Application
    LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO')
    LOG_FORMAT = os.getenv('LOG_FORMAT', 'text')  # text | json
    APP_NAME = os.getenv('APP_NAME', 'text-normalizer')
    MAX_WORKERS = int(os.getenv('MAX_WORKERS', '3'))  # Número máximo de experimentos simultâneos

    # Experimentos
    DEFAULT_SEED = int(os.getenv('DEFAULT_SEED', '0'))
    TRAIN_FRACTION = float(os.getenv('TRAIN_FRACTION', '0.8'))
    DEFAULT_FILTER_MODE = os.getenv('DEFAULT_FILTER_MODE', 'sentence')  # sentence | token
    DEFAULT_SCORING = os.getenv('DEFAULT_SCORING', 'everygrams')  # everygrams | bigrams
    RELATIVE_DIVISOR = os.getenv('RELATIVE_DIVISOR', 'ngrams')  # ngrams | base

    # Corpus
    OSCAR_LINE_LIMIT = int(os.getenv('OSCAR_LINE_LIMIT', '10000'))
    EXPAND_AC_FREQUENCIES = os.getenv('EXPAND_AC_FREQUENCIES', 'false').lower() in ('1', 'true', 'yes')

    # Perfis de idioma
    PROFILES_PATH = os.getenv('PROFILES_PATH') or BUILTIN_PROFILES_PATH

    @classmethod
    def validate(cls):
        """Valida se as configurações têm valores aceitos"""
        choices = [
            ('LOG_LEVEL', cls.LOG_LEVEL, ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')),
            ('LOG_FORMAT', cls.LOG_FORMAT, ('text', 'json')),
            ('DEFAULT_FILTER_MODE', cls.DEFAULT_FILTER_MODE, ('sentence', 'token')),
            ('DEFAULT_SCORING', cls.DEFAULT_SCORING, ('everygrams', 'bigrams')),
            ('RELATIVE_DIVISOR', cls.RELATIVE_DIVISOR, ('ngrams', 'base')),
        ]

        invalid = [name for name, value, allowed in choices if value not in allowed]

        if cls.MAX_WORKERS < 1:
            invalid.append('MAX_WORKERS')
        if not 0.0 < cls.TRAIN_FRACTION < 1.0:
            invalid.append('TRAIN_FRACTION')
        if cls.OSCAR_LINE_LIMIT < 1:
            invalid.append('OSCAR_LINE_LIMIT')
        if not Path(cls.PROFILES_PATH).is_file():
            invalid.append('PROFILES_PATH')

        if invalid:
            raise ValueError(f"Configurações inválidas: {', '.join(invalid)}")
