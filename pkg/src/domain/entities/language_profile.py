"""
Language Profile Entity
Perfil de idioma: alfabeto, tokens extras válidos e seleção da cascata de regras
"""
from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, ValidationError, field_validator, model_validator

from src.domain.exceptions import ProfileError

CASCADE_DIRECTIONS = {
    'hausa': ('niger', 'nigeria'),
    'igbo': ('onwu', 'new_standard'),
}

KNOWN_CASCADES = ('amharic', 'zulu', 'malagasy', 'afrikaans', 'hausa', 'igbo')


class FilterMode(str, Enum):
    """Modo de filtragem do passo 2"""
    SENTENCE = 'sentence'
    TOKEN = 'token'


def _parse_scalar(value) -> int:
    if isinstance(value, int):
        return value
    text = str(value).strip()
    if text.upper().startswith('U+'):
        return int(text[2:], 16)
    if len(text) == 1:
        return ord(text)
    return int(text, 16)


class LanguageProfile(BaseModel):
    """Perfil de um idioma"""
    model_config = ConfigDict(frozen=True)

    language: str
    alphabet: Tuple[Tuple[int, int], ...]
    extra_valid_tokens: Tuple[str, ...] = ()
    cascade: Optional[str] = None
    direction: Optional[str] = None
    classifiers: Optional[Tuple[str, ...]] = None

    @field_validator('alphabet', mode='before')
    @classmethod
    def parse_alphabet(cls, value):
        """Aceita pares [lo, hi] ou strings 'U+0061..U+007A'"""
        ranges = []
        for item in value or ():
            if isinstance(item, str):
                lo, _, hi = item.partition('..')
                pair = (_parse_scalar(lo), _parse_scalar(hi or lo))
            else:
                lo, hi = item
                pair = (_parse_scalar(lo), _parse_scalar(hi))
            if pair[0] > pair[1]:
                raise ProfileError(f"Intervalo invertido no alfabeto: {item!r}")
            ranges.append(pair)
        if not ranges:
            raise ProfileError("O alfabeto não pode ser vazio")
        return tuple(ranges)

    @field_validator('extra_valid_tokens')
    @classmethod
    def validate_extra_tokens(cls, value):
        for token in value:
            if not token or any(char.isspace() for char in token):
                raise ProfileError(f"Token extra inválido: {token!r}")
        return value

    @field_validator('classifiers')
    @classmethod
    def validate_classifiers(cls, value):
        if value is not None:
            if not value:
                raise ProfileError("A lista de classificadores não pode ser vazia")
            if any(c != c.lower() or not c for c in value):
                raise ProfileError("Classificadores devem estar em minúsculas")
        return value

    @model_validator(mode='after')
    def validate_cascade(self):
        if self.cascade is not None and self.cascade not in KNOWN_CASCADES:
            raise ProfileError(f"Cascata desconhecida: {self.cascade}")

        allowed = CASCADE_DIRECTIONS.get(self.cascade)
        if self.direction is not None:
            if allowed is None:
                raise ProfileError(f"Direção só é aceita para hausa/igbo, não para {self.language}")
            if self.direction not in allowed:
                raise ProfileError(f"Direção inválida para {self.cascade}: {self.direction}")
        elif allowed is not None:
            raise ProfileError(f"A cascata {self.cascade} exige uma direção ({'|'.join(allowed)})")
        return self

    def contains(self, char: str) -> bool:
        code = ord(char)
        return any(lo <= code <= hi for lo, hi in self.alphabet)

    def with_direction(self, direction: Optional[str]) -> 'LanguageProfile':
        """Cópia validada com outra direção"""
        if direction is None:
            return self
        try:
            return LanguageProfile.model_validate({**self.model_dump(), 'direction': direction})
        except ValidationError as e:
            raise ProfileError(f"Direção inválida para {self.language}: {direction!r}") from e


class SentenceStatus(str, Enum):
    KEPT = 'Kept'
    REJECTED = 'Rejected'


class NormalizedSentence(BaseModel):
    """Resultado da normalização de uma sentença"""
    model_config = ConfigDict(frozen=True)

    text: str
    status: SentenceStatus = SentenceStatus.KEPT
    replaced_tokens: int = 0

    @property
    def kept(self) -> bool:
        return self.status == SentenceStatus.KEPT


class NormalizationBatch(BaseModel):
    """Saída da normalização de um corpus inteiro"""

    kept: List[str] = []
    rejected: List[str] = []
    replaced_tokens: int = 0

    @property
    def kept_count(self) -> int:
        return len(self.kept)

    @property
    def rejected_count(self) -> int:
        return len(self.rejected)

    @property
    def total(self) -> int:
        return self.kept_count + self.rejected_count
