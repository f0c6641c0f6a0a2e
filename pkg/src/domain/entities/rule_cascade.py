"""
Rule Cascade Entity
Lista ordenada de regras compiladas de um idioma
"""
import unicodedata
from typing import FrozenSet, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from src.domain.fst import Fst, apply


class CompiledRule(BaseModel):
    """Regra compilada com o conjunto de escalares que podem dispará-la"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    name: str
    fst: Fst
    triggers: Optional[FrozenSet[str]] = None

    def apply(self, s: str) -> str:
        if self.triggers is not None and not any(char in self.triggers for char in s):
            return s
        return apply(self.fst, s)


class RuleCascade(BaseModel):
    """
    Cascata de regras de um idioma

    Com ``decompose`` as regras leem a entrada em NFD e a saída volta para NFC.
    """
    model_config = ConfigDict(frozen=True)

    language: str
    rules: Tuple[CompiledRule, ...] = ()
    direction: Optional[str] = None
    decompose: bool = False

    def apply(self, s: str) -> str:
        if not self.rules:
            return s
        if self.decompose:
            s = unicodedata.normalize('NFD', s)
        for rule in self.rules:
            s = rule.apply(s)
        return unicodedata.normalize('NFC', s) if self.decompose else s

    @property
    def is_empty(self) -> bool:
        return not self.rules
