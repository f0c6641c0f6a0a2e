"""
Normalization Service
Normalizador de seis passos: pré-processamento, filtragem, regras do idioma,
separação de pontuação, remoção de pontuação isolada e espaços
"""
import logging
import unicodedata
from typing import Iterable, List, Optional, Union

import regex

from src.domain.entities.language_profile import (
    FilterMode,
    LanguageProfile,
    NormalizationBatch,
    NormalizedSentence,
    SentenceStatus,
)
from src.domain.entities.ngram_model import UNK_TOKEN
from src.domain.entities.rule_cascade import RuleCascade
from src.domain.exceptions import InvalidUtf8Error

logger = logging.getLogger(__name__)

APOSTROPHE = "'"
APOSTROPHE_LIKE = '\u2018\u2019\u02bc\u02b9\u00b4\u0060'
_APOSTROPHE_TABLE = str.maketrans({char: APOSTROPHE for char in APOSTROPHE_LIKE})

_PUNCT = r"[\p{P}\p{S}]"
_DETACHABLE = r"(?:(?!['\-])[\p{P}\p{S}])"

_TOKEN = regex.compile(r"\S+")
_FREESTANDING = regex.compile(rf"{_PUNCT}+")
_DETACH = regex.compile(rf"^({_DETACHABLE}*)(.*?)({_DETACHABLE}*)$", regex.DOTALL)
_AFFIXES = regex.compile(rf"^({_PUNCT}*)(.*?)({_PUNCT}*)$", regex.DOTALL)

_NUMBER = r"(?:[0-9]{1,6}|[0-9]{1,3},[0-9]{3})(?:\.[0-9]{1,4})?"
_TIME = r"(?:[01]?[0-9]|2[0-3]):[0-5][0-9](?::[0-5][0-9])?"
_URL = r"(?:[a-z][a-z0-9+.\-]*://|www\.)\S+"
_EMAIL = r"[\p{L}\p{N}._\-]+@[\p{L}\p{N}\-]+(?:\.[\p{L}\p{N}\-]+)*\.\p{L}{2,}"
_SPECIAL = regex.compile(rf"{_PUNCT}*(?:{_URL}|{_EMAIL}|{_TIME}|{_NUMBER}){_PUNCT}*")


def _alphabet_class(profile: LanguageProfile) -> str:
    parts = []
    for lo, hi in profile.alphabet:
        parts.append(f"\\U{lo:08x}" if lo == hi else f"\\U{lo:08x}-\\U{hi:08x}")
    return "[" + "".join(parts) + "]"


class NormalizationService:
    """Pipeline de normalização de um idioma"""

    def __init__(self, profile: LanguageProfile, cascade: Optional[RuleCascade] = None):
        """
        Args:
            profile: Perfil do idioma (alfabeto e tokens extras)
            cascade: Cascata de regras do passo 3 (None = sem regras)
        """
        self.profile = profile
        self.cascade = cascade
        self._word_core = regex.compile(rf"{_alphabet_class(profile)}+(?:['\-]+{_alphabet_class(profile)}+)*['\-]*")
        self._extra_tokens = frozenset(profile.extra_valid_tokens)
        logger.info(f"NormalizationService inicializado para '{profile.language}'")

    # ---- passo 1 ----

    def preprocess(self, s: Union[str, bytes]) -> str:
        """NFC, minúsculas e apóstrofos unificados; <UNK> é preservado"""
        if isinstance(s, (bytes, bytearray)):
            try:
                s = bytes(s).decode('utf-8')
            except UnicodeDecodeError as e:
                raise InvalidUtf8Error(f"Entrada não é UTF-8 válido: {e}") from e

        pieces = []
        for piece in s.split(UNK_TOKEN):
            piece = unicodedata.normalize('NFC', piece).lower().translate(_APOSTROPHE_TABLE)
            pieces.append(unicodedata.normalize('NFC', piece))
        return UNK_TOKEN.join(pieces)

    # ---- passo 2 ----

    def is_valid_token(self, token: str) -> bool:
        if token == UNK_TOKEN or token in self._extra_tokens:
            return True
        if _SPECIAL.fullmatch(token):
            return True

        core = _AFFIXES.match(token).group(2)
        if not core or not self._word_core.fullmatch(core):
            return False
        return any(not char.isdigit() and char not in "'-" for char in core)

    def filter(self, s: str, mode: FilterMode = FilterMode.SENTENCE) -> NormalizedSentence:
        """Valida cada token; rejeita a sentença ou troca os tokens inválidos por <UNK>"""
        mode = FilterMode(mode)

        if mode == FilterMode.SENTENCE:
            for match in _TOKEN.finditer(s):
                if not self.is_valid_token(match.group()):
                    logger.debug(f"Token inválido '{match.group()}', sentença rejeitada")
                    return NormalizedSentence(text=s, status=SentenceStatus.REJECTED)
            return NormalizedSentence(text=s)

        replaced = 0

        def replace(match) -> str:
            nonlocal replaced
            if self.is_valid_token(match.group()):
                return match.group()
            replaced += 1
            return UNK_TOKEN

        text = _TOKEN.sub(replace, s)
        return NormalizedSentence(text=text, replaced_tokens=replaced)

    # ---- passo 3 ----

    def apply_language_rules(self, s: str) -> str:
        """
        Aplica a cascata do idioma a cada token, exceto <UNK>

        A pontuação que o passo 4 separa fica fora da cascata; um token formado só
        por pontuação (ex.: '@') é reescrito inteiro. A saída está em NFC.
        """
        if self.cascade is None or self.cascade.is_empty:
            return s

        def rewrite(match) -> str:
            token = match.group()
            if token == UNK_TOKEN:
                return token
            lead, core, trail = _DETACH.match(token).groups()
            if not core:
                return unicodedata.normalize('NFC', self.cascade.apply(token))
            return lead + unicodedata.normalize('NFC', self.cascade.apply(core)) + trail

        return _TOKEN.sub(rewrite, s)

    # ---- passos 4 a 6 ----

    @staticmethod
    def detach_punctuation(s: str) -> str:
        """Separa as sequências de pontuação no início e no fim de cada token"""
        def detach(match) -> str:
            token = match.group()
            if token == UNK_TOKEN:
                return token
            return " ".join(part for part in _DETACH.match(token).groups() if part)

        return _TOKEN.sub(detach, s)

    @staticmethod
    def delete_freestanding_punct(s: str) -> str:
        """Remove tokens formados só por pontuação, mantendo os espaços ao redor"""
        def delete(match) -> str:
            token = match.group()
            if token != UNK_TOKEN and _FREESTANDING.fullmatch(token):
                return ""
            return token

        return _TOKEN.sub(delete, s)

    @staticmethod
    def collapse_whitespace(s: str) -> str:
        return " ".join(s.split())

    # ---- pipeline ----

    def normalize(
        self,
        s: Union[str, bytes],
        mode: FilterMode = FilterMode.SENTENCE,
        apply_rules: bool = True,
    ) -> NormalizedSentence:
        """
        Executa os seis passos em ordem

        Args:
            s: Sentença de entrada
            mode: Filtragem por sentença ou por token
            apply_rules: False executa o normalizador base (sem o passo 3)

        Returns:
            NormalizedSentence; sentenças rejeitadas não passam pelos passos 3 a 6
        """
        filtered = self.filter(self.preprocess(s), mode)
        if not filtered.kept:
            return filtered

        text = filtered.text
        if apply_rules:
            text = self.apply_language_rules(text)
        text = self.collapse_whitespace(self.delete_freestanding_punct(self.detach_punctuation(text)))
        return NormalizedSentence(text=text, replaced_tokens=filtered.replaced_tokens)

    def trace(self, s: Union[str, bytes], mode: FilterMode = FilterMode.SENTENCE) -> List[str]:
        """Entrada seguida da saída de cada passo (para inspeção da derivação)"""
        steps = [s if isinstance(s, str) else bytes(s).decode('utf-8', errors='replace')]
        text = self.preprocess(s)
        steps.append(text)
        filtered = self.filter(text, mode)
        steps.append(filtered.text)
        if not filtered.kept:
            return steps

        for step in (
            self.apply_language_rules,
            self.detach_punctuation,
            self.delete_freestanding_punct,
            self.collapse_whitespace,
        ):
            steps.append(step(steps[-1]))
        return steps

    def normalize_lines(
        self,
        lines: Iterable[str],
        mode: FilterMode = FilterMode.SENTENCE,
        apply_rules: bool = True,
    ) -> NormalizationBatch:
        """Normaliza um corpus linha a linha"""
        batch = NormalizationBatch()
        for line in lines:
            line = line.rstrip('\r\n')
            result = self.normalize(line, mode, apply_rules)
            if result.kept:
                batch.kept.append(result.text)
                batch.replaced_tokens += result.replaced_tokens
            else:
                batch.rejected.append(line)

        logger.info(
            f"📊 [{self.profile.language}] {batch.kept_count} mantidas, "
            f"{batch.rejected_count} rejeitadas"
        )
        return batch
