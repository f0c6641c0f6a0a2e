"""
Language Rules Service
Cascatas de regras específicas de cada idioma, compiladas com o motor de transdutores
"""
import itertools
import logging
import threading
import unicodedata
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from src.domain.entities.language_profile import LanguageProfile
from src.domain.entities.rule_cascade import CompiledRule, RuleCascade
from src.domain.exceptions import ProfileError
from src.domain.fst import (
    BOS,
    EOS,
    EPSILON,
    OTHER,
    RewriteRule,
    any_scalar,
    boundary,
    char_class,
    compile_rewrite,
    concat,
    cross,
    literal,
    star,
    union,
    union_all,
)

logger = logging.getLogger(__name__)

DEFAULT_CLASSIFIERS = (
    'i', 'u', 'a', 'o', 'e', 'um', 'im', 'in', 'isi', 'izi',
    'ama', 'aba', 'ubu', 'uku', 'ulu', 'izin', 'imi', 'ili',
)

VOWELS = 'aeiou'

# Pontuação que pode abrir ou fechar um token isolado
TOKEN_OPENING_PUNCTUATION = '([{\u00ab\u2039"\u201c\u201e\u00bf\u00a1'
TOKEN_FINAL_PUNCTUATION = '.,;:!?)]}\u00bb\u203a"\u201d\u2026'

# Séries não preferidas do amárico: (início, fim) -> início da série preferida
AMHARIC_H_SERIES = ((0x1210, 0x1217), (0x1280, 0x1288), (0x12B8, 0x12BF))
AMHARIC_TS_SERIES = ((0x1340, 0x1347),)
AMHARIC_GLOTTAL_SERIES = ((0x12D0, 0x12D7),)
AMHARIC_H_TARGET = 0x1200
AMHARIC_TS_TARGET = 0x1338
AMHARIC_GLOTTAL_TARGET = 0x12A0
SERIES_ORDERS = 8

HAUSA_PAIRS = (("'y", '\u01b4'),)
IGBO_PAIRS = (('\u00f6', '\u1ecd'), ('\u00fc', '\u1ee5'), ('\u00f1', '\u1e45'))

COMBINING_MARKS = (0x0300, 0x036F)


def _one_of(chars: str):
    return char_class([(char, char) for char in chars])


def _token_start():
    """BOS ou espaço, seguido de pontuação de abertura"""
    return concat(union(boundary(BOS), literal(' ')), star(_one_of(TOKEN_OPENING_PUNCTUATION)))


def _token_end():
    """Pontuação de fechamento seguida de espaço ou EOS"""
    return concat(star(_one_of(TOKEN_FINAL_PUNCTUATION)), union(literal(' '), boundary(EOS)))


def _mark_swap(source: str, target: str) -> RewriteRule:
    """
    Troca o diacrítico de ``source`` pelo de ``target`` sobre a mesma base (formas NFD)

    A regra só dispara quando o agrupamento base + diacríticos tem exatamente um dos
    dois diacríticos; tons e outros diacríticos do agrupamento são mantidos.
    """
    base, mark = unicodedata.normalize('NFD', source)
    target_base, new_mark = unicodedata.normalize('NFD', target)
    if base != target_base:
        raise ValueError(f"Pares com bases diferentes: {source!r} -> {target!r}")

    lo, hi = COMBINING_MARKS
    others = star(char_class([
        (code, code) for code in range(lo, hi + 1) if code not in (ord(mark), ord(new_mark))
    ]))
    return RewriteRule(
        tau=cross(literal(mark), literal(new_mark)),
        left=concat(literal(base), others),
        right=concat(others, union(any_scalar(excluding=[COMBINING_MARKS]), boundary(EOS))),
    )


def _mapping(pairs: Iterable[Tuple[str, str]]):
    return union_all([cross(literal(source), literal(target)) for source, target in pairs])


def _series_pairs(ranges: Sequence[Tuple[int, int]], target: int) -> List[Tuple[str, str]]:
    """Pares alinhados por ordem vocálica; formas além da 8ª ordem vão para a última"""
    pairs = []
    for start, end in ranges:
        for code in range(start, end + 1):
            offset = min(code - start, SERIES_ORDERS - 1)
            pairs.append((chr(code), chr(target + offset)))
    return pairs


def _hyphenated_forms(classifiers: Sequence[str]) -> List[str]:
    """
    Classificadores com os hífens que a própria regra apagaria

    Um hífen na posição i é apagado quando c[:i] é classificador e c[i] é vogal
    (ex.: im-i para imi). Com essas formas no contexto a regra é idempotente.
    """
    known = set(classifiers)
    forms = set()
    for classifier in classifiers:
        cuts = [i for i in range(1, len(classifier)) if classifier[:i] in known and classifier[i] in VOWELS]
        for size in range(len(cuts) + 1):
            for chosen in itertools.combinations(cuts, size):
                pieces, last = [], 0
                for cut in chosen:
                    pieces.append(classifier[last:cut])
                    last = cut
                pieces.append(classifier[last:])
                forms.add("-".join(pieces))
    return sorted(forms)


def _triggers(rule: RewriteRule) -> Optional[frozenset]:
    labels = set()
    for state in rule.tau.states():
        for arc in rule.tau.arcs(state):
            if arc.ilabel == OTHER:
                return None
            if arc.ilabel != EPSILON:
                labels.add(chr(arc.ilabel))
    return frozenset(labels)


class LanguageRulesService:
    """Constrói as cascatas de regras de cada idioma"""

    def __init__(self, default_classifiers: Sequence[str] = DEFAULT_CLASSIFIERS):
        self.default_classifiers = tuple(default_classifiers)
        self._cache: Dict[tuple, RuleCascade] = {}
        self._lock = threading.Lock()
        logger.info("LanguageRulesService inicializado")

    def _compile(self, name: str, rule: RewriteRule) -> CompiledRule:
        compiled = compile_rewrite(rule)
        logger.debug(f"Regra '{name}' compilada: {compiled}")
        return CompiledRule(name=name, fst=compiled, triggers=_triggers(rule))

    def amharic_cascade(self) -> RuleCascade:
        """Séries /h/, /ts/ e /ʔ/ reduzidas à série preferida"""
        rules = [
            self._compile('amharic-h', RewriteRule(tau=_mapping(_series_pairs(AMHARIC_H_SERIES, AMHARIC_H_TARGET)))),
            self._compile('amharic-ts', RewriteRule(tau=_mapping(_series_pairs(AMHARIC_TS_SERIES, AMHARIC_TS_TARGET)))),
            self._compile(
                'amharic-glottal',
                RewriteRule(tau=_mapping(_series_pairs(AMHARIC_GLOTTAL_SERIES, AMHARIC_GLOTTAL_TARGET))),
            ),
        ]
        return RuleCascade(language='amharic', rules=tuple(rules))

    def zulu_cascade(self, classifiers: Optional[Sequence[str]] = None) -> RuleCascade:
        """Remove o hífen entre classificador nominal e palavra iniciada por vogal"""
        classifiers = tuple(classifiers or self.default_classifiers)
        if not classifiers or any(c != c.lower() or not c for c in classifiers):
            raise ProfileError("Classificadores devem ser não vazios e minúsculos")

        rule = RewriteRule(
            tau=cross(literal('-'), literal('')),
            left=concat(_token_start(), union_all([literal(form) for form in _hyphenated_forms(classifiers)])),
            right=char_class([(v, v) for v in VOWELS]),
        )
        return RuleCascade(language='zulu', rules=(self._compile('zulu-hyphen', rule),))

    def malagasy_cascade(self) -> RuleCascade:
        """ñ decomposto e '@' isolado expandido para amin'ny"""
        rules = [
            self._compile('malagasy-n-diaeresis', RewriteRule(tau=cross(literal('\u00f1'), literal('n\u0308')))),
            self._compile(
                'malagasy-at',
                RewriteRule(
                    tau=cross(literal('@'), literal("amin'ny")),
                    left=_token_start(),
                    right=_token_end(),
                ),
            ),
        ]
        return RuleCascade(language='malagasy', rules=tuple(rules))

    def afrikaans_cascade(self) -> RuleCascade:
        """Expande as contrações 't e 'k; 'n fica como está"""
        rule = RewriteRule(
            tau=_mapping([("'t", 'het'), ("'k", 'ek')]),
            left=_token_start(),
            right=_token_end(),
        )
        return RuleCascade(language='afrikaans', rules=(self._compile('afrikaans-contractions', rule),))

    def hausa_cascade(self, direction: str) -> RuleCascade:
        """niger: 'y -> ƴ; nigeria: o inverso (tons decompostos são mantidos)"""
        pairs = self._directed(HAUSA_PAIRS, direction, ('niger', 'nigeria'), 'hausa')
        rule = RewriteRule(tau=_mapping(pairs))
        return RuleCascade(
            language='hausa',
            rules=(self._compile(f'hausa-{direction}', rule),),
            direction=direction,
            decompose=True,
        )

    def igbo_cascade(self, direction: str) -> RuleCascade:
        """onwu: ö ü ñ -> ọ ụ ṅ; new_standard: o inverso (também com tom)"""
        pairs = self._directed(IGBO_PAIRS, direction, ('onwu', 'new_standard'), 'igbo')
        rules = [self._compile(f'igbo-{direction}-{source}', _mark_swap(source, target)) for source, target in pairs]
        return RuleCascade(language='igbo', rules=tuple(rules), direction=direction, decompose=True)

    @staticmethod
    def _directed(pairs, direction: str, options: Tuple[str, str], language: str):
        if direction == options[0]:
            return pairs
        if direction == options[1]:
            return tuple((target, source) for source, target in pairs)
        raise ProfileError(f"Direção inválida para {language}: {direction!r}")

    def build_cascade(self, profile: LanguageProfile) -> RuleCascade:
        """
        Cascata do perfil (vazia quando o perfil não tem regras)

        Cascatas compiladas ficam em cache por (cascata, direção, classificadores).
        """
        if profile.cascade is None:
            return RuleCascade(language=profile.language)

        key = (profile.cascade, profile.direction, profile.classifiers)
        with self._lock:
            cached = self._cache.get(key)
            if cached is not None:
                return cached

            logger.info(f"🔧 Compilando cascata '{profile.cascade}' ({profile.direction or 'sem direção'})")
            builders = {
                'amharic': self.amharic_cascade,
                'zulu': lambda: self.zulu_cascade(profile.classifiers),
                'malagasy': self.malagasy_cascade,
                'afrikaans': self.afrikaans_cascade,
                'hausa': lambda: self.hausa_cascade(profile.direction),
                'igbo': lambda: self.igbo_cascade(profile.direction),
            }
            cascade = builders[profile.cascade]()
            self._cache[key] = cascade
            logger.info(f"✅ Cascata '{profile.cascade}' pronta com {len(cascade.rules)} regra(s)")
            return cascade
