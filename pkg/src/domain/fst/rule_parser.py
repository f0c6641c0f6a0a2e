"""
Rule Parser
Formato textual de regras: LHS -> RHS / LEFT _ RIGHT
"""
import logging
from typing import List

import regex

from src.domain.exceptions import InvalidRuleError
from src.domain.fst.fst import BOS, EOS, Fst, boundary, char_class, concat, cross, literal, union_all
from src.domain.fst.rewrite import RewriteRule

logger = logging.getLogger(__name__)

_PIECE = regex.compile(r"\[(?P<name>BOS|EOS|SPACE)\]|\[(?P<set>[^\]]+)\]|(?P<char>.)", regex.DOTALL)


def _sequence(text: str, allow: tuple = ()) -> Fst:
    """Concatenação das peças de uma alternativa"""
    result = literal("")
    for match in _PIECE.finditer(text):
        if match.group("name") == "SPACE":
            piece = literal(" ")
        elif match.group("name") in ("BOS", "EOS"):
            label = BOS if match.group("name") == "BOS" else EOS
            if label not in allow:
                raise InvalidRuleError(f"[{match.group('name')}] não é permitido aqui: {text!r}")
            piece = boundary(label)
        elif match.group("set") is not None:
            piece = char_class(_ranges(match.group("set")))
        else:
            piece = literal(match.group("char"))
        result = concat(result, piece)
    return result


def _ranges(body: str) -> List[tuple]:
    ranges = []
    i = 0
    while i < len(body):
        if i + 2 < len(body) and body[i + 1] == "-":
            ranges.append((body[i], body[i + 2]))
            i += 3
        else:
            ranges.append((body[i], body[i]))
            i += 1
    return ranges


def _field(text: str, allow: tuple = ()) -> Fst:
    text = text.strip()
    if not text:
        return literal("")
    return union_all([_sequence(alternative.strip(), allow) for alternative in text.split("|")])


def parse_rule(line: str) -> RewriteRule:
    """
    Converte uma linha no formato ``LHS -> RHS / LEFT _ RIGHT`` em uma regra

    Espaços literais são escritos como [SPACE]; [BOS] e [EOS] marcam o início
    e o fim da string; ``|`` separa alternativas; RHS vazio apaga o trecho.
    """
    if "->" not in line:
        raise InvalidRuleError(f"Regra sem '->': {line!r}")
    lhs, rest = line.split("->", 1)

    if "/" in rest:
        rhs, context = rest.split("/", 1)
        if "_" not in context:
            raise InvalidRuleError(f"Contexto sem '_': {line!r}")
        left_text, right_text = context.split("_", 1)
    else:
        rhs, left_text, right_text = rest, "", ""

    if not lhs.strip():
        raise InvalidRuleError(f"LHS vazio: {line!r}")

    tau = cross(_field(lhs), _field(rhs))
    return RewriteRule(
        tau=tau,
        left=_field(left_text, allow=(BOS,)),
        right=_field(right_text, allow=(EOS,)),
    )


def parse_rules(text: str) -> List[RewriteRule]:
    """Uma regra por linha; linhas vazias e comentários (#) são ignorados"""
    rules = []
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            rules.append(parse_rule(stripped))
        except InvalidRuleError:
            logger.error(f"❌ Regra inválida na linha {number}: {stripped}")
            raise
    return rules
