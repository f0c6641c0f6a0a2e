"""
Rewrite Rule Compiler
Compila regras obrigatórias, esquerda para direita e de casamento mais longo
"""
import logging
from collections import deque
from typing import Dict, FrozenSet, List, Literal, Optional, Set, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.domain.exceptions import AmbiguousRuleError, InvalidRuleError
from src.domain.fst.algorithms import is_functional, optimize, trim
from src.domain.fst.fst import (
    BOS,
    EOS,
    EPSILON,
    OTHER,
    Arc,
    Fst,
    accepts,
    compose,
    harmonize,
    literal,
    project,
)

logger = logging.getLogger(__name__)


class RewriteRule(BaseModel):
    """Regra tau / left _ right aplicada obrigatoriamente"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    tau: Fst
    left: Fst = Field(default_factory=lambda: literal(""))
    right: Fst = Field(default_factory=lambda: literal(""))
    mode: Literal["obligatory"] = "obligatory"

    @field_validator("left", "right")
    @classmethod
    def validate_context(cls, value: Fst) -> Fst:
        if not value.is_acceptor():
            raise InvalidRuleError("Contextos devem ser aceitadores")
        return value


class _Dfa:
    """Visão determinística de um aceitador otimizado"""

    def __init__(self, acceptor: Fst):
        self.fst = acceptor
        self.start = acceptor.start
        self.finals = acceptor.finals
        self._delta: List[Dict[int, int]] = [
            {arc.ilabel: arc.nextstate for arc in acceptor.arcs(state)} for state in acceptor.states()
        ]

    def step(self, state: int, label: int) -> Optional[int]:
        return self._delta[state].get(label)

    def is_final(self, state: int) -> bool:
        return state in self.finals

    def has_arcs(self, state: int) -> bool:
        return bool(self._delta[state])


# Itens de obrigação negativa: ('D', estado do domínio) ou ('R', estado do contexto direito)
Item = Tuple[str, int]
Obligations = FrozenSet[Item]
Pending = FrozenSet[int]
CopyKey = Tuple[str, FrozenSet[int], Obligations, Pending]
MatchKey = Tuple[str, int, int, FrozenSet[int], Obligations, Pending]


class _Scanner:
    """Constrói o transdutor que varre a entrada e aplica tau onde a regra casa"""

    def __init__(self, tau: Fst, left: Fst, right: Fst, alphabet: FrozenSet[int]):
        self.tau = tau
        self.domain = _Dfa(optimize(project(tau, "input")))
        self.left = _Dfa(optimize(left))
        self.right = _Dfa(optimize(right))
        self.labels = sorted(alphabet) + [OTHER]
        self.alphabet = alphabet

        self.index: Dict[Tuple, int] = {}
        self.arcs: List[List[Arc]] = []
        self.finals: Set[int] = set()
        self.queue: deque = deque()

    # ---- rastreadores ----

    def _left_step(self, tracker: FrozenSet[int], label: int) -> FrozenSet[int]:
        states = {self.left.start}
        for state in tracker:
            target = self.left.step(state, label)
            if target is not None:
                states.add(target)
        return frozenset(states)

    def _left_holds(self, tracker: FrozenSet[int]) -> bool:
        return any(self.left.is_final(state) for state in tracker)

    def _step_obligations(self, items: Obligations, label: int) -> Optional[Obligations]:
        stepped: Set[Item] = set()
        for kind, state in items:
            if kind == "D":
                target = self.domain.step(state, label)
                if target is None:
                    continue
                if self.domain.is_final(target):
                    if self.right.is_final(self.right.start):
                        return None
                    stepped.add(("R", self.right.start))
                if self.domain.has_arcs(target):
                    stepped.add(("D", target))
            else:
                target = self.right.step(state, label)
                if target is None:
                    continue
                if self.right.is_final(target):
                    return None
                stepped.add(("R", target))
        return frozenset(stepped)

    def _step_pending(self, pending: Pending, label: int) -> Optional[Pending]:
        stepped: Set[int] = set()
        for state in pending:
            target = self.right.step(state, label)
            if target is None:
                return None
            if not self.right.is_final(target):
                stepped.add(target)
        return frozenset(stepped)

    def _passes_end(self, items: Obligations, pending: Pending) -> bool:
        for state in pending:
            target = self.right.step(state, EOS)
            if target is None or not self.right.is_final(target):
                return False
        for kind, state in items:
            if kind == "R":
                target = self.right.step(state, EOS)
                if target is not None and self.right.is_final(target):
                    return False
        return True

    # ---- construção ----

    def _state(self, key: Tuple) -> int:
        if key not in self.index:
            self.index[key] = len(self.arcs)
            self.arcs.append([])
            self.queue.append(key)
        return self.index[key]

    def _advance(self, tracker, items, pending, label):
        items = self._step_obligations(items, label)
        if items is None:
            return None
        pending = self._step_pending(pending, label)
        if pending is None:
            return None
        return self._left_step(tracker, label), items, pending

    def _expand_copy(self, key: CopyKey) -> None:
        _, tracker, items, pending = key
        source = self.index[key]

        if self._passes_end(items, pending):
            self.finals.add(source)

        holds = self._left_holds(tracker)
        if holds:
            match = ("M", self.tau.start, self.domain.start, tracker, items, pending)
            self.arcs[source].append(Arc(EPSILON, EPSILON, self._state(match)))
            items = items | {("D", self.domain.start)}

        for label in self.labels:
            advanced = self._advance(tracker, items, pending, label)
            if advanced is None:
                continue
            self.arcs[source].append(Arc(label, label, self._state(("C",) + advanced)))

    def _expand_match(self, key: MatchKey) -> None:
        _, tau_state, domain_state, tracker, items, pending = key
        source = self.index[key]

        if tau_state in self.tau.finals:
            longest = frozenset({("D", domain_state)}) if self.domain.has_arcs(domain_state) else frozenset()
            ending = pending
            if not self.right.is_final(self.right.start):
                ending = pending | {self.right.start}
            copy = ("C", tracker, items | longest, ending)
            self.arcs[source].append(Arc(EPSILON, EPSILON, self._state(copy)))

        for arc in self.tau.arcs(tau_state):
            if arc.ilabel == EPSILON:
                target = ("M", arc.nextstate, domain_state, tracker, items, pending)
                self.arcs[source].append(Arc(EPSILON, arc.olabel, self._state(target)))
                continue
            next_domain = self.domain.step(domain_state, arc.ilabel)
            if next_domain is None:
                continue
            advanced = self._advance(tracker, items, pending, arc.ilabel)
            if advanced is None:
                continue
            target = ("M", arc.nextstate, next_domain) + advanced
            self.arcs[source].append(Arc(arc.ilabel, arc.olabel, self._state(target)))

    def build(self) -> Fst:
        tracker = self._left_step(frozenset({self.left.start}), BOS)
        self._state(("C", tracker, frozenset(), frozenset()))

        while self.queue:
            key = self.queue.popleft()
            if key[0] == "C":
                self._expand_copy(key)
            else:
                self._expand_match(key)

        return Fst(self.arcs, 0, self.finals, self.alphabet)


def _check_labels(machine: Fst, forbidden: Tuple[int, ...], name: str) -> None:
    for state in machine.states():
        for arc in machine.arcs(state):
            if arc.ilabel in forbidden or arc.olabel in forbidden:
                raise InvalidRuleError(f"Marcador de fronteira inválido em '{name}'")


def compile_rewrite(rule: RewriteRule, sigma: Optional[Fst] = None) -> Fst:
    """
    Compila uma regra de reescrita em um transdutor funcional

    Args:
        rule: regra tau / left _ right
        sigma: aceitador do fecho do alfabeto (None = todos os escalares)

    Returns:
        Fst: transdutor funcional marcado como tal

    Raises:
        InvalidRuleError: tau vazio, tau aceita a string vazia ou fronteiras fora de lugar
        AmbiguousRuleError: o transdutor compilado não é funcional
    """
    _check_labels(rule.tau, (BOS, EOS), "tau")
    _check_labels(rule.left, (EOS,), "left")
    _check_labels(rule.right, (BOS,), "right")

    if accepts(rule.tau, ""):
        raise InvalidRuleError("tau não pode aceitar a string vazia")
    if not trim(rule.tau).finals:
        raise InvalidRuleError("tau tem linguagem de entrada vazia")

    alphabet = rule.tau.alphabet | rule.left.alphabet | rule.right.alphabet
    tau = harmonize(rule.tau, alphabet)
    left = harmonize(rule.left, alphabet)
    right = harmonize(rule.right, alphabet)

    machine = _Scanner(tau, left, right, alphabet).build()
    if sigma is not None:
        machine = compose(sigma, machine)
    machine = optimize(machine)

    if not is_functional(machine):
        raise AmbiguousRuleError("A regra produz mais de uma saída para a mesma entrada")

    logger.debug(f"Regra compilada: {machine}")
    return machine.with_functional(True)
