"""
Finite-State Transducer
Transdutor sobre valores escalares Unicode: construção, combinação e aplicação
"""
import logging
from collections import deque
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Sequence, Set, Tuple, Union

from src.domain.exceptions import (
    EmptyClassError,
    InvalidRuleError,
    NoPathError,
    NonFunctionalError,
    NotAcceptorError,
)

logger = logging.getLogger(__name__)

# Rótulos reservados (negativos, nunca colidem com escalares Unicode)
EPSILON = -1
OTHER = -2
BOS = -3
EOS = -4

MAX_SCALAR = 0x10FFFF

Scalar = Union[int, str]


class Arc(NamedTuple):
    """Arco (rótulo de entrada, rótulo de saída, estado destino)"""
    ilabel: int
    olabel: int
    nextstate: int


class Fst:
    """
    Transdutor imutável.

    OTHER em um arco representa qualquer escalar fora de ``alphabet``. Quando
    dois transdutores são combinados, os alfabetos são harmonizados e os arcos
    OTHER ganham arcos explícitos para os símbolos que o outro operando conhece.
    Um arco com saída OTHER copia o escalar lido e só é permitido com entrada OTHER.
    """

    __slots__ = ("_arcs", "_start", "_finals", "_alphabet", "_functional", "_index")

    def __init__(
        self,
        arcs: Sequence[Sequence[Tuple[int, int, int]]],
        start: int = 0,
        finals: Iterable[int] = (),
        alphabet: Iterable[int] = (),
        functional: bool = False,
    ):
        states = tuple(tuple(Arc(*arc) for arc in state_arcs) for state_arcs in arcs) or ((),)
        size = len(states)
        labels: Set[int] = set(alphabet)

        for state_arcs in states:
            for arc in state_arcs:
                if not 0 <= arc.nextstate < size:
                    raise ValueError(f"Arco aponta para estado inexistente: {arc.nextstate}")
                if arc.olabel == OTHER and arc.ilabel != OTHER:
                    raise ValueError("Saída OTHER exige entrada OTHER")
                for label in (arc.ilabel, arc.olabel):
                    if label >= 0:
                        labels.add(label)

        if not 0 <= start < size:
            raise ValueError(f"Estado inicial inexistente: {start}")

        finals = frozenset(finals)
        if any(not 0 <= f < size for f in finals):
            raise ValueError("Estado final inexistente")

        self._arcs = states
        self._start = start
        self._finals = finals
        self._alphabet = frozenset(labels)
        self._functional = functional
        self._index: Optional[List[Dict[int, Tuple[Arc, ...]]]] = None

    @property
    def start(self) -> int:
        return self._start

    @property
    def finals(self) -> FrozenSet[int]:
        return self._finals

    @property
    def alphabet(self) -> FrozenSet[int]:
        return self._alphabet

    @property
    def functional(self) -> bool:
        return self._functional

    @property
    def num_states(self) -> int:
        return len(self._arcs)

    def states(self) -> range:
        return range(len(self._arcs))

    def arcs(self, state: int) -> Tuple[Arc, ...]:
        return self._arcs[state]

    def num_arcs(self) -> int:
        return sum(len(state_arcs) for state_arcs in self._arcs)

    def arcs_with_input(self, state: int, label: int) -> Tuple[Arc, ...]:
        """Arcos de ``state`` cujo rótulo de entrada é ``label`` (índice construído sob demanda)"""
        if self._index is None:
            index = []
            for state_arcs in self._arcs:
                by_label: Dict[int, List[Arc]] = {}
                for arc in state_arcs:
                    by_label.setdefault(arc.ilabel, []).append(arc)
                index.append({label: tuple(group) for label, group in by_label.items()})
            self._index = index
        return self._index[state].get(label, ())

    def is_acceptor(self) -> bool:
        return all(arc.ilabel == arc.olabel for state_arcs in self._arcs for arc in state_arcs)

    def has_other(self) -> bool:
        return any(arc.ilabel == OTHER for state_arcs in self._arcs for arc in state_arcs)

    def with_functional(self, functional: bool = True) -> "Fst":
        return Fst(self._arcs, self._start, self._finals, self._alphabet, functional)

    def resolve(self, char: str) -> int:
        """Rótulo usado para casar ``char`` neste transdutor"""
        code = ord(char)
        return code if code in self._alphabet else OTHER

    def __repr__(self) -> str:
        return (
            f"Fst(states={self.num_states}, arcs={self.num_arcs()}, "
            f"alphabet={len(self._alphabet)}, functional={self._functional})"
        )


# ==================
# Construção
# ==================

def _scalar(value: Scalar) -> int:
    if isinstance(value, str):
        if len(value) != 1:
            raise ValueError(f"Esperado um único escalar, recebido {value!r}")
        return ord(value)
    return int(value)


def literal(s: str) -> Fst:
    """Aceitador cuja linguagem é exatamente {s}"""
    labels = [ord(char) for char in s]
    arcs = [[(label, label, i + 1)] for i, label in enumerate(labels)]
    arcs.append([])
    return Fst(arcs, 0, [len(labels)])


def char_class(ranges: Sequence[Tuple[Scalar, Scalar]]) -> Fst:
    """Aceitador das strings de um escalar contido em algum dos intervalos"""
    if not ranges:
        raise EmptyClassError("char_class exige ao menos um intervalo")

    labels: Set[int] = set()
    for lo, hi in ranges:
        lo, hi = _scalar(lo), _scalar(hi)
        if lo > hi or lo < 0 or hi > MAX_SCALAR:
            raise ValueError(f"Intervalo inválido: {lo:#x}..{hi:#x}")
        labels.update(range(lo, hi + 1))

    return Fst([[(label, label, 1) for label in sorted(labels)], []], 0, [1])


def any_scalar(excluding: Sequence[Tuple[Scalar, Scalar]] = ()) -> Fst:
    """Aceitador de qualquer string de um escalar fora dos intervalos ``excluding``"""
    excluded: Set[int] = set()
    for lo, hi in excluding:
        excluded.update(range(_scalar(lo), _scalar(hi) + 1))
    return Fst([[(OTHER, OTHER, 1)], []], 0, [1], excluded)


def sigma_star() -> Fst:
    """Identidade sobre Σ*"""
    return Fst([[(OTHER, OTHER, 0)]], 0, [0], functional=True)


def boundary(label: int) -> Fst:
    """Aceitador do marcador de fronteira BOS ou EOS (só faz sentido em contextos)"""
    if label not in (BOS, EOS):
        raise ValueError("boundary aceita apenas BOS ou EOS")
    return Fst([[(label, label, 1)], []], 0, [1])


def empty() -> Fst:
    """Linguagem vazia"""
    return Fst([[]], 0, [])


# ==================
# Combinação
# ==================

def harmonize(t: Fst, alphabet: Iterable[int]) -> Fst:
    """Expande arcos OTHER para os símbolos novos de ``alphabet``"""
    alphabet = frozenset(label for label in alphabet if label >= 0)
    new_symbols = sorted(alphabet - t.alphabet)
    if not new_symbols:
        return t

    arcs = []
    for state in t.states():
        state_arcs = list(t.arcs(state))
        for arc in t.arcs(state):
            if arc.ilabel != OTHER:
                continue
            for symbol in new_symbols:
                olabel = symbol if arc.olabel == OTHER else arc.olabel
                state_arcs.append(Arc(symbol, olabel, arc.nextstate))
        arcs.append(state_arcs)
    return Fst(arcs, t.start, t.finals, t.alphabet | alphabet, t.functional)


def _harmonized(*machines: Fst) -> List[Fst]:
    alphabet = frozenset().union(*(m.alphabet for m in machines))
    return [harmonize(m, alphabet) for m in machines]


def _shifted(t: Fst, offset: int) -> List[List[Arc]]:
    return [
        [Arc(arc.ilabel, arc.olabel, arc.nextstate + offset) for arc in t.arcs(state)]
        for state in t.states()
    ]


def union(a: Fst, b: Fst) -> Fst:
    a, b = _harmonized(a, b)
    offset_b = 1 + a.num_states
    arcs = [[Arc(EPSILON, EPSILON, 1 + a.start), Arc(EPSILON, EPSILON, offset_b + b.start)]]
    arcs += _shifted(a, 1) + _shifted(b, offset_b)
    finals = {f + 1 for f in a.finals} | {f + offset_b for f in b.finals}
    return Fst(arcs, 0, finals, a.alphabet)


def union_all(machines: Sequence[Fst]) -> Fst:
    if not machines:
        return empty()
    result = machines[0]
    for machine in machines[1:]:
        result = union(result, machine)
    return result


def concat(a: Fst, b: Fst) -> Fst:
    a, b = _harmonized(a, b)
    offset_b = a.num_states
    arcs = _shifted(a, 0) + _shifted(b, offset_b)
    for final in a.finals:
        arcs[final].append(Arc(EPSILON, EPSILON, offset_b + b.start))
    return Fst(arcs, a.start, {f + offset_b for f in b.finals}, a.alphabet)


def star(a: Fst) -> Fst:
    arcs = [[Arc(EPSILON, EPSILON, 1 + a.start)]] + _shifted(a, 1)
    for final in a.finals:
        arcs[final + 1].append(Arc(EPSILON, EPSILON, 0))
    return Fst(arcs, 0, [0], a.alphabet)


def optional(a: Fst) -> Fst:
    return union(a, literal(""))


def _relabel(t: Fst, keep_input: bool) -> Fst:
    arcs = []
    for state in t.states():
        state_arcs = []
        for arc in t.arcs(state):
            if keep_input:
                state_arcs.append(Arc(arc.ilabel, EPSILON, arc.nextstate))
            else:
                state_arcs.append(Arc(EPSILON, arc.olabel, arc.nextstate))
        arcs.append(state_arcs)
    return Fst(arcs, t.start, t.finals, t.alphabet)


def cross(a: Fst, b: Fst) -> Fst:
    """Transdutor que leva toda string de L(a) a toda string de L(b)"""
    for name, operand in (("a", a), ("b", b)):
        if not operand.is_acceptor():
            raise NotAcceptorError(f"cross: operando '{name}' não é aceitador")
    if b.has_other():
        raise InvalidRuleError("cross: a saída não pode conter OTHER")

    a, b = _harmonized(a, b)
    return concat(_relabel(a, keep_input=True), _relabel(b, keep_input=False))


def project(t: Fst, side: str = "input") -> Fst:
    """Aceitador da linguagem de entrada (ou de saída) de ``t``"""
    if side not in ("input", "output"):
        raise ValueError("side deve ser 'input' ou 'output'")
    arcs = []
    for state in t.states():
        state_arcs = []
        for arc in t.arcs(state):
            label = arc.ilabel if side == "input" else arc.olabel
            state_arcs.append(Arc(label, label, arc.nextstate))
        arcs.append(state_arcs)
    return Fst(arcs, t.start, t.finals, t.alphabet)


def compose(a: Fst, b: Fst) -> Fst:
    """Relação {(x, z) : existe y, (x, y) em a e (y, z) em b}"""
    from src.domain.fst.algorithms import trim

    a, b = _harmonized(a, b)
    index: Dict[Tuple[int, int], int] = {(a.start, b.start): 0}
    queue = deque([(a.start, b.start)])
    arcs: List[List[Arc]] = [[]]
    finals: Set[int] = set()

    def target(pair: Tuple[int, int]) -> int:
        if pair not in index:
            index[pair] = len(arcs)
            arcs.append([])
            queue.append(pair)
        return index[pair]

    while queue:
        p, q = queue.popleft()
        source = index[(p, q)]
        if p in a.finals and q in b.finals:
            finals.add(source)

        for arc_a in a.arcs(p):
            if arc_a.olabel == EPSILON:
                arcs[source].append(Arc(arc_a.ilabel, EPSILON, target((arc_a.nextstate, q))))
                continue
            for arc_b in b.arcs_with_input(q, arc_a.olabel):
                arcs[source].append(
                    Arc(arc_a.ilabel, arc_b.olabel, target((arc_a.nextstate, arc_b.nextstate)))
                )

        for arc_b in b.arcs_with_input(q, EPSILON):
            arcs[source].append(Arc(EPSILON, arc_b.olabel, target((p, arc_b.nextstate))))

    result = Fst(arcs, 0, finals, a.alphabet, a.functional and b.functional)
    return trim(result)


# ==================
# Aplicação
# ==================

Config = Tuple[int, str]


def _emit(olabel: int, char: str) -> str:
    if olabel == EPSILON or olabel in (BOS, EOS):
        return ""
    if olabel == OTHER:
        return char
    return chr(olabel)


def _closure(t: Fst, configs: Iterable[Config]) -> Set[Config]:
    """Fecho sobre arcos de entrada épsilon, limitado a caminhos sem ciclos"""
    result: Set[Config] = set(configs)
    frontier = deque((config, 0) for config in result)
    limit = t.num_states

    while frontier:
        (state, out), depth = frontier.popleft()
        if depth >= limit:
            continue
        for arc in t.arcs_with_input(state, EPSILON):
            item = (arc.nextstate, out + _emit(arc.olabel, ""))
            if item not in result:
                result.add(item)
                frontier.append((item, depth + 1))
    return result


def apply(t: Fst, s: str) -> str:
    """
    Aplica um transdutor funcional a uma string

    Raises:
        NoPathError: s fora da linguagem de entrada
        NonFunctionalError: mais de uma saída distinta
    """
    configs = _closure(t, [(t.start, "")])

    for position, char in enumerate(s):
        label = t.resolve(char)
        successors: Set[Config] = set()
        for state, out in configs:
            for arc in t.arcs_with_input(state, label):
                successors.add((arc.nextstate, out + _emit(arc.olabel, char)))
        configs = _closure(t, successors)
        if not configs:
            raise NoPathError(f"Sem caminho para {s!r} na posição {position}")

    outputs = {out for state, out in configs if state in t.finals}
    if not outputs:
        raise NoPathError(f"Sem caminho completo para {s!r}")
    if len(outputs) > 1:
        raise NonFunctionalError(f"{len(outputs)} saídas distintas para {s!r}")
    return outputs.pop()


def accepts(t: Fst, s: str) -> bool:
    """Verifica se s pertence à linguagem de entrada de t"""
    states = _input_closure(t, {t.start})
    for char in s:
        label = t.resolve(char)
        states = _input_closure(
            t, {arc.nextstate for state in states for arc in t.arcs_with_input(state, label)}
        )
        if not states:
            return False
    return any(state in t.finals for state in states)


def _input_closure(t: Fst, states: Iterable[int]) -> Set[int]:
    result = set(states)
    stack = list(result)
    while stack:
        state = stack.pop()
        for arc in t.arcs_with_input(state, EPSILON):
            if arc.nextstate not in result:
                result.add(arc.nextstate)
                stack.append(arc.nextstate)
    return result
