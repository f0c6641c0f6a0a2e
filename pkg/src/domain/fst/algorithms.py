"""
FST Algorithms
Poda, remoção de épsilon, determinização, minimização e teste de funcionalidade
"""
import logging
from collections import deque
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from src.domain.fst.fst import EPSILON, OTHER, MAX_SCALAR, Arc, Fst, harmonize

logger = logging.getLogger(__name__)

# Faixa de uso privado usada para representar escalares fora do alfabeto
_FRESH_START = 0xF0000


def trim(t: Fst) -> Fst:
    """Mantém apenas estados acessíveis a partir do início e co-acessíveis a um final"""
    accessible = {t.start}
    stack = [t.start]
    reverse: Dict[int, Set[int]] = {}

    while stack:
        state = stack.pop()
        for arc in t.arcs(state):
            reverse.setdefault(arc.nextstate, set()).add(state)
            if arc.nextstate not in accessible:
                accessible.add(arc.nextstate)
                stack.append(arc.nextstate)

    coaccessible = {f for f in t.finals if f in accessible}
    stack = list(coaccessible)
    while stack:
        state = stack.pop()
        for previous in reverse.get(state, ()):
            if previous not in coaccessible:
                coaccessible.add(previous)
                stack.append(previous)

    if t.start not in coaccessible:
        return Fst([[]], 0, [], t.alphabet, t.functional)

    kept = sorted(coaccessible)
    renumber = {old: new for new, old in enumerate(kept)}
    arcs = [
        [
            Arc(arc.ilabel, arc.olabel, renumber[arc.nextstate])
            for arc in t.arcs(old)
            if arc.nextstate in renumber
        ]
        for old in kept
    ]
    finals = [renumber[f] for f in t.finals if f in renumber]
    return Fst(arcs, renumber[t.start], finals, t.alphabet, t.functional)


def _epsilon_closure(t: Fst, state: int) -> Set[int]:
    closure = {state}
    stack = [state]
    while stack:
        current = stack.pop()
        for arc in t.arcs_with_input(current, EPSILON):
            if arc.olabel == EPSILON and arc.nextstate not in closure:
                closure.add(arc.nextstate)
                stack.append(arc.nextstate)
    return closure


def rmepsilon(t: Fst) -> Fst:
    """Remove arcos ε:ε preservando a relação"""
    arcs = []
    finals = []
    for state in t.states():
        closure = _epsilon_closure(t, state)
        if closure & t.finals:
            finals.append(state)
        seen: Set[Arc] = set()
        state_arcs = []
        for member in sorted(closure):
            for arc in t.arcs(member):
                if arc.ilabel == EPSILON and arc.olabel == EPSILON:
                    continue
                if arc not in seen:
                    seen.add(arc)
                    state_arcs.append(arc)
        arcs.append(state_arcs)
    return trim(Fst(arcs, t.start, finals, t.alphabet, t.functional))


def determinize(t: Fst) -> Fst:
    """Construção de subconjuntos para aceitadores (OTHER tratado como rótulo comum)"""
    if not t.is_acceptor():
        raise ValueError("determinize exige um aceitador")
    t = rmepsilon(t)

    start: FrozenSet[int] = frozenset([t.start])
    index: Dict[FrozenSet[int], int] = {start: 0}
    queue = deque([start])
    arcs: List[List[Arc]] = [[]]
    finals: List[int] = []

    while queue:
        subset = queue.popleft()
        source = index[subset]
        if subset & t.finals:
            finals.append(source)

        by_label: Dict[int, Set[int]] = {}
        for state in subset:
            for arc in t.arcs(state):
                by_label.setdefault(arc.ilabel, set()).add(arc.nextstate)

        for label in sorted(by_label):
            target = frozenset(by_label[label])
            if target not in index:
                index[target] = len(arcs)
                arcs.append([])
                queue.append(target)
            arcs[source].append(Arc(label, label, index[target]))

    return Fst(arcs, 0, finals, t.alphabet, True)


def minimize(t: Fst) -> Fst:
    """Minimização de Moore sobre um aceitador determinístico"""
    labels = sorted({arc.ilabel for state in t.states() for arc in t.arcs(state)})
    delta: List[Dict[int, int]] = [
        {arc.ilabel: arc.nextstate for arc in t.arcs(state)} for state in t.states()
    ]
    block = [1 if state in t.finals else 0 for state in t.states()]
    count = len(set(block))

    while True:
        signatures: Dict[Tuple, int] = {}
        refined = []
        for state in t.states():
            signature = (block[state],) + tuple(
                block[delta[state][label]] if label in delta[state] else -1 for label in labels
            )
            refined.append(signatures.setdefault(signature, len(signatures)))
        block = refined
        if len(signatures) == count:
            break
        count = len(signatures)

    representative: Dict[int, int] = {}
    for state in t.states():
        representative.setdefault(block[state], state)

    arcs = [
        [Arc(arc.ilabel, arc.olabel, block[arc.nextstate]) for arc in t.arcs(representative[b])]
        for b in range(count)
    ]
    finals = {block[f] for f in t.finals}
    return trim(Fst(arcs, block[t.start], finals, t.alphabet, True))


def optimize(t: Fst) -> Fst:
    """rmepsilon; determinize + minimize para aceitadores; trim sempre"""
    result = rmepsilon(t)
    if result.is_acceptor():
        result = minimize(determinize(result))
        return trim(result).with_functional(True)
    return trim(result).with_functional(t.functional)


def _fresh_symbols(alphabet: FrozenSet[int], count: int) -> List[int]:
    symbols = []
    candidate = _FRESH_START
    while len(symbols) < count and candidate <= MAX_SCALAR:
        if candidate not in alphabet:
            symbols.append(candidate)
        candidate += 1
    return symbols


def _without_other(t: Fst) -> Fst:
    """Troca OTHER por dois escalares novos: basta para distinguir saídas copiadas"""
    expanded = harmonize(t, t.alphabet | frozenset(_fresh_symbols(t.alphabet, 2)))
    arcs = [[arc for arc in expanded.arcs(state) if arc.ilabel != OTHER] for state in expanded.states()]
    return Fst(arcs, expanded.start, expanded.finals, expanded.alphabet)


Pair = Tuple[int, int]
Delay = Tuple[Tuple[int, ...], Tuple[int, ...]]


def _square_moves(t: Fst, pair: Pair) -> Iterable[Tuple[Pair, int, int]]:
    """Movimentos do autômato quadrado: (destino, saída do lado 1, saída do lado 2)"""
    p, q = pair
    for arc in t.arcs(p):
        if arc.ilabel == EPSILON:
            yield (arc.nextstate, q), arc.olabel, EPSILON
            continue
        for other in t.arcs_with_input(q, arc.ilabel):
            yield (arc.nextstate, other.nextstate), arc.olabel, other.olabel
    for arc in t.arcs_with_input(q, EPSILON):
        yield (p, arc.nextstate), EPSILON, arc.olabel


def _advance(delay: Delay, first: int, second: int) -> Optional[Delay]:
    left = delay[0] + ((first,) if first != EPSILON else ())
    right = delay[1] + ((second,) if second != EPSILON else ())
    common = 0
    while common < len(left) and common < len(right):
        if left[common] != right[common]:
            return None
        common += 1
    return left[common:], right[common:]


def is_functional(t: Fst) -> bool:
    """
    Teste de atraso sobre o autômato quadrado podado

    Em um transdutor funcional, cada par de estados útil tem um único atraso
    e os pares finais têm atraso nulo.
    """
    t = trim(_without_other(t))
    if not t.finals:
        return True

    start = (t.start, t.start)
    accessible = {start}
    reverse: Dict[Pair, Set[Pair]] = {}
    stack = [start]
    while stack:
        pair = stack.pop()
        for target, _, _ in _square_moves(t, pair):
            reverse.setdefault(target, set()).add(pair)
            if target not in accessible:
                accessible.add(target)
                stack.append(target)

    useful = {pair for pair in accessible if pair[0] in t.finals and pair[1] in t.finals}
    stack = list(useful)
    while stack:
        pair = stack.pop()
        for previous in reverse.get(pair, ()):
            if previous not in useful:
                useful.add(previous)
                stack.append(previous)

    empty_delay: Delay = ((), ())
    delays: Dict[Pair, Delay] = {start: empty_delay}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        delay = delays[pair]
        if pair[0] in t.finals and pair[1] in t.finals and delay != empty_delay:
            return False
        for target, first, second in _square_moves(t, pair):
            if target not in useful:
                continue
            advanced = _advance(delay, first, second)
            if advanced is None:
                return False
            known = delays.get(target)
            if known is None:
                delays[target] = advanced
                queue.append(target)
            elif known != advanced:
                return False
    return True
