"""DFA/NFA types and the structural operations on them.

States are the integers ``0..n-1``.  Transition tables are indexed by state
and then by the position of a symbol in the (ordered) alphabet, so symbol
order matters everywhere: it fixes breadth-first numbering and therefore the
canonical form used for isomorphism checks.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .stateset import StateSet

Word = Sequence[str]


class NotMinimalError(ValueError):
    """Raised when an operation needs a minimal DFA and gets something else.

    ``states`` holds either a pair of equivalent states or a single
    unreachable state.
    """

    def __init__(self, message: str, states: tuple[int, ...]):
        super().__init__(message)
        self.states = states


def _check_alphabet(alphabet) -> tuple[str, ...]:
    alphabet = tuple(alphabet)
    if not alphabet:
        raise ValueError("alphabet must be non-empty")
    if len(set(alphabet)) != len(alphabet):
        raise ValueError(f"alphabet has duplicate symbols: {alphabet}")
    for sym in alphabet:
        if not isinstance(sym, str) or not sym:
            raise ValueError(f"bad symbol {sym!r}")
    return alphabet


def _as_stateset(value, n: int) -> StateSet:
    if isinstance(value, StateSet):
        if value.width != n:
            raise ValueError(f"state set of width {value.width}, expected {n}")
        return value
    return StateSet.of(value, n)


@dataclass(frozen=True)
class Dfa:
    """Complete deterministic automaton.

    ``delta[q][k]`` is the successor of state ``q`` on ``alphabet[k]``.
    """

    n: int
    alphabet: tuple[str, ...]
    delta: tuple[tuple[int, ...], ...]
    initial: int
    finals: StateSet

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a DFA needs at least one state")
        alphabet = _check_alphabet(self.alphabet)
        delta = tuple(tuple(row) for row in self.delta)
        if len(delta) != self.n:
            raise ValueError(f"expected {self.n} transition rows, got {len(delta)}")
        for q, row in enumerate(delta):
            if len(row) != len(alphabet):
                raise ValueError(f"state {q}: expected {len(alphabet)} transitions, got {len(row)}")
            for t in row:
                if not (isinstance(t, int) and 0 <= t < self.n):
                    raise ValueError(f"state {q}: transition target {t!r} out of range")
        if not 0 <= self.initial < self.n:
            raise ValueError(f"initial state {self.initial} out of range")
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "finals", _as_stateset(self.finals, self.n))

    def symbol_index(self, symbol: str) -> int:
        try:
            return self.alphabet.index(symbol)
        except ValueError:
            raise ValueError(f"symbol {symbol!r} not in alphabet {self.alphabet}") from None

    def run(self, state: int, word: Word) -> int:
        for sym in word:
            state = self.delta[state][self.symbol_index(sym)]
        return state

    def restart(self, state: int) -> "Dfa":
        """Same automaton with a different initial state."""
        return Dfa(self.n, self.alphabet, self.delta, state, self.finals)

    def as_nfa(self) -> "Nfa":
        eta = tuple(tuple(StateSet(1 << t, self.n) for t in row) for row in self.delta)
        return Nfa(self.n, self.alphabet, eta, StateSet(1 << self.initial, self.n), self.finals)


@dataclass(frozen=True)
class Nfa:
    """Nondeterministic automaton with a set of initial states and no ε-moves."""

    n: int
    alphabet: tuple[str, ...]
    eta: tuple[tuple[StateSet, ...], ...]
    initials: StateSet
    finals: StateSet

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative state count")
        alphabet = tuple(self.alphabet)
        if alphabet:
            alphabet = _check_alphabet(alphabet)
        eta = tuple(tuple(_as_stateset(s, self.n) for s in row) for row in self.eta)
        if len(eta) != self.n:
            raise ValueError(f"expected {self.n} transition rows, got {len(eta)}")
        for q, row in enumerate(eta):
            if len(row) != len(alphabet):
                raise ValueError(f"state {q}: expected {len(alphabet)} transitions, got {len(row)}")
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "eta", eta)
        object.__setattr__(self, "initials", _as_stateset(self.initials, self.n))
        object.__setattr__(self, "finals", _as_stateset(self.finals, self.n))

    def masks(self) -> list[list[int]]:
        return [[s.bits for s in row] for row in self.eta]


def _transpose(n: int, k: int, succ: Sequence[Sequence[int]]) -> list[list[int]]:
    """Reverse a relation given as successor bitmasks."""
    rev = [[0] * k for _ in range(n)]
    for p in range(n):
        for a in range(k):
            bits = succ[p][a]
            while bits:
                low = bits & -bits
                rev[low.bit_length() - 1][a] |= 1 << p
                bits ^= low
    return rev


def reverse(d: Dfa) -> Nfa:
    """Reverse a DFA: swap initial/final states and flip every transition."""
    k = len(d.alphabet)
    rev = [[0] * k for _ in range(d.n)]
    for q, row in enumerate(d.delta):
        for a, p in enumerate(row):
            rev[p][a] |= 1 << q
    return Nfa(
        d.n,
        d.alphabet,
        tuple(tuple(StateSet(b, d.n) for b in row) for row in rev),
        d.finals,
        StateSet(1 << d.initial, d.n),
    )


def reverse_nfa(m: Nfa) -> Nfa:
    rev = _transpose(m.n, len(m.alphabet), m.masks())
    return Nfa(
        m.n,
        m.alphabet,
        tuple(tuple(StateSet(b, m.n) for b in row) for row in rev),
        m.finals,
        m.initials,
    )


def _chunk_tables(succ: Sequence[Sequence[int]], n: int, k: int, chunk: int = 8):
    """Per-chunk lookup tables for fast image computation of bitmask subsets.

    ``tables[c][v][a]`` is the union of ``succ[q][a]`` over the bits ``q`` of
    the chunk value ``v`` placed at chunk ``c``.
    """
    size = 1 << chunk
    tables = []
    for c in range((n + chunk - 1) // chunk):
        base = c * chunk
        tab = [(0,) * k] * size
        for v in range(1, size):
            low = v & -v
            q = base + low.bit_length() - 1
            if q >= n:
                tab[v] = tab[v ^ low]
                continue
            prev = tab[v ^ low]
            row = succ[q]
            tab[v] = tuple(prev[a] | row[a] for a in range(k))
        tables.append(tab)
    return tables


def subset_construction(
    succ: Sequence[Sequence[int]], n: int, k: int, start: int
) -> tuple[list[int], list[list[int]]]:
    """Reachable subset construction on raw bitmasks.

    Returns the discovered subsets (index = new state, breadth-first order,
    symbols scanned in order) and the transition table over those indices.
    """
    tables = _chunk_tables(succ, n, k)
    nbytes = max(1, (n + 7) // 8)
    empty = (0,) * k
    index = {start: 0}
    subsets = [start]
    delta: list[list[int]] = []
    i = 0
    while i < len(subsets):
        s = subsets[i]
        i += 1
        acc = list(empty)
        for c, byte in enumerate(s.to_bytes(nbytes, "little")):
            if byte:
                part = tables[c][byte]
                for a in range(k):
                    acc[a] |= part[a]
        row = []
        for t in acc:
            j = index.get(t)
            if j is None:
                j = len(subsets)
                index[t] = j
                subsets.append(t)
            row.append(j)
        delta.append(row)
    return subsets, delta


def determinize(m: Nfa) -> tuple[Dfa, list[StateSet]]:
    """Subset construction from ``m.initials``, reachable subsets only.

    The empty subset is a state whenever it is reachable.  Returns the DFA and
    the subset of ``m``'s states that each new state stands for.
    """
    if not m.alphabet and not m.initials:
        raise ValueError("cannot determinize an NFA with no initial states and an empty alphabet")
    k = len(m.alphabet)
    subsets, delta = subset_construction(m.masks(), m.n, k, m.initials.bits)
    fin = m.finals.bits
    finals = StateSet.of((j for j, s in enumerate(subsets) if s & fin), len(subsets))
    dfa = Dfa(len(subsets), m.alphabet, delta, 0, finals)
    return dfa, [StateSet(s, m.n) for s in subsets]


def _closure(start: int, succ: Sequence[Sequence[int]]) -> int:
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        bits = frontier
        while bits:
            low = bits & -bits
            for t in succ[low.bit_length() - 1]:
                nxt |= t
            bits ^= low
        frontier = nxt & ~seen
        seen |= nxt
    return seen


def trim(m: Nfa) -> tuple[Nfa, dict[int, int]]:
    """Drop unreachable and empty states; survivors keep their relative order."""
    succ = m.masks()
    reach = _closure(m.initials.bits, succ)
    coreach = _closure(m.finals.bits, _transpose(m.n, len(m.alphabet), succ))
    keep = [q for q in range(m.n) if (reach & coreach) >> q & 1]
    renum = {q: i for i, q in enumerate(keep)}
    w = len(keep)

    def remap(s: StateSet) -> StateSet:
        return StateSet.of((renum[q] for q in s if q in renum), w)

    eta = tuple(tuple(remap(s) for s in m.eta[q]) for q in keep)
    return Nfa(w, m.alphabet, eta, remap(m.initials), remap(m.finals)), renum


def nfa_accepts(m: Nfa, word: Word) -> bool:
    current = m.initials.bits
    succ = m.masks()
    for sym in word:
        try:
            a = m.alphabet.index(sym)
        except ValueError:
            raise ValueError(f"symbol {sym!r} not in alphabet {m.alphabet}") from None
        nxt = 0
        bits = current
        while bits:
            low = bits & -bits
            nxt |= succ[low.bit_length() - 1][a]
            bits ^= low
        current = nxt
    return current & m.finals.bits != 0


def accepts(d: Dfa, word: Word) -> bool:
    return d.run(d.initial, word) in d.finals


def reachable_states(d: Dfa) -> list[int]:
    """States reachable from the initial state, in breadth-first order."""
    order = [d.initial]
    seen = {d.initial}
    i = 0
    while i < len(order):
        for t in d.delta[order[i]]:
            if t not in seen:
                seen.add(t)
                order.append(t)
        i += 1
    return order


def _refine(d: Dfa, states: list[int]) -> dict[int, int]:
    """Hopcroft partition refinement of ``states`` by language equivalence.

    Returns a block id for every state in ``states``.
    """
    k = len(d.alphabet)
    member = set(states)
    inv: dict[int, list[list[int]]] = {q: [[] for _ in range(k)] for q in states}
    for q in states:
        for a, t in enumerate(d.delta[q]):
            inv[t][a].append(q)

    fin = [q for q in states if q in d.finals]
    nonfin = [q for q in states if q not in d.finals]
    blocks: list[set[int]] = [set(b) for b in (fin, nonfin) if b]
    block_of = {}
    for b, blk in enumerate(blocks):
        for q in blk:
            block_of[q] = b
    work = set(range(len(blocks)))

    while work:
        splitter = set(blocks[work.pop()])
        for a in range(k):
            touched: dict[int, set[int]] = {}
            for q in splitter:
                for p in inv[q][a]:
                    touched.setdefault(block_of[p], set()).add(p)
            for b, inter in touched.items():
                if len(inter) == len(blocks[b]):
                    continue
                blocks[b] -= inter
                nb = len(blocks)
                blocks.append(inter)
                for p in inter:
                    block_of[p] = nb
                if b in work:
                    work.add(nb)
                else:
                    work.add(nb if len(inter) <= len(blocks[b]) else b)
    assert set(block_of) == member
    return block_of


def minimize(d: Dfa) -> Dfa:
    """Minimal complete DFA for L(d), numbered breadth-first from the initial state."""
    states = reachable_states(d)
    block_of = _refine(d, states)
    rep: dict[int, int] = {}
    for q in states:
        rep.setdefault(block_of[q], q)
    nb = len(rep)
    delta = [None] * nb
    finals = []
    for b, q in rep.items():
        delta[b] = [block_of[t] for t in d.delta[q]]
        if q in d.finals:
            finals.append(b)
    quotient = Dfa(nb, d.alphabet, delta, block_of[d.initial], StateSet.of(finals, nb))
    return canonical(quotient)


def check_minimal(d: Dfa) -> None:
    """Raise :class:`NotMinimalError` naming the offending states, if any."""
    states = reachable_states(d)
    if len(states) < d.n:
        q = min(set(range(d.n)) - set(states))
        raise NotMinimalError(f"state {q} is unreachable", (q,))
    block_of = _refine(d, states)
    first: dict[int, int] = {}
    for q in range(d.n):
        b = block_of[q]
        if b in first:
            raise NotMinimalError(f"states {first[b]} and {q} are equivalent", (first[b], q))
        first[b] = q


def is_minimal(d: Dfa) -> bool:
    try:
        check_minimal(d)
    except NotMinimalError:
        return False
    return True


def canonical(d: Dfa, ignore_finals: bool = False) -> Dfa:
    """Reachable part of ``d`` renumbered in breadth-first order."""
    order = reachable_states(d)
    renum = {q: i for i, q in enumerate(order)}
    delta = [[renum[t] for t in d.delta[q]] for q in order]
    finals = [] if ignore_finals else [renum[q] for q in order if q in d.finals]
    return Dfa(len(order), d.alphabet, delta, 0, StateSet.of(finals, len(order)))


def isomorphic(d1: Dfa, d2: Dfa, ignore_finals: bool = False) -> bool:
    """Whether the reachable parts of two DFAs are isomorphic.

    Raises ValueError if the alphabets differ (including symbol order).
    """
    if d1.alphabet != d2.alphabet:
        raise ValueError(f"alphabet mismatch: {d1.alphabet} vs {d2.alphabet}")
    return canonical(d1, ignore_finals) == canonical(d2, ignore_finals)


def product_reachable(dfas: Sequence[Dfa]) -> Iterable[tuple[int, ...]]:
    """Yield the reachable state tuples of the synchronous product."""
    alphabet = dfas[0].alphabet
    for d in dfas:
        if d.alphabet != alphabet:
            raise ValueError(f"alphabet mismatch: {alphabet} vs {d.alphabet}")
    start = tuple(d.initial for d in dfas)
    seen = {start}
    queue = deque([start])
    k = len(alphabet)
    while queue:
        t = queue.popleft()
        yield t
        for a in range(k):
            nxt = tuple(d.delta[q][a] for d, q in zip(dfas, t))
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)


def languages_equal(d1: Dfa, d2: Dfa) -> bool:
    """Decide L(d1) == L(d2) by emptiness of the symmetric difference."""
    for p, q in product_reachable([d1, d2]):
        if (p in d1.finals) != (q in d2.finals):
            return False
    return True
