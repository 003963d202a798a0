"""Brute-force checks that do not go through the átomaton.

A word ``w`` lies in the atom labeled P exactly when P is its signature,
the set of states from which ``w`` is accepted.  Everything here is derived
from that fact and from the transformations that words induce on the DFA.
"""

from __future__ import annotations

import functools
import itertools
import random
from typing import Iterator

from .atoms import Atomaton, atom_dfa, atomaton
from .automata import Dfa, Word, is_minimal, minimize, product_reachable
from .stateset import StateSet

TUPLE_ORACLE_MAX_N = 6


def signature(d: Dfa, w: Word) -> StateSet:
    """States from which ``w`` is accepted."""
    return StateSet.of((i for i in range(d.n) if d.run(i, w) in d.finals), d.n)


def _preimage(d: Dfa, a: int, bits: int) -> int:
    out = 0
    for i in range(d.n):
        if bits >> d.delta[i][a] & 1:
            out |= 1 << i
    return out


def reachable_signatures(d: Dfa, max_len: int | None = None) -> set[StateSet]:
    """Signatures of all words, or of words up to ``max_len`` letters.

    Prepending a letter ``a`` to ``w`` maps the signature of ``w`` to its
    preimage under ``a``; the closure of the final-state set under these
    preimages is the set of all signatures.
    """
    start = d.finals.bits
    seen = {start}
    frontier = [start]
    depth = 0
    while frontier and (max_len is None or depth < max_len):
        nxt = []
        for s in frontier:
            for a in range(len(d.alphabet)):
                t = _preimage(d, a, s)
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
        depth += 1
    return {StateSet(s, d.n) for s in seen}


@functools.lru_cache(maxsize=8)
def _word_actions(d: Dfa) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """Reachable transformations of ``d``'s states, as accept-signature bitmasks and transitions.

    State ``i`` of the result is the tuple (delta(0, w), ..., delta(n-1, w))
    for the words ``w`` reaching it, starting from the identity tuple.
    """
    n = d.n
    k = len(d.alphabet)
    start = tuple(range(n))
    index = {start: 0}
    order = [start]
    delta = []
    i = 0
    while i < len(order):
        t = order[i]
        row = []
        for a in range(k):
            u = tuple(d.delta[q][a] for q in t)
            j = index.get(u)
            if j is None:
                j = len(order)
                index[u] = j
                order.append(u)
            row.append(j)
        delta.append(tuple(row))
        i += 1
    fin = d.finals
    sigs = tuple(sum(1 << j for j in range(n) if t[j] in fin) for t in order)
    return sigs, tuple(delta)


def tuple_product_atom_dfa(d: Dfa, P: StateSet) -> Dfa:
    """Minimal DFA of the atom labeled P, via the action of words on states.

    States are the tuples (delta(0, w), ..., delta(n-1, w)) reachable from the
    identity; a tuple accepts iff the states it maps into the finals are
    exactly P.
    """
    if P.width != d.n:
        raise ValueError(f"label width {P.width} does not match DFA size {d.n}")
    sigs, delta = _word_actions(d)
    finals = StateSet.of((i for i, s in enumerate(sigs) if s == P.bits), len(sigs))
    return minimize(Dfa(len(sigs), d.alphabet, delta, 0, finals))


def words(alphabet, max_len: int) -> Iterator[tuple[str, ...]]:
    for length in range(max_len + 1):
        yield from itertools.product(alphabet, repeat=length)


def partition_check(d: Dfa, max_len: int, A: Atomaton | None = None) -> bool:
    """Every short word is in exactly one atom, the one named by its signature."""
    A = A or atomaton(d)
    dfas = {P: atom_dfa(A, P) for P in A.labels}
    for w in words(d.alphabet, max_len):
        owners = [P for P, m in dfas.items() if m.run(m.initial, w) in m.finals]
        if owners != [signature(d, w)]:
            return False
    return True


def quotient_union_check(d: Dfa, i: int, A: Atomaton | None = None) -> bool:
    """The quotient at state ``i`` equals the union of the atoms whose label has ``i``."""
    A = A or atomaton(d)
    parts = [atom_dfa(A, P) for P in sorted(A.labels) if i in P]
    quotient = d.restart(i)
    machines = [quotient] + parts
    for t in product_reachable(machines):
        in_union = any(q in m.finals for m, q in zip(parts, t[1:]))
        if in_union != (t[0] in quotient.finals):
            return False
    return True


def random_dfa(n: int, alphabet, rng: random.Random) -> Dfa:
    """Uniform transitions, initial state 0, uniformly chosen non-empty finals."""
    k = len(alphabet)
    delta = [[rng.randrange(n) for _ in range(k)] for _ in range(n)]
    finals = rng.randrange(1, 1 << n)
    return Dfa(n, tuple(alphabet), delta, 0, StateSet(finals, n))


def random_minimal_dfa(n: int, alphabet, rng: random.Random, max_tries: int = 10_000) -> Dfa:
    for _ in range(max_tries):
        d = random_dfa(n, alphabet, rng)
        if is_minimal(d):
            return d
    raise RuntimeError(f"no minimal {n}-state DFA found in {max_tries} tries")
