"""The witness DFAs whose atoms reach the complexity bounds.

``witness(n)`` has states 0..n-1 over the letters a, b, c: ``a`` is the
cycle i -> i+1 mod n, ``b`` swaps 0 and 1, and ``c`` sends n-1 to 0.  State 0
is initial and n-1 is the only final state.
"""

from __future__ import annotations

from .atoms import Atomaton
from .automata import Dfa, Nfa
from .stateset import StateSet

Transformation = tuple[int, ...]


def witness(n: int) -> Dfa:
    if n < 2:
        raise ValueError(f"witness DFAs exist for n >= 2, got {n}")
    delta = []
    for i in range(n):
        a = (i + 1) % n
        b = {0: 1, 1: 0}.get(i, i)
        c = 0 if i == n - 1 else i
        delta.append((a, b, c))
    return Dfa(n, ("a", "b", "c"), delta, 0, StateSet.of([n - 1], n))


def letter_transformations(d: Dfa) -> list[Transformation]:
    return [tuple(d.delta[q][a] for q in range(d.n)) for a in range(len(d.alphabet))]


def compose(s: Transformation, t: Transformation) -> Transformation:
    """Apply ``s`` then ``t`` (the action of a word ``uv`` with s = u, t = v)."""
    return tuple(t[x] for x in s)


def semigroup_size(d: Dfa, cap: int = 2_000_000) -> int | None:
    """Size of the transformation semigroup of ``d``, or None once it exceeds ``cap``.

    Only non-empty words are counted, so the identity is an element only if
    some word acts as the identity.
    """
    gens = letter_transformations(d)
    seen = set(gens)
    if len(seen) > cap:
        return None
    frontier = list(seen)
    while frontier:
        nxt = []
        for s in frontier:
            for g in gens:
                t = tuple(g[x] for x in s)
                if t not in seen:
                    seen.add(t)
                    if len(seen) > cap:
                        return None
                    nxt.append(t)
        frontier = nxt
    return len(seen)


def _successor_labels(S: int, n: int, letter: str) -> list[int]:
    """Successor labels of the atom state labeled by bitmask ``S``."""
    if letter == "a":
        # rotate every member forward by one
        return [((S << 1) | (S >> (n - 1))) & ((1 << n) - 1)]
    if letter == "b":
        has0, has1 = S & 1, S >> 1 & 1
        return [(S & ~3) | (has0 << 1) | has1]
    last = 1 << (n - 1)
    has0, hasl = S & 1, S & last
    if not has0 and not hasl:
        return [S, S | last]
    if has0 and hasl:
        return [S, S & ~last]
    return []


def witness_atomaton_direct(n: int) -> Atomaton:
    """Átomaton of the witness language written down from its transition rules.

    Independent of the reverse/determinize pipeline.  States are numbered by
    label encoding, so state ``i`` is labeled by the subset with bitmask ``i``.
    """
    if n < 2:
        raise ValueError(f"witness DFAs exist for n >= 2, got {n}")
    size = 1 << n
    letters = ("a", "b", "c")
    eta = []
    for S in range(size):
        eta.append(tuple(StateSet.of(_successor_labels(S, n, x), size) for x in letters))
    initials = StateSet.of((S for S in range(size) if S & 1), size)
    finals = StateSet.of([1 << (n - 1)], size)
    labels = tuple(StateSet(S, n) for S in range(size))
    return Atomaton(Nfa(size, letters, eta, initials, finals), labels, n)
