"""The átomaton of a minimal DFA and the quotient complexity of its atoms.

An atom is named by the set P of DFA states whose quotients appear
uncomplemented in it.  The átomaton is built as the reverse of the
determinized reverse of the DFA; each of its states carries the subset P
produced by the subset construction, so the state for atom A_P is simply the
state labeled P.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .automata import (
    Dfa,
    Nfa,
    check_minimal,
    determinize,
    minimize,
    reverse,
    reverse_nfa,
)
from .bounds import atom_bound
from .stateset import StateSet

MAX_SOURCE_STATES = 64


@dataclass(frozen=True)
class Atomaton:
    nfa: Nfa
    labels: tuple[StateSet, ...]
    source_n: int

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(self.labels) != self.nfa.n:
            raise ValueError("one label per átomaton state required")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("átomaton labels must be distinct")
        object.__setattr__(self, "_index", {p: i for i, p in enumerate(self.labels)})

    def state_of(self, label: StateSet) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"no atom labeled {label.label()}") from None

    @property
    def final_label(self) -> StateSet:
        (q,) = self.nfa.finals
        return self.labels[q]

    def initial_labels(self) -> set[StateSet]:
        return {self.labels[q] for q in self.nfa.initials}

    def successors(self, label: StateSet, symbol: str) -> set[StateSet]:
        a = self.nfa.alphabet.index(symbol)
        return {self.labels[q] for q in self.nfa.eta[self.state_of(label)][a]}


@dataclass(frozen=True)
class AtomReport:
    label: StateSet
    r: int
    complexity: int
    bound: int

    @property
    def tight(self) -> bool:
        return self.complexity == self.bound

    def to_json(self) -> dict:
        return {
            "P": list(self.label),
            "r": self.r,
            "complexity": self.complexity,
            "bound": str(self.bound),
            "tight": self.tight,
        }


def atomaton(d: Dfa) -> Atomaton:
    """Átomaton of L(d); ``d`` must be minimal."""
    if d.n > MAX_SOURCE_STATES:
        raise ValueError(f"source DFA has {d.n} states; at most {MAX_SOURCE_STATES} supported")
    check_minimal(d)
    rd, subsets = determinize(reverse(d))
    return Atomaton(reverse_nfa(rd.as_nfa()), tuple(subsets), d.n)


def atom_count(d: Dfa) -> int:
    return atomaton(d).nfa.n


def atom_subset_dfa(A: Atomaton, P: StateSet) -> tuple[Dfa, list[frozenset[StateSet]]]:
    """Determinized átomaton started at P, with the collection behind each state."""
    m = A.nfa
    start = A.state_of(P)
    single = Nfa(m.n, m.alphabet, m.eta, StateSet(1 << start, m.n), m.finals)
    dfa, subsets = determinize(single)
    return dfa, [frozenset(A.labels[q] for q in s) for s in subsets]


def atom_dfa(A: Atomaton, P: StateSet) -> Dfa:
    """Minimal DFA of the atom labeled P.

    The átomaton has no empty states and its reverse is deterministic, so the
    subset construction from the single state P already yields the minimal DFA.
    """
    return atom_subset_dfa(A, P)[0]


def _report(A: Atomaton, P: StateSet) -> AtomReport:
    n = A.source_n
    r = n - len(P)
    return AtomReport(P, r, atom_dfa(A, P).n, atom_bound(n, r))


_worker_atomaton: Atomaton | None = None


def _init_worker(A: Atomaton) -> None:
    global _worker_atomaton
    _worker_atomaton = A


def _worker_report(P: StateSet) -> AtomReport:
    return _report(_worker_atomaton, P)


def atom_reports(A: Atomaton, workers: int | None = 1) -> list[AtomReport]:
    """One report per atom, ordered by label encoding.

    ``workers`` > 1 spreads atoms over a process pool; None means one worker
    per CPU.
    """
    labels = sorted(A.labels)
    if workers is None:
        workers = os.cpu_count() or 1
    if workers <= 1 or len(labels) < 2:
        return [_report(A, P) for P in labels]
    with ProcessPoolExecutor(workers, initializer=_init_worker, initargs=(A,)) as pool:
        return list(pool.map(_worker_report, labels, chunksize=max(1, len(labels) // (4 * workers))))


def atom_complexities(d: Dfa, workers: int | None = 1) -> list[AtomReport]:
    return atom_reports(atomaton(d), workers)


def verify_minimality_of_atom_dfas(d: Dfa) -> bool:
    """Cross-check every atom DFA against the partition-refinement minimizer."""
    A = atomaton(d)
    for P in A.labels:
        dfa = atom_dfa(A, P)
        if minimize(dfa).n != dfa.n:
            return False
    return True
