"""Atoms of regular languages: átomata, atom complexities and their bounds."""

from .atoms import (
    Atomaton,
    AtomReport,
    atom_complexities,
    atom_count,
    atom_dfa,
    atom_reports,
    atom_subset_dfa,
    atomaton,
    verify_minimality_of_atom_dfas,
)
from .automata import (
    Dfa,
    Nfa,
    NotMinimalError,
    accepts,
    canonical,
    check_minimal,
    determinize,
    is_minimal,
    isomorphic,
    languages_equal,
    minimize,
    nfa_accepts,
    reverse,
    reverse_nfa,
    trim,
)
from .bounds import (
    atom_bound,
    atom_bound_closed,
    binom,
    decimal_string,
    growth_ratio,
    max_bound,
    symmetry_check,
)
from .stateset import StateSet
from .witness import semigroup_size, witness, witness_atomaton_direct

__all__ = [
    "Atomaton", "AtomReport", "Dfa", "Nfa", "NotMinimalError", "StateSet",
    "accepts", "atom_bound", "atom_bound_closed", "atom_complexities", "atom_count",
    "atom_dfa", "atom_reports", "atom_subset_dfa", "atomaton", "binom", "canonical",
    "check_minimal", "decimal_string", "determinize", "growth_ratio", "is_minimal",
    "isomorphic", "languages_equal", "max_bound", "minimize", "nfa_accepts", "reverse",
    "reverse_nfa", "semigroup_size", "symmetry_check", "trim",
    "verify_minimality_of_atom_dfas", "witness", "witness_atomaton_direct",
]
