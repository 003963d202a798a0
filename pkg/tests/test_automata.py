import itertools

import pytest
from hypothesis import given, settings

from atomkit import (
    Dfa,
    Nfa,
    NotMinimalError,
    StateSet,
    accepts,
    atomaton,
    canonical,
    check_minimal,
    determinize,
    isomorphic,
    languages_equal,
    minimize,
    nfa_accepts,
    reverse,
    reverse_nfa,
    trim,
    witness,
)
from atomkit.automata import reachable_states

from n3_tables import ATOMATON_3, D3_RD, D3_REVERSED, collection, keyed_dfa, subset
from strategies import dfas, nfas


def words(alphabet, max_len):
    for length in range(max_len + 1):
        yield from itertools.product(alphabet, repeat=length)


def brute_min_states(d):
    """Count states of the minimal DFA by separating reachable states with short words.

    Two states of an m-state DFA are equivalent iff they agree on all words of
    length < m.
    """
    reach = reachable_states(d)
    probes = list(words(d.alphabet, max(d.n - 1, 0)))
    return len({tuple(d.run(q, w) in d.finals for w in probes) for q in reach})


# --- reverse ---------------------------------------------------------------

def test_reverse_d3_matches_table():
    r = reverse(witness(3))
    for q, row in D3_REVERSED["rows"].items():
        assert [r.eta[q][a] for a in range(3)] == [subset(t) for t in row]
    assert r.initials == subset("2")
    assert r.finals == subset("0")
    # state 0 on c goes to {0, 2}; state 2 on c has no predecessor
    assert r.eta[0][2] == StateSet.of([0, 2], 3)
    assert not r.eta[2][2]


def test_reverse_single_state():
    d = Dfa(1, ("a", "b"), [[0, 0]], 0, [0])
    assert reverse(d) == d.as_nfa()


@given(dfas())
def test_reverse_is_involution_on_dfas(d):
    assert reverse_nfa(reverse(d)) == d.as_nfa()


@given(nfas())
def test_reverse_nfa_is_involution(m):
    assert reverse_nfa(reverse_nfa(m)) == m


def test_reverse_nfa_without_transitions():
    empty = StateSet.empty(3)
    m = Nfa(3, ("a",), [[empty]] * 3, StateSet.of([0], 3), StateSet.of([1, 2], 3))
    r = reverse_nfa(m)
    assert all(not s for row in r.eta for s in row)
    assert r.initials == m.finals and r.finals == m.initials


# --- determinize -----------------------------------------------------------

def test_determinized_reverse_of_d3_matches_table():
    rd, subsets = determinize(reverse(witness(3)))
    assert rd.n == 8
    assert subsets[rd.initial] == subset(D3_RD["initial"])
    got = {subsets[q]: tuple(subsets[t] for t in rd.delta[q]) for q in range(rd.n)}
    want = {subset(k): tuple(subset(t) for t in row) for k, row in D3_RD["rows"].items()}
    assert got == want
    assert {subsets[q] for q in rd.finals} == {subset(f) for f in D3_RD["finals"]}
    table, _ = keyed_dfa(D3_RD, subset)
    assert isomorphic(rd, table)


def test_determinize_numbering_is_breadth_first():
    rd, subsets = determinize(reverse(witness(3)))
    assert [s.label() for s in subsets] == ["2", "1", "{}", "0", "02", "12", "01", "012"]


@given(dfas())
def test_determinize_of_dfa_is_isomorphic(d):
    dd, subsets = determinize(d.as_nfa())
    assert isomorphic(dd, d)
    assert all(len(s) == 1 for s in subsets)


@pytest.mark.parametrize("n", range(2, 8))
def test_reversed_witness_has_full_powerset(n):
    rd, _ = determinize(reverse(witness(n)))
    assert rd.n == 2**n


def test_determinize_rejects_degenerate_nfa():
    with pytest.raises(ValueError):
        determinize(Nfa(0, (), [], StateSet.empty(0), StateSet.empty(0)))


@settings(max_examples=150)
@given(nfas())
def test_determinize_preserves_acceptance(m):
    d, subsets = determinize(m)
    assert d.n <= 2**m.n
    assert len(set(subsets)) == d.n
    for w in words(m.alphabet, 8 if len(m.alphabet) < 3 else 5):
        assert accepts(d, w) == nfa_accepts(m, w)


# --- trim ------------------------------------------------------------------

def test_trim_identity_when_already_trim():
    m = reverse(witness(3))
    t, renum = trim(m)
    assert t == m
    assert renum == {0: 0, 1: 1, 2: 2}


def test_trim_chain():
    e = StateSet.empty(3)
    eta = [[StateSet.of([1], 3)], [StateSet.of([2], 3)], [e]]
    m = Nfa(3, ("a",), eta, StateSet.of([0], 3), StateSet.of([1], 3))
    t, renum = trim(m)
    assert renum == {0: 0, 1: 1}
    assert t.n == 2
    assert t.eta == ((StateSet.of([1], 2),), (StateSet.empty(2),))


@pytest.mark.parametrize("n", range(2, 6))
def test_trim_removes_only_empty_atom_state(n):
    A = atomaton(witness(n))
    t, renum = trim(A.nfa)
    dropped = [A.labels[q] for q in range(A.nfa.n) if q not in renum]
    assert dropped == [StateSet.empty(n)]
    assert t.n == 2**n - 1


def test_trim_can_empty_everything():
    e = StateSet.empty(2)
    m = Nfa(2, ("a",), [[e], [e]], StateSet.of([0], 2), StateSet.of([1], 2))
    t, renum = trim(m)
    assert t.n == 0 and renum == {}
    d, _ = determinize(t)
    assert d.n == 1 and not d.finals


@given(nfas())
def test_trim_preserves_language(m):
    t, _ = trim(m)
    assert isomorphic(minimize(determinize(m)[0]), minimize(determinize(t)[0]))


# --- minimize --------------------------------------------------------------

@pytest.mark.parametrize("n", range(2, 9))
def test_witness_is_minimal(n):
    d = witness(n)
    assert isomorphic(minimize(d), d)
    check_minimal(d)


def test_minimize_collapses_equivalent_states():
    d = Dfa(2, ("a",), [[1], [0]], 0, [0, 1])
    m = minimize(d)
    assert m.n == 1
    assert m.delta == ((0,),) and 0 in m.finals


def test_minimize_keeps_dead_state():
    # a then anything: needs a dead state for words starting with b
    d = Dfa(3, ("a", "b"), [[1, 2], [1, 1], [2, 2]], 0, [1])
    assert minimize(d).n == 3


@settings(max_examples=200)
@given(dfas())
def test_minimize_against_word_separation(d):
    m = minimize(d)
    assert m.n == brute_min_states(d)
    assert languages_equal(m, d)
    assert minimize(m) == m


@given(dfas())
def test_minimize_is_canonical(d):
    m = minimize(d)
    assert m == canonical(m)


def test_check_minimal_reports_states():
    d = Dfa(3, ("a",), [[1], [2], [2]], 0, [1, 2])
    with pytest.raises(NotMinimalError) as e:
        check_minimal(d)
    assert e.value.states == (1, 2)
    unreachable = Dfa(2, ("a",), [[0], [0]], 0, [0])
    with pytest.raises(NotMinimalError) as e:
        check_minimal(unreachable)
    assert e.value.states == (1,)


# --- Brzozowski determinization theorem ---------------------------------------

@settings(max_examples=200)
@given(dfas())
def test_determinizing_a_reversed_dfa_gives_a_minimal_dfa(d):
    # reversing a DFA whose states are all reachable gives an NFA without empty
    # states whose reverse is deterministic
    d = canonical(d)
    rd, _ = determinize(reverse(d))
    assert minimize(rd).n == rd.n


# --- isomorphism and acceptance ---------------------------------------------

def test_rd_isomorphic_to_reversed_atomaton_table():
    rows = ATOMATON_3["rows"]
    names = list(rows)
    index = {name: i for i, name in enumerate(names)}
    delta = [[None] * 3 for _ in names]
    for src, row in rows.items():
        for a, cell in enumerate(row):
            for dst in collection(cell):
                dst_name = dst.label() if dst else "∅"
                assert delta[index[dst_name]][a] is None
                delta[index[dst_name]][a] = index[src]
    finals = [index[s] for s in ATOMATON_3["initials"]]
    reversed_table = Dfa(8, ("a", "b", "c"), delta, index[ATOMATON_3["final"]], finals)
    rd, _ = determinize(reverse(witness(3)))
    assert isomorphic(rd, reversed_table)


@given(dfas())
def test_isomorphic_to_itself(d):
    assert isomorphic(d, d)


def test_isomorphic_rejects_alphabet_mismatch():
    d1 = Dfa(1, ("a", "b"), [[0, 0]], 0, [0])
    d2 = Dfa(1, ("b", "a"), [[0, 0]], 0, [0])
    with pytest.raises(ValueError):
        isomorphic(d1, d2)


def test_isomorphic_detects_difference():
    d1 = Dfa(2, ("a",), [[1], [0]], 0, [1])
    d2 = Dfa(2, ("a",), [[1], [1]], 0, [1])
    assert not isomorphic(d1, d2)
    assert isomorphic(d1, Dfa(2, ("a",), [[1], [0]], 0, [0]), ignore_finals=True)


def test_accepts_examples():
    d = witness(3)
    assert accepts(d, "aa")
    assert not accepts(d, "c")
    assert not accepts(d, "")
    with pytest.raises(ValueError):
        accepts(d, "x")


@given(dfas())
def test_accepts_empty_word(d):
    assert accepts(d, "") == (d.initial in d.finals)


# --- validation --------------------------------------------------------------

@pytest.mark.parametrize(
    "args",
    [
        (2, ("a",), [[0], [2]], 0, [0]),  # target out of range
        (2, ("a",), [[0]], 0, [0]),  # missing row
        (1, ("a",), [[0]], 1, [0]),  # bad initial
        (1, ("a", "a"), [[0, 0]], 0, [0]),  # duplicate symbol
        (1, (), [[]], 0, [0]),  # empty alphabet
        (1, ("a",), [[0]], 0, [3]),  # final out of range
    ],
)
def test_dfa_validation(args):
    with pytest.raises(ValueError):
        Dfa(*args)
