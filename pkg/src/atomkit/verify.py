"""Pipeline-versus-oracle verification on the witness family."""

from __future__ import annotations

import time
from typing import Any

from .atoms import Atomaton, atom_dfa, atom_reports, atomaton
from .automata import minimize
from .bounds import max_bound
from .oracles import TUPLE_ORACLE_MAX_N, reachable_signatures, tuple_product_atom_dfa
from .witness import witness, witness_atomaton_direct

DEFAULT_MAX_N = 7
DEEP_MAX_N = 8


def atomaton_diff(A: Atomaton, B: Atomaton) -> list[str]:
    """Differences between two átomata compared through their labels."""
    diffs = []
    if A.nfa.alphabet != B.nfa.alphabet:
        return [f"alphabets differ: {A.nfa.alphabet} vs {B.nfa.alphabet}"]
    la, lb = set(A.labels), set(B.labels)
    for p in sorted(la - lb):
        diffs.append(f"label {p.label()} only in first")
    for p in sorted(lb - la):
        diffs.append(f"label {p.label()} only in second")
    if A.initial_labels() != B.initial_labels():
        diffs.append("initial labels differ")
    if A.final_label != B.final_label:
        diffs.append(f"final label {A.final_label.label()} vs {B.final_label.label()}")
    for p in sorted(la & lb):
        for x in A.nfa.alphabet:
            sa, sb = A.successors(p, x), B.successors(p, x)
            if sa != sb:
                fmt = lambda s: "{" + ",".join(q.label() for q in sorted(s)) + "}"
                diffs.append(f"{p.label()} --{x}--> {fmt(sa)} vs {fmt(sb)}")
    return diffs


def _check(name: str, ok: bool, **detail) -> dict[str, Any]:
    return {"check": name, "ok": bool(ok), **detail}


def verify_witness(n: int, deep: bool = False, workers: int | None = 1) -> dict[str, Any]:
    """Run every check for ``witness(n)``; the verdict is ok iff all checks are."""
    limit = DEEP_MAX_N if deep else DEFAULT_MAX_N
    if not 2 <= n <= limit:
        raise ValueError(f"n must be in 2..{limit}{'' if deep else ' (use --deep for 8)'}, got {n}")
    t0 = time.perf_counter()
    d = witness(n)
    A = atomaton(d)
    checks = []

    reports = atom_reports(A, workers)
    loose = [r.to_json() for r in reports if not r.tight]
    checks.append(_check("tightness", not loose, atoms=len(reports), mismatches=loose))

    top = max(r.complexity for r in reports)
    checks.append(_check("max_complexity", top == max_bound(n)[1], got=top, expected=max_bound(n)[1]))
    checks.append(_check("atom_count", len(reports) == 2**n, got=len(reports), expected=2**n))

    diffs = atomaton_diff(A, witness_atomaton_direct(n))
    checks.append(_check("direct_atomaton", not diffs, differences=diffs[:20]))

    sigs = reachable_signatures(d)
    checks.append(_check("signatures", sigs == set(A.labels), got=len(sigs), expected=len(A.labels)))

    shrunk = []
    for P in A.labels:
        m = atom_dfa(A, P)
        if minimize(m).n != m.n:
            shrunk.append(P.label())
    checks.append(_check("atom_dfa_minimal", not shrunk, shrunk=shrunk))

    if deep and n <= TUPLE_ORACLE_MAX_N:
        by_label = {r.label: r.complexity for r in reports}
        bad = []
        for P in sorted(A.labels):
            got = tuple_product_atom_dfa(d, P).n
            if got != by_label[P]:
                bad.append({"P": list(P), "tuple_oracle": got, "atomaton": by_label[P]})
        checks.append(_check("tuple_oracle", not bad, mismatches=bad))
    elif deep:
        checks.append({"check": "tuple_oracle", "ok": True, "skipped": f"n > {TUPLE_ORACLE_MAX_N}"})

    return {
        "n": n,
        "deep": deep,
        "ok": all(c["ok"] for c in checks),
        "max_complexity": top,
        "checks": checks,
        "seconds": round(time.perf_counter() - t0, 3),
    }
