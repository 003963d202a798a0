"""JSON and Graphviz DOT formats for automata and reports.

JSON layout::

    {"type": "dfa", "n": 3, "alphabet": ["a", "b", "c"],
     "transitions": [[1, 1, 0], [2, 0, 1], [0, 2, 0]],
     "initial": 0, "finals": [2]}

For ``"nfa"`` each transition entry is a list of target states and
``"initial"`` is a list.  An átomaton is an NFA with an extra ``"labels"``
list giving the subset each state stands for.
"""

from __future__ import annotations

import json
from typing import Any

from .atoms import Atomaton
from .automata import Dfa, Nfa
from .stateset import StateSet


class FormatError(ValueError):
    pass


def dfa_to_json(d: Dfa) -> dict[str, Any]:
    return {
        "type": "dfa",
        "n": d.n,
        "alphabet": list(d.alphabet),
        "transitions": [list(row) for row in d.delta],
        "initial": d.initial,
        "finals": list(d.finals),
    }


def nfa_to_json(m: Nfa) -> dict[str, Any]:
    return {
        "type": "nfa",
        "n": m.n,
        "alphabet": list(m.alphabet),
        "transitions": [[list(s) for s in row] for row in m.eta],
        "initial": list(m.initials),
        "finals": list(m.finals),
    }


def atomaton_to_json(A: Atomaton) -> dict[str, Any]:
    doc = nfa_to_json(A.nfa)
    doc["labels"] = [list(p) for p in A.labels]
    return doc


def to_json(obj) -> dict[str, Any]:
    if isinstance(obj, Dfa):
        return dfa_to_json(obj)
    if isinstance(obj, Nfa):
        return nfa_to_json(obj)
    if isinstance(obj, Atomaton):
        return atomaton_to_json(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _int(v, what):
    if isinstance(v, bool) or not isinstance(v, int):
        raise FormatError(f"{what} must be an integer, got {v!r}")
    return v


def _int_list(v, what):
    if not isinstance(v, list):
        raise FormatError(f"{what} must be an array, got {v!r}")
    return [_int(x, what) for x in v]


def from_json(doc: dict[str, Any]):
    """Build a Dfa, Nfa or Atomaton from a decoded JSON document."""
    if not isinstance(doc, dict):
        raise FormatError("automaton must be a JSON object")
    for key in ("type", "n", "alphabet", "transitions", "initial", "finals"):
        if key not in doc:
            raise FormatError(f"missing key {key!r}")
    kind = doc["type"]
    n = _int(doc["n"], "n")
    alphabet = doc["alphabet"]
    if not isinstance(alphabet, list) or not all(isinstance(s, str) and len(s) == 1 for s in alphabet):
        raise FormatError("alphabet must be an array of 1-character strings")
    rows = doc["transitions"]
    if not isinstance(rows, list):
        raise FormatError("transitions must be an array")
    try:
        if kind == "dfa":
            delta = [_int_list(row, "transition") for row in rows]
            return Dfa(n, tuple(alphabet), delta, _int(doc["initial"], "initial"),
                       StateSet.of(_int_list(doc["finals"], "finals"), n))
        if kind == "nfa":
            eta = []
            for row in rows:
                if not isinstance(row, list):
                    raise FormatError("transition row must be an array")
                eta.append([StateSet.of(_int_list(t, "transition"), n) for t in row])
            m = Nfa(n, tuple(alphabet), eta,
                    StateSet.of(_int_list(doc["initial"], "initial"), n),
                    StateSet.of(_int_list(doc["finals"], "finals"), n))
            if "labels" not in doc:
                return m
            labels = doc["labels"]
            source_n = doc.get("source_n")
            if source_n is None:
                source_n = max((max(p) + 1 for p in labels if p), default=0)
            return Atomaton(m, [StateSet.of(_int_list(p, "label"), source_n) for p in labels], source_n)
    except FormatError:
        raise
    except ValueError as e:
        raise FormatError(str(e)) from e
    raise FormatError(f"unknown automaton type {kind!r}")


def loads(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"invalid JSON: {e}") from e
    return from_json(doc)


def dumps(obj, indent: int | None = None) -> str:
    doc = to_json(obj)
    if isinstance(obj, Atomaton):
        doc["source_n"] = obj.source_n
    return json.dumps(doc, indent=indent)


def _quote(s: str) -> str:
    return '"{}"'.format(s.replace("\\", "\\\\").replace('"', r"\""))


def to_dot(obj, names: list[str] | None = None) -> str:
    """Graphviz source: finals drawn as double circles, parallel edges merged."""
    if isinstance(obj, Atomaton):
        if names is None:
            names = [p.label() for p in obj.labels]
        obj = obj.nfa
    if isinstance(obj, Dfa):
        n, initials, finals = obj.n, {obj.initial}, set(obj.finals)
        edges = [(q, a, t) for q, row in enumerate(obj.delta) for a, t in enumerate(row)]
    elif isinstance(obj, Nfa):
        n, initials, finals = obj.n, set(obj.initials), set(obj.finals)
        edges = [(q, a, t) for q, row in enumerate(obj.eta) for a, s in enumerate(row) for t in s]
    else:
        raise TypeError(f"cannot draw {type(obj).__name__}")
    if names is None:
        names = [str(q) for q in range(n)]
    grouped: dict[tuple[int, int], list[str]] = {}
    for q, a, t in edges:
        grouped.setdefault((q, t), []).append(obj.alphabet[a])

    lines = ["digraph {", "  rankdir=LR;"]
    for q in range(n):
        shape = "doublecircle" if q in finals else "circle"
        lines.append(f"  {q} [shape={shape}, label={_quote(names[q])}];")
    for q in sorted(initials):
        lines.append(f"  start{q} [shape=point];")
        lines.append(f"  start{q} -> {q};")
    for (q, t), syms in grouped.items():
        lines.append(f"  {q} -> {t} [label={_quote(','.join(syms))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def reports_to_json(reports) -> list[dict[str, Any]]:
    return [r.to_json() for r in reports]
