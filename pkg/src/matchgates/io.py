"""JSON documents for gates, matrices and circuits.

Rationals are written as strings ``"p/q"`` (``"p"`` when ``q == 1``) so that
values survive JSON exactly; floats are refused on input.
"""

import json

from .algebra import format_scalar, matrix, scalar
from .matchcircuit import GatePlacement, Matchcircuit
from .matchgate import Matchgate
from .pfaffian import SkewGraph
from .realization import bits_of


class FormatError(ValueError):
    pass


def _value(v):
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise FormatError(f"rational literal must be a string or integer, got {v!r}")
    try:
        return scalar(v)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise FormatError(f"bad rational literal {v!r}") from exc


def _int(doc, key):
    v = doc.get(key)
    if isinstance(v, bool) or not isinstance(v, int):
        raise FormatError(f"field {key!r} must be an integer")
    return v


def gate_to_dict(g):
    return {
        "n": g.n,
        "inputs": list(g.inputs),
        "outputs": list(g.outputs),
        "omittable": sorted(g.omittable),
        "edges": [[i, j, format_scalar(w)] for (i, j), w in sorted(g.graph.weights.items())],
    }


def _edges(doc, n):
    edges = {}
    for e in doc.get("edges", []):
        if not isinstance(e, list) or len(e) != 3:
            raise FormatError("each edge is [i, j, \"p/q\"]")
        i, j, w = e
        if isinstance(i, bool) or isinstance(j, bool) or not isinstance(i, int) or not isinstance(j, int) or not i < j:
            raise FormatError(f"edge endpoints must be integers with i < j, got {e!r}")
        if not (1 <= i and j <= n):
            raise FormatError(f"edge {e!r} out of range")
        if (i, j) in edges:
            raise FormatError(f"duplicate edge ({i}, {j})")
        edges[(i, j)] = _value(w)
    return edges


def graph_from_dict(doc):
    if not isinstance(doc, dict):
        raise FormatError("graph document must be an object")
    n = _int(doc, "n")
    if n < 0:
        raise FormatError("n must be non-negative")
    return SkewGraph(n, _edges(doc, n))


def gate_from_dict(doc):
    g = graph_from_dict(doc)
    try:
        return Matchgate(g, doc.get("inputs", []), doc.get("outputs", []), doc.get("omittable", []))
    except (TypeError, ValueError) as exc:
        raise FormatError(str(exc)) from exc


def matrix_to_dict(m):
    return {
        "bits_in": bits_of(m.shape[0]),
        "bits_out": bits_of(m.shape[1]),
        "entries": [[format_scalar(x) for x in row] for row in m],
    }


def matrix_from_dict(doc):
    if not isinstance(doc, dict):
        raise FormatError("matrix document must be an object")
    k, l = _int(doc, "bits_in"), _int(doc, "bits_out")
    rows = doc.get("entries")
    if k < 0 or l < 0 or not isinstance(rows, list) or len(rows) != 1 << k:
        raise FormatError("entries must have 2**bits_in rows")
    if any(not isinstance(r, list) or len(r) != 1 << l for r in rows):
        raise FormatError("every row must have 2**bits_out entries")
    return matrix([[_value(x) for x in r] for r in rows])


def circuit_to_dict(c):
    gates = []
    for p in c.placements:
        entry = {"start": p.start, "kind": p.kind}
        if p.gate is not None:
            entry["gate"] = gate_to_dict(p.gate)
        else:
            entry["matrix"] = matrix_to_dict(p.matrix)
        gates.append(entry)
    return {"bits": c.bits, "gates": gates}


def circuit_from_dict(doc):
    if not isinstance(doc, dict):
        raise FormatError("circuit document must be an object")
    bits = _int(doc, "bits")
    places = []
    for entry in doc.get("gates", []):
        if not isinstance(entry, dict) or ("gate" in entry) == ("matrix" in entry):
            raise FormatError("each circuit gate needs exactly one of 'gate' or 'matrix'")
        start = _int(entry, "start")
        try:
            if "gate" in entry:
                places.append(GatePlacement(start, entry.get("kind"), gate=gate_from_dict(entry["gate"])))
            else:
                places.append(GatePlacement(start, entry.get("kind"), matrix=matrix_from_dict(entry["matrix"])))
        except FormatError:
            raise
        except ValueError as exc:
            raise FormatError(str(exc)) from exc
    return Matchcircuit(bits, places)


def detect(doc):
    """'circuit', 'matrix' or 'gate' by the keys present."""
    if not isinstance(doc, dict):
        raise FormatError("document must be a JSON object")
    if "gates" in doc:
        return "circuit"
    if "entries" in doc:
        return "matrix"
    if "n" in doc:
        return "gate"
    raise FormatError("unrecognized document")


def dumps(doc):
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def load_path(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc.msg})") from exc
