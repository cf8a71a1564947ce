"""Command-line entry point: ``python -m matchgates <command> ...``.

Exit status is 0 on success, 1 when a property fails or a counterexample is
found, and 2 for malformed input.
"""

import argparse
import sys

from .algebra import SingularMatrix, format_scalar, mat_det, mat_equal
from .decompose import InteriorParityViolation, decompose_gate
from .io import (FormatError, circuit_from_dict, circuit_to_dict, dumps, gate_from_dict, gate_to_dict,
                 graph_from_dict, load_path, matrix_from_dict, matrix_to_dict, detect)
from .matchcircuit import InvalidPlacement, circuit_character_graph, circuit_matrix_product
from .matchgate import character_matrix, compose_chain
from .pfaffian import pf_eliminate, pf_sum
from .realization import NotCharacterMatrix, is_character_matrix, realize_gate
from .selftest import SUITES, run_suites
from .transform import SingularInput, TheoremViolation, invert, reduce_to_reducible

OK, VIOLATION, MALFORMED = 0, 1, 2


class Malformed(Exception):
    pass


def _load(path, *kinds):
    doc = load_path(path)
    kind = detect(doc)
    if kind not in kinds:
        raise Malformed(f"{path}: expected a {' or '.join(kinds)} document, got a {kind}")
    return kind, doc


def _matrix(path):
    return matrix_from_dict(_load(path, "matrix")[1])


def cmd_pf(args, out):
    g = graph_from_dict(_load(args.graph, "gate")[1])
    out.write(format_scalar(pf_eliminate(g)) + "\n")
    return OK


def cmd_pfsum(args, out):
    _, doc = _load(args.graph, "gate")
    g = graph_from_dict(doc)
    if "lambda" in doc:
        lam = doc["lambda"]
    else:
        omit = set(doc.get("omittable", []))
        lam = [1 if i in omit else 0 for i in range(1, g.n + 1)]
    if not isinstance(lam, list) or len(lam) != g.n or any(x not in (0, 1) for x in lam):
        raise Malformed("lambda must be a 0/1 list of length n")
    out.write(format_scalar(pf_sum(g, lam)) + "\n")
    return OK


def cmd_char(args, out):
    g = gate_from_dict(_load(args.gate, "gate")[1])
    out.write(dumps(matrix_to_dict(character_matrix(g))))
    return OK


def cmd_verify(args, out):
    if is_character_matrix(_matrix(args.matrix))[0]:
        out.write("character matrix\n")
        return OK
    out.write("NOT a character matrix\n")
    return VIOLATION


def cmd_realize(args, out):
    try:
        g = realize_gate(_matrix(args.matrix))
    except NotCharacterMatrix:
        out.write("NOT a character matrix\n")
        return VIOLATION
    out.write(dumps(gate_to_dict(g)))
    return OK


def cmd_invert(args, out):
    a = _matrix(args.matrix)
    if a.shape[0] != a.shape[1]:
        raise Malformed("matrix must be square")
    if not is_character_matrix(a)[0]:
        raise Malformed("input is not a character matrix")
    try:
        inv, witness = invert(a)
    except SingularMatrix as exc:
        raise Malformed(str(exc)) from exc
    except TheoremViolation:
        out.write("COUNTEREXAMPLE: inverse fails membership\n")
        out.write(dumps(matrix_to_dict(a)))
        return VIOLATION
    out.write(dumps({"inverse": matrix_to_dict(inv), "witness": gate_to_dict(compose_chain(witness))}))
    return OK


def cmd_reduce(args, out):
    a = _matrix(args.matrix)
    try:
        trace = reduce_to_reducible(a)
    except (SingularInput, ValueError) as exc:
        raise Malformed(str(exc)) from exc
    steps = [{"phase": s.phase, "side": s.side, "bits": list(s.bits),
              "target": list(s.target) if s.target else None, "applied": s.matrix is not None}
             for s in trace.steps]
    report = {"steps": steps, "counts": trace.phase_counts(), "result": matrix_to_dict(trace.result),
              "replay_exact": mat_equal(trace.replay(), trace.result)}
    out.write(dumps(report))
    return OK if report["replay_exact"] else VIOLATION


def cmd_decompose(args, out):
    kind, doc = _load(args.source, "matrix", "gate")
    a = matrix_from_dict(doc) if kind == "matrix" else character_matrix(gate_from_dict(doc))
    if a.shape[0] != a.shape[1]:
        raise Malformed("matrix must be square")
    if mat_det(a) == 0 or not is_character_matrix(a)[0]:
        raise Malformed("decomposition needs a nonsingular character matrix")
    try:
        d = decompose_gate(a, args.context)
    except InteriorParityViolation as exc:
        raise Malformed(str(exc)) from exc
    out.write(dumps({"circuit": circuit_to_dict(d.circuit), "counts": d.counts}))
    return OK


def cmd_simulate(args, out):
    c = circuit_from_dict(_load(args.circuit, "circuit")[1])
    try:
        if args.method == "product":
            out.write(dumps(matrix_to_dict(circuit_matrix_product(c))))
            return OK
        if args.method == "graph":
            out.write(dumps(matrix_to_dict(circuit_character_graph(c))))
            return OK
        prod, graph = circuit_matrix_product(c), circuit_character_graph(c)
    except InvalidPlacement as exc:
        raise Malformed(str(exc)) from exc
    if mat_equal(prod, graph):
        out.write("EQUAL\n")
        return OK
    out.write("MISMATCH\n")
    out.write(dumps({"counterexample": circuit_to_dict(c), "product": matrix_to_dict(prod),
                     "graph": matrix_to_dict(graph)}))
    return VIOLATION


def cmd_selftest(args, out):
    names = args.suite or list(SUITES)
    results = sorted(run_suites(args.seed, args.cases, names), key=lambda r: r.name)
    passed = all(r.passed for r in results)
    if args.json:
        out.write(dumps({"seed": args.seed, "cases": args.cases, "passed": passed,
                         "suites": [r.as_dict() for r in results]}))
    else:
        for r in results:
            out.write(r.line() + "\n")
        out.write(f"selftest seed={args.seed} cases={args.cases}: {'PASS' if passed else 'FAIL'}\n")
    return OK if passed else VIOLATION


def _seed(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("seed must be non-negative")
    return v


def build_parser():
    p = argparse.ArgumentParser(prog="matchgates", description="Exact matchgate and matchcircuit tools.")
    sub = p.add_subparsers(dest="command", required=True)
    for name, arg, fn, help_ in [
        ("pf", "graph", cmd_pf, "Pfaffian of a graph (gate file; only n and edges are read)"),
        ("pfsum", "graph", cmd_pfsum, "Pfaffian sum; lambda from 'lambda' or the omittable nodes"),
        ("char", "gate", cmd_char, "character matrix of a gate"),
        ("verify", "matrix", cmd_verify, "decide character-matrix membership"),
        ("realize", "matrix", cmd_realize, "a gate realizing a character matrix"),
        ("invert", "matrix", cmd_invert, "inverse of a nonsingular character matrix, with witness gate"),
        ("reduce", "matrix", cmd_reduce, "T1-T4 reduction trace to a reducible matrix"),
    ]:
        sp = sub.add_parser(name, help=help_)
        sp.add_argument(arg)
        sp.set_defaults(func=fn)
    sp = sub.add_parser("decompose", help="level-2 circuit for a nonsingular matrix or gate")
    sp.add_argument("source")
    sp.add_argument("--context", choices=["prefix", "interior"], default="prefix")
    sp.set_defaults(func=cmd_decompose)
    sp = sub.add_parser("simulate", help="character matrix of a circuit")
    sp.add_argument("circuit")
    sp.add_argument("--method", choices=["product", "graph", "both"], default="product")
    sp.set_defaults(func=cmd_simulate)
    sp = sub.add_parser("selftest", help="seeded randomized property suites")
    sp.add_argument("--seed", type=_seed, default=0)
    sp.add_argument("--cases", type=int, default=100)
    sp.add_argument("--suite", action="append", choices=sorted(SUITES))
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_selftest)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return MALFORMED if exc.code else OK
    try:
        return args.func(args, out)
    except (Malformed, FormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return MALFORMED
    except (ValueError, TypeError) as exc:
        print(f"error: malformed input: {exc}", file=sys.stderr)
        return MALFORMED
