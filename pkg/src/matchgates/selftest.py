"""Seeded property suites, one per acceptance property.

Every suite takes ``(seed, cases)`` and returns a :class:`SuiteResult`.  Case
counts scale with ``cases`` (100 by default).  Each case draws from its own
random stream, so reports do not depend on suite order.
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import identity, mat_det, mat_equal, mat_inverse, mat_mul, matrix
from .decompose import FSWAP, decompose_circuit, decompose_gate
from .generators import (random_circuit, random_gate, random_gate_unit_corner, random_nonsingular, random_skew_graph,
                         random_standard_gate, rng_for)
from .io import circuit_from_dict, circuit_to_dict, dumps, gate_from_dict, gate_to_dict, matrix_from_dict, matrix_to_dict
from .matchcircuit import GatePlacement, Matchcircuit, circuit_character_graph, circuit_matrix_product, extend_matrix, validate_circuit
from .matchgate import character_matrix, compose_serial, identity_gate, parity_class
from .pfaffian import enumerate_matchings, pairing_sign, pf_definition, pf_eliminate, pf_sum
from .realization import EdgeEntrySpec, is_character_matrix, standard_gate_from_edge_entries
from .transform import extend, invert, is_reducible, peel, reduce_to_reducible, t2_targets, t4_targets


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    summary: str = ""

    @property
    def passed(self):
        return not self.failures

    def fail(self, msg):
        self.failures.append(msg)

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        text = f"{self.name}: {status} ({self.checked} cases"
        if self.failures:
            text += f", {len(self.failures)} failures"
            text += f"; {self.summary}" if self.summary else ""
            text += f"; first: {self.failures[0]}"
        return text + ")"

    def as_dict(self):
        out = {"name": self.name, "passed": self.passed, "checked": self.checked, "failures": self.failures}
        if self.summary:
            out["summary"] = self.summary
        return out


def suite_pfaffian(seed, cases):
    res = SuiteResult("pfaffian")
    for i in range(cases):
        rng = rng_for(seed, "pf", i)
        g = random_skew_graph(rng, rng.randint(0, 8))
        res.checked += 1
        if pf_eliminate(g) != pf_definition(g):
            res.fail(f"case {i}: elimination differs from the pairing sum for n={g.n}")
    for i in range(2 * cases):
        rng = rng_for(seed, "pfdet", i)
        g = random_skew_graph(rng, rng.randint(1, 10))
        res.checked += 1
        if pf_eliminate(g) ** 2 != mat_det(g.matrix()):
            res.fail(f"case {i}: Pf^2 != det for n={g.n}")
    return res


def signed_matching_sum(g, lam):
    required = [i + 1 for i, x in enumerate(lam) if x == 0]
    return sum((pairing_sign(pairs) * mono for pairs, mono in enumerate_matchings(g, required)), Fraction(0))


def suite_matchings(seed, cases):
    res = SuiteResult("matchings")
    for i in range(cases):
        rng = rng_for(seed, "match", i)
        g = random_skew_graph(rng, rng.randint(1, 8), density=0.6)
        lam = [rng.randint(0, 1) for _ in range(g.n)]
        res.checked += 1
        if pf_sum(g, lam) != signed_matching_sum(g, lam):
            res.fail(f"case {i}: PfS differs from the signed matching sum (n={g.n}, lambda={lam})")
    return res


def suite_identity(seed, cases):
    res = SuiteResult("identity")
    for k in range(1, 5):
        res.checked += 1
        if not mat_equal(character_matrix(identity_gate(k)), identity(1 << k)):
            res.fail(f"identity gate on {k} bits is not the unit matrix")
    return res


def suite_closure(seed, cases):
    res = SuiteResult("closure")
    for i in range(cases):
        rng = rng_for(seed, "closure", i)
        k, l, m = (rng.randint(0, 3) for _ in range(3))
        g1, g2 = random_gate(rng, k, l), random_gate(rng, l, m)
        prod = mat_mul(character_matrix(g1), character_matrix(g2))
        res.checked += 1
        if not mat_equal(character_matrix(compose_serial(g1, g2)), prod):
            res.fail(f"case {i}: composed gate character differs from the product ({k},{l},{m})")
        elif not is_character_matrix(prod)[0]:
            res.fail(f"case {i}: product fails membership")
    return res


def suite_standard(seed, cases):
    res = SuiteResult("standard")
    for i in range(cases):
        rng = rng_for(seed, "standard", i)
        g = random_standard_gate(rng, rng.randint(0, 3), rng.randint(0, 3))
        m = character_matrix(g)
        res.checked += 1
        if m[-1, -1] != 1:
            res.fail(f"case {i}: generator produced corner {m[-1, -1]}")
            continue
        rebuilt = standard_gate_from_edge_entries(EdgeEntrySpec.from_matrix(m))
        if not mat_equal(character_matrix(rebuilt), m):
            res.fail(f"case {i}: edge-entry reconstruction differs")
    return res


def _corpus(seed, tag, cases, ks):
    for k in ks:
        count = max(1, cases // 10) if k == 4 else cases
        for i in range(count):
            yield k, i, random_nonsingular(rng_for(seed, tag, k, i), k)


def suite_group(seed, cases):
    res = SuiteResult("group")
    for k, i, a in _corpus(seed, "group", cases, (1, 2, 3, 4)):
        res.checked += 1
        if mat_det(a) == 0:
            res.fail(f"k={k} case {i}: generator produced a singular matrix")
            continue
        inv = mat_inverse(a)
        if not mat_equal(mat_mul(a, inv), identity(1 << k)):
            res.fail(f"k={k} case {i}: A A^-1 != I")
        elif not is_character_matrix(inv)[0]:
            res.fail(f"k={k} case {i}: inverse fails membership")
        elif k == 2:
            b = random_nonsingular(rng_for(seed, "group-pair", i), 2)
            if not is_character_matrix(mat_mul(a, b))[0] or not mat_equal(invert(invert(a)[0])[0], a):
                res.fail(f"k=2 case {i}: 4x4 group property fails")
    return res


def monotone_violations(trace):
    """``(step, entry)`` pairs where an entry achieved earlier no longer holds.

    The corner counts as achieved once T1 is over, ``(2^k-2, 2^k-2)`` once T3
    is over, and every T2/T4 target once its step has run.
    """
    size = trace.source.shape[0]
    corner, nxt = (size - 1, size - 1), (size - 2, size - 2)
    held = {}
    bad = []
    cur = trace.source
    for idx, s in enumerate(trace.steps):
        if s.matrix is not None:
            cur = mat_mul(s.matrix, cur) if s.side == "left" else mat_mul(cur, s.matrix)
        if s.phase != "T1":
            held.setdefault(corner, 1)
        if s.phase == "T4":
            held.setdefault(nxt, 1)
        if s.phase in ("T2", "T4"):
            held[s.target] = 0
        bad.extend((idx, pos) for pos, val in held.items() if cur[pos] != val)
    return bad


def suite_reduction(seed, cases):
    res = SuiteResult("reduction")
    for k, i, a in _corpus(seed, "reduce", cases, (2, 3, 4)):
        res.checked += 1
        trace = reduce_to_reducible(a)
        if not mat_equal(trace.replay(), trace.result):
            res.fail(f"k={k} case {i}: replay differs")
        elif not is_reducible(trace.result):
            res.fail(f"k={k} case {i}: result not reducible")
        elif monotone_violations(trace):
            res.fail(f"k={k} case {i}: cleared entries disturbed at {monotone_violations(trace)[:3]}")
        elif {s.target for s in trace.steps if s.phase == "T2"} != set(t2_targets(k, "column") + t2_targets(k, "row")):
            res.fail(f"k={k} case {i}: T2 did not visit every edge entry of the last row and column")
        elif {s.target for s in trace.steps if s.phase == "T4"} != set(t4_targets(k, "column") + t4_targets(k, "row")):
            res.fail(f"k={k} case {i}: T4 did not visit every target")
    return res


def popcount(x):
    return bin(x).count("1")


def block_law_failures(b):
    """Violations of the block law as stated for extended gates.

    Cross blocks must vanish and ``B(2r+1,2c+1) = (-1)^(pc r + pc c) B(2r,2c)``;
    an even reducible ``B`` must equal ``peel(B) (x) I2``.
    """
    out = []
    half = b.shape[0] // 2
    for r in range(half):
        for c in range(half):
            if b[2 * r, 2 * c + 1] != 0 or b[2 * r + 1, 2 * c] != 0:
                out.append(f"cross block nonzero at ({r},{c})")
            sign = -1 if (popcount(r) + popcount(c)) % 2 else 1
            if b[2 * r + 1, 2 * c + 1] != sign * b[2 * r, 2 * c]:
                out.append(f"odd-odd entry ({r},{c}) is {b[2 * r + 1, 2 * c + 1]}, law says {sign * b[2 * r, 2 * c]}")
    if is_reducible(b) and parity_class(b) == "even":
        if not mat_equal(b, extend_matrix(peel(b), 1, half.bit_length())):
            out.append("even reducible matrix is not peel(B) (x) I2")
    return out


def suite_blocklaw(seed, cases):
    res = SuiteResult("blocklaw")
    by_class = {}
    for i in range(cases):
        rng = rng_for(seed, "block", i)
        k = rng.randint(1, 3)
        g = random_gate_unit_corner(rng, k)
        b = character_matrix(extend(g))
        res.checked += 1
        problems = block_law_failures(b)
        if problems:
            cls = parity_class(character_matrix(g))
            by_class[cls] = by_class.get(cls, 0) + 1
            res.fail(f"case {i} ({cls} gate, k={k}): {problems[0]}")
    # even reducible matrices from the reduction pipeline exercise the tensor clause
    for i in range(max(1, cases // 10)):
        b = reduce_to_reducible(random_nonsingular(rng_for(seed, "block-reduced", i), 3)).result
        res.checked += 1
        if parity_class(b) == "even" and not mat_equal(b, extend_matrix(peel(b), 1, 3)):
            res.fail(f"reduced case {i}: even reducible matrix is not peel(B) (x) I2")
    if by_class:
        res.summary = "failing gates by parity: " + ", ".join(f"{k}={v}" for k, v in sorted(by_class.items()))
    return res


def suite_circuits(seed, cases):
    res = SuiteResult("circuits")
    total = 2 * cases
    odd_interior = max(total // 4, 1)
    for i in range(total):
        rng = rng_for(seed, "circuit", i)
        c = random_circuit(rng, with_odd_interior=i < odd_interior)
        res.checked += 1
        problems = validate_circuit(c)
        if problems:
            res.fail(f"case {i}: generator produced an invalid circuit: {problems[0]}")
        elif not mat_equal(circuit_character_graph(c), circuit_matrix_product(c)):
            res.fail(f"case {i}: graph and product semantics differ; circuit: {json.dumps(circuit_to_dict(c), sort_keys=True)}")
    return res


def suite_universality(seed, cases):
    res = SuiteResult("universality")
    plan = [(3, max(1, cases // 2)), (4, max(1, cases // 20))]
    for k, count in plan:
        for i in range(count):
            a = random_nonsingular(rng_for(seed, "universal", k, i), k)
            res.checked += 1
            d = decompose_gate(a, check=False)
            if validate_circuit(d.circuit) or d.circuit.level > 2:
                res.fail(f"k={k} case {i}: decomposition is not a valid level-2 circuit")
            elif not mat_equal(circuit_matrix_product(d.circuit), a):
                res.fail(f"k={k} case {i}: decomposition product differs")
            elif d.gate_count > 500 * k ** 4:
                res.fail(f"k={k} case {i}: {d.gate_count} gates exceeds the bound")
    rng = rng_for(seed, "universal-circuit")
    c = Matchcircuit(3, [GatePlacement(1, "prefix", matrix=random_nonsingular(rng, 3)) for _ in range(2)])
    flat = decompose_circuit(c)
    res.checked += 1
    if flat.level > 2 or validate_circuit(flat) or not mat_equal(circuit_matrix_product(flat), circuit_matrix_product(c)):
        res.fail("two-gate circuit flattening failed")
    swap = matrix([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
    cz = matrix([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]])
    res.checked += 3
    if not is_character_matrix(FSWAP)[0]:
        res.fail("fSWAP fails membership")
    if is_character_matrix(swap)[0]:
        res.fail("plain SWAP passes membership")
    if is_character_matrix(cz)[0]:
        res.fail("diag(1,1,1,-1) passes membership")
    return res


def suite_formats(seed, cases):
    res = SuiteResult("formats")
    for i in range(cases):
        rng = rng_for(seed, "format", i)
        kind = i % 3
        res.checked += 1
        if kind == 0:
            g = random_gate(rng, rng.randint(0, 3), rng.randint(0, 3))
            ok = gate_from_dict(json.loads(dumps(gate_to_dict(g)))) == g
        elif kind == 1:
            m = random_nonsingular(rng, rng.randint(1, 3))
            ok = mat_equal(matrix_from_dict(json.loads(dumps(matrix_to_dict(m)))), m)
        else:
            c = random_circuit(rng)
            back = circuit_from_dict(json.loads(dumps(circuit_to_dict(c))))
            ok = dumps(circuit_to_dict(back)) == dumps(circuit_to_dict(c))
        if not ok:
            res.fail(f"case {i}: round trip changed the document")
    return res


SUITES = {
    "pfaffian": suite_pfaffian,
    "matchings": suite_matchings,
    "identity": suite_identity,
    "closure": suite_closure,
    "standard": suite_standard,
    "group": suite_group,
    "reduction": suite_reduction,
    "blocklaw": suite_blocklaw,
    "circuits": suite_circuits,
    "universality": suite_universality,
    "formats": suite_formats,
}


def run_suites(seed=0, cases=100, names=None):
    names = list(SUITES) if names is None else list(names)
    return [SUITES[n](seed, cases) for n in names]
