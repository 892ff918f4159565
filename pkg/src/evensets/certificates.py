"""Machine-checkable certificates for the per-degree minimal-weight arguments.

A certificate is an ordered list of steps.  Arithmetic steps (divisibility
lattices, chi evaluations, duality twists, instability bounds, Griesmer
sums) are re-evaluated from their recorded inputs by check_step; geometric
facts that are not arithmetic (duality identifications, vanishing,
stability dichotomies) enter as `hypothesis` steps stating the assumed
fact in plain words.  A certificate validates iff every step validates.

derive_gaps replays the argument for one (degree, parity) pair and returns
the certificate together with a gap report: the minimal weight and the
excluded weights strictly between it and the smooth-contact endpoint.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

from . import formulas, gf2, surfaces
from .surfaces import STRICT, WEAK

SCHEMA_VERSION = "1"

# Rules whose asserted output is recomputable from the recorded inputs.
ARITHMETIC_RULES = frozenset({
    "divisibility", "chi-eval", "serre-dual", "h0-lower-bound",
    "instability-exclusion", "plane-conclusion", "quadric-conclusion",
    "dimension-bound", "griesmer", "projection-kernel",
    "self-orthogonality-bound", "conclusion",
})
# Rules recording cited geometric facts or noted discrepancies; always valid.
CITED_RULES = frozenset({"hypothesis", "deviation-note"})


class UnprovenCaseError(ValueError):
    """No established argument exists for this (degree, parity) pair."""

    def __init__(self, s: int, parity: str):
        proven = (formulas.PROVEN_STRICT_DEGREES if parity == STRICT
                  else formulas.PROVEN_WEAK_DEGREES)
        super().__init__(
            f"the minimal-weight argument for degree {s} ({parity} parity) is "
            f"not established; proven degrees for this parity: {list(proven)}"
        )


@dataclass(frozen=True)
class Step:
    rule: str
    inputs: dict[str, Any]
    asserted_output: Any
    note: str = ""


@dataclass(frozen=True)
class GapReport:
    degree: int
    parity: str
    min_weight: int
    excluded_weights: tuple[int, ...]
    upper_endpoint: int


@dataclass(frozen=True)
class ProofCertificate:
    degree: int
    parity: str
    steps: tuple[Step, ...]
    conclusion: Any  # GapReport for gap certificates, an integer for dimension ones

    def validate(self) -> bool:
        return not self.invalid_steps()

    def invalid_steps(self) -> list[int]:
        return [i for i, s in enumerate(self.steps) if not check_step(s)]

    def to_dict(self) -> dict[str, Any]:
        if isinstance(self.conclusion, GapReport):
            conclusion = {
                "degree": self.conclusion.degree,
                "parity": self.conclusion.parity,
                "min_weight": self.conclusion.min_weight,
                "excluded_weights": list(self.conclusion.excluded_weights),
                "upper_endpoint": self.conclusion.upper_endpoint,
            }
        else:
            conclusion = _encode(self.conclusion)
        return {
            "schema_version": SCHEMA_VERSION,
            "degree": self.degree,
            "parity": self.parity,
            "steps": [
                {
                    "rule": s.rule,
                    "inputs": {k: _encode(v) for k, v in sorted(s.inputs.items())},
                    "asserted_output": _encode(s.asserted_output),
                    "note": s.note,
                }
                for s in self.steps
            ],
            "conclusion": conclusion,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


def _encode(value: Any) -> Any:
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, (list, tuple)):
        return [_encode(v) for v in value]
    return value


def _admissible_weights(s: int, parity: str, lower: int, upper: int) -> list[int]:
    if parity == STRICT:
        modulus, residue = surfaces.strict_weight_modulus(s), 0
    else:
        modulus, residue = 4, surfaces.weak_weight_residue(s)
    return [w for w in range(lower, upper + 1) if w % modulus == residue]


def check_step(step: Step) -> bool:
    """Re-evaluate one step from its recorded inputs."""
    rule, inp, out = step.rule, step.inputs, step.asserted_output
    if rule in CITED_RULES:
        return True
    if rule == "divisibility":
        expected = _admissible_weights(
            inp["degree"], inp["parity"], inp["lower"], inp["upper"])
        return list(out) == expected
    if rule == "chi-eval":
        return formulas.chi(inp["degree"], inp["twist"], inp["weight"]) == _as_fraction(out)
    if rule == "serre-dual":
        return formulas.serre_dual_twist(inp["degree"], inp["twist"]) == out
    if rule == "h0-lower-bound":
        chi_value = _as_fraction(inp["chi"])
        if inp.get("h2_equals_h0"):
            # chi = 2*h0 - h1 <= 2*h0, so h0 >= ceil(chi / 2).
            return out == math.ceil(chi_value / 2)
        return _as_fraction(out) == chi_value - inp["h2_bound"]
    if rule == "instability-exclusion":
        bound = formulas.unstable_lower_bound(inp["degree"], inp["twist"])
        return out == bound and bound > inp["weight_cap"]
    if rule == "plane-conclusion":
        return out == formulas.plane_contact_weight(inp["degree"])
    if rule == "quadric-conclusion":
        return out == formulas.quadric_contact_weight(inp["degree"])
    if rule == "dimension-bound":
        surface = surfaces.NodalSurface(inp["degree"], inp["nodes"])
        return out == surfaces.dim_lower_bound(surface, inp["parity"])
    if rule == "griesmer":
        length = gf2.griesmer_min_length(inp["k"], inp["d"])
        if out != length:
            return False
        budget = inp.get("length_budget")
        return budget is None or length > budget
    if rule == "projection-kernel":
        # A nonzero kernel word would be disjoint from the projected word,
        # making their sum heavier than any admissible weight.
        return inp["disjoint_sum"] > inp["max_admissible"] and out == 0
    if rule == "self-orthogonality-bound":
        return out == inp["length"] // 2
    if rule == "conclusion":
        return inp["lower"] == inp["upper"] == out
    raise ValueError(f"unknown certificate rule {rule!r}")


def _as_fraction(value: Any) -> Fraction:
    if isinstance(value, str):
        return Fraction(value)
    return Fraction(value)


@dataclass(frozen=True)
class _Case:
    degree: int
    parity: str
    twist: int               # twist at which the forcing chi is evaluated
    h2_mode: str             # "vanishes" | "equals-h0" | "at-most-one"
    cap: int                 # largest admissible weight the argument handles
    instability: Optional[tuple[int, int]] = None   # (twist, bound)
    notes: tuple[str, ...] = ()


_CASE_LIST = (
    _Case(3, STRICT, twist=2, h2_mode="vanishes", cap=4),
    _Case(4, STRICT, twist=2, h2_mode="vanishes", cap=16, notes=(
        "the source argument evaluates chi at an odd trial weight where the "
        "value is non-integral; the even-weight evaluation one below is used "
        "instead and recorded here",
    )),
    _Case(5, STRICT, twist=2, h2_mode="vanishes", cap=16),
    _Case(6, STRICT, twist=2, h2_mode="equals-h0", cap=24),
    _Case(7, STRICT, twist=4, h2_mode="at-most-one", cap=40,
          instability=(4, 42), notes=(
              "the source argument caps trial weights at 44, but the checked "
              "instability bound evaluates to 42; 42 is used (the excluded "
              "weight 40 lies below either cap)",
          )),
    _Case(8, STRICT, twist=4, h2_mode="equals-h0", cap=56, instability=(4, 64)),
    _Case(10, STRICT, twist=6, h2_mode="equals-h0", cap=112, instability=(6, 120)),
    _Case(4, WEAK, twist=1, h2_mode="vanishes", cap=6),
    _Case(6, WEAK, twist=3, h2_mode="at-most-one", cap=23, instability=(3, 27)),
    _Case(8, WEAK, twist=3, h2_mode="at-most-one", cap=56, instability=(5, 60)),
)
_CASES = {(c.degree, c.parity): c for c in _CASE_LIST}

_H2_HYPOTHESES = {
    "vanishes": "the second cohomology group at this twist vanishes (dual "
                "twist is negative) and the first is assumed nonnegative only",
    "equals-h0": "the twist is self-dual, so second and zeroth cohomology "
                 "dimensions agree",
    "at-most-one": "at most one surface of the lower contact degree can cut "
                   "out the set, bounding the dual second cohomology by 1",
}


def derive_gaps(s: int, parity: str) -> ProofCertificate:
    """Replay the minimal-weight argument for one (degree, parity) pair."""
    if parity not in surfaces.PARITIES:
        raise ValueError(f"parity must be one of {surfaces.PARITIES}, got {parity!r}")
    if parity == WEAK and s == 2:
        return _weak_degree_two_certificate()
    case = _CASES.get((s, parity))
    if case is None:
        raise UnprovenCaseError(s, parity)

    steps: list[Step] = []
    if parity == STRICT:
        modulus, residue = surfaces.strict_weight_modulus(s), 0
        min_weight = formulas.quadric_contact_weight(s)
        upper = formulas.smooth_quartic_weight(s)
        conclusion_rule = "quadric-conclusion"
    else:
        modulus, residue = 4, surfaces.weak_weight_residue(s)
        min_weight = formulas.plane_contact_weight(s)
        upper = formulas.smooth_cubic_weight(s)
        conclusion_rule = "plane-conclusion"

    lower = residue if residue else modulus
    admissible = _admissible_weights(s, parity, lower, case.cap)
    steps.append(Step(
        rule="divisibility",
        inputs={"degree": s, "parity": parity, "lower": lower, "upper": case.cap},
        asserted_output=admissible,
        note=f"weights of nonzero {parity} even sets are congruent to "
             f"{residue} mod {modulus}; the argument handles those up to {case.cap}",
    ))
    for note in case.notes:
        steps.append(Step(rule="deviation-note", inputs={}, asserted_output=True,
                          note=note))
    dual = formulas.serre_dual_twist(s, case.twist)
    steps.append(Step(
        rule="serre-dual",
        inputs={"degree": s, "twist": case.twist},
        asserted_output=dual,
        note="twist paired by duality; cohomology in top degree moves there",
    ))
    if case.instability is not None:
        inst_twist, inst_bound = case.instability
        steps.append(Step(
            rule="instability-exclusion",
            inputs={"degree": s, "twist": inst_twist, "weight_cap": case.cap},
            asserted_output=inst_bound,
            note=f"an even set unstable in degree {inst_twist} would have at "
                 f"least {inst_bound} nodes, above every weight considered",
        ))
    for w in admissible:
        steps.append(Step(
            rule="chi-eval",
            inputs={"degree": s, "twist": case.twist, "weight": w},
            asserted_output=formulas.chi(s, case.twist, w),
        ))
    boundary_chi = formulas.chi(s, case.twist, case.cap)
    steps.append(Step(rule="hypothesis", inputs={},
                      asserted_output=True, note=_H2_HYPOTHESES[case.h2_mode]))
    if case.h2_mode == "equals-h0":
        h0_inputs: dict[str, Any] = {"chi": boundary_chi, "h2_equals_h0": True}
        h0_bound = math.ceil(boundary_chi / 2)
    else:
        h2_bound = 0 if case.h2_mode == "vanishes" else 1
        h0_inputs = {"chi": boundary_chi, "h2_bound": h2_bound}
        h0_bound = boundary_chi - h2_bound
    steps.append(Step(
        rule="h0-lower-bound",
        inputs=h0_inputs,
        asserted_output=h0_bound,
        note="sections at the forcing twist exist for every admissible "
             "weight the argument handles",
    ))
    steps.append(Step(
        rule="hypothesis", inputs={}, asserted_output=True,
        note="with instability excluded, the set is semi-stable at the "
             "forcing twist and stable at the low contact degree, so a "
             "surface of that degree cuts it out",
    ))
    steps.append(Step(
        rule=conclusion_rule,
        inputs={"degree": s},
        asserted_output=min_weight,
    ))

    # Closed-form gap, cross-checked against the per-weight chain: every
    # excluded weight must sit below the argument's weight cap.
    excluded = tuple(w for w in _admissible_weights(s, parity, lower, upper - 1)
                     if w > min_weight)
    chain_excluded = tuple(w for w in admissible if min_weight < w < upper)
    if excluded != chain_excluded:
        raise AssertionError(
            f"gap mismatch for degree {s} ({parity}): closed form {excluded}, "
            f"per-weight chain {chain_excluded}"
        )
    report = GapReport(s, parity, min_weight, excluded, upper)
    return ProofCertificate(s, parity, tuple(steps), report)


def _weak_degree_two_certificate() -> ProofCertificate:
    # Quadric cone base case: the unique node is itself a weakly even set,
    # cut out by any plane through the cone's ruling.
    steps = (
        Step(rule="hypothesis", inputs={}, asserted_output=True,
             note="on the quadric cone every line passes through the node and "
                  "a plane has contact along each line, so the single node is "
                  "a weakly even set"),
        Step(rule="plane-conclusion", inputs={"degree": 2}, asserted_output=1),
    )
    report = GapReport(2, WEAK, 1, (), formulas.smooth_cubic_weight(2))
    return ProofCertificate(2, WEAK, steps, report)


def sextic_dim_certificate() -> ProofCertificate:
    """Checked chain showing the 65-node sextic code has dimension exactly 12."""
    s, mu = 6, 65
    admissible = (24, 32, 40, 56)
    steps = (
        Step(rule="dimension-bound",
             inputs={"degree": s, "nodes": mu, "parity": STRICT},
             asserted_output=12,
             note="isotropy bound: 65 - 106/2"),
        Step(rule="hypothesis", inputs={"admissible_weights": list(admissible)},
             asserted_output=True,
             note="every nonzero weight is 24, 32, 40 or 56 (cited result "
                  "beyond plain divisibility)"),
        Step(rule="hypothesis", inputs={},
             asserted_output=True,
             note="assumed: the code contains no word of weight 56 (open "
                  "whether such codes occur)"),
        Step(rule="griesmer",
             inputs={"k": 12, "d": 32, "length_budget": mu},
             asserted_output=69,
             note="a dimension-12 code with minimum distance 32 needs length "
                  "69 > 65, so a weight-24 word exists"),
        Step(rule="projection-kernel",
             inputs={"disjoint_sum": 24 + 24, "max_admissible": 40},
             asserted_output=0,
             note="projection onto the weight-24 word has trivial kernel: a "
                  "kernel word disjoint from it would sum to weight >= 48"),
        Step(rule="hypothesis", inputs={},
             asserted_output=True,
             note="for even surface degree the projection of the code onto a "
                  "codeword support keeps all weights divisible by 4"),
        Step(rule="self-orthogonality-bound",
             inputs={"length": 24},
             asserted_output=12,
             note="a doubly-even code is self-orthogonal, so twice its "
                  "dimension is at most its length"),
        Step(rule="conclusion",
             inputs={"lower": 12, "upper": 12},
             asserted_output=12),
    )
    return ProofCertificate(s, STRICT, steps, 12)


STRICT_MINIMA = {3: 4, 4: 8, 5: 16, 6: 24, 7: 36, 8: 48, 10: 80}
WEAK_MINIMA = {2: 1, 4: 6, 6: 15, 8: 28}

# Excluded-weight table, by (degree, parity), for the degrees it covers.
GAP_TABLE = {
    (6, WEAK): (19, 23),
    (8, WEAK): (32, 36, 40, 44, 48, 52, 56),
    (6, STRICT): (),
    (7, STRICT): (40,),
    (8, STRICT): (56,),
    (10, STRICT): (88, 96, 104, 112),
}

# Strictly even sets realized by known constructions, by degree.
# Long rows are arithmetic progressions of step 8.
KNOWN_STRICT_WEIGHTS = {
    3: (4,),
    4: (8, 16),
    5: (16, 20),
    6: (24, 32, 40),
    8: (48, 64) + tuple(range(72, 129, 8)),
    10: (80, 120) + tuple(range(128, 209, 8)),
}

# Cohomology table for the 16-node quartic: (weight, twist, h0, h1, h2).
QUARTIC_COHOMOLOGY_TABLE = (
    (8, 2, 2, 0, 0),
    (8, 4, 8, 0, 0),
    (16, 2, 0, 0, 0),
    (16, 4, 6, 0, 0),
    (6, 1, 1, 0, 0),
    (6, 3, 5, 0, 0),
    (10, 1, 0, 0, 0),
    (10, 3, 4, 0, 0),
)


def _proven_pairs() -> list[tuple[int, str]]:
    return ([(s, STRICT) for s in formulas.PROVEN_STRICT_DEGREES]
            + [(s, WEAK) for s in formulas.PROVEN_WEAK_DEGREES])


def verify_theorem_main() -> dict[str, Any]:
    """Compare each derived minimal weight with the closed form."""
    checks = []
    for s, parity in _proven_pairs():
        cert = derive_gaps(s, parity)
        expected = formulas.e_min(s) if parity == STRICT else formulas.e_bar_min(s)
        checks.append({
            "name": f"min-weight degree {s} {parity}",
            "expected": expected,
            "actual": cert.conclusion.min_weight,
            "pass": cert.conclusion.min_weight == expected and cert.validate(),
        })
    return _report("theorem-main", checks)


def verify_corollary_gaps() -> dict[str, Any]:
    """Compare derived excluded weights with the gap table, cell by cell."""
    checks = []
    for (s, parity), expected in sorted(GAP_TABLE.items(), key=lambda kv: (kv[0][1], kv[0][0])):
        cert = derive_gaps(s, parity)
        checks.append({
            "name": f"gap degree {s} {parity}",
            "expected": list(expected),
            "actual": list(cert.conclusion.excluded_weights),
            "pass": cert.conclusion.excluded_weights == expected,
        })
    return _report("corollary-gaps", checks)


def verify_concluding_table() -> dict[str, Any]:
    """Consistency checks for the realized strictly-even weight table."""
    checks = []
    for s, weights in sorted(KNOWN_STRICT_WEIGHTS.items()):
        modulus = surfaces.strict_weight_modulus(s)
        checks.append({
            "name": f"degree {s} divisibility",
            "expected": f"all weights divisible by {modulus}",
            "actual": list(weights),
            "pass": all(w % modulus == 0 for w in weights),
        })
        checks.append({
            "name": f"degree {s} minimum",
            "expected": formulas.e_min(s),
            "actual": min(weights),
            "pass": min(weights) == formulas.e_min(s),
        })
        if s in formulas.PROVEN_STRICT_DEGREES:
            gap = derive_gaps(s, STRICT).conclusion.excluded_weights
            checks.append({
                "name": f"degree {s} gap avoidance",
                "expected": [],
                "actual": sorted(set(weights) & set(gap)),
                "pass": not set(weights) & set(gap),
            })
    return _report("concluding-table", checks)


def verify_example_cohomology_tables() -> dict[str, Any]:
    """chi must equal h0 - h1 + h2 in every quartic cohomology table row."""
    checks = []
    for w, v, h0, h1, h2 in QUARTIC_COHOMOLOGY_TABLE:
        value = formulas.chi(4, v, w)
        checks.append({
            "name": f"quartic weight {w} twist {v}",
            "expected": h0 - h1 + h2,
            "actual": _encode(value),
            "pass": value == h0 - h1 + h2,
        })
    return _report("quartic-cohomology", checks)


def _report(name: str, checks: list[dict[str, Any]]) -> dict[str, Any]:
    return {
        "name": name,
        "checks": checks,
        "pass": all(c["pass"] for c in checks),
    }
