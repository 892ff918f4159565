"""Full regression sweep over every pinned value in the library.

Each check is a dict {name, expected, actual, pass}; the sweep is the
payload of the CLI's `verify paper` command and of the acceptance tests.
Output is deterministic: fixed check order, canonical encodings.
"""

from __future__ import annotations

from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any, Optional

from . import certificates, formulas, gf2, surfaces
from .surfaces import STRICT, WEAK

# chi closed forms at fixed (degree, twist): chi = (a - weight) / 4.
# Twists paired by duality share a line.
CHI_CLOSED_FORMS = (
    (4, 1, 10),
    (5, 2, 20),
    (6, 1, 35),
    (6, 3, 35),
    (6, 2, 32),
    (7, 2, 56),
    (7, 4, 56),
    (8, 3, 84),
    (8, 5, 84),
    (8, 4, 80),
    (10, 6, 160),
)

B2_VALUES = {3: 7, 4: 22, 5: 53, 6: 106}

DIM_BOUND_VALUES = (
    (3, 4, 1),
    (4, 16, 5),
    (5, 31, 5),
    (6, 65, 12),
)


def _check(name: str, expected: Any, actual: Any) -> dict[str, Any]:
    return {"name": name, "expected": expected, "actual": actual,
            "pass": expected == actual}


def _data_text(filename: str, data_dir: Optional[Path]) -> str:
    if data_dir is not None:
        return (data_dir / filename).read_text(encoding="utf-8")
    return (resources.files("evensets") / "data" / filename).read_text(encoding="utf-8")


def _code_checks(label: str, code: gf2.LinearCode, n: int, k: int, d: int,
                 distribution: dict[int, int]) -> list[dict[str, Any]]:
    return [
        _check(f"{label} length", n, code.length),
        _check(f"{label} dimension", k, code.dimension),
        _check(f"{label} minimum distance", d, gf2.minimum_distance(code)),
        _check(f"{label} weight distribution", distribution,
               gf2.weight_distribution(code)),
        _check(f"{label} parity class", "doubly-even", gf2.classify_parity(code)),
        _check(f"{label} self-orthogonal", True, gf2.is_self_orthogonal(code)),
        _check(f"{label} dual dimension", n - code.dimension,
               gf2.dual_code(code).dimension),
    ]


def run_full_verification(data_dir: Optional[Path] = None) -> dict[str, Any]:
    """Run every pinned check; data_dir overrides the bundled matrix files."""
    checks: list[dict[str, Any]] = []

    kummer = surfaces.kummer_code()
    togliatti = surfaces.togliatti_code()
    checks += _code_checks("kummer", kummer, 16, 5, 8, {0: 1, 8: 30, 16: 1})
    checks += _code_checks("togliatti", togliatti, 31, 5, 16, {0: 1, 16: 31})
    checks.append(_check("cayley weight distribution", {0: 1, 4: 1},
                         gf2.weight_distribution(surfaces.cayley_code())))
    checks.append(_check(
        "togliatti independent construction weight distribution",
        gf2.weight_distribution(togliatti),
        gf2.weight_distribution(surfaces.togliatti_simplex_construction()),
    ))

    for label, expected in (("kummer", kummer), ("togliatti", togliatti)):
        parsed = gf2.code_from_rows(
            gf2.parse_generator_matrix(_data_text(f"{label}.txt", data_dir)))
        checks.append(_check(f"{label} data file round trip", expected, parsed))

    checks.append(_check("griesmer length k=5 d=8", 16, gf2.griesmer_min_length(5, 8)))
    checks.append(_check("griesmer length k=5 d=16", 31, gf2.griesmer_min_length(5, 16)))
    checks.append(_check("griesmer length k=12 d=32", 69, gf2.griesmer_min_length(12, 32)))
    checks.append(_check("griesmer max dim n=16 d=8", 5, gf2.griesmer_max_dim(16, 8)))
    checks.append(_check("griesmer max dim n=31 d=16", 5, gf2.griesmer_max_dim(31, 16)))

    for s, b2 in B2_VALUES.items():
        checks.append(_check(f"b2 degree {s}", b2, surfaces.b2_resolution(s)))
    for s, mu, bound in DIM_BOUND_VALUES:
        checks.append(_check(
            f"strict dimension bound degree {s}", bound,
            surfaces.dim_lower_bound(surfaces.NodalSurface(s, mu), STRICT)))

    for s, modulus in ((5, 4), (6, 8), (7, 4)):
        checks.append(_check(f"strict weight modulus degree {s}", modulus,
                             surfaces.strict_weight_modulus(s)))
    for s, residue in ((4, 2), (6, 3), (8, 0)):
        checks.append(_check(f"weak weight residue degree {s}", residue,
                             surfaces.weak_weight_residue(s)))

    for s, v, a in CHI_CLOSED_FORMS:
        ok = all(formulas.chi(s, v, w) == Fraction(a - w, 4)
                 for w in range(0, 4 * s * s + 1, 4))
        checks.append(_check(f"chi closed form degree {s} twist {v}", True, ok))

    for report in (
        certificates.verify_theorem_main(),
        certificates.verify_corollary_gaps(),
        certificates.verify_concluding_table(),
        certificates.verify_example_cohomology_tables(),
    ):
        checks.append(_check(f"report {report['name']}", True, report["pass"]))

    for s, parity in certificates._proven_pairs():
        checks.append(_check(f"certificate degree {s} {parity} validates", True,
                             certificates.derive_gaps(s, parity).validate()))

    sextic = certificates.sextic_dim_certificate()
    checks.append(_check("sextic dimension certificate validates", True,
                         sextic.validate()))
    checks.append(_check("sextic dimension certificate conclusion", 12,
                         sextic.conclusion))

    return {
        "name": "full-verification",
        "checks": [
            {**c, "expected": _plain(c["expected"]), "actual": _plain(c["actual"])}
            for c in checks
        ],
        "pass": all(c["pass"] for c in checks),
    }


def _plain(value: Any) -> Any:
    """JSON-friendly encoding with deterministic form."""
    if isinstance(value, gf2.LinearCode):
        return {"length": value.length, "rows": [str(w) for w in value.basis()]}
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in sorted(value.items())}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value
