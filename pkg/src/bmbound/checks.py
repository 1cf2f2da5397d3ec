"""Self-contained consistency checks, one result object per property.

These back the `check` CLI subcommand but do no I/O themselves; each
function recomputes what it needs and reports pass/fail with a short
human-readable detail line.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bound import build_table
from .curve import CurveParams
from .oracle import ORACLE_PERIOD_LIMIT, tau_certificate
from .semigroup import h_p1, h_q1, p1_generators, q1_generators
from .tau import TwoPointDivisor, tau_range, taumap_for


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def check_tau_certificate(params: CurveParams) -> CheckResult:
    """Sum identity plus, for small periods, the full monomial envelope."""
    cert = tau_certificate(params)
    if cert.envelope_window is None:
        scope = f"envelope skipped (period {params.period} > {ORACLE_PERIOD_LIMIT})"
    elif cert.mismatches:
        scope = f"{len(cert.mismatches)} envelope mismatches"
    else:
        scope = f"envelope matches on [-{cert.envelope_window}, {cert.envelope_window}]"
    detail = f"sum identity {'ok' if cert.sum_identity_ok else 'FAILED'}; {scope}"
    return CheckResult(name="tau-certificate", passed=cert.ok, detail=detail)


def check_tau_inverse_roundtrip(params: CurveParams) -> CheckResult:
    """tau_inverse(tau(i)) == i on two periods around zero."""
    tm = taumap_for(params)
    w = 2 * params.period
    tv = tau_range(params, -w, w)
    bad = [
        i
        for i, t in zip(range(-w, w + 1), tv)
        if tm.tau_inverse(int(t)) != i
    ]
    return CheckResult(
        name="tau-inverse-roundtrip",
        passed=not bad,
        detail=(
            f"{len(bad)} failures on [-{w}, {w}]" if bad else f"exact on [-{w}, {w}]"
        ),
    )


def check_semigroup_genus(params: CurveParams) -> CheckResult:
    """Both one-point semigroups have exactly genus gaps."""
    results = []
    for label, gens in (("P1", p1_generators(params)), ("Q1", q1_generators(params))):
        bound = 2 * params.genus + max(gens)
        sg = h_p1(params, bound) if label == "P1" else h_q1(params, bound)
        results.append((label, sg.gap_count))
    passed = all(count == params.genus for _, count in results)
    detail = ", ".join(f"H({label}) has {count} gaps" for label, count in results)
    return CheckResult(
        name="semigroup-genus", passed=passed, detail=f"{detail}; genus {params.genus}"
    )


def check_dimension_steps(params: CurveParams) -> CheckResult:
    """dim L grows by exactly the nongap indicator in each direction, on
    an exhaustive low-degree region."""
    tm = taumap_for(params)
    cap = min(params.delta_cap, 60)
    bad = 0
    checked = 0
    for delta in range(0, cap + 1):
        for a in range(delta + 1):
            b = delta - a
            dim = tm.dim_riemann_roch(TwoPointDivisor(a, b))
            if a > 0:
                step = dim - tm.dim_riemann_roch(TwoPointDivisor(a - 1, b))
                bad += step != int(tm.nongap_at_q(b, a))
                checked += 1
            if b > 0:
                step = dim - tm.dim_riemann_roch(TwoPointDivisor(a, b - 1))
                bad += step != int(tm.nongap_at_p(a, b))
                checked += 1
    return CheckResult(
        name="riemann-roch-steps",
        passed=bad == 0,
        detail=f"{bad} of {checked} steps wrong on degrees <= {cap}",
    )


def check_table_dominates_goppa(params: CurveParams) -> CheckResult:
    """Every matrix cell is at least the Goppa bound of its degree, and
    the seeded outer diagonal equals it exactly."""
    mat, _ = build_table(params)
    cap = mat.delta_cap
    g2 = 2 * params.genus
    worst = None
    for delta in range(cap + 1):
        a = np.arange(delta + 1)
        diag = mat.cells[a, delta - a]
        margin = int(diag.min()) - (delta - g2 + 2)
        if delta == cap and (diag != delta - g2 + 2).any():
            worst = -1
            break
        if worst is None or margin < worst:
            worst = margin
    return CheckResult(
        name="table-vs-goppa",
        passed=worst is not None and worst >= 0,
        detail=f"minimum margin over Goppa is {worst} on degrees <= {cap}",
    )


def run_all_checks(params: CurveParams) -> list[CheckResult]:
    return [
        check_tau_certificate(params),
        check_tau_inverse_roundtrip(params),
        check_semigroup_genus(params),
        check_dimension_steps(params),
        check_table_dominates_goppa(params),
    ]
