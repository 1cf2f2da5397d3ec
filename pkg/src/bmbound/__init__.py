"""Order bounds on the minimum distance of duals of two-point AG codes
on the Beelen-Montanucci maximal curves.

The pipeline: :mod:`bmbound.curve` derives the integer invariants of
BM_n, :mod:`bmbound.tau` gives the closed-form tau map that encodes the
two-point Weierstrass semigroup at (Q1, P1), :mod:`bmbound.semigroup`
sieves the one-point semigroups, :mod:`bmbound.bound` runs the
order-bound recursion over all divisors a*Q1 + b*P1 of degree up to
4g - 1, and :mod:`bmbound.oracle` recertifies tau against an independent
monomial enumeration.  The `bmbound` command exposes all of it.
"""

from __future__ import annotations

from .bound import (
    BoundEntry,
    BoundMatrix,
    BoundTable,
    build_table,
    dual_dimension,
    goppa_bound,
    nu_p,
    nu_q,
)
from .checks import CheckResult, run_all_checks
from .curve import CurveParams, derive_params, is_prime_power
from .errors import (
    BmboundError,
    DegreeOutOfRange,
    EmptyGenerators,
    EvenOrSmallN,
    InsufficientSieveBound,
    NonCoprimeGenerators,
    NotPrimePower,
    ParamOverflow,
    WindowTooLarge,
)
from .oracle import (
    ORACLE_PERIOD_LIMIT,
    TauCertificate,
    ValuationPair,
    certify_tau,
    generator_pairs,
    tau_certificate,
    tau_envelope,
    tau_mismatches,
)
from .semigroup import (
    NumericalSemigroup,
    from_generators,
    h_p1,
    h_q1,
    p1_generators,
    q1_generators,
)
from .tau import (
    TauDecomposition,
    TauMap,
    TwoPointDivisor,
    decompose,
    dim_riemann_roch,
    nongap_at_p,
    nongap_at_q,
    tau,
    tau_inverse,
    tau_range,
    taumap_for,
    two_point_member,
    window_points,
)

__version__ = "0.1.0"

__all__ = [
    "BmboundError",
    "BoundEntry",
    "BoundMatrix",
    "BoundTable",
    "CheckResult",
    "CurveParams",
    "DegreeOutOfRange",
    "EmptyGenerators",
    "EvenOrSmallN",
    "InsufficientSieveBound",
    "NonCoprimeGenerators",
    "NotPrimePower",
    "NumericalSemigroup",
    "ORACLE_PERIOD_LIMIT",
    "ParamOverflow",
    "TauCertificate",
    "TauDecomposition",
    "TauMap",
    "TwoPointDivisor",
    "ValuationPair",
    "WindowTooLarge",
    "build_table",
    "certify_tau",
    "decompose",
    "derive_params",
    "dim_riemann_roch",
    "dual_dimension",
    "from_generators",
    "generator_pairs",
    "goppa_bound",
    "h_p1",
    "h_q1",
    "is_prime_power",
    "nongap_at_p",
    "nongap_at_q",
    "nu_p",
    "nu_q",
    "p1_generators",
    "q1_generators",
    "run_all_checks",
    "tau",
    "tau_certificate",
    "tau_envelope",
    "tau_inverse",
    "tau_mismatches",
    "tau_range",
    "taumap_for",
    "two_point_member",
    "window_points",
    "__version__",
]
