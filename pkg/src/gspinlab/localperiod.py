"""Numerical verification of the unramified local period identity.

For the lowest-rank inclusions the bi-invariant integral collapses to a
weighted sum of rank-1 spherical coefficients over the Cartan cells, which is
compared against the closed form: the normalizing zeta product times the
central tensor value over the adjoint factors at 1.  Measures are normalized
by vol(K) = 1 and vol of the unit subgroup of the torus quotient = 1.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from itertools import product as iter_product
from typing import Optional, Tuple

from .errors import (
    CentralCharacterMismatch,
    InvalidClass,
    SingularSatake,
)
from .lfactors import (
    LocalFieldData,
    SatakeClass,
    adjoint_eigenvalues,
    delta_so,
    euler_factor,
    std_eigenvalues,
    tensor_eigenvalues,
)

SINGULAR_TOL = 1e-9
CONSTRAINT_TOL = 1e-9
DEFAULT_TRUNCATION = 200
DEFAULT_TOLERANCE = 1e-8


@dataclass(frozen=True)
class SphericalRep:
    """Unramified rank-1 representation: dual similitude class plus residue data."""

    satake: SatakeClass
    field: LocalFieldData

    def __post_init__(self):
        if self.satake.family != ("odd", 1):
            raise InvalidClass("spherical coefficients are implemented for rank-1 classes")

    @property
    def alpha(self) -> complex:
        return complex(self.satake.satake[0])

    @property
    def beta(self) -> complex:
        return complex(self.satake.similitude) / complex(self.satake.satake[0])

    @property
    def q(self) -> int:
        return self.field.q


def spherical_coeff(rep: SphericalRep, k: int, limit_mode: bool = False) -> complex:
    """Normalized spherical coefficient at the depth-k Cartan cell.

    Rank-1 closed form; the singular locus alpha^2 = beta^2 raises unless
    limit_mode is set, in which case the limit formulas are used.
    """
    if k < 0:
        raise InvalidClass("depth must be nonnegative")
    alpha, beta, q = rep.alpha, rep.beta, rep.q
    if k == 0:
        return 1.0 + 0j
    x = q ** -0.5
    if abs(alpha * alpha - beta * beta) <= SINGULAR_TOL * max(abs(alpha), abs(beta)) ** 2:
        if not limit_mode:
            raise SingularSatake("alpha^2 = beta^2; enable limit_mode for the limit formula")
        if abs(alpha - beta) <= abs(alpha + beta):
            mid = (alpha + beta) / 2
            ratio = (1 - 1 / q) / (1 + 1 / q)
            return x ** k * mid ** k * (1 + k * ratio)
        mid = (alpha - beta) / 2
        if k % 2:
            return 0j
        return x ** k * mid ** k
    num = (alpha - beta / q) / (alpha - beta) * alpha ** k + (
        beta - alpha / q
    ) / (beta - alpha) * beta ** k
    return x ** k * num / (1 + 1 / q)


def spherical_coeff_oracle(rep: SphericalRep, k: int) -> complex:
    """Brute-force oracle: the induced-model integral as a finite coset sum.

    Stratify K by the bottom row (c, d) modulo depth k+1 (a point of the
    projective line over the depth-(k+1) residue ring up to scaling); the
    section value depends only on t = min(k + val c, val d), so every pair is
    enumerated and tallied exactly before the k+1 stratum values are combined
    (keeping rounding error independent of the enumeration size).
    """
    if k < 0:
        raise InvalidClass("depth must be nonnegative")
    alpha, beta, q = rep.alpha, rep.beta, rep.q
    depth = k + 1
    tallies = [0] * (k + 1)
    count = 0
    for c in iter_product(range(q), repeat=depth):
        vc = next((i for i, digit in enumerate(c) if digit), depth)
        for d in iter_product(range(q), repeat=depth):
            vd = next((i for i, digit in enumerate(d) if digit), depth)
            if vc > 0 and vd > 0:
                continue
            tallies[min(k + vc, vd)] += 1
            count += 1
    total = 0j
    for t, tally in enumerate(tallies):
        if tally:
            total += (
                tally * q ** (-(k - 2 * t) / 2.0) * alpha ** (k - t) * beta ** t
            )
    return total / count


def cartan_measure(field_data, k: int):
    """vol(K diag(pi^k, 1) K) with vol(K) = 1: 1 at depth 0, (q+1) q^(k-1) after."""
    if k < 0:
        raise InvalidClass("depth must be nonnegative")
    q = field_data.q if isinstance(field_data, LocalFieldData) else int(field_data)
    return 1 if k == 0 else (q + 1) * q ** (k - 1)


def _decay_constant(rep: SphericalRep, probe: int = 10) -> float:
    """C with |Phi_k| <= C (1+k) q^(-k/2), calibrated on the first coefficients."""
    q = rep.q
    best = 1.0
    for k in range(probe + 1):
        value = abs(spherical_coeff(rep, k, limit_mode=True))
        bound = (1 + k) * q ** (-k / 2)
        best = max(best, value / bound)
    return best


def _tail_weighted_linear(c: float, q: int, K: int) -> float:
    """2 C sum_{k>K} (1+k) q^(-k/2), in closed form."""
    x = q ** -0.5
    return 2 * c * x ** (K + 1) * ((K + 2) - (K + 1) * x) / (1 - x) ** 2


def _tail_triple(c3: float, q: int, K: int) -> float:
    """Tail of sum_k mu(k) prod_3 |Phi_i| <= C^3 (1+1/q) sum (1+k)^3 q^(-k/2)."""
    x = q ** -0.5
    scale = c3 * (1 + 1 / q)
    total = 0.0
    term = 0.0
    for k in range(K + 1, K + 2001):
        term = (1 + k) ** 3 * x ** k
        total += term
    ratio = x * ((K + 2002) / (K + 2001)) ** 3
    total += term * ratio / (1 - ratio)
    return scale * total


@dataclass(frozen=True)
class UnramifiedCharacterPair:
    """Split: values (c1, c2) at the uniformizer; inert: one value on E^x."""

    split: bool
    values: Tuple[complex, ...]

    def __post_init__(self):
        want = 2 if self.split else 1
        if len(self.values) != want:
            raise InvalidClass(f"expected {want} character value(s)")
        for v in self.values:
            if abs(abs(complex(v)) - 1) > 1e-9:
                raise InvalidClass("character values must have unit modulus")

    def satake_class(self) -> SatakeClass:
        if self.split:
            c1, c2 = (complex(v) for v in self.values)
            return SatakeClass(("even", 1, True), (c1,), c1 * c2)
        (c,) = self.values
        return SatakeClass(("even", 1, False), (1.0 + 0j,), complex(c))


def _require_constraint(omega_value: complex, product: complex):
    if abs(omega_value * omega_value - product) > CONSTRAINT_TOL:
        raise CentralCharacterMismatch(
            "omega^2 must equal the product of the central character values"
        )


def alpha_natural_n2(
    rep: SphericalRep,
    chars: UnramifiedCharacterPair,
    omega_value: complex,
    truncation: int = DEFAULT_TRUNCATION,
):
    """Truncated bi-invariant sum for the rank-2-in-rank-3 inclusion.

    Split case: sum over the integer cocharacter lattice of the torus quotient
    of Phi(diag(pi^k, 1)) against the omega-twisted character, with the
    central-character reflection for negative k.  Inert case: the compact
    quotient contributes the single unit coset, value exactly 1.
    Returns (partial_sum, tail_bound).
    """
    omega_value = complex(omega_value)
    similitude = complex(rep.satake.similitude)
    if not chars.split:
        (c,) = (complex(v) for v in chars.values)
        _require_constraint(omega_value, similitude * c)
        return 1.0 + 0j, 0.0
    c1, c2 = (complex(v) for v in chars.values)
    _require_constraint(omega_value, similitude * c1 * c2)
    ct1 = c1 / omega_value
    ct2 = c2 / omega_value
    total = 1.0 + 0j
    for k in range(1, truncation + 1):
        phi = spherical_coeff(rep, k, limit_mode=True)
        total += phi * (ct1 ** k + ct2 ** k)
    tail = _tail_weighted_linear(_decay_constant(rep), rep.q, truncation)
    return total, tail


def closed_form_n2(
    rep: SphericalRep,
    chars: UnramifiedCharacterPair,
    omega_value: complex,
    omit_delta: bool = False,
) -> complex:
    """zeta(2) L(1/2, tensor) / (L(1, Ad_sp1) L(1, chi_V)) for the rank-2 case.

    The rank-2 adjoint factor follows the single-factor convention: the split
    quotient contributes zeta(1), the inert one the quadratic twist
    (1 + q^-1)^-1; this is the unique reading under which the identity closes.
    """
    omega_value = complex(omega_value)
    fd = rep.field
    class2 = chars.satake_class()
    class3 = rep.satake
    _require_constraint(
        omega_value, complex(class3.similitude) * complex(class2.similitude)
    )
    tensor = tensor_eigenvalues(class2, class3, omega_value)
    numerator = euler_factor(0.5, tensor, fd)
    ad3 = euler_factor(1.0, adjoint_eigenvalues(class3, "sp"), fd)
    ad2 = euler_factor(1.0, adjoint_eigenvalues(class2, "so"), fd)
    delta = 1.0 if omit_delta else complex(delta_so(3, fd, mode="complex"))
    return delta * numerator / (ad3 * ad2)


def alpha_natural_n3(
    reps,
    omega_value: complex,
    truncation: int = DEFAULT_TRUNCATION,
):
    """Truncated Cartan sum for the diagonal rank-3-in-rank-4 split inclusion.

    The double K-integral collapses by bi-invariance, leaving
    sum_k vol(K m_k K) prod_i Phi_i(m_k) omega(pi^k)^-1.
    Returns (partial_sum, tail_bound).
    """
    reps = tuple(reps)
    if len(reps) != 3:
        raise InvalidClass("the triple case needs three spherical representations")
    qs = {rep.q for rep in reps}
    if len(qs) != 1:
        raise InvalidClass("representations must share the residue field")
    omega_value = complex(omega_value)
    product_sim = 1.0 + 0j
    for rep in reps:
        product_sim *= complex(rep.satake.similitude)
    _require_constraint(omega_value, product_sim)
    q = reps[0].q
    total = 0j
    for k in range(truncation + 1):
        term = cartan_measure(q, k) * omega_value ** (-k)
        for rep in reps:
            term *= spherical_coeff(rep, k, limit_mode=True)
        total += term
    c3 = 1.0
    for rep in reps:
        c3 *= _decay_constant(rep)
    tail = _tail_triple(c3, q, truncation)
    return total, tail


def closed_form_n3(reps, omega_value: complex, omit_delta: bool = False) -> complex:
    """zeta(2)^2 times the degree-8 central tensor value over the three
    adjoint factors at 1, for the split rank-4 target."""
    reps = tuple(reps)
    omega_value = complex(omega_value)
    fd = reps[0].field
    product_sim = 1.0 + 0j
    for rep in reps:
        product_sim *= complex(rep.satake.similitude)
    _require_constraint(omega_value, product_sim)
    tensor = [
        l1 * l2 * l3 / omega_value
        for l1 in std_eigenvalues(reps[0].satake)
        for l2 in std_eigenvalues(reps[1].satake)
        for l3 in std_eigenvalues(reps[2].satake)
    ]
    numerator = euler_factor(0.5, tensor, fd)
    denominator = 1.0 + 0j
    for rep in reps:
        denominator *= euler_factor(1.0, adjoint_eigenvalues(rep.satake, "sp"), fd)
    delta = 1.0 if omit_delta else complex(delta_so(4, fd, chi_value=1, mode="complex"))
    return delta * numerator / denominator


@dataclass(frozen=True)
class VerificationReport:
    case: str
    lhs_sum: complex
    rhs_closed_form: complex
    truncation_K: int
    tail_bound: float
    rel_error: float
    tolerance: float
    passed: bool

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "lhs_sum": [self.lhs_sum.real, self.lhs_sum.imag],
            "rhs_closed_form": [self.rhs_closed_form.real, self.rhs_closed_form.imag],
            "truncation_K": self.truncation_K,
            "tail_bound": self.tail_bound,
            "rel_error": self.rel_error,
            "tolerance": self.tolerance,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class PeriodCase:
    """Input bundle for one verification run."""

    case: str  # "n2_split" | "n2_inert" | "n3_split"
    reps: tuple
    chars: Optional[UnramifiedCharacterPair]
    omega_value: complex

    def __post_init__(self):
        if self.case not in ("n2_split", "n2_inert", "n3_split"):
            raise InvalidClass(f"unknown case {self.case!r}")
        if self.case.startswith("n2") and (len(self.reps) != 1 or self.chars is None):
            raise InvalidClass("rank-2 cases need one representation and characters")
        if self.case == "n3_split" and len(self.reps) != 3:
            raise InvalidClass("the triple case needs three representations")


def verify_identity(
    case: PeriodCase,
    tolerance: float = DEFAULT_TOLERANCE,
    truncation: int = DEFAULT_TRUNCATION,
    omit_delta: bool = False,
) -> VerificationReport:
    """Run the truncated sum against the closed form and certify the truncation.

    Passes iff the relative error is within tolerance and the geometric tail
    bound is itself below tolerance * |closed form|.
    """
    for rep in case.reps:
        if not rep.satake.tempered:
            raise InvalidClass("verification requires tempered representations")
    if case.case == "n3_split":
        lhs, tail = alpha_natural_n3(case.reps, case.omega_value, truncation)
        rhs = closed_form_n3(case.reps, case.omega_value, omit_delta=omit_delta)
    else:
        rep = case.reps[0]
        expected_split = case.case == "n2_split"
        if case.chars.split != expected_split:
            raise InvalidClass("character pair does not match the case")
        lhs, tail = alpha_natural_n2(rep, case.chars, case.omega_value, truncation)
        rhs = closed_form_n2(rep, case.chars, case.omega_value, omit_delta=omit_delta)
    rel_error = abs(lhs - rhs) / abs(rhs)
    passed = rel_error <= tolerance and tail <= tolerance * abs(rhs)
    return VerificationReport(
        case=case.case,
        lhs_sum=lhs,
        rhs_closed_form=rhs,
        truncation_K=truncation,
        tail_bound=tail,
        rel_error=rel_error,
        tolerance=tolerance,
        passed=passed,
    )


# -- random tempered draws -------------------------------------------------------


def _unit(rng) -> complex:
    return cmath.exp(2j * cmath.pi * rng.random())


def _tempered_rank1(q: int, rng) -> SphericalRep:
    """Random tempered rank-1 class staying away from the singular locus."""
    while True:
        a = _unit(rng)
        x0 = _unit(rng)
        beta = x0 / a
        if abs(a * a - beta * beta) > 0.05:
            return SphericalRep(SatakeClass(("odd", 1), (a,), x0), LocalFieldData(q))


def random_case(case: str, q: int, rng) -> PeriodCase:
    """Draw tempered parameters with the central character constraint built in."""
    if case == "n2_split":
        rep = _tempered_rank1(q, rng)
        c1, c2 = _unit(rng), _unit(rng)
        omega = cmath.sqrt(complex(rep.satake.similitude) * c1 * c2)
        return PeriodCase(case, (rep,), UnramifiedCharacterPair(True, (c1, c2)), omega)
    if case == "n2_inert":
        rep = _tempered_rank1(q, rng)
        c = _unit(rng)
        omega = cmath.sqrt(complex(rep.satake.similitude) * c)
        return PeriodCase(case, (rep,), UnramifiedCharacterPair(False, (c,)), omega)
    if case == "n3_split":
        reps = tuple(_tempered_rank1(q, rng) for _ in range(3))
        product_sim = 1.0 + 0j
        for rep in reps:
            product_sim *= complex(rep.satake.similitude)
        omega = cmath.sqrt(product_sim)
        return PeriodCase(case, reps, None, omega)
    raise InvalidClass(f"unknown case {case!r}")
