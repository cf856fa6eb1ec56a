"""The two-block closure family: lambda ceilings, F_k, J_k, I_k, socle.

Fix positive integers s <= l, block sizes m and n, and a power k.  With
lambda_a = ceil(a*l/s), the set F_k collects every monomial

    x_{i_1} ... x_{i_(ks-a)} * y_{j_1} ... y_{j_(lambda_a)},   a = 0 .. ks,

in m x-variables and n y-variables.  J_k is the ideal F_k generates and
I_k = (x_i^(ks), y_j^(kl)) the pure-power ideal it closes over.  The family
satisfies a tight bundle of identities (J_k = J^k = closure(I_k), an exact
ceiling inequality, a socle description) and ``verify_all`` machine-checks
each of them on a concrete spec, reporting per-check pass/fail with the
offending vector on failure.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import comb

from .errors import GeneratorBudgetError
from .ideals import MonomialIdeal, minimalize, power
from .newton import closure, pure_power_member
from .normality import NormalityReport, is_normal

DEFAULT_F_BUDGET = 10**6


@dataclass(frozen=True)
class TwoExponentSpec:
    """Parameters (m, n, s, l, k); requires l >= s so ceilings round up."""

    m: int
    n: int
    s: int
    l: int
    k: int = 1

    def __post_init__(self):
        for name in ("m", "n", "s", "l", "k"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be a positive integer")
        if self.l < self.s:
            raise ValueError(
                f"l must be >= s (swap the blocks): got s={self.s}, l={self.l}"
            )

    @property
    def dim(self) -> int:
        return self.m + self.n

    def alpha_vector(self) -> tuple[int, ...]:
        """Pure-power exponents of I_k: ks on the x-block, kl on the y-block."""
        return (self.k * self.s,) * self.m + (self.k * self.l,) * self.n


@dataclass(frozen=True)
class LambdaWitness:
    """One evaluated instance of the ceiling inequality.

    Records the division (ks-1)*l = t*s + r with 1 <= r <= s (t can be
    negative when ks = 1) and both sides, already compared: lhs >= rhs.
    """

    s: int
    l: int
    k: int
    i: int
    t: int
    r: int
    lhs: Fraction
    rhs: Fraction


@dataclass(frozen=True)
class VerificationCheck:
    name: str
    passed: bool
    detail: str = ""
    offender: tuple[int, ...] | None = None


@dataclass(frozen=True)
class TwoExponentReport:
    spec: TwoExponentSpec
    checks: tuple[VerificationCheck, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)


def lambda_ceil(a: int, s: int, l: int) -> int:
    """ceil(a*l/s) in integer arithmetic."""
    if a < 0:
        raise ValueError(f"lambda index must be >= 0, got {a}")
    if s < 1 or l < 1:
        raise ValueError("s and l must be positive")
    return (a * l + s - 1) // s


def check_lambda_inequality(s: int, l: int, k: int) -> list[LambdaWitness]:
    """Evaluate kl(ks-i-1) + lambda_i >= (ks-i)(lambda_(ks-1) - (s-r)/s).

    Runs over every i in 0..ks and returns all evaluations; any violation
    raises immediately since it would mean the arithmetic itself is broken.
    """
    if l < s:
        raise ValueError("requires l >= s")
    ks = k * s
    value = (ks - 1) * l
    r = (value - 1) % s + 1
    t = (value - r) // s
    lam_top = lambda_ceil(ks - 1, s, l)
    witnesses = []
    for i in range(ks + 1):
        lhs = Fraction(k * l * (ks - i - 1) + lambda_ceil(i, s, l))
        rhs = (ks - i) * (lam_top - Fraction(s - r, s))
        if lhs < rhs:
            raise AssertionError(
                f"ceiling inequality violated at s={s} l={l} k={k} i={i}: "
                f"{lhs} < {rhs}"
            )
        witnesses.append(LambdaWitness(s, l, k, i, t, r, lhs, rhs))
    return witnesses


def _compositions(total: int, parts: int):
    """Weak compositions of ``total`` into ``parts`` nonnegative ints."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _f_count(spec: TwoExponentSpec) -> int:
    total = 0
    ks = spec.k * spec.s
    for a in range(ks + 1):
        lam = lambda_ceil(a, spec.s, spec.l)
        total += comb(ks - a + spec.m - 1, spec.m - 1) * comb(
            lam + spec.n - 1, spec.n - 1
        )
    return total


def generators_F(spec: TwoExponentSpec, budget: int = DEFAULT_F_BUDGET) -> list:
    """All exponent vectors (u | w) with sum(u) = ks - a, sum(w) = lambda_a.

    The count is computed combinatorially first and checked against
    ``budget`` so a huge spec fails fast instead of enumerating forever.
    Output is lex-sorted and duplicate-free (the x-degree determines a).
    """
    count = _f_count(spec)
    if count > budget:
        raise GeneratorBudgetError(
            f"spec would enumerate {count} generators, over the budget {budget}"
        )
    ks = spec.k * spec.s
    out = []
    for a in range(ks + 1):
        lam = lambda_ceil(a, spec.s, spec.l)
        for u in _compositions(ks - a, spec.m):
            for w in _compositions(lam, spec.n):
                out.append(u + w)
    out.sort()
    return out


def ideal_J(spec: TwoExponentSpec, budget: int = DEFAULT_F_BUDGET) -> MonomialIdeal:
    """The ideal generated by F_k (whose generators it already minimally lists)."""
    return minimalize(generators_F(spec, budget), spec.dim)


def ideal_I(spec: TwoExponentSpec) -> MonomialIdeal:
    """The pure-power ideal (x_1^ks, ..., x_m^ks, y_1^kl, ..., y_n^kl)."""
    alpha = spec.alpha_vector()
    dim = spec.dim
    gens = [
        tuple(alpha[i] if j == i else 0 for j in range(dim)) for i in range(dim)
    ]
    return MonomialIdeal(dim, tuple(gens))


def socle_generators(spec: TwoExponentSpec) -> list:
    """Vectors (u | w) with sum(u) = ks - e, sum(w) = lambda_e - 1, e = 1..ks.

    These generate (J_k : (all variables)) modulo J_k; ``verify_all`` in the
    test suite confirms that against the intersection-of-colons route rather
    than assuming it.
    """
    ks = spec.k * spec.s
    out = []
    for e in range(1, ks + 1):
        lam = lambda_ceil(e, spec.s, spec.l)
        for u in _compositions(ks - e, spec.m):
            for w in _compositions(lam - 1, spec.n):
                out.append(u + w)
    out.sort()
    return out


def verify_all(
    spec: TwoExponentSpec,
    budget: int = DEFAULT_F_BUDGET,
    max_generators: int | None = None,
) -> TwoExponentReport:
    """Machine-check the family's five identities on one concrete spec.

    1. every generator of J_k is integral over I_k (inside its polyhedron);
    2. J_k equals the k-th power of J_1, the power computed independently;
    3. J_k equals the integral closure of I_k;
    4. every socle-formula vector lies outside the polyhedron of I_k;
    5. J_1 is normal.
    """
    alpha = spec.alpha_vector()
    J = ideal_J(spec, budget)
    checks = []

    offender = None
    for g in J.generators:
        if not pure_power_member(alpha, g):
            offender = g
            break
    checks.append(
        VerificationCheck(
            "generators_integral",
            offender is None,
            "every J_k generator is inside NP(I_k)",
            offender,
        )
    )

    J1 = ideal_J(replace(spec, k=1), budget)
    powered = power(J1, spec.k)
    offender = None
    if powered.generators != J.generators:
        mine = set(J.generators)
        offender = next(
            (g for g in powered.generators if g not in mine),
            next((g for g in J.generators if g not in set(powered.generators)), None),
        )
    checks.append(
        VerificationCheck(
            "power_identity",
            powered.generators == J.generators,
            "J_1^k and J_k have identical generators",
            offender,
        )
    )

    closed = closure(ideal_I(spec), max_generators)
    offender = None
    if closed.generators != J.generators:
        mine = set(J.generators)
        offender = next(
            (g for g in closed.generators if g not in mine),
            next((g for g in J.generators if g not in set(closed.generators)), None),
        )
    checks.append(
        VerificationCheck(
            "closure_identity",
            closed.generators == J.generators,
            "closure(I_k) and J_k have identical generators",
            offender,
        )
    )

    offender = None
    for v in socle_generators(spec):
        if pure_power_member(alpha, v):
            offender = v
            break
    checks.append(
        VerificationCheck(
            "socle_outside",
            offender is None,
            "every socle vector is outside NP(I_k)",
            offender,
        )
    )

    base = replace(spec, k=1)
    report: NormalityReport = is_normal(
        ideal_J(base, budget), max_generators, np_basis=ideal_I(base).generators
    )
    checks.append(
        VerificationCheck(
            "normality",
            report.is_normal,
            "J_1 is normal (first dim-1 powers integrally closed)",
            report.failing_witness,
        )
    )

    return TwoExponentReport(spec, tuple(checks))
