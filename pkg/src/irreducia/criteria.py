"""Irreducibility and factor-count criteria with automatic witness search.

Each criterion takes a primitive polynomial, searches the finite witness
space its hypothesis allows (primes dividing a single coefficient, divisors
of the leading coefficient, coefficient indices), and returns a structured
outcome carrying the witnesses found. Every inequality is evaluated in exact
integer arithmetic; the two disk-based criteria additionally consume a root
location certificate and propagate whether it was exact or numeric.

Conclusion kinds:
  Irreducible          -- the polynomial has exactly one irreducible factor.
  AtMostFactors(n)     -- at most n irreducible integer factors.
  FactorDegreeBound(k) -- reducible only with some factor of degree <= k.
  NoConclusion         -- hypothesis not satisfiable for this input.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import numtheory, oracle, rootloc
from .poly import Polynomial, is_primitive, normalize, rational_roots
from .rootloc import CertificateMode


class ConclusionKind(enum.Enum):
    IRREDUCIBLE = "Irreducible"
    AT_MOST_FACTORS = "AtMostFactors"
    FACTOR_DEGREE_BOUND = "FactorDegreeBound"
    NO_CONCLUSION = "NoConclusion"


@dataclass(frozen=True)
class Conclusion:
    kind: ConclusionKind
    bound: int | None = None

    @staticmethod
    def irreducible() -> "Conclusion":
        return Conclusion(ConclusionKind.IRREDUCIBLE)

    @staticmethod
    def at_most(n: int) -> "Conclusion":
        # a factor-count bound of 1 is irreducibility
        if n == 1:
            return Conclusion.irreducible()
        return Conclusion(ConclusionKind.AT_MOST_FACTORS, n)

    @staticmethod
    def factor_degree(k: int) -> "Conclusion":
        return Conclusion(ConclusionKind.FACTOR_DEGREE_BOUND, k)

    @staticmethod
    def none() -> "Conclusion":
        return Conclusion(ConclusionKind.NO_CONCLUSION)

    def fired(self) -> bool:
        return self.kind is not ConclusionKind.NO_CONCLUSION

    def rank(self) -> tuple[int, int]:
        """Sort key: stronger conclusions first."""
        order = {
            ConclusionKind.IRREDUCIBLE: 0,
            ConclusionKind.AT_MOST_FACTORS: 1,
            ConclusionKind.FACTOR_DEGREE_BOUND: 2,
            ConclusionKind.NO_CONCLUSION: 3,
        }
        return (order[self.kind], self.bound or 0)


EXACT = "exact"
NUMERIC_CONDITIONAL = "numeric-conditional"


@dataclass(frozen=True)
class CriterionOutcome:
    criterion: str
    applicable: bool
    witnesses: dict
    conclusion: Conclusion
    certificate_mode: str = EXACT

    def rank(self) -> tuple[int, int, str]:
        return (*self.conclusion.rank(), self.criterion)


def _no_conclusion(name: str) -> CriterionOutcome:
    return CriterionOutcome(name, applicable=False, witnesses={}, conclusion=Conclusion.none())


def _require_criterion_input(f: Polynomial, *, min_degree: int = 1) -> None:
    if f.is_zero():
        raise ValueError("zero polynomial: no criterion applies")
    if not is_primitive(f):
        raise ValueError("normalize first: input is not primitive")
    if f.degree < min_degree:
        raise ValueError(f"criterion needs degree >= {min_degree}")


def _has_rational_root(f: Polynomial) -> bool:
    if f.constant_term == 0:
        return True  # root at 0
    return bool(rational_roots(f))


# ---------------------------------------------------------------------------
# coefficient-divisibility criteria


def weintraub_check(f: Polynomial) -> CriterionOutcome:
    """Eisenstein-style dichotomy from a prime dividing every non-leading
    coefficient: with k0 the lowest index whose coefficient misses p^2, any
    factorization has a factor of degree <= k0. k0 = 0 is irreducibility;
    k0 = 1 upgrades to irreducibility when there is no rational root."""
    name = "weintraub"
    _require_criterion_input(f)
    m = f.degree
    lower_gcd = math.gcd(*f.coeffs[:m]) if m >= 1 else 0
    if lower_gcd <= 1:
        return _no_conclusion(name)
    best: CriterionOutcome | None = None
    for p in numtheory.primes_dividing(lower_gcd):
        if f.coeffs[m] % p == 0:
            continue
        p2 = p * p
        k0 = next((k for k in range(m) if f.coeffs[k] % p2 != 0), None)
        if k0 is None:
            continue
        if k0 == 0 or (k0 == 1 and not _has_rational_root(f)):
            conclusion = Conclusion.irreducible()
        else:
            conclusion = Conclusion.factor_degree(k0)
        candidate = CriterionOutcome(name, True, {"p": p, "k0": k0}, conclusion)
        if best is None or candidate.rank() < best.rank():
            best = candidate
    return best if best is not None else _no_conclusion(name)


def eisenstein_generalized(f: Polynomial) -> CriterionOutcome:
    """Prime-power prefix criterion: p^k exactly divides a_0, p^k divides all
    coefficients below index j, p misses a_j, and gcd(k, j) = 1. j = m gives
    irreducibility; j = m-1 does too when no rational root exists; otherwise
    any nontrivial factorization has a factor of degree <= m - j."""
    name = "eisenstein_generalized"
    _require_criterion_input(f)
    if f.constant_term == 0:
        raise ValueError("normalize first: constant term is zero")
    m = f.degree
    best: CriterionOutcome | None = None
    for p in numtheory.primes_dividing(f.constant_term):
        k = numtheory.valuation(p, f.constant_term)
        pk = p**k
        prefix = 0
        while prefix <= m and f.coeffs[prefix] % pk == 0:
            prefix += 1
        for j in range(min(prefix, m), 0, -1):
            if f.coeffs[j] % p == 0 or math.gcd(k, j) != 1:
                continue
            if j == m or (j == m - 1 and not _has_rational_root(f)):
                conclusion = Conclusion.irreducible()
            else:
                conclusion = Conclusion.factor_degree(m - j)
            candidate = CriterionOutcome(name, True, {"p": p, "k": k, "j": j}, conclusion)
            if best is None or candidate.rank() < best.rank():
                best = candidate
            break  # largest admissible j is the strongest for this prime
    return best if best is not None else _no_conclusion(name)


# ---------------------------------------------------------------------------
# disk-certificate criteria


def constant_term_criterion(
    f: Polynomial, mode: CertificateMode = CertificateMode.SYMBOLIC_SUFFICIENT
) -> CriterionOutcome:
    """Constant-term decomposition a_0 = +-p^k d with p missing d, all roots
    certified outside |z| <= d, and j the lowest index with p missing a_j:
    at most min(k, j) irreducible factors."""
    name = "constant_term"
    _require_criterion_input(f)
    a0 = f.constant_term
    if a0 == 0:
        raise ValueError("normalize first: constant term is zero")
    if abs(a0) == 1:
        return _no_conclusion(name)
    m = f.degree
    best: CriterionOutcome | None = None
    for p in numtheory.primes_dividing(a0):
        k = numtheory.valuation(p, a0)
        d = abs(a0) // p**k
        cert = rootloc.certify_outside_disk(f, d, mode)
        if not cert.certified:
            continue
        j = next(j for j in range(1, m + 1) if f.coeffs[j] % p != 0)
        candidate = CriterionOutcome(
            name,
            True,
            {"p": p, "k": k, "j": j, "d": d},
            Conclusion.at_most(min(k, j)),
            certificate_mode=EXACT if cert.is_exact() else NUMERIC_CONDITIONAL,
        )
        if best is None or candidate.rank() < best.rank():
            best = candidate
    return best if best is not None else _no_conclusion(name)


def leading_coeff_criterion(
    f: Polynomial, mode: CertificateMode = CertificateMode.SYMBOLIC_SUFFICIENT
) -> CriterionOutcome:
    """Mirror of the constant-term criterion on a_m = +-p^k d, with the extra
    size condition |a_0 / q| <= |a_m| for q the smallest prime divisor of
    a_0; j is the lowest index with p missing a_{m-j}."""
    name = "leading_coeff"
    _require_criterion_input(f)
    a0, am = f.constant_term, f.leading_coefficient
    if a0 == 0:
        raise ValueError("normalize first: constant term is zero")
    if abs(am) == 1 or abs(a0) == 1:
        return _no_conclusion(name)
    q = numtheory.smallest_prime_divisor(a0)
    if abs(a0) > q * abs(am):  # |a0/q| <= |am| as an exact comparison
        return _no_conclusion(name)
    m = f.degree
    best: CriterionOutcome | None = None
    for p in numtheory.primes_dividing(am):
        k = numtheory.valuation(p, am)
        d = abs(am) // p**k
        cert = rootloc.certify_outside_disk(f, d, mode)
        if not cert.certified:
            continue
        j = next(j for j in range(1, m + 1) if f.coeffs[m - j] % p != 0)
        candidate = CriterionOutcome(
            name,
            True,
            {"p": p, "k": k, "j": j, "d": d, "q": q},
            Conclusion.at_most(min(k, j)),
            certificate_mode=EXACT if cert.is_exact() else NUMERIC_CONDITIONAL,
        )
        if best is None or candidate.rank() < best.rank():
            best = candidate
    return best if best is not None else _no_conclusion(name)


# ---------------------------------------------------------------------------
# dominant-coefficient criteria


def dominant_coefficient(f: Polynomial) -> CriterionOutcome:
    """One coefficient dominating the rest forces a root split and hence a
    factor-count bound: if for a positive divisor b of a_m and delta = 1/b

        |a_j| > sum_{i<j} |a_i| |a_m|^(j-i) + sum_{i>j} |a_i| delta^(i-j)

    then at most m - j irreducible factors; j = m-1 gives irreducibility.
    The right side grows with delta, so testing delta = 1/b is exhaustive
    over [1/b, 1]. Evaluated with both sides scaled by b^(m-j)."""
    name = "dominant_coefficient"
    _require_criterion_input(f)
    if f.constant_term == 0:
        raise ValueError("normalize first: constant term is zero")
    m = f.degree
    if m < 2:
        return _no_conclusion(name)
    mags = [abs(c) for c in f.coeffs]
    am = mags[m]
    for j in range(m - 1, -1, -1):
        if mags[j] == 0:
            continue
        low = sum(mags[i] * am ** (j - i) for i in range(j))
        for b in numtheory.positive_divisors(am):
            scale = b ** (m - j)
            high = sum(mags[i] * b ** (m - i) for i in range(j + 1, m + 1))
            if mags[j] * scale > low * scale + high:
                return CriterionOutcome(
                    name,
                    True,
                    {"b": b, "delta": Fraction(1, b), "j": j},
                    Conclusion.at_most(m - j),
                )
    return _no_conclusion(name)


def perron_nonmonic(f: Polynomial) -> CriterionOutcome:
    """Non-monic Perron test: |a_{m-1}| > 1 + sum_{i<=m-2} |a_i| |a_m|^(m-1-i)
    forces irreducibility (all but one root of the rescaled monic polynomial
    fall inside the unit disk)."""
    name = "perron_nonmonic"
    _require_criterion_input(f)
    if f.constant_term == 0:
        raise ValueError("normalize first: constant term is zero")
    m = f.degree
    if m < 2:
        return _no_conclusion(name)
    am = abs(f.leading_coefficient)
    rhs = 1 + sum(abs(f.coeffs[i]) * am ** (m - 1 - i) for i in range(m - 1))
    if abs(f.coeffs[m - 1]) > rhs:
        return CriterionOutcome(name, True, {}, Conclusion.irreducible())
    return _no_conclusion(name)


def middle_prime_power_check(f: Polynomial) -> CriterionOutcome:
    """A large prime power p^N inside the coefficient of z^j (1 <= j <= m-1)
    dominating a weighted sum of the others bounds the factor count by m - j.

    Writing coeff(z^j) = p^N a_j and coeff(z^(j-1)) = p^s a_(j-1) with p
    missing both reduced parts, the test (scaled by |a_m|^(m-j)) is

        p^N |a_j| > |a_m a_(j-1)| p^(2s)
                    + sum_{i=2..j} |a_m^i a_(j-i)| p^(is)
                    + sum_{i=j+1..m} |a_i| / |a_m|^(i-j).
    """
    name = "middle_prime_power"
    _require_criterion_input(f)
    m = f.degree
    if m < 2 or f.constant_term == 0:
        return _no_conclusion(name)
    c = f.coeffs
    am = abs(c[m])
    for j in range(m - 1, 0, -1):
        if c[j] == 0 or c[j - 1] == 0:
            continue
        scale = am ** (m - j)
        high = sum(abs(c[i]) * am ** (m - i) for i in range(j + 1, m + 1))
        for p in numtheory.primes_dividing(c[j]):
            n_exp = numtheory.valuation(p, c[j])
            s_exp = numtheory.valuation(p, c[j - 1])
            reduced_prev = abs(c[j - 1]) // p**s_exp
            rhs = am * reduced_prev * p ** (2 * s_exp) * scale
            rhs += sum(
                am**i * abs(c[j - i]) * p ** (i * s_exp) * scale for i in range(2, j + 1)
            )
            rhs += high
            if abs(c[j]) * scale > rhs:
                return CriterionOutcome(
                    name,
                    True,
                    {"p": p, "j": j, "N": n_exp, "s": s_exp},
                    Conclusion.at_most(m - j),
                )
    return _no_conclusion(name)


# ---------------------------------------------------------------------------
# aggregate analysis

CRITERIA = {
    "constant_term": constant_term_criterion,
    "dominant_coefficient": dominant_coefficient,
    "eisenstein_generalized": eisenstein_generalized,
    "leading_coeff": leading_coeff_criterion,
    "middle_prime_power": middle_prime_power_check,
    "perron_nonmonic": perron_nonmonic,
    "weintraub": weintraub_check,
}

_MODE_AWARE = {"constant_term", "leading_coeff"}


class SoundnessError(RuntimeError):
    """A criterion conclusion contradicted the factorization oracle."""


_ORACLE_DEGREE = oracle.DEFAULT_MAX_DEGREE
_ORACLE_COEFFS = oracle.DEFAULT_COEFF_BOUND
_ORACLE_STEPS = oracle.DEFAULT_STEP_BUDGET


@dataclass(frozen=True)
class AnalyzeConfig:
    criteria: tuple[str, ...] = tuple(CRITERIA)
    root_mode: CertificateMode = CertificateMode.SYMBOLIC_SUFFICIENT
    oracle: str = "auto"  # on | off | auto
    max_oracle_degree: int = _ORACLE_DEGREE
    oracle_coeff_bound: int = _ORACLE_COEFFS
    oracle_step_budget: int = _ORACLE_STEPS


@dataclass(frozen=True)
class AnalysisReport:
    input: Polynomial
    input_text: str
    content: int
    z_power: int
    primitive_part: Polynomial
    outcomes: tuple[CriterionOutcome, ...]
    strongest: CriterionOutcome | None
    oracle_result: oracle.FactorizationResult | None
    warnings: tuple[str, ...] = field(default=())


def _oracle_consistent(
    outcome: CriterionOutcome, result: oracle.FactorizationResult, z_power: int
) -> bool:
    """Does the oracle factorization of the full input support the conclusion
    reached about the primitive part?"""
    prim_count = result.nonconstant_factor_count() - z_power
    kind = outcome.conclusion.kind
    if kind is ConclusionKind.IRREDUCIBLE:
        return prim_count == 1
    if kind is ConclusionKind.AT_MOST_FACTORS:
        return prim_count <= outcome.conclusion.bound
    if kind is ConclusionKind.FACTOR_DEGREE_BOUND:
        if prim_count <= 1:
            return True
        degs = [g.degree for g, _ in result.factors if g.degree >= 1 and g.constant_term != 0]
        return bool(degs) and min(degs) <= outcome.conclusion.bound
    return True


def analyze(f: Polynomial, config: AnalyzeConfig = AnalyzeConfig()) -> AnalysisReport:
    """Run every enabled criterion on the primitive part of f, pick the
    strongest conclusion, and optionally cross-check against the oracle."""
    if f.is_zero():
        raise ValueError("cannot analyze the zero polynomial")
    unknown = [name for name in config.criteria if name not in CRITERIA]
    if unknown:
        raise ValueError(f"unknown criteria: {', '.join(unknown)}")
    if config.oracle not in ("on", "off", "auto"):
        raise ValueError(f"oracle mode must be on/off/auto, got {config.oracle!r}")

    norm = normalize(f)
    prim = norm.primitive_part
    warnings: list[str] = []
    if norm.z_power:
        warnings.append(
            f"input splits as content * z^{norm.z_power} * primitive part; "
            f"add {norm.z_power} to any factor-count bound for the original input"
        )

    outcomes: list[CriterionOutcome] = []
    if prim.degree == 0:
        warnings.append("primitive part is constant; criteria skipped")
    else:
        for name in config.criteria:
            fn = CRITERIA[name]
            if name in _MODE_AWARE:
                outcomes.append(fn(prim, config.root_mode))
            else:
                outcomes.append(fn(prim))
        if prim.degree == 1:
            outcomes.append(
                CriterionOutcome("degree_one", True, {}, Conclusion.irreducible())
            )
    outcomes.sort(key=lambda o: o.criterion)

    fired = [o for o in outcomes if o.conclusion.fired()]
    strongest = min(fired, key=lambda o: o.rank()) if fired else None
    if any(o.certificate_mode == NUMERIC_CONDITIONAL for o in fired):
        warnings.append(
            "some conclusions rely on numeric root location and are not proofs"
        )

    oracle_result = None
    if config.oracle == "on" or (
        config.oracle == "auto" and f.degree <= config.max_oracle_degree
    ):
        max_degree = f.degree if config.oracle == "on" else config.max_oracle_degree
        try:
            oracle_result = oracle.factor(
                f,
                max_degree=max_degree,
                coeff_bound=config.oracle_coeff_bound,
                step_budget=config.oracle_step_budget,
            )
        except oracle.OracleLimitError as exc:
            if config.oracle == "on":
                raise
            warnings.append(f"oracle skipped: {exc}")
        if oracle_result is not None and strongest is not None:
            if not _oracle_consistent(strongest, oracle_result, norm.z_power):
                raise SoundnessError(
                    f"criterion {strongest.criterion} concluded "
                    f"{strongest.conclusion.kind.value}"
                    f"({strongest.conclusion.bound}) but the oracle found "
                    f"{oracle_result.nonconstant_factor_count()} factors "
                    f"for {f!r}"
                )

    return AnalysisReport(
        input=f,
        input_text=f.to_sparse_string(),
        content=norm.content,
        z_power=norm.z_power,
        primitive_part=prim,
        outcomes=tuple(outcomes),
        strongest=strongest,
        oracle_result=oracle_result,
        warnings=tuple(warnings),
    )
