"""Corpus audits: run every criterion against the exact factorization oracle
and count fired / sound / inconclusive outcomes per criterion.

Three optional cross-checks ride along on the same sweep:
  * soundness   -- every fired conclusion is compared with the oracle count
                   (bounds that hold for trivial reasons, such as a factor
                   count bound of at least the degree, are tallied as
                   vacuously sound without an oracle call);
  * cor1        -- wherever the unit-divisor dominance inequality holds, the
                   dominant-coefficient criterion must reach a bound at least
                   as strong (the inequality is implemented here as an audit
                   predicate only, not exposed as a criterion);
  * rootloc     -- wherever a symbolic disk certificate fires during the
                   constant/leading witness search, every numerically
                   computed root must clear the disk radius.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator

from . import corpus as corpus_mod
from . import numtheory, oracle, rootloc
from .criteria import (
    EXACT,
    CRITERIA,
    Conclusion,
    ConclusionKind,
    CriterionOutcome,
    constant_term_criterion,
    dominant_coefficient,
    eisenstein_generalized,
    leading_coeff_criterion,
)
from .corpus import gen_exhaustive
from .poly import Polynomial

ROOT_MARGIN = 1e-6
_VIOLATION_CAP = 50


@dataclass
class CriterionStats:
    fired: int = 0
    sound: int = 0
    vacuous: int = 0
    unchecked: int = 0  # oracle unavailable for this item
    violations: list = field(default_factory=list)

    def merge(self, other: "CriterionStats") -> None:
        self.fired += other.fired
        self.sound += other.sound
        self.vacuous += other.vacuous
        self.unchecked += other.unchecked
        self.violations.extend(other.violations)


@dataclass
class AuditResult:
    total: int = 0
    oracle_calls: int = 0
    oracle_skipped: int = 0
    criteria: dict = field(default_factory=dict)
    cor1_checked: int = 0
    cor1_violations: list = field(default_factory=list)
    rootloc_checked: int = 0
    rootloc_violations: list = field(default_factory=list)
    nonconvergences: list = field(default_factory=list)

    def stats(self, name: str) -> CriterionStats:
        if name not in self.criteria:
            self.criteria[name] = CriterionStats()
        return self.criteria[name]

    def merge(self, other: "AuditResult") -> None:
        self.total += other.total
        self.oracle_calls += other.oracle_calls
        self.oracle_skipped += other.oracle_skipped
        for name, stats in other.criteria.items():
            self.stats(name).merge(stats)
        self.cor1_checked += other.cor1_checked
        self.cor1_violations.extend(other.cor1_violations)
        self.rootloc_checked += other.rootloc_checked
        self.rootloc_violations.extend(other.rootloc_violations)
        self.nonconvergences.extend(other.nonconvergences)

    def violation_count(self) -> int:
        return (
            sum(len(s.violations) for s in self.criteria.values())
            + len(self.cor1_violations)
            + len(self.rootloc_violations)
        )

    def ok(self) -> bool:
        return self.violation_count() == 0

    def summary_lines(self) -> list[str]:
        lines = [f"audited {self.total} polynomials "
                 f"(oracle calls {self.oracle_calls}, skipped {self.oracle_skipped})"]
        for name in sorted(self.criteria):
            s = self.criteria[name]
            inconclusive = self.total - s.fired
            lines.append(
                f"  {name:22s} fired {s.fired:8d}  sound {s.sound:8d} "
                f"(vacuous {s.vacuous})  no-conclusion {inconclusive:8d}  "
                f"violations {len(s.violations)}"
            )
        if self.cor1_checked:
            lines.append(
                f"  unit-divisor dominance subsumption: {self.cor1_checked} checked, "
                f"{len(self.cor1_violations)} violations"
            )
        if self.rootloc_checked:
            lines.append(
                f"  root-location cross-check: {self.rootloc_checked} certificates, "
                f"{len(self.rootloc_violations)} contradictions, "
                f"{len(self.nonconvergences)} non-convergent"
            )
        lines.append(f"total violations: {self.violation_count()}")
        return lines


def cor1_best_j(f: Polynomial) -> int | None:
    """Largest j for which the dominance inequality with b = |a_m| and
    delta = 1/|a_m| holds (audit predicate for the subsumption check):

        |a_j| > |a_{j+1}/a_m| + sum_{i<j} |a_i||a_m|^(j-i)
                + sum_{i>j+1} |a_i| |a_m|^-(i-j),

    evaluated with both sides scaled by |a_m|^(m-j).
    """
    m = f.degree
    if m < 2:
        return None
    mags = [abs(c) for c in f.coeffs]
    am = mags[m]
    for j in range(m - 1, -1, -1):
        if mags[j] == 0:
            continue
        scale = am ** (m - j)
        lhs = mags[j] * scale
        rhs = mags[j + 1] * am ** (m - j - 1)
        rhs += sum(mags[i] * am ** (j - i) for i in range(j)) * scale
        rhs += sum(mags[i] * am ** (m - i) for i in range(j + 2, m + 1))
        if lhs > rhs:
            return j
    return None


def _is_vacuous(conclusion: Conclusion, degree: int) -> bool:
    """Bounds no factorization can violate: a factor-count bound of at least
    the degree, or a factor-degree bound at least floor(degree/2)."""
    if conclusion.kind is ConclusionKind.AT_MOST_FACTORS:
        return conclusion.bound >= degree
    if conclusion.kind is ConclusionKind.FACTOR_DEGREE_BOUND:
        return conclusion.bound >= degree // 2
    return False


def _conclusion_holds(
    outcome: CriterionOutcome, count: int, min_degree: int | None
) -> bool:
    kind = outcome.conclusion.kind
    if kind is ConclusionKind.IRREDUCIBLE:
        return count == 1
    if kind is ConclusionKind.AT_MOST_FACTORS:
        return count <= outcome.conclusion.bound
    if kind is ConclusionKind.FACTOR_DEGREE_BOUND:
        return count == 1 or (min_degree is not None and min_degree <= outcome.conclusion.bound)
    return True


def _symbolic_disk_radii(f: Polynomial) -> list[int]:
    """Radii d from every (p, d) pair the two disk criteria would try, kept
    when the exact certificate fires."""
    radii = []
    for source in (f.constant_term, f.leading_coefficient):
        if abs(source) < 2:
            continue
        for p in numtheory.primes_dividing(source):
            d = abs(source) // p ** numtheory.valuation(p, source)
            cert = rootloc.certify_outside_disk(
                f, d, rootloc.CertificateMode.SYMBOLIC_SUFFICIENT
            )
            if cert.certified:
                radii.append(d)
    return radii


@dataclass(frozen=True)
class AuditOptions:
    check_soundness: bool = True
    check_cor1: bool = True
    check_rootloc: bool = True
    oracle_max_degree: int = oracle.DEFAULT_MAX_DEGREE
    oracle_coeff_bound: int = oracle.DEFAULT_COEFF_BOUND
    oracle_step_budget: int = oracle.DEFAULT_STEP_BUDGET


def audit_one(f: Polynomial, options: AuditOptions, result: AuditResult) -> None:
    """Audit a single primitive polynomial with nonzero constant term."""
    result.total += 1
    m = f.degree
    outcomes = [fn(f) for fn in CRITERIA.values()]

    to_check: list[CriterionOutcome] = []
    for outcome in outcomes:
        if not outcome.conclusion.fired():
            continue
        stats = result.stats(outcome.criterion)
        stats.fired += 1
        if _is_vacuous(outcome.conclusion, m):
            stats.vacuous += 1
            stats.sound += 1
        elif options.check_soundness:
            to_check.append(outcome)

    if to_check:
        try:
            fact = oracle.factor(
                f,
                max_degree=options.oracle_max_degree,
                coeff_bound=options.oracle_coeff_bound,
                step_budget=options.oracle_step_budget,
            )
        except oracle.OracleLimitError:
            result.oracle_skipped += 1
            for outcome in to_check:
                result.stats(outcome.criterion).unchecked += 1
        else:
            result.oracle_calls += 1
            count = fact.nonconstant_factor_count()
            min_degree = fact.min_factor_degree()
            for outcome in to_check:
                stats = result.stats(outcome.criterion)
                if _conclusion_holds(outcome, count, min_degree):
                    stats.sound += 1
                elif len(stats.violations) < _VIOLATION_CAP:
                    stats.violations.append(
                        (f.coeffs, outcome.criterion, outcome.conclusion.kind.value,
                         outcome.conclusion.bound, count)
                    )

    if options.check_cor1:
        j = cor1_best_j(f)
        if j is not None:
            result.cor1_checked += 1
            dom = next(o for o in outcomes if o.criterion == "dominant_coefficient")
            dom_bound = None
            if dom.conclusion.kind is ConclusionKind.IRREDUCIBLE:
                dom_bound = 1
            elif dom.conclusion.kind is ConclusionKind.AT_MOST_FACTORS:
                dom_bound = dom.conclusion.bound
            if dom_bound is None or dom_bound > m - j:
                if len(result.cor1_violations) < _VIOLATION_CAP:
                    result.cor1_violations.append((f.coeffs, j, dom_bound))

    if options.check_rootloc:
        radii = _symbolic_disk_radii(f)
        if radii:
            result.rootloc_checked += 1
            try:
                roots = rootloc.numeric_roots(f)
            except rootloc.NonConvergenceError as exc:
                if len(result.nonconvergences) < _VIOLATION_CAP:
                    result.nonconvergences.append((f.coeffs, exc.best_residual))
            else:
                min_modulus = min(abs(r) for r in roots)
                worst = max(radii)
                if min_modulus <= worst * (1.0 - ROOT_MARGIN):
                    if len(result.rootloc_violations) < _VIOLATION_CAP:
                        result.rootloc_violations.append(
                            (f.coeffs, worst, min_modulus)
                        )


def _audit_chunk(args: tuple) -> AuditResult:
    chunk, options = args
    result = AuditResult()
    for coeffs in chunk:
        audit_one(Polynomial(coeffs), options, result)
    return result


def _chunks(items: Iterable[Polynomial], size: int) -> Iterator[list[tuple[int, ...]]]:
    block: list[tuple[int, ...]] = []
    for f in items:
        block.append(f.coeffs)
        if len(block) >= size:
            yield block
            block = []
    if block:
        yield block


def audit_corpus(
    polys: Iterable[Polynomial],
    options: AuditOptions = AuditOptions(),
    jobs: int = 1,
    chunk_size: int = 4096,
) -> AuditResult:
    """Audit an iterable of primitive polynomials, optionally in parallel.

    Items are pure-function audits, so the merge is deterministic up to the
    (sorted) violation listings regardless of worker scheduling.
    """
    result = AuditResult()
    if jobs <= 1:
        for f in polys:
            audit_one(f, options, result)
    else:
        tasks = ((chunk, options) for chunk in _chunks(polys, chunk_size))
        with multiprocessing.Pool(jobs) as pool:
            for partial in pool.imap_unordered(_audit_chunk, tasks):
                result.merge(partial)
    for stats in result.criteria.values():
        stats.violations.sort()
    result.cor1_violations.sort()
    result.rootloc_violations.sort()
    result.nonconvergences.sort()
    return result


def audit_exhaustive(
    max_degree: int,
    coeff_bound: int,
    options: AuditOptions = AuditOptions(),
    jobs: int = 1,
) -> AuditResult:
    """Audit the full sign-deduplicated primitive corpus."""
    return audit_corpus(gen_exhaustive(max_degree, coeff_bound), options, jobs=jobs)


# ---------------------------------------------------------------------------
# family grids and their expected conclusions


def p1_grid() -> Iterator[tuple[int, int, int, int, Polynomial]]:
    """(p, m, n, sign, polynomial) over p in {2,3,5}, 2 <= n <= m <= 6."""
    for p in (2, 3, 5):
        for m in range(2, 7):
            for n in range(2, m + 1):
                for sign in (1, -1):
                    yield p, m, n, sign, corpus_mod.gen_p1(p, m, n, sign)


def p2_grid_k1() -> Iterator[tuple[int, int, int, tuple[int, ...], int, Polynomial]]:
    """(p, d, m, tail, sign, polynomial) for exponent k = 1 instances over
    p in {3,5,7}, d in {1,2}, m in {2,3,4}, small tails that satisfy the
    dominance side condition."""
    for p, d, m, sign in product((3, 5, 7), (1, 2), (2, 3, 4), (1, -1)):
        for tail in product((-1, 0, 1), repeat=m):
            if tail[-1] == 0:
                continue
            try:
                f = corpus_mod.gen_p2(p, 1, d, m, list(tail), sign)
            except corpus_mod.FamilyConditionError:
                continue
            yield p, d, m, tail, sign, f


def p2_grid_k2() -> Iterator[tuple[int, int, tuple[int, ...], Polynomial]]:
    """(p, m, tail, polynomial) for exponent k = 2, d = 1 instances whose
    first coefficient is divisible by p, so the criterion's witness index j
    is at least 2 and the factor bound is exactly min(2, j) = 2."""
    for p, m in product((3, 5, 7), (2, 3, 4)):
        for first in (0, p, -p):
            for rest in product((-1, 0, 1), repeat=m - 1):
                if rest[-1] == 0:
                    continue
                try:
                    f = corpus_mod.gen_p2(p, 2, 1, m, [first, *rest])
                except corpus_mod.FamilyConditionError:
                    continue
                yield p, m, (first, *rest), f


def p3_grid() -> Iterator[tuple[int, int, int, Polynomial]]:
    """(p, m, a0, polynomial) with k = d = 1, zero middle coefficients, and
    a0 the least prime above m*p (which satisfies both side conditions)."""
    for p, m in product((5, 7, 11), (2, 3, 4)):
        a0 = m * p + 1
        while not numtheory.is_prime(a0):
            a0 += 1
        for sign in (1, -1):
            yield p, m, a0, corpus_mod.gen_p3(p, 1, 1, m, a0, [0] * (m - 1), sign)


def p4_grid() -> Iterator[tuple[int, int, int, int, Polynomial]]:
    """(a, b, m, j, polynomial) over a in {3,4,5}, b in {1, a-2} filtered by
    b < a - b, m in {3,4,5}, 1 <= j <= m-1, all signs positive."""
    for a in (3, 4, 5):
        for b in {1, a - 2}:
            if not b < a - b:
                continue
            for m in (3, 4, 5):
                for j in range(1, m):
                    yield a, b, m, j, corpus_mod.gen_p4(a, b, m, j)


def _oracle_count(f: Polynomial) -> int | None:
    if f.degree > oracle.DEFAULT_MAX_DEGREE:
        return None
    return oracle.count_irreducible_factors(f)


def audit_family(name: str) -> tuple[int, list]:
    """Check every grid instance of a family against its stated conclusion
    and the oracle. Returns (instances checked, violations)."""
    violations: list = []
    checked = 0

    if name == "P1":
        for p, m, n, sign, f in p1_grid():
            checked += 1
            out = eisenstein_generalized(f)
            ok = (
                out.conclusion.kind is ConclusionKind.IRREDUCIBLE
                and out.witnesses == {"p": p, "k": m - 1, "j": m}
            )
            if ok:
                count = _oracle_count(f)
                ok = count is None or count == 1
            if not ok:
                violations.append((f.coeffs, "P1", (p, m, n, sign)))
    elif name == "P2":
        for p, d, m, tail, sign, f in p2_grid_k1():
            checked += 1
            out = constant_term_criterion(f)
            ok = (
                out.conclusion.kind is ConclusionKind.IRREDUCIBLE
                and out.certificate_mode == EXACT
                and _oracle_count(f) == 1
            )
            if not ok:
                violations.append((f.coeffs, "P2 k=1", (p, d, m, tail, sign)))
        for p, m, tail, f in p2_grid_k2():
            checked += 1
            out = constant_term_criterion(f)
            ok = (
                out.conclusion.kind is ConclusionKind.AT_MOST_FACTORS
                and out.conclusion.bound == 2
                and out.witnesses["j"] >= 2
                and _oracle_count(f) <= 2
            )
            if not ok:
                violations.append((f.coeffs, "P2 k=2", (p, m, tail)))
    elif name == "P3":
        for p, m, a0, f in p3_grid():
            checked += 1
            out = leading_coeff_criterion(f)
            ok = (
                out.conclusion.kind is ConclusionKind.IRREDUCIBLE
                and _oracle_count(f) == 1
            )
            if not ok:
                violations.append((f.coeffs, "P3", (p, m, a0)))
    elif name == "P4":
        for a, b, m, j, f in p4_grid():
            checked += 1
            out = dominant_coefficient(f)
            expected = Conclusion.at_most(m - j)
            display_lhs = Fraction(a**j - b**j + 1)
            display_rhs = Fraction(b * (a**j - b**j), a - b) + Fraction(1, b ** (m - 1 - j))
            count = _oracle_count(f)
            ok = (
                out.conclusion == expected
                and out.witnesses["j"] == j
                and display_lhs > display_rhs
                and (count is None or count <= m - j)
            )
            if not ok:
                violations.append((f.coeffs, "P4", (a, b, m, j)))
    else:
        raise ValueError(f"unknown family {name!r}")

    return checked, violations
