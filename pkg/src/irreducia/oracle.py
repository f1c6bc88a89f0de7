"""Exact brute-force factorization of integer polynomials at desk scale.

This is the ground truth the criteria are audited against, so it avoids all
probabilistic machinery: content and z-power extraction, rational-root
stripping, then Kronecker's method (interpolate candidate factors through
divisor tuples of the polynomial's values at small integer points and test
exact divisibility). Adequate for degree <= 8 with small coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import numtheory
from .numtheory import FactorizationLimitError
from .poly import Z, Polynomial, divides_exactly, is_primitive, normalize, rational_roots

DEFAULT_MAX_DEGREE = 8
DEFAULT_COEFF_BOUND = 10**8
DEFAULT_STEP_BUDGET = 10**7


class OracleLimitError(RuntimeError):
    """Input outside the oracle's degree/coefficient/step limits."""


@dataclass(frozen=True)
class FactorizationResult:
    """content * prod(factor**multiplicity) == input, with primitive
    positive-leading irreducible factors sorted by (degree, coefficients).
    The input's sign lives in the content."""

    content: int
    factors: tuple[tuple[Polynomial, int], ...]

    def recompose(self) -> Polynomial:
        out = Polynomial([self.content])
        for g, mult in self.factors:
            out = out * g**mult
        return out

    def nonconstant_factor_count(self) -> int:
        return sum(mult for g, mult in self.factors if g.degree >= 1)

    def min_factor_degree(self) -> int | None:
        degs = [g.degree for g, _ in self.factors if g.degree >= 1]
        return min(degs) if degs else None


class _Budget:
    __slots__ = ("remaining",)

    def __init__(self, steps: int):
        self.remaining = steps

    def spend(self, n: int = 1) -> None:
        self.remaining -= n
        if self.remaining < 0:
            raise OracleLimitError("oracle limit: step budget exhausted")


def _sample_points(count: int) -> list[int]:
    # 0, 1, -1, 2, -2, ...
    pts = [0]
    k = 1
    while len(pts) < count:
        pts.append(k)
        if len(pts) < count:
            pts.append(-k)
        k += 1
    return pts[:count]


def _signed_divisors(v: int) -> list[int]:
    divs = numtheory.positive_divisors(v)
    return [d for pos in divs for d in (pos, -pos)]


def _expand_newton(nodes: list[int], coeffs: list[int]) -> Polynomial:
    """Polynomial from Newton form sum c_k * prod_{t<k} (z - x_t)."""
    out = Polynomial([coeffs[-1]])
    for k in range(len(coeffs) - 2, -1, -1):
        out = out * Polynomial([-nodes[k], 1]) + Polynomial([coeffs[k]])
    return out


def _kronecker_search(h: Polynomial, budget: _Budget) -> Polynomial | None:
    """Smallest-degree proper factor of h, or None.

    Requires h primitive with positive leading coefficient, no rational
    roots, and degree >= 2. Candidate factors of degree e are interpolated
    through divisor tuples of h's values at e+1 sample points; branches die
    as soon as a Newton divided difference turns non-integral (divided
    differences of an integer polynomial at integer nodes are integers).
    """
    m = h.degree
    for e in range(2, m // 2 + 1):
        raw_points = _sample_points(e + 1)
        values = [h.evaluate(x) for x in raw_points]
        try:
            choice_lists = [_signed_divisors(v) for v in values]
        except FactorizationLimitError as exc:
            raise OracleLimitError(f"oracle limit: {exc}") from exc
        order = sorted(range(e + 1), key=lambda i: len(choice_lists[i]))
        nodes = [raw_points[i] for i in order]
        choices = [choice_lists[i] for i in order]
        # +-g both divide, so fix the sign at the first node.
        choices[0] = [d for d in choices[0] if d > 0]

        # DFS over divisor tuples with incremental trailing divided
        # differences; trail[k] = [x_{t-k}..x_t]g, so trail[-1] is the
        # Newton coefficient c_t.
        stack: list[tuple[int, list[int], list[int]]] = [(0, [], [])]
        while stack:
            depth, trail, newton = stack.pop()
            for d in choices[depth]:
                budget.spend()
                new_trail = [d]
                ok = True
                for k in range(1, depth + 1):
                    num = new_trail[k - 1] - trail[k - 1]
                    den = nodes[depth] - nodes[depth - k]
                    step, rem = divmod(num, den)
                    if rem:
                        ok = False
                        break
                    new_trail.append(step)
                if not ok:
                    continue
                if depth < e:
                    stack.append((depth + 1, new_trail, newton + [new_trail[-1]]))
                    continue
                if new_trail[-1] == 0:
                    continue  # degree < e: covered by an earlier e
                g = _expand_newton(nodes, newton + [new_trail[-1]])
                if g.degree != e:
                    continue
                if divides_exactly(g, h) is not None:
                    if g.leading_coefficient < 0:
                        g = -g
                    return g
    return None


def _factor_primitive(h: Polynomial, budget: _Budget) -> dict[Polynomial, int]:
    """Irreducible factorization of a primitive positive-leading polynomial
    with no rational roots (degree >= 2 handled; degree <= 1 trivial)."""
    if h.degree <= 1:
        return {h: 1} if h.degree == 1 else {}
    g = _kronecker_search(h, budget)
    if g is None:
        return {h: 1}
    q = divides_exactly(g, h)
    assert q is not None
    out = _factor_primitive(g, budget)
    for factor_poly, mult in _factor_primitive(q, budget).items():
        out[factor_poly] = out.get(factor_poly, 0) + mult
    return out


def factor(
    f: Polynomial,
    *,
    max_degree: int = DEFAULT_MAX_DEGREE,
    coeff_bound: int = DEFAULT_COEFF_BOUND,
    step_budget: int = DEFAULT_STEP_BUDGET,
) -> FactorizationResult:
    """Complete irreducible factorization over the integers."""
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if f.degree > max_degree:
        raise OracleLimitError(f"oracle limit: degree {f.degree} exceeds {max_degree}")
    if max(abs(c) for c in f.coeffs) > coeff_bound:
        raise OracleLimitError("oracle limit: coefficient magnitude")

    norm = normalize(f)
    sign = 1 if f.leading_coefficient > 0 else -1
    cont = sign * norm.content
    prim = norm.primitive_part if sign > 0 else -norm.primitive_part

    budget = _Budget(step_budget)
    counts: dict[Polynomial, int] = {}
    if norm.z_power:
        counts[Z] = norm.z_power

    # strip degree-1 factors q*z - p from the rational roots
    rem = prim
    if rem.degree >= 1:
        try:
            roots = rational_roots(rem)
        except FactorizationLimitError as exc:
            raise OracleLimitError(f"oracle limit: {exc}") from exc
        for root in sorted(roots):
            lin = Polynomial([-root.numerator, root.denominator])
            while True:
                q = divides_exactly(lin, rem)
                if q is None:
                    break
                counts[lin] = counts.get(lin, 0) + 1
                rem = q

    if rem.degree >= 2:
        for g, mult in _factor_primitive(rem, budget).items():
            counts[g] = counts.get(g, 0) + mult
    elif rem.degree == 1:
        counts[rem] = counts.get(rem, 0) + 1
    else:
        assert rem == Polynomial([1]), "primitive residue must be the unit"

    ordered = tuple(sorted(counts.items(), key=lambda gm: (gm[0].degree, gm[0].coeffs)))
    return FactorizationResult(content=cont, factors=ordered)


def count_irreducible_factors(f: Polynomial, **kwargs) -> int:
    """Number of irreducible factors with multiplicity (z factors included)."""
    return factor(f, **kwargs).nonconstant_factor_count()


def _is_irreducible_fresh(g: Polynomial, budget: _Budget) -> bool:
    if g.degree < 1:
        return False
    if g.degree == 1:
        return True
    if g.constant_term == 0:
        return False  # divisible by z, and degree >= 2
    if rational_roots(g):
        return False
    return _kronecker_search(g, budget) is None


def verify(result: FactorizationResult, f: Polynomial) -> bool:
    """Exact recomposition check plus a fresh no-proper-divisor search on
    every listed factor. Returns False on any violation, never raises."""
    try:
        if result.recompose() != f:
            return False
        budget = _Budget(DEFAULT_STEP_BUDGET)
        for g, mult in result.factors:
            if mult < 1 or g.degree < 1:
                return False
            if g.leading_coefficient <= 0 or not is_primitive(g):
                return False
            if not _is_irreducible_fresh(g, budget):
                return False
        return True
    except (OracleLimitError, ValueError):
        return False
