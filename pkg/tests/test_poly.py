"""Exact polynomial arithmetic, normalization, scaling, rational roots."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from irreducia import oracle
from irreducia.corpus import gen_exhaustive
from irreducia.poly import (
    Polynomial,
    content,
    divides_exactly,
    divmod_exact,
    is_primitive,
    normalize,
    rational_roots,
    scale_transform,
)


def naive_eval(f, x):
    """Power-by-power evaluation, independent of Horner."""
    return sum(c * x**i for i, c in enumerate(f.coeffs))


small_polys = st.lists(st.integers(-9, 9), min_size=0, max_size=7).map(Polynomial)


class TestPolynomial:
    def test_trailing_zeros_trimmed(self):
        assert Polynomial([1, 2, 0, 0]).coeffs == (1, 2)
        assert Polynomial([0, 0]).is_zero()
        assert Polynomial().degree == -1

    def test_degree_and_accessors(self):
        f = Polynomial([4, 4, 0, 1])
        assert f.degree == 3
        assert f.leading_coefficient == 1
        assert f.constant_term == 4
        assert f.coefficient(2) == 0
        assert f.coefficient(17) == 0

    def test_rejects_non_integers(self):
        with pytest.raises(TypeError):
            Polynomial([1.5, 2])

    def test_sparse_string(self):
        assert Polynomial([4, 4, 0, 1]).to_sparse_string() == "z^3 + 4z + 4"
        assert Polynomial([-1, 0, 1]).to_sparse_string() == "z^2 - 1"
        assert Polynomial([0, -1]).to_sparse_string() == "-z"
        assert Polynomial().to_sparse_string() == "0"

    @given(small_polys, small_polys, st.integers(-5, 5))
    def test_ring_homomorphism_at_points(self, f, g, x):
        assert (f + g).evaluate(x) == f.evaluate(x) + g.evaluate(x)
        assert (f * g).evaluate(x) == f.evaluate(x) * g.evaluate(x)
        assert (f - g).evaluate(x) == f.evaluate(x) - g.evaluate(x)


class TestContentNormalize:
    def test_content_examples(self):
        assert content(Polynomial([4, 0, 2])) == 2  # 2z^2 + 4
        assert content(Polynomial([4, 4, 0, 1])) == 1  # unit leading coefficient
        # gcd chain by hand: gcd(6, 10) = 2, gcd(2, 2) = 2
        assert content(Polynomial([6, 10, 2])) == 2

    def test_content_zero_rejected(self):
        with pytest.raises(ValueError, match="content"):
            content(Polynomial())

    def test_normalize_examples(self):
        n = normalize(Polynomial([0, 8, 4]))  # 4z^2 + 8z
        assert (n.content, n.z_power) == (4, 1)
        assert n.primitive_part == Polynomial([2, 1])

        n = normalize(Polynomial([4, 4, 0, 1]))
        assert (n.content, n.z_power) == (1, 0)
        assert n.primitive_part == Polynomial([4, 4, 0, 1])

        n = normalize(Polynomial([50, 5, 1]))
        assert (n.content, n.z_power) == (1, 0)

    def test_normalize_zero_rejected(self):
        with pytest.raises(ValueError):
            normalize(Polynomial())

    def test_normalize_reconstruction(self):
        # content * z^zPower * primitive part == original, over a mixed corpus
        sample = [
            Polynomial([0, 0, -6, 9]),
            Polynomial([-4, 8]),
            Polynomial([0, 5]),
            Polynomial([7]),
        ] + list(gen_exhaustive(3, 2))
        for f in sample:
            n = normalize(f)
            rebuilt = Polynomial([n.content]) * n.primitive_part.shift_up(n.z_power)
            assert rebuilt == f
            assert is_primitive(n.primitive_part)
            assert n.primitive_part.constant_term != 0


class TestEvaluate:
    def test_hand_checked_values(self):
        f = Polynomial([4, 2, 2, 1])  # z^3 + 2z^2 + 2z + 4
        assert f.evaluate(-2) == 0  # -8 + 8 - 4 + 4
        assert f.evaluate(0) == f.constant_term
        assert Polynomial([2, 2, 1]).evaluate(1) == 5

    def test_horner_matches_naive_on_rationals(self):
        polys = list(gen_exhaustive(3, 2))[::37]
        points = [Fraction(1, 2), Fraction(-3, 7), Fraction(5), Fraction(-2, 9)]
        for f in polys:
            for x in points:
                assert f.evaluate(x) == naive_eval(f, x)


class TestMulDiv:
    def test_schoolbook_products(self):
        assert Polynomial([-1, 1]) * Polynomial([1, 1]) == Polynomial([-1, 0, 1])
        # (2z+1)(3z+1): constant 1, z: 2+3, z^2: 6
        assert Polynomial([1, 2]) * Polynomial([1, 3]) == Polynomial([1, 5, 6])

    def test_divmod_exact_quotient(self):
        q, r, exact = divmod_exact(Polynomial([-1, 0, 1]), Polynomial([-1, 1]))
        assert (q, r.is_zero(), exact) == (Polynomial([1, 1]), True, True)

    def test_divmod_reports_non_divisibility(self):
        f, g = Polynomial([1, 0, 1]), Polynomial([-1, 1])
        q, r, exact = divmod_exact(f, g)
        assert not exact
        assert q * g + r == f  # partial state still satisfies the identity

    def test_divmod_non_integral_step(self):
        q, r, exact = divmod_exact(Polynomial([0, 0, 1]), Polynomial([0, 2]))
        assert not exact
        assert q * Polynomial([0, 2]) + r == Polynomial([0, 0, 1])

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            divmod_exact(Polynomial([1]), Polynomial())

    @given(small_polys, small_polys)
    def test_mul_divmod_round_trip(self, f, g):
        if g.is_zero():
            return
        q, r, exact = divmod_exact(f * g, g)
        assert exact and q == f and r.is_zero()
        assert divides_exactly(g, f * g) == f


class TestScaleTransform:
    def test_leading_divisor_instance(self):
        # b = |a_m| turns 3 + 10z + 2z^2 into the monic 6 + 10z + z^2
        assert scale_transform(Polynomial([3, 10, 2]), 2) == Polynomial([6, 10, 1])

    def test_identity_at_one(self):
        f = Polynomial([7, -3, 0, 5])
        assert scale_transform(f, 1) == f

    def test_coefficient_pattern(self):
        # a_i * b^(m-1-i): (1*2, 1*1, 4/2)
        assert scale_transform(Polynomial([1, 1, 4]), 2) == Polynomial([2, 1, 2])

    def test_result_need_not_be_primitive(self):
        g = scale_transform(Polynomial([1, 2, 4]), 2)
        assert g == Polynomial([2, 2, 2])
        assert content(g) == 2

    def test_invalid_divisor(self):
        with pytest.raises(ValueError, match="invalid divisor"):
            scale_transform(Polynomial([1, 1, 4]), 3)

    def test_non_primitive_rejected(self):
        with pytest.raises(ValueError, match="primitive"):
            scale_transform(Polynomial([2, 2, 4]), 2)

    def test_factor_count_preserved(self):
        # the transform keeps the irreducible factor count of the primitive part
        from irreducia.numtheory import positive_divisors

        for f in gen_exhaustive(3, 3):
            if f.constant_term == 0:
                continue
            base = oracle.count_irreducible_factors(f)
            for b in positive_divisors(f.leading_coefficient):
                g = normalize(scale_transform(f, b)).primitive_part
                assert oracle.count_irreducible_factors(g) == base, (f, b)


class TestRationalRoots:
    def test_candidate_scan_example(self):
        f = Polynomial([4, 2, 2, 1])
        # independent scan: all p/q with p | 4, q | 1
        expected = {
            Fraction(p, q)
            for q in (1,)
            for p in (1, -1, 2, -2, 4, -4)
            if naive_eval(f, Fraction(p, q)) == 0
        }
        assert expected == {Fraction(-2)}
        assert rational_roots(f) == {Fraction(-2)}

    def test_no_real_roots(self):
        assert rational_roots(Polynomial([1, 0, 1])) == set()

    def test_roots_from_factorization(self):
        # oracle gives (2z+1)(3z+1), hence roots -1/2 and -1/3
        assert rational_roots(Polynomial([1, 5, 6])) == {Fraction(-1, 2), Fraction(-1, 3)}

    def test_zero_constant_rejected(self):
        with pytest.raises(ValueError):
            rational_roots(Polynomial([0, 1]))

    def test_completeness_over_candidates(self):
        from irreducia.numtheory import positive_divisors

        for f in list(gen_exhaustive(3, 3))[::11]:
            candidates = {
                Fraction(sp * p, q)
                for p in positive_divisors(f.constant_term)
                for q in positive_divisors(f.leading_coefficient)
                for sp in (1, -1)
            }
            expected = {r for r in candidates if naive_eval(f, r) == 0}
            assert rational_roots(f) == expected
