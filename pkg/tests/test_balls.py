"""Containment contract of the ball arithmetic."""

import json
from fractions import Fraction

import gmpy2
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polylog.balls import Ball, PrecisionContext, decimal_str

fractions = st.fractions(min_value=Fraction(-8), max_value=Fraction(8),
                         max_denominator=997)
nonzero_fractions = fractions.filter(lambda q: abs(q) > Fraction(1, 50))

BITS = 120


class TestConstruction:
    def test_dyadic_is_exact(self):
        b = Ball.from_fraction(Fraction(3, 8), BITS)
        assert b.rad == 0 and b.contains_fraction(Fraction(3, 8))

    def test_non_dyadic_rounds_with_radius(self):
        b = Ball.from_fraction(Fraction(1, 3), BITS)
        assert b.rad > 0
        assert b.contains_fraction(Fraction(1, 3))

    def test_zero_flags(self):
        assert Ball.zero(BITS).is_exact_zero()
        assert Ball.from_fraction(0, BITS).is_exact_zero()
        assert not Ball.from_fraction(1, BITS).contains_zero()


class TestArithmeticContainment:
    @given(fractions, fractions)
    @settings(max_examples=120)
    def test_add_sub_mul(self, a, b):
        x, y = Ball.from_fraction(a, BITS), Ball.from_fraction(b, BITS)
        assert (x + y).contains_fraction(a + b)
        assert (x - y).contains_fraction(a - b)
        assert (x * y).contains_fraction(a * b)

    @given(fractions, nonzero_fractions)
    @settings(max_examples=120)
    def test_div(self, a, b):
        x, y = Ball.from_fraction(a, BITS), Ball.from_fraction(b, BITS)
        assert (x / y).contains_fraction(a / b)

    @given(fractions, st.integers(0, 7))
    @settings(max_examples=80)
    def test_pow(self, a, n):
        x = Ball.from_fraction(a, BITS)
        assert x.pow_int(n).contains_fraction(a ** n)

    @given(st.fractions(min_value=Fraction(-3), max_value=Fraction(3), max_denominator=97))
    @settings(max_examples=60)
    def test_exp_contains_reference(self, a):
        coarse = Ball.from_fraction(a, 80).exp()
        fine = Ball.from_fraction(a, 400).exp()
        assert coarse.agrees_with(fine)
        assert coarse.rad > fine.rad or coarse.rad == 0

    @given(st.fractions(min_value=Fraction(1, 50), max_value=Fraction(40), max_denominator=97))
    @settings(max_examples=60)
    def test_ln_contains_reference(self, a):
        coarse = Ball.from_fraction(a, 80).ln()
        fine = Ball.from_fraction(a, 400).ln()
        assert coarse.agrees_with(fine)

    def test_exp_ln_round_trip(self):
        x = Ball.from_fraction(Fraction(5, 7), 200)
        assert x.exp().ln().agrees_with(x)

    def test_division_by_straddling_ball(self):
        wide = Ball.from_fraction(0, BITS) + Ball.error_only(Fraction(1), BITS)
        with pytest.raises(ZeroDivisionError):
            Ball.from_fraction(1, BITS) / wide

    def test_ln_of_nonpositive(self):
        with pytest.raises(ValueError):
            Ball.from_fraction(Fraction(-1), BITS).ln()


class TestPerturbedContainment:
    """Sampled midpoints inside the inputs land inside the output."""

    @given(fractions, fractions,
           st.fractions(min_value=Fraction(-1, 100), max_value=Fraction(1, 100),
                        max_denominator=101))
    @settings(max_examples=80)
    def test_mul_with_fuzzed_inputs(self, a, b, eps):
        x = Ball.from_fraction(a, BITS) + Ball.error_only(Fraction(1, 100), BITS)
        y = Ball.from_fraction(b, BITS)
        out = x * y
        assert out.contains_fraction((a + eps) * b)


class TestPrecisionContext:
    def test_bits_floor(self):
        ctx = PrecisionContext(working_bits=64, target_abs_error=Fraction(1, 10 ** 60))
        assert ctx.effective_bits >= 200 + 63

    def test_for_digits(self):
        ctx = PrecisionContext.for_digits(30)
        assert ctx.target_abs_error == Fraction(1, 10 ** 30)
        assert ctx.working_bits > 100

    def test_invalid(self):
        with pytest.raises(ValueError):
            PrecisionContext(working_bits=32)
        with pytest.raises(ValueError):
            PrecisionContext(target_abs_error=Fraction(0))

    def test_hashable(self):
        assert len({PrecisionContext.for_digits(20), PrecisionContext.for_digits(20)}) == 1


class TestSerialization:
    def test_json_round_trip_preserves_containment(self):
        b = Ball.from_fraction(Fraction(1, 3), 150) * Ball.from_fraction(Fraction(22, 7), 150)
        again = Ball.from_json(json.loads(json.dumps(b.to_json())))
        assert again.mid == b.mid
        assert again.rad >= b.rad
        assert again.contains_fraction(Fraction(22, 21))

    def test_schema(self):
        obj = Ball.from_fraction(Fraction(1, 3), 100).to_json()
        assert set(obj) == {"mid", "rad", "bits"}
        assert isinstance(obj["mid"], str) and isinstance(obj["bits"], int)

    def test_decimal_str(self):
        assert decimal_str(gmpy2.mpfr("0"), 10) == "0"
        s = decimal_str(gmpy2.mpfr("-0.125"), 3)
        assert s == "-1.25e-01"


class TestRadiusMonotonicity:
    def test_more_bits_never_hurts(self):
        lo = Ball.from_fraction(Fraction(1, 3), 100)
        hi = Ball.from_fraction(Fraction(1, 3), 200)
        assert hi.rad <= lo.rad
