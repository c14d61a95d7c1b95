"""PSLQ detector and the verification harnesses."""

import random
from fractions import Fraction

import mpmath
import pytest

from polylog.algebra import Composition, Point
from polylog.balls import Ball, PrecisionContext
from polylog.constants import ln2_ball, zeta_ball
from polylog.relations import (NONE_WITHIN_BOUND, PslqConfig, expand_over_basis,
                               probe_zeta_ring, pslq, spans_coincide)
from polylog.series import li_series

H = Fraction(1, 2)


def C(*parts):
    return Composition(tuple(parts))


def balls_from_fractions(qs, bits=700):
    return [Ball.from_fraction(q, bits) for q in qs]


SMALL_CFG = PslqConfig(coefficient_bound=10 ** 3)


class TestPslqCore:
    def test_exact_ratio(self):
        res = pslq(balls_from_fractions([Fraction(1), Fraction(2)]), SMALL_CFG)
        assert res.found and res.vector == (2, -1)

    def test_primitivity_and_sign(self):
        res = pslq(balls_from_fractions([Fraction(2), Fraction(4)]), SMALL_CFG)
        assert res.vector == (2, -1)
        for v in res.vector:
            if v:
                assert v > 0
                break

    def test_zero_input_short_circuit(self):
        res = pslq([Ball.from_fraction(1, 700), Ball.zero(700)], SMALL_CFG)
        assert res.found and res.vector == (0, 1)

    def test_straddling_zero_rejected(self):
        wide = Ball.from_fraction(Fraction(1, 10 ** 30), 700) + \
            Ball.error_only(Fraction(1, 10 ** 20), 700)
        with pytest.raises(ValueError):
            pslq([Ball.from_fraction(1, 700), wide], SMALL_CFG)

    def test_insufficient_precision_rejected(self):
        with pytest.raises(ValueError):
            pslq(balls_from_fractions([Fraction(1), Fraction(2)], bits=64),
                 PslqConfig(coefficient_bound=10 ** 6))

    def test_determinism(self):
        ctx = PrecisionContext.for_digits(60)
        xs = [li_series(C(2), H, ctx), zeta_ball(2, ctx), ln2_ball(ctx).pow_int(2)]
        a = pslq(xs, SMALL_CFG)
        b = pslq(xs, SMALL_CFG)
        assert a.vector == b.vector and a.iterations == b.iterations

    def test_scaling_invariance(self):
        ctx = PrecisionContext.for_digits(60)
        xs = [li_series(C(2), H, ctx), zeta_ball(2, ctx), ln2_ball(ctx).pow_int(2)]
        scaled = [x * Fraction(3, 7) for x in xs]
        assert pslq(xs, SMALL_CFG).vector == pslq(scaled, SMALL_CFG).vector

    def test_none_within_bound(self):
        # ln2 and zeta(2): no plausible small relation, bound must certify out
        ctx = PrecisionContext.for_digits(60)
        res = pslq([ln2_ball(ctx), zeta_ball(2, ctx)], PslqConfig(coefficient_bound=500))
        assert res.status == NONE_WITHIN_BOUND

    def test_soundness_residual_at_double_precision(self):
        ctx = PrecisionContext.for_digits(45)
        xs = [li_series(C(2), H, ctx), zeta_ball(2, ctx), ln2_ball(ctx).pow_int(2)]
        res = pslq(xs, SMALL_CFG)
        assert res.found
        fine = PrecisionContext.for_digits(90)
        fine_vals = [li_series(C(2), H, fine), zeta_ball(2, fine),
                     ln2_ball(fine).pow_int(2)]
        residual = Ball.zero(fine.effective_bits)
        for m, v in zip(res.vector, fine_vals):
            residual = residual + v * m
        import gmpy2
        assert residual.mag_upper() < gmpy2.exp2(-(xs[0].bits // 2))

    def test_json_report(self):
        res = pslq(balls_from_fractions([Fraction(1), Fraction(3)]), SMALL_CFG)
        obj = res.to_json()
        assert obj["status"] == "found" and obj["vector"] == [3, -1]
        assert set(obj) >= {"status", "vector", "residual", "digits"}


class TestAgainstMpmathOracle:
    def test_planted_relations(self):
        rng = random.Random(7)
        for _ in range(5):
            m = [rng.randint(-9, 9) for _ in range(4)]
            while m[-1] == 0:
                m[-1] = rng.randint(-9, 9)
            xs = [Fraction(rng.randint(1, 500), rng.randint(1, 500)) for _ in range(3)]
            last = -sum(q * k for q, k in zip(xs, m[:-1])) / m[-1]
            if last == 0:
                continue
            xs.append(last)
            mine = pslq(balls_from_fractions(xs), SMALL_CFG)
            assert mine.found
            assert sum(q * k for q, k in zip(xs, mine.vector)) == 0
            with mpmath.workdps(80):
                theirs = mpmath.pslq([mpmath.mpf(q.numerator) / q.denominator
                                      for q in xs], maxcoeff=10 ** 6)
            assert theirs is not None
            # both vectors annihilate the inputs; compare up to sign when equal length
            assert sum(q * k for q, k in zip(xs, theirs)) == 0


class TestHarnesses:
    def test_expansion_identity_member(self):
        ctx = PrecisionContext.for_digits(100)
        exp = expand_over_basis(C(2), ctx, PslqConfig(coefficient_bound=10 ** 4))
        assert exp.relation.found
        assert exp.coefficients == (Fraction(1), Fraction(0))
        assert exp.exact_match is True

    def test_expansion_li3(self):
        ctx = PrecisionContext.for_digits(120)
        exp = expand_over_basis(C(3), ctx, PslqConfig(coefficient_bound=10 ** 4))
        assert exp.relation.found and exp.exact_match is True
        assert exp.coefficients == (Fraction(5), Fraction(-1), Fraction(5))

    def test_expansion_weight_cap(self):
        from polylog.errors import CapExceeded
        with pytest.raises(CapExceeded):
            expand_over_basis(C(8), PrecisionContext.for_digits(50))

    def test_spans_coincide_small(self):
        assert spans_coincide(1)
        assert spans_coincide(2)
        assert spans_coincide(3)
        assert spans_coincide(5)

    def test_spans_coincide_at_cap(self):
        assert spans_coincide(8)

    def test_zeta_ring_probe_found(self):
        # Le_(1,3,1)(1/2) = 53/64 zeta(5) - 1/16 zeta(2) zeta(3)
        res = probe_zeta_ring("Le", C(1, 3, 1), Point.HALF)
        assert res.found
        assert res.vector == (64, -53, 4)
