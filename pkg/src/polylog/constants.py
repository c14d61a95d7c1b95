"""Certified constant suppliers: ln 2, pi, zeta(k), zeta(k-bar), Bernoulli.

Each numeric constant returns a Ball whose radius is at most the context's
target absolute error.  Series are truncated against explicit tail bounds;
rounding error rides along through ball arithmetic.

Results are memoized per (argument, precision); the cache is safe under
concurrent readers and writers.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .balls import Ball, PrecisionContext
from .errors import BadExponent


def _target_bits(ctx: PrecisionContext) -> int:
    return ctx.target_bits


@lru_cache(maxsize=None)
def _ln2_impl(bits: int, tail_bits: int) -> Ball:
    # ln 2 = sum_{n>=1} 1/(n 2^n); tail after N terms is < 2 * 2^-N / (N+1)
    n_terms = tail_bits + 8
    total = Ball.zero(bits)
    for n in range(1, n_terms + 1):
        total = total + Ball.from_fraction(Fraction(1, n << n), bits)
    tail = Ball.error_only(Fraction(2, (n_terms + 1) << n_terms), bits)
    return total + tail


def ln2_ball(ctx: PrecisionContext) -> Ball:
    return _ln2_impl(ctx.effective_bits, _target_bits(ctx) + 8)


@lru_cache(maxsize=None)
def _atan_inv_impl(m: int, bits: int, tail_bits: int) -> Ball:
    # arctan(1/m) = sum_{j>=0} (-1)^j / ((2j+1) m^(2j+1)); alternating with
    # decreasing terms, so the tail is bounded by the first omitted term
    total = Ball.zero(bits)
    j = 0
    while True:
        term = Fraction(1, (2 * j + 1) * m ** (2 * j + 1))
        if term < Fraction(1, 1 << (tail_bits + 4)):
            break
        total = total + Ball.from_fraction(term if j % 2 == 0 else -term, bits)
        j += 1
    return total + Ball.error_only(term, bits)


def pi_ball(ctx: PrecisionContext) -> Ball:
    """pi from the Machin formula pi/4 = 4 arctan(1/5) - arctan(1/239)."""
    bits = ctx.effective_bits
    tb = _target_bits(ctx) + 16
    quarter = _atan_inv_impl(5, bits, tb) * 16 - _atan_inv_impl(239, bits, tb) * 4
    return quarter


_ACCEL_RATIO_BITS_PER_TERM = Fraction(2543, 1000)  # log2(3 + sqrt 8) rounded down


def _chebyshev_weights(n: int) -> tuple[int, list[int]]:
    """Integer weights for alternating-series acceleration.

    Returns (d, [c_0, ..., c_(n-1)]) such that sum_k c_k a_k / d estimates
    sum_k (-1)^k a_k with error at most 2 / (3+sqrt(8))^n times the total
    variation, for any totally monotone sequence a_k (Cohen, Rodriguez
    Villegas, Zagier 2000).
    """
    # d = ((3+sqrt8)^n + (3-sqrt8)^n) / 2, an integer (Chebyshev T_n(3))
    t_prev, t_cur = 1, 3
    for _ in range(n - 1):
        t_prev, t_cur = t_cur, 6 * t_cur - t_prev
    d = t_cur if n >= 1 else 1
    b = Fraction(-1)
    c = Fraction(-d)
    weights: list[int] = []
    for k in range(n):
        c = b - c
        weights.append(int(c))
        b = b * Fraction(2 * (k + n) * (k - n), (2 * k + 1) * (k + 1))
    return d, weights


@lru_cache(maxsize=None)
def _eta_impl(k: int, bits: int, tail_bits: int) -> Ball:
    # eta(k) = sum_{n>=1} (-1)^(n-1) n^-k, accelerated with geometric error
    n_terms = int(tail_bits / _ACCEL_RATIO_BITS_PER_TERM) + 4
    d, weights = _chebyshev_weights(n_terms)
    # exact rational accumulation; one ball conversion at the end
    acc = Fraction(0)
    for j, w in enumerate(weights):
        acc += Fraction(w, (j + 1) ** k)
    total = Ball.from_fraction(acc / d, bits)
    err = Fraction(4) * Fraction(1000, 5828) ** n_terms
    return total + Ball.error_only(err, bits)


@lru_cache(maxsize=None)
def _zeta_impl(k: int, bits: int, tail_bits: int) -> Ball:
    scale = Fraction(1, 1) - Fraction(1, 2 ** (k - 1))
    eta = _eta_impl(k, bits, tail_bits + 4)
    return eta / Ball.from_fraction(scale, bits)


def zeta_ball(k: int, ctx: PrecisionContext) -> Ball:
    """zeta(k) for k >= 2 through the alternating eta series."""
    if k < 2:
        raise BadExponent(f"zeta({k}) is not available numerically")
    return _zeta_impl(k, ctx.effective_bits, _target_bits(ctx) + 8)


def zeta_bar_ball(k: int, ctx: PrecisionContext) -> Ball:
    """Alternating zeta value: -1/2 at k=0, -ln 2 at k=1, else -(1-2^(1-k)) zeta(k)."""
    if k < 0:
        raise BadExponent(f"zeta-bar({k}) undefined")
    if k == 0:
        return Ball.from_fraction(Fraction(-1, 2), ctx.effective_bits)
    if k == 1:
        return -ln2_ball(ctx)
    return zeta_ball(k, ctx) * Ball.from_fraction(Fraction(1, 2 ** (k - 1)) - 1, ctx.effective_bits)


@lru_cache(maxsize=None)
def _bernoulli_list(n: int) -> tuple[Fraction, ...]:
    # standard recurrence sum_{j<=m} binom(m+1, j) B_j = 0 with B_0 = 1
    out = [Fraction(1)]
    for m in range(1, n + 1):
        acc = Fraction(0)
        for j in range(m):
            acc += comb(m + 1, j) * out[j]
        out.append(-acc / (m + 1))
    return tuple(out)


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n (convention B_1 = -1/2), exact."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return _bernoulli_list(n)[n]


def zeta_even_rational(k: int) -> Fraction:
    """Exact rational zeta(k)/pi^k for even k >= 2."""
    if k < 2 or k % 2:
        raise BadExponent(f"zeta({k})/pi^{k} is not rational")
    q = k // 2
    return Fraction((-1) ** (q + 1) * 4 ** q, 2) * bernoulli(k) / Fraction(
        _factorial(k))


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def gosper_holds(r: int) -> bool:
    """Exact check of the Bernoulli convolution identity

    sum_{p=0}^r (1-2^(1-p)) (1-2^(1-(r-p))) B_p B_(r-p) / (p! (r-p)!)
        = -(r-1) B_r / r!
    """
    if r < 0:
        raise ValueError("r must be >= 0")
    lhs = Fraction(0)
    for p in range(r + 1):
        lhs += ((1 - Fraction(2, 2 ** p)) * (1 - Fraction(2, 2 ** (r - p)))
                * bernoulli(p) * bernoulli(r - p)
                / (_factorial(p) * _factorial(r - p)))
    rhs = -(r - 1) * bernoulli(r) / _factorial(r)
    return lhs == rhs


def tangent_number(n: int) -> int:
    """n-th tangent number via the Entringer recurrence (independent of the
    Bernoulli recurrence; used as a cross-check oracle)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    # zigzag numbers A_m: E(m, m) with E(m, k) = E(m, k-1) + E(m-1, m-k)
    m = 2 * n - 1
    prev = [1]
    for row in range(1, m + 1):
        cur = [0]
        for k in range(1, row + 1):
            cur.append(cur[k - 1] + prev[row - k])
        prev = cur
    return prev[m]


def bernoulli_from_tangent(n: int) -> Fraction:
    """B_(2n) recovered from the tangent numbers."""
    t = tangent_number(n)
    return Fraction((-1) ** (n - 1) * 2 * n * t, 4 ** n * (4 ** n - 1))
