"""Rigorous numeric evaluation of Li, Le, mu, and convergent nested zetas.

Direct nested summation is used only in the geometric regime |z| <= 1/2,
where a crude envelope gives a provable truncation bound.  The points -1
and 1 are never summed directly: -1 routes through the argument reflection
z -> -z/(1-z) (so the series run at z = 1/2), and 1 routes through the
Hoelder splitting into bilinear products at z = 1/2.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import comb

from .algebra import (X1, Composition, FormalSum, Point, PolylogTerm,
                      SignedComposition, Word, holder_pairs, le_to_li,
                      li_reflection)
from .balls import Ball, PrecisionContext, ball_sum
from .errors import BadPattern, BadSigns, Divergent, OutOfRegime


def _split_target(ctx: PrecisionContext, n: int) -> PrecisionContext:
    """Context whose target is an n-th share of ctx's target."""
    if n <= 1:
        return ctx
    return PrecisionContext(ctx.working_bits, ctx.target_abs_error / n)


def _li_tail_bound(n_stop: int, length: int, x: Fraction) -> Fraction:
    # sum_{n > N} n^(l-1) x^n, bounded geometrically: the term ratio is at
    # most ((N+2)/(N+1))^(l-1) x for n > N
    ratio = Fraction(n_stop + 2, n_stop + 1) ** (length - 1) * x
    if ratio >= 1:
        return Fraction(10) ** 30  # effectively "keep searching"
    first = Fraction(n_stop + 1) ** (length - 1) * x ** (n_stop + 1)
    return first / (1 - ratio)


def _le_tail_bound(n_stop: int, length: int, x: Fraction) -> Fraction:
    # tuple count with leading index n is binom(n+l-2, l-1) for Le
    ratio = Fraction(n_stop + length, n_stop + 1) * x
    if ratio >= 1:
        return Fraction(10) ** 30
    first = comb(n_stop + length - 1, length - 1) * x ** (n_stop + 1)
    return first / (1 - ratio)


def _choose_cutoff(tail_bound, length: int, x: Fraction, target: Fraction) -> int:
    n = 64
    while tail_bound(n, length, x) > target:
        n *= 2
        if n > 1 << 26:
            raise OutOfRegime(f"series truncation diverged for |z|={x}")
    return n


def _nested_sum(parts: tuple[int, ...], z: Fraction, ctx: PrecisionContext,
                strict: bool) -> Ball:
    x = abs(z)
    target = ctx.target_abs_error
    tail_fn = _li_tail_bound if strict else _le_tail_bound
    n_stop = _choose_cutoff(tail_fn, len(parts), x, target / 2)
    bits = max(ctx.effective_bits, n_stop.bit_length() + ctx.target_bits + 64)

    l = len(parts)
    z_ball = Ball.from_fraction(z, bits)
    zpow = Ball.from_fraction(1, bits)
    total = Ball.zero(bits)
    inner = [Ball.zero(bits) for _ in range(l + 2)]
    inner[l + 1] = Ball.from_fraction(1, bits)

    for n in range(1, n_stop + 1):
        zpow = zpow * z_ball
        if strict:
            # strict nesting: outer summand uses counts below n, then the
            # running inner sums absorb index value n
            head = zpow * Fraction(1, n ** parts[0])
            total = total + (head * inner[2] if l > 1 else head)
            for j in range(2, l + 1):
                inner[j] = inner[j] + inner[j + 1] * Fraction(1, n ** parts[j - 1])
        else:
            # non-strict nesting: inner sums absorb n first, innermost first
            for j in range(l, 1, -1):
                inner[j] = inner[j] + inner[j + 1] * Fraction(1, n ** parts[j - 1])
            head = zpow * Fraction(1, n ** parts[0])
            total = total + (head * inner[2] if l > 1 else head)

    return total + Ball.error_only(tail_fn(n_stop, l, x), bits)


@lru_cache(maxsize=None)
def _li_series_cached(parts: tuple[int, ...], z: Fraction, ctx: PrecisionContext) -> Ball:
    return _nested_sum(parts, z, ctx, strict=True)


@lru_cache(maxsize=None)
def _le_series_cached(parts: tuple[int, ...], z: Fraction, ctx: PrecisionContext) -> Ball:
    return _nested_sum(parts, z, ctx, strict=False)


def _check_regime(z: Fraction) -> None:
    if abs(z) > Fraction(1, 2):
        raise OutOfRegime(f"direct summation needs |z| <= 1/2, got {z}")


def li_series(c: Composition, z: Fraction | int, ctx: PrecisionContext) -> Ball:
    """Li_c(z) = sum over n_1 > ... > n_l >= 1 of z^n_1 / prod n_j^s_j."""
    z = Fraction(z)
    if z == 0:
        return Ball.zero(ctx.effective_bits)
    _check_regime(z)
    return _li_series_cached(c.parts, z, ctx)


def le_series(c: Composition, z: Fraction | int, ctx: PrecisionContext) -> Ball:
    """Le_c(z): as li_series but with non-strict nesting n_1 >= ... >= n_l."""
    z = Fraction(z)
    if z == 0:
        return Ball.zero(ctx.effective_bits)
    _check_regime(z)
    return _le_series_cached(c.parts, z, ctx)


HALF = Fraction(1, 2)


@lru_cache(maxsize=None)
def li_at_minus_one(c: Composition, ctx: PrecisionContext) -> Ball:
    """Li_c(-1) through the reflection z -> -z/(1-z) evaluated at z = 1/2."""
    expansion = li_reflection(c)
    sub = _split_target(ctx, len(expansion.terms))
    terms = [li_series(tp[0].index, HALF, sub) * coeff
             for tp, coeff in sorted(expansion.terms.items())]
    return ball_sum(terms, sub.effective_bits)


def le_at(c: Composition, point: Point, ctx: PrecisionContext) -> Ball:
    """Le_c at 1/2 or -1 via the merge expansion into Li terms."""
    if point not in (Point.HALF, Point.MINUS_ONE):
        raise ValueError(f"le_at supports 1/2 and -1, got {point}")
    expansion = le_to_li(c)
    sub = _split_target(ctx, len(expansion.terms))
    terms = []
    for tp, coeff in sorted(expansion.terms.items()):
        idx = tp[0].index
        val = li_series(idx, HALF, sub) if point is Point.HALF else li_at_minus_one(idx, sub)
        terms.append(val * coeff)
    return ball_sum(terms, sub.effective_bits)


def _mu_words(parts: tuple[int, ...]):
    # all words p_1 x1 ... p_l x1 with |p_j| = s_j - 1
    for choice in itertools.product(*[itertools.product((0, 1), repeat=s - 1)
                                      for s in parts]):
        letters: list[int] = []
        for p in choice:
            letters.extend(p)
            letters.append(X1)
        yield Word(tuple(letters)).composition()


def mu_arguments_to_composition(args: tuple[Fraction, ...]) -> tuple[Fraction, Composition]:
    """Recover (z, composition) from the pattern (z, 1...1, z, 1...1, ...).

    The group starting at the j-th occurrence of z (counted from the left)
    has length s_(l+1-j); groups therefore read the composition backwards.
    """
    if not args:
        raise BadPattern("empty argument list")
    z = args[0]
    if z == 1:
        raise BadPattern("leading argument must differ from 1")
    sizes = []
    for a in args:
        if a == z:
            sizes.append(1)
        elif a == 1:
            if not sizes:
                raise BadPattern("argument list must start with z")
            sizes[-1] += 1
        else:
            raise BadPattern(f"argument {a} is neither 1 nor the leading value {z}")
    return z, Composition(tuple(reversed(sizes)))


def mu_eval(args, ctx: PrecisionContext) -> Ball:
    """mu(a_1, ..., a_l) = sum over k_j >= 1 of prod a_j^k_j divided by
    (k_1+...+k_l)(k_2+...+k_l)...(k_l).

    Accepts the pattern (z, 1...1, z, ...) with |z| <= 1/2, or z = -1.
    """
    args = tuple(Fraction(a) for a in args)
    z, c = mu_arguments_to_composition(args)
    at_minus_one = z == -1
    if not at_minus_one and abs(z) > HALF:
        raise BadPattern(f"leading value must be -1 or satisfy |z| <= 1/2, got {z}")
    words = list(_mu_words(c.parts))
    sub = _split_target(ctx, len(words))
    terms = [li_at_minus_one(t, sub) if at_minus_one else li_series(t, z, sub)
             for t in words]
    return ball_sum(terms, sub.effective_bits)


def alt_zeta_ones(signs, ctx: PrecisionContext) -> Ball:
    """zeta(1, ..., 1; sigma) for signs sigma_j = +-1 with sigma_1 = -1.

    Accepts a plain sign list or an all-ones SignedComposition.  Inverts
    sigma_j = a_(j-1) + a_j - 1 (mod 4) to recover the mu argument vector,
    so sigma_j = -1 flips the running sign.
    """
    if isinstance(signs, SignedComposition):
        if set(signs.exponents) != {1}:
            raise BadSigns("only all-ones exponents evaluate through mu")
        signs = signs.signs
    signs = [int(s) for s in signs]
    if not signs or signs[0] != -1:
        raise BadSigns("first sign must be -1")
    if any(s not in (-1, 1) for s in signs):
        raise BadSigns("signs must be +-1")
    a = [-1]
    for s in signs[1:]:
        a.append(a[-1] * s)
    return mu_eval(a, ctx)


@lru_cache(maxsize=None)
def mzv_eval(c: Composition, ctx: PrecisionContext) -> Ball:
    """Convergent multiple zeta value zeta(c), s_1 >= 2, through the
    Hoelder splitting at z = 1/2 (both factors geometric)."""
    if c.parts[0] < 2:
        raise Divergent(f"zeta({c}) diverges (leading part 1)")
    pairs = holder_pairs(c.word())
    sub = _split_target(ctx, 4 * len(pairs))
    terms = []
    for suffix, flipped in pairs:
        left = li_series(suffix.composition(), HALF, sub) if len(suffix) else None
        right = li_series(flipped.composition(), HALF, sub) if len(flipped) else None
        if left is None and right is None:
            raise AssertionError("both factors empty")
        if left is None:
            terms.append(right)
        elif right is None:
            terms.append(left)
        else:
            terms.append(left * right)
    return ball_sum(terms, sub.effective_bits)


def eval_term(term: PolylogTerm, ctx: PrecisionContext) -> Ball:
    """Evaluate a single polylog term at its tagged point."""
    if term.point is Point.Z:
        raise ValueError(f"term {term} has a symbolic argument")
    if term.kind == "Li":
        if term.point is Point.HALF:
            return li_series(term.index, HALF, ctx)
        if term.point is Point.MINUS_ONE:
            return li_at_minus_one(term.index, ctx)
        return mzv_eval(term.index, ctx)
    if term.point is Point.ONE:
        expansion = le_to_li(term.index, Point.ONE)
        sub = _split_target(ctx, len(expansion.terms))
        return ball_sum([mzv_eval(tp[0].index, sub) * coeff
                         for tp, coeff in sorted(expansion.terms.items())],
                        sub.effective_bits)
    return le_at(term.index, term.point, ctx)


def eval_formal(fs: FormalSum, ctx: PrecisionContext) -> Ball:
    """Evaluate a formal sum of products of tagged polylog terms."""
    n = max(1, len(fs.terms))
    sub = _split_target(ctx, 2 * n)
    parts = []
    for tp, coeff in sorted(fs.terms.items()):
        prod = Ball.from_fraction(coeff, sub.effective_bits)
        for t in tp:
            prod = prod * eval_term(t, sub)
        parts.append(prod)
    return ball_sum(parts, sub.effective_bits)
