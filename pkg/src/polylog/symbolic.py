"""Exact closed-form layer: weight-graded polynomials in ln 2, zeta values,
and Li_k(1/2), plus the machinery that rebuilds the weight 1..5 value tables
from scratch.

Monomials are canonicalized so that a product of two or more even zeta
factors collapses into the single even zeta of the combined weight times an
exact rational (all even zeta values are rational multiples of the matching
power of pi).  Without that normalization the weight-5 linear system would
straddle two spellings of the same number.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from math import comb, factorial

from .algebra import (Composition, Point, compositions_of_weight, holder_pairs,
                      le_to_li, li_reflection, shuffle_compositions)
from .balls import Ball, PrecisionContext, ball_sum
from .constants import ln2_ball, zeta_ball, zeta_even_rational
from .errors import ConsistencyFailure, ParityError, SingularSystem
from .series import HALF, li_series, mzv_eval


@dataclass(frozen=True, order=True)
class Generator:
    """One of ln2 (weight 1), zeta(k) for k >= 2, or Li_k(1/2) for k >= 4."""

    kind: str  # "zeta" | "li_half" | "ln2"
    k: int = 0

    def __post_init__(self) -> None:
        if self.kind == "zeta":
            if self.k < 2:
                raise ValueError("zeta(1) is not a generator")
        elif self.kind == "li_half":
            if self.k < 4:
                raise ValueError(f"Li_{self.k}(1/2) reduces; not a generator")
        elif self.kind == "ln2":
            if self.k != 0:
                raise ValueError("ln2 carries no index")
        else:
            raise ValueError(f"unknown generator kind {self.kind}")

    @property
    def weight(self) -> int:
        return 1 if self.kind == "ln2" else self.k

    def __str__(self) -> str:
        if self.kind == "ln2":
            return "ln2"
        if self.kind == "zeta":
            return f"zeta({self.k})"
        return f"Li{self.k}(1/2)"


LN2 = Generator("ln2")


def zeta_gen(k: int) -> Generator:
    return Generator("zeta", k)


def li_half_gen(k: int) -> Generator:
    return Generator("li_half", k)


@dataclass(frozen=True)
class Monomial:
    """Canonically sorted multiset of generators."""

    gens: tuple[Generator, ...]

    @property
    def weight(self) -> int:
        return sum(g.weight for g in self.gens)

    def __str__(self) -> str:
        if not self.gens:
            return "1"
        parts = []
        for g in _display_order(self.gens):
            power = self.gens.count(g)
            parts.append(str(g) if power == 1 else f"{str(g)}^{power}")
        return "*".join(parts)


def _display_order(gens: tuple[Generator, ...]) -> list[Generator]:
    seen: list[Generator] = []
    rank = {"zeta": 0, "li_half": 1, "ln2": 2}
    for g in sorted(set(gens), key=lambda g: (rank[g.kind], g.k)):
        seen.append(g)
    return seen


ONE_MONOMIAL = Monomial(())


def make_monomial(gens) -> tuple[Fraction, Monomial]:
    """Canonicalize a generator multiset, collapsing even zeta products.

    Returns (rational factor, monomial) with the factor absorbing e.g.
    zeta(2)^2 = 5/2 zeta(4).
    """
    gens = list(gens)
    evens = sorted(g.k for g in gens if g.kind == "zeta" and g.k % 2 == 0)
    factor = Fraction(1)
    if len(evens) >= 2:
        total = sum(evens)
        for k in evens:
            factor *= zeta_even_rational(k)
        factor /= zeta_even_rational(total)
        gens = [g for g in gens if not (g.kind == "zeta" and g.k % 2 == 0)]
        gens.append(zeta_gen(total))
    return factor, Monomial(tuple(sorted(gens)))


def _monomial_sort_key(m: Monomial):
    zs = sorted((g.k for g in m.gens if g.kind == "zeta"), reverse=True)
    lis = sorted((g.k for g in m.gens if g.kind == "li_half"), reverse=True)
    ln_pow = sum(1 for g in m.gens if g.kind == "ln2")
    if not lis:
        return (0, -sum(zs), tuple(-k for k in zs), 0)
    return (1, tuple(-k for k in lis), -ln_pow, tuple(-k for k in zs))


class SymExpr:
    """Exact rational polynomial in the graded generators, weight-homogeneous."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[Monomial, Fraction] | None = None):
        clean: dict[Monomial, Fraction] = {}
        if coeffs:
            for m, c in coeffs.items():
                c = Fraction(c)
                if c:
                    clean[m] = clean.get(m, Fraction(0)) + c
        self.coeffs = {m: c for m, c in clean.items() if c}
        weights = {m.weight for m in self.coeffs}
        if len(weights) > 1:
            raise ValueError(f"mixed weights in one expression: {sorted(weights)}")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "SymExpr":
        return cls()

    @classmethod
    def rational(cls, q: Fraction | int) -> "SymExpr":
        return cls({ONE_MONOMIAL: Fraction(q)})

    @classmethod
    def generator(cls, g: Generator, coeff: Fraction | int = 1) -> "SymExpr":
        return cls({Monomial((g,)): Fraction(coeff)})

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "SymExpr") -> "SymExpr":
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, Fraction(0)) + c
        return SymExpr(out)

    def __sub__(self, other: "SymExpr") -> "SymExpr":
        return self + other.scale(-1)

    def __neg__(self) -> "SymExpr":
        return self.scale(-1)

    def scale(self, q: Fraction | int) -> "SymExpr":
        q = Fraction(q)
        return SymExpr({m: c * q for m, c in self.coeffs.items()})

    def __mul__(self, other: "SymExpr") -> "SymExpr":
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                factor, mono = make_monomial(m1.gens + m2.gens)
                out[mono] = out.get(mono, Fraction(0)) + c1 * c2 * factor
        return SymExpr(out)

    def pow(self, n: int) -> "SymExpr":
        out = SymExpr.rational(1)
        for _ in range(n):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not self.coeffs

    def weight(self) -> int:
        if not self.coeffs:
            raise ValueError("zero expression has no weight")
        return next(iter(self.coeffs)).weight

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SymExpr) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def vector(self, basis: list[Monomial]) -> list[Fraction]:
        """Coefficients over an ordered monomial basis; stray monomials fail."""
        index = {m: i for i, m in enumerate(basis)}
        out = [Fraction(0)] * len(basis)
        for m, c in self.coeffs.items():
            if m not in index:
                raise ValueError(f"monomial {m} outside basis")
            out[index[m]] = c
        return out

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        bits = [f"{c}*{m}" for m, c in
                sorted(self.coeffs.items(), key=lambda kv: _monomial_sort_key(kv[0]))]
        return " + ".join(bits)


def ln2_pow(p: int) -> SymExpr:
    if p == 0:
        return SymExpr.rational(1)
    return SymExpr({Monomial((LN2,) * p): Fraction(1)})


def zeta_sym(k: int) -> SymExpr:
    return SymExpr.generator(zeta_gen(k))


def zeta_bar_sym(k: int) -> SymExpr:
    """Alternating zeta: zeta(0-bar) = -1/2, zeta(1-bar) = -ln2,
    else -(1 - 2^(1-k)) zeta(k)."""
    if k == 0:
        return SymExpr.rational(Fraction(-1, 2))
    if k == 1:
        return ln2_pow(1).scale(-1)
    return zeta_sym(k).scale(Fraction(1, 2 ** (k - 1)) - 1)


@lru_cache(maxsize=None)
def li_half_closed(k: int) -> SymExpr:
    """Closed forms of Li_k(1/2) for k <= 3 (these are not generators)."""
    if k == 1:
        return ln2_pow(1)
    if k == 2:
        return zeta_sym(2).scale(Fraction(1, 2)) - ln2_pow(2).scale(Fraction(1, 2))
    if k == 3:
        return (zeta_sym(3).scale(Fraction(7, 8))
                - (zeta_sym(2) * ln2_pow(1)).scale(Fraction(1, 2))
                + ln2_pow(3).scale(Fraction(1, 6)))
    raise ValueError(f"no closed form for Li_{k}(1/2)")


def li_half_sym(k: int) -> SymExpr:
    return li_half_closed(k) if k <= 3 else SymExpr.generator(li_half_gen(k))


def ones_value(w: int) -> SymExpr:
    """Li at 1/2 of the all-ones index of weight w: ln^w 2 / w!."""
    return ln2_pow(w).scale(Fraction(1, factorial(w)))


# ---------------------------------------------------------------------------
# closed-form families at z = 1/2
# ---------------------------------------------------------------------------

def li_ones_two_ones(m: int, n: int) -> SymExpr:
    """Li at 1/2 of the index (1,...,1, 2, 1,...,1) with m ones before the 2
    and n ones after it.

    zeta part: sum_k (-1)^k binom(n+1+k, n+1) zeta(n+2+k) ln^(m-k)2/(m-k)!
    Li part:  (-1)^(m+1) sum_k binom(m+k, m) Li_(m+1+k)(1/2) ln^(n+1-k)2/(n+1-k)!
    """
    if m < 0 or n < 0:
        raise ValueError("m, n must be >= 0")
    out = SymExpr.zero()
    for k in range(m + 1):
        coeff = Fraction((-1) ** k * comb(n + 1 + k, n + 1), factorial(m - k))
        out = out + (zeta_sym(n + 2 + k) * ln2_pow(m - k)).scale(coeff)
    for k in range(n + 2):
        coeff = Fraction((-1) ** (m + 1) * comb(m + k, m), factorial(n + 1 - k))
        out = out + (li_half_sym(m + 1 + k) * ln2_pow(n + 1 - k)).scale(coeff)
    return out


def ones_two_ones_composition(m: int, n: int) -> Composition:
    return Composition((1,) * m + (2,) + (1,) * n)


def ones_two_ones_shift_identities(m: int, n: int) -> tuple[SymExpr, SymExpr, SymExpr]:
    """The two re-expansion identities for Li_(1^m, 2, 1^n)(1/2).

    Returns (direct, via_trailing_ones, via_leading_ones) where the second
    expands over Li_(2, 1^(n+k))(1/2) and the third over Li_(1^(m+k), 2)(1/2),
    every polylog replaced by its closed form.  All three must agree.
    """
    direct = li_ones_two_ones(m, n)
    first = SymExpr.zero()
    for k in range(m + 1):
        coeff = Fraction((-1) ** k * comb(n + 1 + k, n + 1), factorial(m - k))
        first = first + (li_ones_two_ones(0, n + k) * ln2_pow(m - k)).scale(coeff)
    second = SymExpr.zero()
    for k in range(n + 1):
        coeff = Fraction((-1) ** k * comb(m + k, m), factorial(n - k))
        second = second + (li_ones_two_ones(m + k, 0) * ln2_pow(n - k)).scale(coeff)
    second = second.scale(Fraction(1, n + 1))
    return direct, first, second


def _alternating_li_at_sign(k: int) -> SymExpr:
    # Li_k((-1)^k): -ln2 at k=1, zeta(k) for even k, -(1-2^(1-k)) zeta(k) odd
    if k == 1:
        return ln2_pow(1).scale(-1)
    if k % 2 == 0:
        return zeta_sym(k)
    return zeta_sym(k).scale(Fraction(1, 2 ** (k - 1)) - 1)


def li_twos_family(m_max: int) -> tuple[list[SymExpr], list[SymExpr]]:
    """Values Li_(2,...,2)(1/2) and Li_(1,2,...,2)(1/2) for 0 <= m <= m_max.

    Read off a truncated exponential generating series whose log-derivative
    coefficients are the alternating values Li_k((-1)^k).
    """
    order = 2 * m_max + 2
    a = [SymExpr.zero()]
    for k in range(1, order + 1):
        a.append(_alternating_li_at_sign(k).scale(Fraction((-1) ** (k - 1), k)))
    g = [SymExpr.rational(1)]
    for j in range(1, order + 1):
        acc = SymExpr.zero()
        for k in range(1, j + 1):
            acc = acc + (a[k] * g[j - k]).scale(k)
        g.append(acc.scale(Fraction(1, j)))
    twos = [g[2 * m].scale((-1) ** m) for m in range(m_max + 1)]
    one_twos = [g[2 * m + 1].scale((-1) ** (m + 1)) for m in range(m_max + 1)]
    return twos, one_twos


# ---------------------------------------------------------------------------
# closed-form families at z = -1
# ---------------------------------------------------------------------------

def le_double_at_minus_one(m: int, n: int) -> SymExpr:
    """Le_(m,n)(-1) for positive m, n with m + n odd.

    Four-part formula over alternating zeta values.  At n = 1 the divergent
    first summand cancels the i = 0 term of the last sum, so both are
    skipped together; zeta(1) never materializes.
    """
    if m < 1 or n < 1:
        raise ValueError("m, n must be >= 1")
    if (m + n) % 2 == 0:
        raise ParityError(f"Le_({m},{n})(-1) has no closed form for even {m + n}")
    total = SymExpr.zero()
    if n % 2 == 1 and n != 1:
        total = total + (zeta_sym(n) * zeta_bar_sym(m)).scale(2)
    total = total + zeta_bar_sym(m + n)
    sign = (-1) ** n
    for j in range(n + 1):  # j + 2k = n
        if (n - j) % 2:
            continue
        k = (n - j) // 2
        coeff = Fraction(2 * sign * comb(m + j - 1, m - 1))
        total = total + (zeta_bar_sym(m + j) * zeta_bar_sym(2 * k)).scale(coeff)
    for i in range(m + 1):  # i + 2k = m
        if (m - i) % 2:
            continue
        if i == 0 and n == 1:
            continue  # cancelled against the divergent first summand
        k = (m - i) // 2
        coeff = Fraction(2 * sign * comb(n + i - 1, n - 1))
        total = total + (zeta_sym(n + i) * zeta_bar_sym(2 * k)).scale(coeff)
    return total.scale(Fraction(1, 2))


def le_one_n_at_minus_one(n: int) -> SymExpr:
    """Le_(1,n)(-1) = (sum_k zeta(k-bar) zeta((n-k+1)-bar) - n zeta(n+1)) / 2."""
    if n < 1:
        raise ValueError("n must be >= 1")
    total = SymExpr.zero()
    for k in range(1, n + 1):
        total = total + zeta_bar_sym(k) * zeta_bar_sym(n - k + 1)
    total = total - zeta_sym(n + 1).scale(n)
    return total.scale(Fraction(1, 2))


# ---------------------------------------------------------------------------
# multiple zeta values of weight <= 5
# ---------------------------------------------------------------------------

def _zeta_product(*ks: int) -> SymExpr:
    out = SymExpr.rational(1)
    for k in ks:
        out = out * zeta_sym(k)
    return out


MZV_CLOSED: dict[tuple[int, ...], "SymExpr"] = {}


def _init_mzv_closed() -> None:
    z5, z23 = zeta_sym(5), _zeta_product(2, 3)
    table = {
        (2,): zeta_sym(2),
        (3,): zeta_sym(3),
        (2, 1): zeta_sym(3),
        (4,): zeta_sym(4),
        (3, 1): zeta_sym(4).scale(Fraction(1, 4)),
        (2, 2): zeta_sym(4).scale(Fraction(3, 4)),
        (2, 1, 1): zeta_sym(4),
        (5,): z5,
        (4, 1): z5.scale(2) - z23,
        (3, 2): z5.scale(Fraction(-11, 2)) + z23.scale(3),
        (2, 3): z5.scale(Fraction(9, 2)) - z23.scale(2),
        (3, 1, 1): z5.scale(2) - z23,
        (2, 2, 1): z5.scale(Fraction(-11, 2)) + z23.scale(3),
        (2, 1, 2): z5.scale(Fraction(9, 2)) - z23.scale(2),
        (2, 1, 1, 1): z5,
    }
    MZV_CLOSED.update(table)


_init_mzv_closed()


@lru_cache(maxsize=None)
def load_mzv_table(digits: int = 35) -> dict[Composition, SymExpr]:
    """Closed forms of every convergent nested zeta of weight <= 5, each
    re-checked numerically against the Hoelder evaluation on load."""
    ctx = PrecisionContext.for_digits(digits)
    out: dict[Composition, SymExpr] = {}
    for parts, expr in MZV_CLOSED.items():
        c = Composition(parts)
        numeric = mzv_eval(c, ctx)
        symbolic = sym_to_numeric(expr, ctx)
        if not numeric.agrees_with(symbolic):
            raise ConsistencyFailure(f"stored zeta({c}) fails its numeric check")
        out[c] = expr
    return out


def mzv_sym(c: Composition) -> SymExpr:
    table = load_mzv_table()
    if c not in table:
        raise KeyError(f"no stored closed form for zeta({c})")
    return table[c]


# ---------------------------------------------------------------------------
# numeric bridge
# ---------------------------------------------------------------------------

def sym_to_numeric(expr: SymExpr, ctx: PrecisionContext) -> Ball:
    """Substitute certified balls for the generators and sum."""
    bits = ctx.effective_bits
    n = max(1, len(expr.coeffs))
    sub = PrecisionContext(ctx.working_bits, ctx.target_abs_error / (4 * n))
    parts = []
    for mono, coeff in sorted(expr.coeffs.items(), key=lambda kv: _monomial_sort_key(kv[0])):
        acc = Ball.from_fraction(coeff, sub.effective_bits)
        for g in mono.gens:
            if g.kind == "ln2":
                acc = acc * ln2_ball(sub)
            elif g.kind == "zeta":
                acc = acc * zeta_ball(g.k, sub)
            else:
                acc = acc * li_series(Composition((g.k,)), HALF, sub)
        parts.append(acc)
    return ball_sum(parts, bits)


# ---------------------------------------------------------------------------
# monomial bases
# ---------------------------------------------------------------------------

def _multisets(values: list[int], budget: int):
    """All multisets over `values` with total at most `budget`."""
    if not values:
        yield ()
        return
    head, rest = values[0], values[1:]
    max_count = budget // head
    for count in range(max_count + 1):
        for tail in _multisets(rest, budget - count * head):
            yield (head,) * count + tail


def monomials_of_weight(w: int) -> list[Monomial]:
    """Canonical monomials of weight w over {ln2, zeta, Li_k(1/2)}, ordered
    to match the value-table column layout."""
    odd_zetas = [k for k in range(3, w + 1, 2)]
    even_zetas = [k for k in range(2, w + 1, 2)]
    li_indices = [k for k in range(4, w + 1)]
    out = []
    for lis in _multisets(li_indices, w):
        for odds in _multisets(odd_zetas, w - sum(lis)):
            remaining = w - sum(lis) - sum(odds)
            for even in [0, *even_zetas]:
                if even > remaining:
                    continue
                ln_power = remaining - even
                gens = [li_half_gen(k) for k in lis]
                gens += [zeta_gen(k) for k in odds]
                if even:
                    gens.append(zeta_gen(even))
                gens += [LN2] * ln_power
                out.append(Monomial(tuple(sorted(gens))))
    return sorted(set(out), key=_monomial_sort_key)


def zeta_monomials(w: int) -> list[Monomial]:
    """Monomials of weight w built from zeta values only."""
    return [m for m in monomials_of_weight(w)
            if all(g.kind == "zeta" for g in m.gens)]


# ---------------------------------------------------------------------------
# exact linear solving
# ---------------------------------------------------------------------------

def solve_linear(matrix: list[list[Fraction]], rhs: list[SymExpr]) -> list[SymExpr]:
    """Solve A x = b exactly over the rationals with SymExpr right sides.

    First nonzero pivot per column, deterministic elimination order.
    """
    n = len(matrix)
    a = [row[:] for row in matrix]
    b = list(rhs)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise SingularSystem(f"no pivot in column {col}")
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            b[col], b[pivot] = b[pivot], b[col]
        inv = Fraction(1) / a[col][col]
        a[col] = [v * inv for v in a[col]]
        b[col] = b[col].scale(inv)
        for r in range(n):
            if r != col and a[r][col]:
                factor = a[r][col]
                a[r] = [v - factor * w for v, w in zip(a[r], a[col])]
                b[r] = b[r] - b[col].scale(factor)
    return b


# ---------------------------------------------------------------------------
# the weight 4 and weight 5 assemblies
# ---------------------------------------------------------------------------

def li_one_top(n: int, known: dict[Composition, SymExpr]) -> SymExpr:
    """Li_(1, 2n-1)(1/2) from the partial-fraction corollary:
    2 Li_(1,2n-1) = sum_k (-1)^(k+1) Li_k Li_(2n-k)."""
    total = SymExpr.zero()
    for k in range(1, 2 * n):
        term = known[Composition((k,))] * known[Composition((2 * n - k,))]
        total = total + term.scale((-1) ** (k + 1))
    return total.scale(Fraction(1, 2))


@lru_cache(maxsize=None)
def li_half_table(w: int) -> dict[Composition, SymExpr]:
    """All Li values at 1/2 of the given weight, 1 <= w <= 5."""
    if not 1 <= w <= 5:
        raise ValueError("closed-form tables cover weights 1..5 only")
    if w == 5:
        return solve_weight_five()
    table: dict[Composition, SymExpr] = {}
    # depth-1 and all-ones rows exist at every weight
    table[Composition((w,))] = li_half_sym(w)
    table[Composition((1,) * w)] = ones_value(w)
    if w >= 3:
        for m in range(w - 1):
            n = w - 2 - m
            table[ones_two_ones_composition(m, n)] = li_ones_two_ones(m, n)
    if w == 4:
        twos, _ = li_twos_family(2)
        table[Composition((2, 2))] = twos[2]
        lower = {**li_half_table(1), **li_half_table(2), **li_half_table(3)}
        table[Composition((1, 3))] = li_one_top(2, lower)
        # shuffle Li_2^2 = 2 Li_(2,2) + 4 Li_(3,1)
        li2 = li_half_closed(2)
        table[Composition((3, 1))] = (li2 * li2 - table[Composition((2, 2))].scale(2)) \
            .scale(Fraction(1, 4))
    missing = [c for c in compositions_of_weight(w) if c not in table]
    if missing:
        raise AssertionError(f"rows not built at weight {w}: {missing}")
    return table


# authoritative externally sourced rows (exact vectors over the weight-5
# monomial basis: zeta(5), zeta(2)zeta(3), zeta(4)ln2, zeta(3)ln2^2,
# zeta(2)ln2^3, ln2^5, Li5(1/2), Li4(1/2)ln2)
_SOURCED_WEIGHT5_ROWS: dict[tuple[int, ...], list[Fraction]] = {
    (1, 1, 3): [Fraction(-3, 64), Fraction(1, 16), Fraction(-5, 16), Fraction(7, 16),
                Fraction(-1, 12), Fraction(1, 120), Fraction(0), Fraction(0)],
    (1, 3, 1): [Fraction(-3, 64), Fraction(0), Fraction(1, 8), Fraction(-1, 16),
                Fraction(0), Fraction(1, 120), Fraction(0), Fraction(0)],
}


def _from_weight5_vector(vec: list[Fraction]) -> SymExpr:
    basis = monomials_of_weight(5)
    return SymExpr({m: c for m, c in zip(basis, vec)})


@lru_cache(maxsize=None)
def solve_weight_five() -> dict[Composition, SymExpr]:
    """All sixteen Li values at 1/2 of weight 5.

    Nine rows are known in closed form; the remaining seven are solved
    exactly from the constant-weight sum, three Hoelder splittings, and
    three shuffle relations.
    """
    known: dict[Composition, SymExpr] = {}
    for lower_w in (1, 2, 3, 4):
        known.update(li_half_table(lower_w))
    known[Composition((5,))] = li_half_sym(5)
    known[Composition((1, 1, 1, 1, 1))] = ones_value(5)
    for m in range(4):
        known[ones_two_ones_composition(m, 3 - m)] = li_ones_two_ones(m, 3 - m)
    _, one_twos = li_twos_family(2)
    known[Composition((1, 2, 2))] = one_twos[2]
    for parts, vec in _SOURCED_WEIGHT5_ROWS.items():
        known[Composition(parts)] = _from_weight5_vector(vec)

    unknowns = [Composition(p) for p in
                [(4, 1), (3, 2), (3, 1, 1), (2, 3), (2, 2, 1), (2, 1, 2), (1, 4)]]
    rows: list[list[Fraction]] = []
    rhs: list[SymExpr] = []

    def add_equation(coeffs: dict[Composition, Fraction], value: SymExpr) -> None:
        row = [Fraction(0)] * len(unknowns)
        residual = value
        for c, coeff in coeffs.items():
            if c in known:
                residual = residual - known[c].scale(coeff)
            else:
                row[unknowns.index(c)] += coeff
        rows.append(row)
        rhs.append(residual)

    # constant-weight sum: sum over all weight-5 indices = (1 - 2^-4) zeta(5)
    add_equation({c: Fraction(1) for c in compositions_of_weight(5)},
                 zeta_sym(5).scale(Fraction(15, 16)))

    # Hoelder splittings of zeta(4,1), zeta(3,2), zeta(2,3) at z = 1/2
    for parts in [(4, 1), (3, 2), (2, 3)]:
        zc = Composition(parts)
        coeffs: dict[Composition, Fraction] = {}
        value = mzv_sym(zc)
        for suffix, flipped in holder_pairs(zc.word()):
            if len(flipped) == 0:
                coeffs[suffix.composition()] = coeffs.get(suffix.composition(), Fraction(0)) + 1
            elif len(suffix) == 0:
                coeffs[flipped.composition()] = coeffs.get(flipped.composition(), Fraction(0)) + 1
            else:
                a, b = suffix.composition(), flipped.composition()
                value = value - known[a] * known[b]
        add_equation(coeffs, value)

    # shuffle products of known lower-weight values
    for left, right in [((1,), (4,)), ((2,), (3,)), ((1,), (2, 2))]:
        c1, c2 = Composition(left), Composition(right)
        coeffs = {}
        for tp, coeff in shuffle_compositions(c1, c2).terms.items():
            coeffs[tp[0].index] = coeffs.get(tp[0].index, Fraction(0)) + coeff
        add_equation(coeffs, known[c1] * known[c2])

    solution = solve_linear(rows, rhs)
    out = dict(known)
    for c, expr in zip(unknowns, solution):
        out[c] = expr
    return {c: out[c] for c in compositions_of_weight(5)}


# ---------------------------------------------------------------------------
# the four-column tables
# ---------------------------------------------------------------------------

COLUMNS = ("Li@1/2", "Le@1/2", "Li@-1", "Le@-1")


@dataclass(frozen=True)
class TableSet:
    """Four-column value table of one weight: Li/Le at 1/2 and -1."""

    weight: int
    monomials: tuple[Monomial, ...]
    rows: dict[Composition, dict[str, SymExpr]]

    def vector(self, c: Composition, column: str) -> list[Fraction]:
        return self.rows[c][column].vector(list(self.monomials))

    def to_json(self) -> dict:
        return {
            "weight": self.weight,
            "basis": [str(m) for m in self.monomials],
            "rows": {str(c): {col: [str(q) for q in self.vector(c, col)]
                              for col in COLUMNS}
                     for c in self.rows},
        }


@lru_cache(maxsize=None)
def value_tables(w: int) -> TableSet:
    """Rebuild the weight-w table (1 <= w <= 5) from the closed-form layer."""
    half = li_half_table(w)
    rows: dict[Composition, dict[str, SymExpr]] = {}
    for c in compositions_of_weight(w):
        li_half_val = half[c]
        le_half_val = SymExpr.zero()
        for tp, coeff in le_to_li(c).terms.items():
            le_half_val = le_half_val + half[tp[0].index].scale(coeff)
        li_minus = SymExpr.zero()
        for tp, coeff in li_reflection(c).terms.items():
            li_minus = li_minus + half[tp[0].index].scale(coeff)
        rows[c] = {"Li@1/2": li_half_val, "Le@1/2": le_half_val, "Li@-1": li_minus}
    for c in compositions_of_weight(w):
        le_minus = SymExpr.zero()
        for tp, coeff in le_to_li(c).terms.items():
            le_minus = le_minus + rows[tp[0].index]["Li@-1"].scale(coeff)
        rows[c]["Le@-1"] = le_minus
    return TableSet(w, tuple(monomials_of_weight(w)), rows)


def term_symbolic(term_kind: str, c: Composition, point: Point) -> SymExpr:
    """Closed form of one table cell."""
    col = {(Point.HALF): "@1/2", (Point.MINUS_ONE): "@-1"}[point]
    return value_tables(c.weight).rows[c][f"{term_kind}{col}"]


# ---------------------------------------------------------------------------
# golden data
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def golden_tables() -> dict[int, dict]:
    """Independently transcribed table vectors bundled as package data."""
    text = resources.files("polylog").joinpath("data/golden_tables.json").read_text()
    raw = json.loads(text)
    return {int(w): data for w, data in raw.items()}


def compare_with_golden(w: int) -> list[str]:
    """Mismatch descriptions between the rebuilt and the transcribed table."""
    built = value_tables(w)
    gold = golden_tables()[w]
    problems = []
    if [str(m) for m in built.monomials] != gold["basis"]:
        problems.append(f"weight {w}: basis mismatch")
        return problems
    built_rows = {str(c): c for c in built.rows}
    if set(built_rows) != set(gold["rows"]):
        problems.append(f"weight {w}: row set mismatch")
        return problems
    for key, cols in gold["rows"].items():
        for col in COLUMNS:
            expected = [Fraction(v) for v in cols[col]]
            actual = built.vector(built_rows[key], col)
            if expected != actual:
                problems.append(f"weight {w} row {key} column {col}: "
                                f"{actual} != {expected}")
    return problems
