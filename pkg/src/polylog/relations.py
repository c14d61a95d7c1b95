"""Integer-relation detection (single-level PSLQ) and the verification
harnesses built on it.

The detector runs on ball midpoints at a fixed MPFR precision; every
candidate relation is then re-certified in ball arithmetic against the
input radii.  "None within bound" is always a bounded-search claim backed
by the algorithm's growing norm bound, never a nonexistence proof.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, gcd, log2

import gmpy2
from gmpy2 import mpfr

from .algebra import (Composition, Point, PolylogTerm, basis_compositions,
                      basis_reflection_matrix)
from .balls import Ball, PrecisionContext, ball_sum, decimal_str, exact_abs
from .errors import CapExceeded, SingularSystem
from .series import HALF, eval_term, le_at, li_at_minus_one, li_series
from .symbolic import (SymExpr, monomials_of_weight, sym_to_numeric,
                       value_tables, zeta_monomials)

GAMMA_DEFAULT = 2.0 / 3.0 ** 0.5 + 1e-9


@dataclass(frozen=True)
class PslqConfig:
    gamma: float = GAMMA_DEFAULT
    max_iterations: int = 20000
    detection_threshold: float | None = None  # default: 2^(-3 bits / 4)
    coefficient_bound: int = 10 ** 6

    def __post_init__(self) -> None:
        if self.gamma <= 2.0 / 3.0 ** 0.5:
            raise ValueError("gamma must exceed 2/sqrt(3)")
        if self.detection_threshold is not None and not 0 < self.detection_threshold < 1:
            raise ValueError("detection_threshold must lie in (0, 1)")
        if self.coefficient_bound < 1:
            raise ValueError("coefficient_bound must be positive")


FOUND = "found"
NONE_WITHIN_BOUND = "none_within_bound"
PRECISION_EXHAUSTED = "precision_exhausted"


@dataclass(frozen=True)
class RelationResult:
    status: str
    vector: tuple[int, ...] | None
    residual: Ball | None
    norm_bound: str
    iterations: int
    bits: int

    @property
    def found(self) -> bool:
        return self.status == FOUND

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "vector": list(self.vector) if self.vector is not None else None,
            "residual": self.residual.to_json() if self.residual is not None else None,
            "digits": int(self.bits * 0.30103),
            "norm_bound": self.norm_bound,
            "iterations": self.iterations,
        }


def _normalize_vector(vec: list[int]) -> tuple[int, ...]:
    g = 0
    for v in vec:
        g = gcd(g, abs(v))
    if g > 1:
        vec = [v // g for v in vec]
    for v in vec:
        if v:
            if v < 0:
                vec = [-u for u in vec]
            break
    return tuple(vec)


def _residual_ball(vec, balls: list[Ball]) -> Ball:
    bits = min(b.bits for b in balls)
    return ball_sum([b * int(m) for m, b in zip(vec, balls)], bits)


def pslq(xs: list[Ball], cfg: PslqConfig = PslqConfig()) -> RelationResult:
    """Search for integers m with sum m_i x_i = 0, |m_i| <= coefficient_bound.

    Returns Found with a primitive, sign-normalized vector certified against
    the input radii; NoneWithinBound once the norm bound excludes every
    relation inside the coefficient bound; PrecisionExhausted when the balls
    cannot support an unambiguous classification.
    """
    n = len(xs)
    if n < 2:
        raise ValueError("need at least two inputs")
    for i, x in enumerate(xs):
        if x.is_exact_zero():
            vec = [0] * n
            vec[i] = 1
            return RelationResult(FOUND, tuple(vec), Ball.zero(x.bits), "1", 0, x.bits)
        if x.contains_zero():
            raise ValueError(f"input {i} straddles zero without being exactly zero")

    bits = min(x.bits for x in xs)
    need = 4 * ceil(n * log2(cfg.coefficient_bound)) if cfg.coefficient_bound > 1 else 64
    if bits < need:
        raise ValueError(f"inputs carry {bits} bits; coefficient bound and length "
                         f"require at least {need}")
    wc = gmpy2.context(precision=bits, round=gmpy2.RoundToNearest)
    threshold = cfg.detection_threshold
    tol = mpfr(repr(threshold), bits) if threshold is not None else gmpy2.exp2(-(3 * bits) // 4)
    bound_l2 = wc.mul(wc.sqrt(mpfr(n, bits)), mpfr(cfg.coefficient_bound, bits))

    def nint(v) -> int:
        return int(wc.floor(wc.add(v, mpfr("0.5"))))

    # normalized input vector
    x = [wc.add(b.mid, mpfr(0)) for b in xs]
    norm = wc.sqrt(_dot(wc, x, x))
    y = [wc.div(v, norm) for v in x]

    # lower trapezoidal H from the partial sums of squares
    sq = [wc.mul(v, v) for v in y]
    s = [mpfr(0)] * n
    acc = mpfr(0)
    for k in range(n - 1, -1, -1):
        acc = wc.add(acc, sq[k])
        s[k] = wc.sqrt(acc)
    H = [[mpfr(0)] * (n - 1) for _ in range(n)]
    for i in range(n):
        if i < n - 1:
            H[i][i] = wc.div(s[i + 1], s[i])
        for j in range(i):
            H[i][j] = wc.div(_neg_mul(wc, y[i], y[j]), wc.mul(s[j], s[j + 1]))
    A = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    B = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def reduce_row(i: int, j_start: int) -> None:
        for j in range(j_start, -1, -1):
            if H[j][j] == 0:
                continue
            t = nint(wc.div(H[i][j], H[j][j]))
            if t == 0:
                continue
            tm = mpfr(t, bits)
            y[j] = wc.add(y[j], wc.mul(tm, y[i]))
            for k in range(j + 1):
                H[i][k] = wc.sub(H[i][k], wc.mul(tm, H[j][k]))
            for k in range(n):
                A[i][k] -= t * A[j][k]
                B[k][j] += t * B[k][i]

    for i in range(1, n):
        reduce_row(i, i - 1)

    gamma = mpfr(repr(cfg.gamma), bits)

    def smallest_y() -> tuple:
        y_min, col = exact_abs(y[0]), 0
        for i in range(1, n):
            v = exact_abs(y[i])
            if v < y_min:
                y_min, col = v, i
        return y_min, col

    def certify(col: int, iterations: int, bound_str: str) -> RelationResult:
        vec = _normalize_vector([B[r][col] for r in range(n)])
        if max(abs(v) for v in vec) > cfg.coefficient_bound:
            return RelationResult(NONE_WITHIN_BOUND, None, None, bound_str,
                                  iterations, bits)
        res = _residual_ball(vec, xs)
        if res.contains_zero():
            return RelationResult(FOUND, vec, res, bound_str, iterations, bits)
        return RelationResult(PRECISION_EXHAUSTED, None, res, bound_str,
                              iterations, bits)

    bound_str = "1"
    y_min, col = smallest_y()
    if y_min < tol:
        return certify(col, 0, bound_str)
    for iteration in range(1, cfg.max_iterations + 1):
        # row with the largest gamma^i |H_ii|
        m_row, best = 0, mpfr(0)
        scale = mpfr(1)
        for i in range(n - 1):
            scale = wc.mul(scale, gamma)
            v = wc.mul(scale, exact_abs(H[i][i]))
            if v > best:
                best, m_row = v, i
        y[m_row], y[m_row + 1] = y[m_row + 1], y[m_row]
        A[m_row], A[m_row + 1] = A[m_row + 1], A[m_row]
        H[m_row], H[m_row + 1] = H[m_row + 1], H[m_row]
        for r in range(n):
            B[r][m_row], B[r][m_row + 1] = B[r][m_row + 1], B[r][m_row]
        if m_row < n - 2:
            t0 = wc.sqrt(wc.add(wc.mul(H[m_row][m_row], H[m_row][m_row]),
                                wc.mul(H[m_row][m_row + 1], H[m_row][m_row + 1])))
            if t0 != 0:
                t1 = wc.div(H[m_row][m_row], t0)
                t2 = wc.div(H[m_row][m_row + 1], t0)
                for i in range(m_row, n):
                    t3, t4 = H[i][m_row], H[i][m_row + 1]
                    H[i][m_row] = wc.add(wc.mul(t1, t3), wc.mul(t2, t4))
                    H[i][m_row + 1] = wc.sub(wc.mul(t1, t4), wc.mul(t2, t3))
        for i in range(m_row + 1, n):
            reduce_row(i, min(i - 1, m_row + 1))

        # detection first: a collapsing H makes the norm bound meaningless
        y_min, col = smallest_y()
        if y_min < tol:
            return certify(col, iteration, bound_str)

        # norm bound: any relation has 2-norm at least 1/max |H_jj|
        h_max = mpfr(0)
        for j in range(n - 1):
            v = exact_abs(H[j][j])
            if v > h_max:
                h_max = v
        if h_max == 0:
            break
        norm_bound = wc.div(mpfr(1), h_max)
        bound_str = decimal_str(norm_bound, 6)
        if norm_bound > bound_l2:
            return RelationResult(NONE_WITHIN_BOUND, None, None, bound_str,
                                  iteration, bits)

    return RelationResult(PRECISION_EXHAUSTED, None, None, bound_str,
                          cfg.max_iterations, bits)


def _dot(wc, u, v):
    acc = mpfr(0)
    for a, b in zip(u, v):
        acc = wc.add(acc, wc.mul(a, b))
    return acc


def _neg_mul(wc, a, b):
    return wc.sub(mpfr(0), wc.mul(a, b))


# ---------------------------------------------------------------------------
# harnesses
# ---------------------------------------------------------------------------

BASIS_WEIGHT_CAP = 7


def solve_rational(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Exact solve of a square rational system."""
    n = len(matrix)
    a = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise SingularSystem(f"no pivot in column {col}")
        a[col], a[pivot] = a[pivot], a[col]
        div = a[col][col]
        a[col] = [v / div for v in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]


@dataclass(frozen=True)
class BasisExpansion:
    relation: RelationResult
    coefficients: tuple[Fraction, ...] | None
    exact_match: bool | None  # None above the exactly checkable weights

    def to_json(self) -> dict:
        out = self.relation.to_json()
        out["coefficients"] = ([str(q) for q in self.coefficients]
                               if self.coefficients is not None else None)
        out["exact_match"] = self.exact_match
        return out


def _exact_expansion(c0: Composition) -> list[Fraction]:
    """Expansion of Li_c0(1/2) over the {1,2}-basis values, from the exact
    tables (weights <= 5 only)."""
    w = c0.weight
    table = value_tables(w)
    basis = basis_compositions(w)
    monos = list(table.monomials)
    mat = [[Fraction(q) for q in table.vector(b, "Li@1/2")] for b in basis]
    # solve transpose system: coefficients over the basis rows
    cols = len(monos)
    if cols != len(basis):
        raise SingularSystem(f"basis size {len(basis)} != monomial count {cols}")
    matrix = [[mat[r][c] for r in range(len(basis))] for c in range(cols)]
    rhs = [Fraction(q) for q in table.vector(c0, "Li@1/2")]
    return solve_rational(matrix, rhs)


def expand_over_basis(c0: Composition, ctx: PrecisionContext,
                      cfg: PslqConfig = PslqConfig(),
                      cap: int = BASIS_WEIGHT_CAP) -> BasisExpansion:
    """Express Li_c0(1/2) over the same-weight {1,2}-basis values by PSLQ;
    for weights <= 5 the result is re-verified against the exact tables."""
    w = c0.weight
    if w > cap:
        raise CapExceeded(f"weight {w} exceeds cap {cap}")
    basis = basis_compositions(w)
    xs = [li_series(c0, HALF, ctx)] + [li_series(b, HALF, ctx) for b in basis]
    rel = pslq(xs, cfg)
    if not rel.found:
        return BasisExpansion(rel, None, None)
    vec = rel.vector
    if vec[0] == 0:
        return BasisExpansion(rel, None, False)
    coeffs = tuple(Fraction(-m, vec[0]) for m in vec[1:])
    exact: bool | None = None
    if w <= 5:
        exact = list(coeffs) == _exact_expansion(c0)
    return BasisExpansion(rel, coeffs, exact)


def spans_coincide(w: int, ctx: PrecisionContext | None = None) -> bool:
    """The {1,2}-basis values at 1/2 and at -1 generate the same rational
    span: the restricted reflection matrix is an exact involution and maps
    each value set onto the other within certified radii."""
    ctx = ctx or PrecisionContext.for_digits(30)
    mat = basis_reflection_matrix(w)
    square = [[sum(mat[i][k] * mat[k][j] for k in range(len(mat)))
               for j in range(len(mat))] for i in range(len(mat))]
    if any(square[i][j] != (1 if i == j else 0)
           for i in range(len(mat)) for j in range(len(mat))):
        return False
    basis = basis_compositions(w)
    at_half = [li_series(b, HALF, ctx) for b in basis]
    at_minus = [li_at_minus_one(b, ctx) for b in basis]
    bits = ctx.effective_bits
    for i, b in enumerate(basis):
        lhs = at_minus[i]
        rhs = ball_sum([at_half[j] * mat[i][j] for j in range(len(basis))], bits)
        if not lhs.agrees_with(rhs):
            return False
        lhs2 = at_half[i]
        rhs2 = ball_sum([at_minus[j] * mat[i][j] for j in range(len(basis))], bits)
        if not lhs2.agrees_with(rhs2):
            return False
    return True


@dataclass(frozen=True)
class WeightSixReport:
    monomials: tuple[str, ...]
    single: RelationResult
    combined: RelationResult

    def to_json(self) -> dict:
        return {"monomials": list(self.monomials),
                "single": self.single.to_json(),
                "combined": self.combined.to_json()}


def weight_six_search(ctx: PrecisionContext | None = None,
                      cfg: PslqConfig = PslqConfig()) -> WeightSixReport:
    """The two weight-6 experiments: the value Li_(2,2,1,1)(1/2) alone finds
    no relation against the twelve classical weight-6 monomials within the
    coefficient bound, while Li_(2,2,1,1)(1/2) + 9/4 Le_(5,1)(-1) does."""
    ctx = ctx or PrecisionContext.for_digits(340)
    monos = monomials_of_weight(6)
    mono_balls = [sym_to_numeric(SymExpr({m: Fraction(1)}), ctx) for m in monos]
    li_val = li_series(Composition((2, 2, 1, 1)), HALF, ctx)
    le_val = le_at(Composition((5, 1)), Point.MINUS_ONE, ctx)
    combined = li_val + le_val * Fraction(9, 4)
    single = pslq([li_val] + mono_balls, cfg)
    paired = pslq([combined] + mono_balls, cfg)
    return WeightSixReport(tuple(str(m) for m in monos), single, paired)


def probe_zeta_ring(kind: str, c: Composition, point: Point,
                    ctx: PrecisionContext | None = None,
                    cfg: PslqConfig = PslqConfig()) -> RelationResult:
    """Numeric experiment: does this polylog value lie in the span of the
    same-weight zeta-only monomials?"""
    ctx = ctx or PrecisionContext.for_digits(120)
    value = eval_term(PolylogTerm(kind, c, point), ctx)
    monos = zeta_monomials(c.weight)
    mono_balls = [sym_to_numeric(SymExpr({m: Fraction(1)}), ctx) for m in monos]
    return pslq([value] + mono_balls, cfg)
