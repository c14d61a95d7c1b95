"""Compositions, binary words, and the combinatorial polylogarithm transforms.

Everything here is exact and purely combinatorial: encoding between index
vectors and words over {x0, x1}, duality, the Le <-> Li merge expansions,
shuffle products, the argument reflection z -> -z/(1-z), and the Hoelder
splitting of a convergent nested zeta word into bilinear pairs.

All values are immutable after construction and all functions are pure, so
concurrent use needs no synchronization.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb

from .errors import BadBoundary, CapExceeded, NotDecodable

X0 = 0
X1 = 1

REFLECTION_WEIGHT_CAP = 10


@dataclass(frozen=True, order=True)
class Composition:
    """Index vector (s_1, ..., s_l) of positive integers."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.parts:
            raise ValueError("composition must be non-empty")
        if any(not isinstance(p, int) or p < 1 for p in self.parts):
            raise ValueError(f"composition parts must be positive integers: {self.parts}")

    @classmethod
    def of(cls, *parts: int) -> "Composition":
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> "Composition":
        """Parse the comma-separated wire form, e.g. "2,1,3"."""
        try:
            parts = tuple(int(p.strip()) for p in text.split(","))
        except ValueError as exc:
            raise ValueError(f"cannot parse composition {text!r}") from exc
        return cls(parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def word(self) -> "Word":
        """Encode as x0^(s_1-1) x1 ... x0^(s_l-1) x1."""
        letters: list[int] = []
        for s in self.parts:
            letters.extend([X0] * (s - 1))
            letters.append(X1)
        return Word(tuple(letters))

    def dual(self) -> "Composition":
        """Swap x0 <-> x1 on the word prefix (everything before the final x1)."""
        letters = self.word().letters
        prefix = tuple(1 - a for a in letters[:-1])
        return Word(prefix + (X1,)).composition()

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


@dataclass(frozen=True, order=True)
class Word:
    """Finite word over the two-letter alphabet {x0, x1}, stored as 0/1."""

    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(a not in (X0, X1) for a in self.letters):
            raise ValueError(f"letters must be 0 or 1: {self.letters}")

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Parse the 0/1 wire form, e.g. "011001"."""
        if not all(ch in "01" for ch in text):
            raise ValueError(f"cannot parse word {text!r}")
        return cls(tuple(int(ch) for ch in text))

    def __len__(self) -> int:
        return len(self.letters)

    def is_decodable(self) -> bool:
        return bool(self.letters) and self.letters[-1] == X1

    def composition(self) -> Composition:
        """Inverse of Composition.word; requires a non-empty word ending in x1."""
        if not self.is_decodable():
            raise NotDecodable(f"word {self} does not encode a composition")
        parts = []
        run = 0
        for a in self.letters:
            if a == X0:
                run += 1
            else:
                parts.append(run + 1)
                run = 0
        return Composition(tuple(parts))

    def __str__(self) -> str:
        return "".join(str(a) for a in self.letters)


@dataclass(frozen=True, order=True)
class SignedComposition:
    """Index of an alternating nested zeta value: pairs (s_j, sigma_j) with
    s_j >= 1 and sigma_j = +-1."""

    parts: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if not self.parts:
            raise ValueError("signed composition must be non-empty")
        for s, sigma in self.parts:
            if s < 1 or sigma not in (-1, 1):
                raise ValueError(f"bad signed part ({s}, {sigma})")

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(s for s, _ in self.parts)

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(sigma for _, sigma in self.parts)

    @property
    def weight(self) -> int:
        return sum(self.exponents)

    def is_convergent(self) -> bool:
        s1, sigma1 = self.parts[0]
        return s1 >= 2 or sigma1 == -1

    def __str__(self) -> str:
        return ",".join(f"{s}!" if sigma == -1 else str(s)
                        for s, sigma in self.parts)


class Point(Enum):
    """Evaluation point tag of a polylogarithm term."""

    Z = "z"
    HALF = "1/2"
    MINUS_ONE = "-1"
    ONE = "1"

    @classmethod
    def parse(cls, text: str) -> "Point":
        aliases = {"half": cls.HALF, "1/2": cls.HALF, "minus-one": cls.MINUS_ONE,
                   "-1": cls.MINUS_ONE, "one": cls.ONE, "1": cls.ONE, "z": cls.Z}
        try:
            return aliases[text.strip().lower()]
        except KeyError as exc:
            raise ValueError(f"unknown point {text!r}") from exc


@dataclass(frozen=True, order=True)
class PolylogTerm:
    """A single Li or Le value at a tagged point."""

    kind: str  # "Li" or "Le"
    index: Composition
    point: Point = Point.Z

    def __post_init__(self) -> None:
        if self.kind not in ("Li", "Le"):
            raise ValueError(f"kind must be Li or Le: {self.kind}")
        if self.kind == "Li" and self.point is Point.ONE and self.index.parts[0] == 1:
            raise ValueError(f"Li_{self.index}(1) diverges (leading part 1)")

    @property
    def weight(self) -> int:
        return self.index.weight

    def __str__(self) -> str:
        return f"{self.kind}[{self.index}]({self.point.value})"


# A term product is a canonically sorted tuple of PolylogTerm; the empty
# tuple stands for the constant 1.
TermProduct = tuple[PolylogTerm, ...]


def product_weight(tp: TermProduct) -> int:
    return sum(t.weight for t in tp)


class FormalSum:
    """Exact rational linear combination of products of polylog terms."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[TermProduct, Fraction] | None = None):
        clean: dict[TermProduct, Fraction] = {}
        if terms:
            for tp, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[tuple(sorted(tp))] = clean.get(tuple(sorted(tp)), Fraction(0)) + c
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def single(cls, term: PolylogTerm, coeff: Fraction | int = 1) -> "FormalSum":
        return cls({(term,): Fraction(coeff)})

    @classmethod
    def of_product(cls, terms: tuple[PolylogTerm, ...], coeff: Fraction | int = 1) -> "FormalSum":
        return cls({tuple(sorted(terms)): Fraction(coeff)})

    def __add__(self, other: "FormalSum") -> "FormalSum":
        out = dict(self.terms)
        for tp, c in other.terms.items():
            out[tp] = out.get(tp, Fraction(0)) + c
        return FormalSum(out)

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        return self + other.scale(-1)

    def scale(self, factor: Fraction | int) -> "FormalSum":
        factor = Fraction(factor)
        return FormalSum({tp: c * factor for tp, c in self.terms.items()})

    def is_homogeneous(self) -> bool:
        weights = {product_weight(tp) for tp in self.terms}
        return len(weights) <= 1

    def weight(self) -> int:
        weights = {product_weight(tp) for tp in self.terms}
        if len(weights) != 1:
            raise ValueError(f"sum is not weight-homogeneous: {sorted(weights)}")
        return weights.pop()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FormalSum) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for tp, c in sorted(self.terms.items()):
            label = "*".join(str(t) for t in tp) if tp else "1"
            bits.append(f"{c}*{label}")
        return " + ".join(bits)


def _merge_patterns(parts: tuple[int, ...]):
    """All 2^(l-1) ways of either joining or separating adjacent parts.

    Yields (merged_parts, plus_count) where plus_count is the number of
    joins that were applied.
    """
    l = len(parts)
    for mask in range(1 << (l - 1)):
        merged = [parts[0]]
        plus = 0
        for j in range(1, l):
            if mask >> (j - 1) & 1:
                merged[-1] += parts[j]
                plus += 1
            else:
                merged.append(parts[j])
        yield tuple(merged), plus


def le_to_li(c: Composition, point: Point = Point.Z) -> FormalSum:
    """Expand Le_c as the sum of Li over all merge patterns of c."""
    out: dict[TermProduct, Fraction] = {}
    for merged, _ in _merge_patterns(c.parts):
        term = PolylogTerm("Li", Composition(merged), point)
        out[(term,)] = out.get((term,), Fraction(0)) + 1
    return FormalSum(out)


def li_to_le(c: Composition, point: Point = Point.Z) -> FormalSum:
    """Expand Li_c as the alternating sum of Le over all merge patterns of c."""
    out: dict[TermProduct, Fraction] = {}
    for merged, plus in _merge_patterns(c.parts):
        term = PolylogTerm("Le", Composition(merged), point)
        out[(term,)] = out.get((term,), Fraction(0)) + (-1) ** plus
    return FormalSum(out)


def expand_composition_sum(fs: FormalSum, expander) -> FormalSum:
    """Apply a Composition -> FormalSum map linearly to a sum of single terms."""
    out = FormalSum()
    for tp, coeff in fs.terms.items():
        if len(tp) != 1:
            raise ValueError("expansion only defined for sums of single terms")
        out = out + expander(tp[0]).scale(coeff)
    return out


def shuffle_words(u: Word, v: Word) -> dict[Word, int]:
    """Multiset of order-preserving interleavings of u and v.

    The coefficients sum to binomial(|u|+|v|, |u|).
    """
    memo: dict[tuple[int, int], dict[tuple[int, ...], int]] = {}

    def rec(i: int, j: int) -> dict[tuple[int, ...], int]:
        if (i, j) in memo:
            return memo[(i, j)]
        if i == len(u.letters):
            res = {v.letters[j:]: 1}
        elif j == len(v.letters):
            res = {u.letters[i:]: 1}
        else:
            res = {}
            for w, m in rec(i + 1, j).items():
                key = (u.letters[i],) + w
                res[key] = res.get(key, 0) + m
            for w, m in rec(i, j + 1).items():
                key = (v.letters[j],) + w
                res[key] = res.get(key, 0) + m
        memo[(i, j)] = res
        return res

    return {Word(w): m for w, m in rec(0, 0).items()}


def shuffle_compositions(c1: Composition, c2: Composition,
                         point: Point = Point.Z) -> FormalSum:
    """Shuffle relation: Li_c1 * Li_c2 as an integer combination of Li terms."""
    out: dict[TermProduct, Fraction] = {}
    for w, m in shuffle_words(c1.word(), c2.word()).items():
        term = PolylogTerm("Li", w.composition(), point)
        out[(term,)] = out.get((term,), Fraction(0)) + m
    return FormalSum(out)


def _letter_choices(length: int):
    return itertools.product((X0, X1), repeat=length)


def li_reflection(c: Composition, point: Point = Point.Z) -> FormalSum:
    """Expansion of Li_c(-z/(1-z)) as (-1)^l times a sum of Li at z.

    One term per choice of words p_j with |p_j| = s_j - 1; the resulting
    words p_1 x1 ... p_l x1 are pairwise distinct, so every coefficient is
    (-1)^l and the term count is prod_j 2^(s_j - 1).
    """
    sign = (-1) ** c.length
    out: dict[TermProduct, Fraction] = {}
    for choice in itertools.product(*[_letter_choices(s - 1) for s in c.parts]):
        letters: list[int] = []
        for p in choice:
            letters.extend(p)
            letters.append(X1)
        term = PolylogTerm("Li", Word(tuple(letters)).composition(), point)
        out[(term,)] = Fraction(sign)
    return FormalSum(out)


def compositions_of_weight(w: int) -> list[Composition]:
    """All 2^(w-1) compositions of w, in descending lexicographic order."""
    if w < 1:
        raise ValueError("weight must be >= 1")
    out: list[Composition] = []

    def rec(remaining: int, prefix: tuple[int, ...]) -> None:
        if remaining == 0:
            out.append(Composition(prefix))
            return
        for s in range(remaining, 0, -1):
            rec(remaining - s, prefix + (s,))

    rec(w, ())
    return out


def basis_compositions(w: int) -> list[Composition]:
    """Compositions of w with parts in {1, 2}, in descending lexicographic order.

    Their number is the Fibonacci number f_w (f_0 = f_1 = 1).
    """
    if w < 1:
        raise ValueError("weight must be >= 1")
    out: list[Composition] = []

    def rec(remaining: int, prefix: tuple[int, ...]) -> None:
        if remaining == 0:
            out.append(Composition(prefix))
            return
        for s in (2, 1):
            if s <= remaining:
                rec(remaining - s, prefix + (s,))

    rec(w, ())
    return out


def reflection_matrix(w: int, cap: int = REFLECTION_WEIGHT_CAP) -> list[list[int]]:
    """Matrix of li_reflection over all compositions of weight w.

    Row order matches compositions_of_weight(w); entries are -1, 0 or 1.
    The matrix is an involution because z -> -z/(1-z) is.
    """
    if w > cap:
        raise CapExceeded(f"weight {w} exceeds cap {cap}")
    comps = compositions_of_weight(w)
    index = {c: i for i, c in enumerate(comps)}
    rows = []
    for c in comps:
        row = [0] * len(comps)
        for tp, coeff in li_reflection(c).terms.items():
            row[index[tp[0].index]] = int(coeff)
        rows.append(row)
    return rows


def basis_reflection_matrix(w: int, cap: int = REFLECTION_WEIGHT_CAP) -> list[list[int]]:
    """li_reflection restricted to the {1,2}-part basis, which it preserves."""
    if w > cap:
        raise CapExceeded(f"weight {w} exceeds cap {cap}")
    comps = basis_compositions(w)
    index = {c: i for i, c in enumerate(comps)}
    rows = []
    for c in comps:
        row = [0] * len(comps)
        for tp, coeff in li_reflection(c).terms.items():
            target = tp[0].index
            if target not in index:
                raise ValueError(f"reflection left the basis: {c} -> {target}")
            row[index[target]] = int(coeff)
        rows.append(row)
    return rows


def mat_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    n, m, k = len(a), len(b[0]), len(b)
    bt = [[b[r][c] for r in range(k)] for c in range(m)]
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def is_identity(mat: list[list[int]]) -> bool:
    return all(v == (1 if i == j else 0) for i, row in enumerate(mat) for j, v in enumerate(row))


def holder_pairs(word: Word) -> list[tuple[Word, Word]]:
    """Hoelder splitting of a convergent zeta word into m+1 bilinear pairs.

    For a word y_1 ... y_m starting with x0 and ending with x1, returns the
    pairs (y_i ... y_m, tau(y_{i-1}) ... tau(y_1)) for i = 1..m+1 where tau
    swaps the letters.  Empty words appear at the ends and stand for the
    constant 1.
    """
    letters = word.letters
    if len(letters) < 2 or letters[0] != X0 or letters[-1] != X1:
        raise BadBoundary(f"word {word} must start with x0 and end with x1")
    m = len(letters)
    pairs = []
    for i in range(1, m + 2):
        suffix = Word(letters[i - 1:])
        flipped = Word(tuple(1 - a for a in reversed(letters[:i - 1])))
        pairs.append((suffix, flipped))
    return pairs


def shuffle_multiplicity_total(u: Word, v: Word) -> int:
    return comb(len(u) + len(v), len(u))
