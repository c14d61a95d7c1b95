"""Self-validated arbitrary-precision arithmetic: midpoint + error radius.

Midpoints are MPFR floats rounded to nearest at the working precision;
radii are low-precision MPFR floats always rounded toward +infinity.  Every
operation enlarges the radius by the propagated input radii plus one ulp of
the new midpoint, so the true value of any expression is guaranteed to lie
inside [mid - rad, mid + rad].

The error model is absolute, not relative.

gmpy2 note: bare operators like -x and abs(x) round to the *thread*
context, so all mpfr manipulation here goes through explicit context
methods or the exact helpers below.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, log2

import gmpy2
from gmpy2 import mpfr, mpq

RADIUS_BITS = 64

_rad_up = gmpy2.context(precision=RADIUS_BITS, round=gmpy2.RoundUp)
_rad_down = gmpy2.context(precision=RADIUS_BITS, round=gmpy2.RoundDown)
_mid_ctx_cache: dict[int, "gmpy2.context"] = {}


def _mid_ctx(bits: int):
    ctx = _mid_ctx_cache.get(bits)
    if ctx is None:
        ctx = gmpy2.context(precision=bits, round=gmpy2.RoundToNearest)
        _mid_ctx_cache[bits] = ctx
    return ctx


_ZERO = mpfr(0)


def exact_neg(x: mpfr) -> mpfr:
    """-x without precision loss."""
    return _mid_ctx(max(x.precision, 2)).sub(_ZERO, x)


def exact_abs(x: mpfr) -> mpfr:
    """|x| without precision loss (comparisons in gmpy2 are exact)."""
    return exact_neg(x) if x < 0 else x


def _ulp(mid: mpfr, bits: int) -> mpfr:
    # one full ulp of |mid|: twice the half-ulp bound of round-to-nearest
    if mid == 0:
        return _ZERO
    return _rad_up.mul(exact_abs(mid), gmpy2.exp2(1 - bits))


@dataclass(frozen=True)
class PrecisionContext:
    """Working precision in bits plus the absolute error target.

    working_bits is a floor: operations may internally compute with more
    bits so that the certified radius meets target_abs_error.
    """

    working_bits: int = 192
    target_abs_error: Fraction = Fraction(1, 10**40)

    def __post_init__(self) -> None:
        if self.working_bits < 64:
            raise ValueError("working_bits must be >= 64")
        if self.target_abs_error <= 0:
            raise ValueError("target_abs_error must be positive")

    @classmethod
    def for_digits(cls, digits: int) -> "PrecisionContext":
        bits = ceil(digits * log2(10)) + 64
        return cls(working_bits=bits, target_abs_error=Fraction(1, 10**digits))

    @property
    def target_bits(self) -> int:
        # 2^-target_bits <= target_abs_error (bit_length avoids float overflow)
        t = self.target_abs_error
        if t >= 1:
            return 1
        return max(1, (t.denominator // t.numerator).bit_length())

    @property
    def effective_bits(self) -> int:
        return max(self.working_bits, self.target_bits + 64)


class Ball:
    """Interval [mid - rad, mid + rad] with conservative arithmetic."""

    __slots__ = ("mid", "rad", "bits")

    def __init__(self, mid: mpfr, rad: mpfr, bits: int):
        self.mid = mid
        self.rad = rad
        self.bits = bits

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_fraction(cls, q: Fraction | int, bits: int) -> "Ball":
        q = Fraction(q)
        exact = mpq(q.numerator, q.denominator)
        mid = _mid_ctx(bits).add(exact, _ZERO)
        rad = _ZERO if mid == exact else _ulp(mid, bits)
        return cls(mid, rad, bits)

    @classmethod
    def exact_int(cls, n: int, bits: int) -> "Ball":
        return cls.from_fraction(Fraction(n), bits)

    @classmethod
    def zero(cls, bits: int) -> "Ball":
        return cls(_ZERO, _ZERO, bits)

    @classmethod
    def error_only(cls, bound: "Fraction | mpfr", bits: int) -> "Ball":
        """Ball centered at 0 whose radius upper-bounds `bound`."""
        if isinstance(bound, Fraction):
            bound = cls.from_fraction(bound, RADIUS_BITS).mag_upper()
        return cls(_ZERO, bound, bits)

    # -- queries -----------------------------------------------------------

    def is_exact_zero(self) -> bool:
        return self.mid == 0 and self.rad == 0

    def contains_zero(self) -> bool:
        return exact_abs(self.mid) <= self.rad

    def mag_upper(self) -> mpfr:
        """Upper bound for |true value|."""
        return _rad_up.add(exact_abs(self.mid), self.rad)

    def mag_lower(self) -> mpfr:
        """Lower bound for |true value| (0 if the ball straddles zero)."""
        lo = _rad_down.sub(exact_abs(self.mid), self.rad)
        return lo if lo > 0 else _ZERO

    def contains_fraction(self, q: Fraction | int) -> bool:
        q = Fraction(q)
        delta = mpq(self.mid) - mpq(q.numerator, q.denominator)
        if delta < 0:
            delta = -delta
        return delta <= mpq(self.rad)

    def agrees_with(self, other: "Ball") -> bool:
        """True when the two intervals intersect."""
        return (self - other).contains_zero()

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "Ball":
        if isinstance(other, Ball):
            return other
        if isinstance(other, (int, Fraction)):
            return Ball.from_fraction(other, self.bits)
        raise TypeError(f"cannot mix Ball with {type(other)!r}")

    def __neg__(self) -> "Ball":
        return Ball(exact_neg(self.mid), self.rad, self.bits)

    def __add__(self, other) -> "Ball":
        other = self._coerce(other)
        bits = min(self.bits, other.bits)
        mid = _mid_ctx(bits).add(self.mid, other.mid)
        rad = _rad_up.add(_rad_up.add(self.rad, other.rad), _ulp(mid, bits))
        return Ball(mid, rad, bits)

    __radd__ = __add__

    def __sub__(self, other) -> "Ball":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Ball":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Ball":
        other = self._coerce(other)
        bits = min(self.bits, other.bits)
        mid = _mid_ctx(bits).mul(self.mid, other.mid)
        cross = _rad_up.add(
            _rad_up.add(_rad_up.mul(exact_abs(self.mid), other.rad),
                        _rad_up.mul(exact_abs(other.mid), self.rad)),
            _rad_up.mul(self.rad, other.rad))
        rad = _rad_up.add(cross, _ulp(mid, bits))
        return Ball(mid, rad, bits)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Ball":
        other = self._coerce(other)
        if exact_abs(other.mid) <= other.rad:
            raise ZeroDivisionError("ball denominator straddles zero")
        bits = min(self.bits, other.bits)
        mid = _mid_ctx(bits).div(self.mid, other.mid)
        # |x/y - mx/my| <= (|mx| ry + |my| rx) / (|my| (|my| - ry))
        abs_my = exact_abs(other.mid)
        denom = _rad_down.mul(abs_my, _rad_down.sub(abs_my, other.rad))
        num = _rad_up.add(_rad_up.mul(exact_abs(self.mid), other.rad),
                          _rad_up.mul(abs_my, self.rad))
        rad = _rad_up.add(_rad_up.div(num, denom), _ulp(mid, bits))
        return Ball(mid, rad, bits)

    def __rtruediv__(self, other) -> "Ball":
        return self._coerce(other) / self

    def pow_int(self, n: int) -> "Ball":
        if n < 0:
            return Ball.from_fraction(1, self.bits) / self.pow_int(-n)
        result = Ball.from_fraction(1, self.bits)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def exp(self) -> "Ball":
        bits = self.bits
        mid = _mid_ctx(bits).exp(self.mid)
        # range spread: e^x - e^mx <= e^mx (e^rx - 1) <= e^mx rx e^rx
        up_mid = _rad_up.mul(exact_abs(mid), _rad_up.add(mpfr(1), gmpy2.exp2(1 - bits)))
        growth = _rad_up.exp(self.rad)
        rad = _rad_up.add(_rad_up.mul(_rad_up.mul(up_mid, self.rad), growth),
                          _ulp(mid, bits))
        return Ball(mid, rad, bits)

    def ln(self) -> "Ball":
        lo = _rad_down.sub(self.mid, self.rad)
        if lo <= 0:
            raise ValueError("log of a ball touching (-inf, 0]")
        bits = self.bits
        mid = _mid_ctx(bits).log(self.mid)
        rad = _rad_up.add(_rad_up.div(self.rad, lo), _ulp(mid, bits))
        return Ball(mid, rad, bits)

    # -- formatting --------------------------------------------------------

    def mid_decimal(self, digits: int) -> str:
        return decimal_str(self.mid, digits)

    def rad_decimal(self) -> str:
        return decimal_str(self.rad, 3)

    def to_json(self) -> dict:
        digits = ceil(self.bits * 0.30103) + 2
        return {"mid": decimal_str(self.mid, digits),
                "rad": decimal_str(self.rad, 12),
                "bits": self.bits}

    @classmethod
    def from_json(cls, obj: dict) -> "Ball":
        bits = int(obj["bits"])
        mid = mpfr(obj["mid"], bits)
        # the printed radius carries 12 digits; enlarge past the print
        # quantum so the parsed radius can never undercut the original
        rad = _rad_up.mul(mpfr(obj["rad"], RADIUS_BITS), mpfr("1.000000001"))
        rad = _rad_up.add(rad, _ulp(mid, bits))
        return cls(mid, rad, bits)

    def __repr__(self) -> str:
        return f"Ball({self.mid_decimal(20)} +/- {self.rad_decimal()}, bits={self.bits})"


def decimal_str(x: mpfr, digits: int) -> str:
    """Scientific-notation decimal string with the given significant digits."""
    if gmpy2.is_nan(x) or gmpy2.is_infinite(x):
        return str(x)
    if x == 0:
        return "0"
    digits = max(1, digits)
    s, exp, _ = x.digits(10, digits)
    sign = ""
    if s.startswith("-"):
        sign, s = "-", s[1:]
    mantissa = s[0] + ("." + s[1:] if len(s) > 1 else "")
    return f"{sign}{mantissa}e{exp - 1:+03d}"


def ball_sum(balls, bits: int) -> Ball:
    total = Ball.zero(bits)
    for b in balls:
        total = total + b
    return total
