"""Exact scalars: rationals and Gaussian rationals a + b*i.

Rationals are ``gmpy2.mpq`` values (arbitrary precision, always reduced,
positive denominator).  Every coefficient that shows up in the envelope
computations lives in Q(i), so that is the only field implemented here.

Text form::

    R          real
    R*i        pure imaginary
    R+R*i      general
    R-R*i

where ``R`` is ``[-]digits[/digits]``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational as _RationalABC

import gmpy2
from gmpy2 import mpq

__all__ = [
    "Rational",
    "GaussianRational",
    "GR",
    "ZERO",
    "ONE",
    "I",
    "as_scalar",
    "parse_scalar",
    "render_scalar",
    "gr_add",
    "gr_mul",
    "gr_inv",
]

Rational = mpq

_MPQ = type(mpq(0))
_Q0 = mpq(0)
_Q1 = mpq(1)


def _to_q(x) -> mpq:
    t = type(x)
    if t is _MPQ:
        return x
    if t is int or t is Fraction or isinstance(x, _RationalABC):
        return mpq(x)
    if isinstance(x, str):
        return mpq(x)
    if type(x) is type(gmpy2.mpz(0)):
        return mpq(x)
    raise TypeError(f"cannot convert {x!r} to an exact rational")


class GaussianRational:
    """Element ``re + im*i`` of Q(i).  Immutable."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _to_q(re))
        object.__setattr__(self, "im", _to_q(im))

    @classmethod
    def _raw(cls, re: mpq, im: mpq) -> "GaussianRational":
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    def __reduce__(self):
        return (GaussianRational, (str(self.re), str(self.im)))

    # -- predicates -------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    @property
    def is_real(self) -> bool:
        return not self.im

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if type(other) is not GaussianRational:
            try:
                other = as_scalar(other)
            except TypeError:
                return NotImplemented
        return GaussianRational._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is not GaussianRational:
            try:
                other = as_scalar(other)
            except TypeError:
                return NotImplemented
        return GaussianRational._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        try:
            other = as_scalar(other)
        except TypeError:
            return NotImplemented
        return other - self

    def __neg__(self):
        return GaussianRational._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if type(other) is not GaussianRational:
            try:
                other = as_scalar(other)
            except TypeError:
                return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussianRational._raw(a * c, _Q0)
        return GaussianRational._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        a, b = self.re, self.im
        if not b:
            if not a:
                raise ZeroDivisionError("inverse of zero in Q(i)")
            return GaussianRational._raw(1 / a, _Q0)
        norm = a * a + b * b
        return GaussianRational._raw(a / norm, -b / norm)

    def __truediv__(self, other):
        if type(other) is not GaussianRational:
            try:
                other = as_scalar(other)
            except TypeError:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        try:
            other = as_scalar(other)
        except TypeError:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self.re, -self.im)

    # -- comparison / hashing --------------------------------------------

    def __eq__(self, other):
        if type(other) is not GaussianRational:
            try:
                other = as_scalar(other)
            except TypeError:
                return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GR({render_scalar(self)!r})"

    def __str__(self):
        return render_scalar(self)


GR = GaussianRational
ZERO = GaussianRational._raw(_Q0, _Q0)
ONE = GaussianRational._raw(_Q1, _Q0)
I = GaussianRational._raw(_Q0, _Q1)

_SMALL = {k: GaussianRational._raw(mpq(k), _Q0) for k in range(-4, 5)}


def as_scalar(x) -> GaussianRational:
    """Coerce ints, rationals, strings and GaussianRationals to Q(i)."""
    if type(x) is GaussianRational:
        return x
    if type(x) is int and -4 <= x <= 4:
        return _SMALL[x]
    if isinstance(x, str):
        return parse_scalar(x)
    if isinstance(x, complex) or isinstance(x, float):
        raise TypeError("floating point values are not exact scalars")
    return GaussianRational._raw(_to_q(x), _Q0)


def gr_add(x: GaussianRational, y: GaussianRational) -> GaussianRational:
    return x + y


def gr_mul(x: GaussianRational, y: GaussianRational) -> GaussianRational:
    return x * y


def gr_inv(x: GaussianRational) -> GaussianRational:
    return x.inverse()


# -- text form -------------------------------------------------------------

_R = r"-?\d+(?:/\d+)?"
_SCALAR_RE = re.compile(
    rf"^(?:(?P<re>{_R})(?:(?P<sign>[+-])(?P<im2>\d+(?:/\d+)?\*)?i)?|(?P<im>{_R}\*|-)?i)$"
)


def _render_q(q: mpq) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def render_scalar(x: GaussianRational) -> str:
    x = as_scalar(x)
    if not x.im:
        return _render_q(x.re)
    if not x.re:
        return _render_imag(x.im)
    sign = "-" if x.im < 0 else "+"
    return f"{_render_q(x.re)}{sign}{_render_imag(abs(x.im))}"


def _render_imag(q: mpq) -> str:
    if q == 1:
        return "i"
    if q == -1:
        return "-i"
    return f"{_render_q(q)}*i"


def parse_scalar(text: str) -> GaussianRational:
    s = text.strip().replace(" ", "")
    m = _SCALAR_RE.match(s)
    if not m:
        raise ValueError(f"not a scalar: {text!r}")
    if s.endswith("i") and m.group("re") is None:
        im = m.group("im")
        if im is None:
            return GaussianRational(_Q0, _Q1)
        if im == "-":
            return GaussianRational(_Q0, -_Q1)
        return GaussianRational(_Q0, _parse_q(im[:-1]))
    re_part = _parse_q(m.group("re"))
    if m.group("sign") is None:
        return GaussianRational(re_part, _Q0)
    im2 = m.group("im2")
    im_part = _parse_q(im2[:-1]) if im2 else _Q1
    if m.group("sign") == "-":
        im_part = -im_part
    return GaussianRational(re_part, im_part)


def _parse_q(s: str) -> mpq:
    if "/" in s:
        num, den = s.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator in {s!r}")
        return mpq(int(num), int(den))
    return mpq(int(s))
