"""Exact complex scalars with rational real and imaginary parts."""

from fractions import Fraction
from numbers import Rational


class GaussRational:
    """Complex number ``re + im*i`` with exact rational parts.

    Instances are immutable and hashable. Arithmetic with ints, Fractions and
    other GaussRationals stays exact; mixing with floats is refused so that
    inexact values cannot leak into structural computations.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussRational):
            if im:
                raise TypeError("cannot combine a GaussRational real part with an imaginary part")
            re, im = re.re, re.im
        object.__setattr__(self, "re", _as_fraction(re))
        object.__setattr__(self, "im", _as_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRational is immutable")

    @classmethod
    def from_parts(cls, re_num, re_den=1, im_num=0, im_den=1):
        return cls(Fraction(re_num, re_den), Fraction(im_num, im_den))

    def to_parts(self):
        """Return ``[re_num, re_den, im_num, im_den]`` as plain ints."""
        return [self.re.numerator, self.re.denominator, self.im.numerator, self.im.denominator]

    def conjugate(self):
        return GaussRational(self.re, -self.im)

    def norm2(self):
        return self.re * self.re + self.im * self.im

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            if isinstance(other, complex):
                return complex(self) == other
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        if not self.im:
            return f"GaussRational({self.re})"
        return f"GaussRational({self.re}, {self.im})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussRational(a * c)
        return GaussRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("GaussRational division by zero")
        c, d = other.re, other.im
        if not d:
            return GaussRational(self.re / c, self.im / c)
        n = c * c + d * d
        a, b = self.re, self.im
        return GaussRational((a * c + b * d) / n, (b * c - a * d) / n)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (ONE / self) ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"exact scalar required, got {type(x).__name__}")


def _coerce(x):
    if isinstance(x, GaussRational):
        return x
    if isinstance(x, (int, Fraction, Rational)) and not isinstance(x, bool):
        return GaussRational(x)
    return NotImplemented


def gr(x):
    """Coerce an int, Fraction, or GaussRational into a GaussRational."""
    if isinstance(x, GaussRational):
        return x
    if isinstance(x, complex):
        raise TypeError("floating complex values are not exact")
    return GaussRational(x)


ZERO = GaussRational(0)
ONE = GaussRational(1)
I = GaussRational(0, 1)
