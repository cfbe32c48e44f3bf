"""Gaussian rationals: exact scalars re + im*i with re, im arbitrary-precision rationals.

All arithmetic in this package happens in the field Q(i).  Equality is exact,
there is no tolerance anywhere.  The rational backend is gmpy2.mpq when
available (much faster), otherwise fractions.Fraction; both expose
numerator/denominator and accept "p/q" strings.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as _rational
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as _rational

Rational = _rational


def rational(value) -> Rational:
    """Coerce an int, backend rational or 'p/q' string to the rational backend."""
    if isinstance(value, str):
        return _rational(value)
    return _rational(value)


_R0 = _rational(0)
_R1 = _rational(1)


class Qi:
    """An element of Q(i), immutable."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", re if type(re) is type(_R0) else rational(re))
        object.__setattr__(self, "im", im if type(im) is type(_R0) else rational(im))

    def __setattr__(self, name, value):
        raise AttributeError("Qi is immutable")

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "Qi") -> "Qi":
        return Qi(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "Qi") -> "Qi":
        return Qi(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "Qi":
        return Qi(-self.re, -self.im)

    def __mul__(self, other: "Qi") -> "Qi":
        a, b, c, d = self.re, self.im, other.re, other.im
        return Qi(a * c - b * d, a * d + b * c)

    def __truediv__(self, other: "Qi") -> "Qi":
        c, d = other.re, other.im
        n = c * c + d * d
        if n == _R0:
            raise ZeroDivisionError("division by zero in Q(i)")
        a, b = self.re, self.im
        return Qi((a * c + b * d) / n, (b * c - a * d) / n)

    def conj(self) -> "Qi":
        return Qi(self.re, -self.im)

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return self.re == _R0 and self.im == _R0

    def is_real(self) -> bool:
        return self.im == _R0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Qi) and self.re == other.re and self.im == other.im
        )

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- display ----------------------------------------------------------

    def __repr__(self) -> str:
        if self.im == _R0:
            return str(self.re)
        if self.re == _R0:
            return f"{self.im}*i"
        im = str(self.im)
        sign = "+" if not im.startswith("-") else ""
        return f"{self.re}{sign}{im}*i"


ZERO = Qi(0)
ONE = Qi(1)
I = Qi(0, 1)


def qi(re=0, im=0) -> Qi:
    """Build a Qi from ints, rationals or 'p/q' strings."""
    return Qi(re, im)


def _format_rational(r: Rational) -> str:
    return f"{r.numerator}/{r.denominator}"


def scalar_to_json(z: Qi) -> dict:
    """Wire form {"re": "p/q", "im": "p/q"} with decimal integer p, q."""
    return {"re": _format_rational(z.re), "im": _format_rational(z.im)}


def scalar_from_json(obj) -> Qi:
    """Parse the wire form; raises ValueError on malformed input (e.g. '1/0')."""
    if not isinstance(obj, dict) or set(obj) - {"re", "im"}:
        raise ValueError(f"not a scalar object: {obj!r}")
    try:
        re = rational(str(obj.get("re", "0")))
        im = rational(str(obj.get("im", "0")))
    except (ValueError, ZeroDivisionError, ArithmeticError) as exc:
        raise ValueError(f"malformed rational in {obj!r}: {exc}") from None
    return Qi(re, im)
