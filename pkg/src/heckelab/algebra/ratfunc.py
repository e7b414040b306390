"""Fractions of MultiPoly without a general gcd.

Normalization cancels the common monomial content of numerator and
denominator and makes the denominator's leading coefficient +1.  When the
denominator is a monomial (the Laurent case, e.g. a pure power of p) this is
a complete reduction; for other denominators callers simplify explicitly
with `exact_divide` against known factors.
"""

from fractions import Fraction

from . import variables as V
from .poly import MultiPoly, exact_divide, NotDivisible


class RationalFunction:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None, normalize=True):
        num = MultiPoly.coerce(num)
        den = MultiPoly.const(1) if den is None else MultiPoly.coerce(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if normalize:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den

    @classmethod
    def coerce(cls, x):
        if isinstance(x, RationalFunction):
            return x
        return cls(MultiPoly.coerce(x), normalize=False)

    @classmethod
    def laurent(cls, poly, p_shift):
        """``poly * p**p_shift`` for a possibly negative integer shift."""
        poly = MultiPoly.coerce(poly)
        if p_shift >= 0:
            return cls(poly * MultiPoly.var("p", p_shift) if p_shift else poly, normalize=False)
        return cls(poly, MultiPoly.var("p", -p_shift))

    # -- predicates -------------------------------------------------------

    def is_polynomial(self):
        return self.den == 1

    def is_laurent(self):
        """True when the denominator is a single monomial."""
        return self.den.is_monomial()

    def as_poly(self):
        """Return the numerator as MultiPoly if the denominator is 1."""
        if self.den == 1:
            return self.num
        try:
            return exact_divide(self.num, self.den)
        except NotDivisible:
            raise ValueError(f"{self} is not a polynomial") from None

    def __bool__(self):
        return bool(self.num)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, RationalFunction):
            if isinstance(other, (MultiPoly, int, Fraction)):
                other = RationalFunction.coerce(other)
            else:
                return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        if self.den.is_monomial() and other.den.is_monomial():
            ka, kb = self.den.leading_key(), other.den.leading_key()
            ca, cb = self.den.leading_coefficient(), other.den.leading_coefficient()
            lk = V.key_lcm(ka, kb)
            fa = MultiPoly({V.quotient(lk, ka): Fraction(1) / ca}, _trusted=True)
            fb = MultiPoly({V.quotient(lk, kb): Fraction(1) / cb}, _trusted=True)
            fa, fb = MultiPoly(dict(fa._t)), MultiPoly(dict(fb._t))
            return RationalFunction(self.num * fa + other.num * fb, MultiPoly({lk: 1}, _trusted=True))
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, normalize=False)

    def __sub__(self, other):
        if not isinstance(other, (RationalFunction, MultiPoly, int, Fraction)):
            return NotImplemented
        return self + (-RationalFunction.coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalFunction(self.num * other, self.den, normalize=False) if other else RationalFunction(0)
        if isinstance(other, MultiPoly):
            return RationalFunction(self.num * other, self.den)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalFunction(self.num / other, self.den, normalize=False)
        return self * RationalFunction.coerce(other).inverse()

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other) * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            raise ValueError("integer powers only")
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction(self.num ** n, self.den ** n, normalize=False)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, MultiPoly)):
            other = RationalFunction.coerce(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        if self.den.is_monomial():
            return hash((self.num, self.den))
        raise TypeError("non-Laurent RationalFunction is unhashable")

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    # -- structure --------------------------------------------------------

    def subs(self, values):
        n = self.num.subs(values)
        d = self.den.subs(values)
        return RationalFunction.coerce(n) / d

    def coefficients(self, name):
        """Coefficients in ``name`` when the denominator is free of it."""
        if self.den.degree(name) > 0:
            raise ValueError(f"denominator depends on {name}")
        return [RationalFunction(c, self.den) for c in self.num.coefficients(name)]

    def p_valuation(self):
        """min over terms of the p-exponent, counting the denominator's p-power."""
        if not self.num:
            raise ValueError("valuation of zero")
        if not self.den.is_monomial():
            raise ValueError("p_valuation needs a monomial denominator")
        return self.num.min_degree("p") - self.den.degree("p")

    def to_json(self):
        return {"numerator": self.num.to_json(), "denominator": self.den.to_json()}

    @classmethod
    def from_json(cls, data):
        if "numerator" in data:
            return cls(MultiPoly.from_json(data["numerator"]), MultiPoly.from_json(data["denominator"]))
        return cls(MultiPoly.from_json(data))


def _normalize(num, den):
    if not num:
        return num, MultiPoly.const(1)
    names = den.variables()
    if names:
        ck = V.key_gcd(num.content_key(names), den.content_key(names))
        if ck:
            num = MultiPoly({V.quotient(k, ck): c for k, c in num._t.items()}, _trusted=True)
            den = MultiPoly({V.quotient(k, ck): c for k, c in den._t.items()}, _trusted=True)
    lc = den.leading_coefficient()
    if lc != 1:
        inv = Fraction(1) / lc
        num = num.scale(inv)
        den = den.scale(inv)
    return num, den


def laurent_p(poly, shift):
    return RationalFunction.laurent(poly, shift)


def as_rf(x):
    return RationalFunction.coerce(x)
