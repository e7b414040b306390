"""Tensor generating series sum Omega_x(T(p^d)) Omega_y(T(p^d)) X^d.

Omega(T(p^delta)) is a sum of geometric terms ``x0^delta * a_m * m^delta /
(scale * D)`` over four (genus 2) or two (genus 1) monomials m.  The tensor
series is therefore a sum of ``|M|^2`` fractions ``a_m b_m' / (scale^2 Dx Dy
(1 - x0 y0 m m' X))``, which are derived here rather than copied.
"""

from dataclasses import dataclass, field
from math import prod

from ..algebra import MultiPoly, RationalFunction, exact_divide, NotDivisible, var
from ..algebra import TruncatedSeries, series_invert
from ..hecke import UnsupportedGenus


@dataclass(frozen=True)
class SideForm:
    """``Omega(T(p^d)) = x0^d * sum_m a_m m^d / (scale * prod(den))``."""
    genus: int
    roots: tuple        # monomials m
    numerators: tuple   # a_m
    den: tuple          # X-free denominator factors
    scale: MultiPoly    # power of p


def side_form(genus, side="x"):
    x = [var(f"{side}{i}") for i in range(genus + 1)]
    if genus == 1:
        x1 = x[1]
        return SideForm(1, (MultiPoly.const(1), x1), (MultiPoly.const(1), -x1), (1 - x1,), MultiPoly.const(1))
    if genus == 2:
        x1, x2 = x[1], x[2]
        p = var("p")
        one = MultiPoly.const(1)
        roots = (one, x1, x2, x1 * x2)
        nums = (
            (p - x1 * x2) * (x1 - x2),
            -(1 - x1 * x2) * (p * x1 - x2) * x1,
            -(1 - x1 * x2) * (x1 - p * x2) * x2,
            (1 - p * x1 * x2) * (x1 - x2) * x1 * x2,
        )
        den = (1 - x1, 1 - x2, 1 - x1 * x2, x1 - x2)
        return SideForm(2, roots, nums, den, p)
    raise UnsupportedGenus(f"no Rankin series at genus {genus}")


def _reduce(num, factors):
    """Cancel every factor that divides ``num``; returns (num, remaining factors)."""
    kept = []
    for f in factors:
        try:
            num = exact_divide(num, f)
        except NotDivisible:
            kept.append(f)
    return num, kept


@dataclass(frozen=True)
class PartialFraction:
    """``numerator / (p_scale * prod(den_factors) * (1 - root X))``."""
    numerator: MultiPoly
    den_factors: tuple
    p_scale: MultiPoly
    root: MultiPoly

    @property
    def x_factor(self):
        return 1 - self.root * var("X")

    def as_rational_function(self):
        den = self.p_scale * prod(self.den_factors, start=MultiPoly.const(1)) * self.x_factor
        return RationalFunction(self.numerator, den)

    def at_zero(self):
        """Value at X = 0 as a RationalFunction."""
        den = self.p_scale * prod(self.den_factors, start=MultiPoly.const(1))
        return RationalFunction(self.numerator, den)


def tensor_partial_fractions(genus):
    """The ``|M|^2`` partial-fraction terms of the tensor series, reduced."""
    xs, ys = side_form(genus, "x"), side_form(genus, "y")
    x0y0 = var("x0") * var("y0")
    out = []
    for m, a in zip(xs.roots, xs.numerators):
        a_red, a_den = _reduce(a, xs.den)
        for n, b in zip(ys.roots, ys.numerators):
            b_red, b_den = _reduce(b, ys.den)
            out.append(PartialFraction(a_red * b_red, tuple(a_den + b_den), xs.scale * ys.scale, x0y0 * m * n))
    return out


def tensor_partial_fractions_genus2():
    return tensor_partial_fractions(2)


def sum_partial_fractions(terms, at_zero=False):
    """Sum PartialFraction terms over the lcm of their known factor lists.

    Factors that divide the summed numerator are cancelled with
    `exact_divide`; ``at_zero`` sets X = 0 first.
    """
    common = []
    for t in terms:
        fs = list(t.den_factors) + ([] if at_zero else [t.x_factor])
        pending = list(common)
        for f in fs:
            if f in pending:
                pending.remove(f)
            else:
                common.append(f)
    scale = MultiPoly.const(1)
    for t in terms:
        scale = _monomial_lcm(scale, t.p_scale)
    num = MultiPoly()
    for t in terms:
        rest = list(common)
        for f in list(t.den_factors) + ([] if at_zero else [t.x_factor]):
            rest.remove(f)
        num = num + t.numerator * exact_divide(scale, t.p_scale) * prod(rest, start=MultiPoly.const(1))
    num, kept = _reduce(num, common)
    return RationalFunction(num, scale * prod(kept, start=MultiPoly.const(1)))


def _monomial_lcm(a, b):
    from ..algebra import variables as V
    return MultiPoly({V.key_lcm(a.leading_key(), b.leading_key()): 1}, _trusted=True)


def quadratic_factor(genus):
    """``1 - x0^2 y0^2 x1 y1 ... xn yn X^2``."""
    m = var("x0", 2) * var("y0", 2)
    for i in range(1, genus + 1):
        m = m * var(f"x{i}") * var(f"y{i}")
    return 1 - m * var("X", 2)


@dataclass
class RankinDecomposition:
    """``sum_d Omega_x(T(p^d)) Omega_y(T(p^d)) X^d = quadratic * R / S``."""
    genus: int
    denominator_factors: list
    quadratic_factor: MultiPoly
    R: RationalFunction        # polynomial in X, coefficients in Q[p, 1/p][x, y]
    S: MultiPoly               # product of the denominator factors
    certified_factors: list = field(default_factory=list)

    def R_coefficients(self):
        return self.R.coefficients("X")

    def S_coefficients(self):
        return self.S.coefficients("X")

    def as_rational_function(self):
        return RationalFunction(self.quadratic_factor * self.R.num, self.S * self.R.den)

    def to_json(self):
        return {
            "genus": self.genus,
            "denominator_factors": [f.to_json() for f in self.denominator_factors],
            "quadratic_factor": self.quadratic_factor.to_json(),
            "R": {str(d): c.to_json() for d, c in enumerate(self.R_coefficients()) if c},
            "S": {str(d): c.to_json() for d, c in enumerate(self.S_coefficients()) if c},
            "certified_cancelled_factors": [f.to_json() for f in self.certified_factors],
        }


def combine_extract(genus):
    """Sum the partial fractions over the common X-denominator and simplify.

    Every X-free denominator factor is removed with `exact_divide` (raising
    NotDivisible if it does not cancel), then the quadratic factor is split
    off.  The same code path serves genus 1 and genus 2.
    """
    xs, ys = side_form(genus, "x"), side_form(genus, "y")
    x0y0 = var("x0") * var("y0")
    X = var("X")
    terms = []
    for m, a in zip(xs.roots, xs.numerators):
        for n, b in zip(ys.roots, ys.numerators):
            terms.append((a * b, x0y0 * m * n))
    factors = [1 - r * X for _, r in terms]
    S = MultiPoly.const(1)
    for f in factors:
        S = S * f
    N = MultiPoly()
    for (ab, _), f in zip(terms, factors):
        N = N + ab * exact_divide(S, f)
    certified = []
    for f in xs.den + ys.den:
        N = exact_divide(N, f)
        certified.append(f)
    Q = quadratic_factor(genus)
    R_scaled = exact_divide(N, Q)
    R = R_scaled / (xs.scale * ys.scale)
    return RankinDecomposition(genus, factors, Q, RationalFunction.coerce(R), S, certified)


def combine_extract_genus2():
    return combine_extract(2)


def tensor_series_genus1(order=4):
    """Closed form of the genus-1 tensor series, checked against its expansion to ``order``."""
    if order < 4:
        raise ValueError("order must be at least 4")
    dec = combine_extract(1)
    rf = dec.as_rational_function()
    expansion = series_expansion(dec, order)
    from ..hecke import omega_tp_delta
    for d in range(order + 1):
        w = omega_tp_delta(1, d)
        if expansion[d] != w * w.subs(_to_y(1)):
            raise ArithmeticError(f"genus-1 series disagrees with term products at X^{d}")
    return rf


def _to_y(genus):
    return {f"x{i}": var(f"y{i}") for i in range(genus + 1)}


def series_expansion(dec, order):
    """Expand ``quadratic * R / S`` as a TruncatedSeries in X."""
    inv = series_invert(TruncatedSeries.from_poly(dec.S, order))
    num = dec.quadratic_factor * dec.R
    return TruncatedSeries(num.coefficients("X"), order) * inv
