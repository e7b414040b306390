"""Local Hecke algebras of genus 1-3, the spherical map and Euler factors.

Two normalizations of the spherical map are offered:

``polynomial``
    ``[p] -> p^(-n(n+1)/2) x0^2 x1...xn``; this is the one under which the
    generating series of T(p^delta) takes its classical closed form.
``eigenvalue``
    ``[p] -> x0^2 x1...xn`` so that specializing at Satake parameters gives
    ``alpha0^2 alpha1...alphan``.

In both, ``T(p) -> x0 (1+x1)...(1+xn)`` and the genus-2 image of T1(p^2) is
derived from the X^2 coefficient of the spinor polynomial (see
`t1_image`).  Genus 3 is available only as an abstract algebra.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import prod

from .algebra import (
    MultiPoly, RationalFunction, TruncatedSeries, exact_divide, series_invert, var,
)
from .algebra import variables as V
from .report import CheckReport

GENERATORS = {1: ("T", "P"), 2: ("T", "T1", "P"), 3: ("T", "T1", "T2", "P")}
LABELS = {"T": "T", "T1": "T1", "T2": "T2", "P": "[p]"}
RIGHT = {"T": "Ty", "T1": "T1y", "T2": "T2y", "P": "Py"}
NORMALIZATIONS = ("polynomial", "eigenvalue")


class UnsupportedGenus(ValueError):
    pass


class NonInvertibleParameter(ValueError):
    pass


def _gen_name(genus, name):
    name = {"[p]": "P", "[p]_n": "P"}.get(name, name)
    if name == f"T{genus}":
        return "P"
    if name not in GENERATORS[genus]:
        raise ValueError(f"{name!r} is not a generator of the genus-{genus} Hecke algebra")
    return name


def _check_genus(genus):
    if genus not in GENERATORS:
        raise UnsupportedGenus(f"genus {genus} is outside 1..3")


class HeckeElement:
    """Element of the local Hecke algebra (optionally a polynomial in X).

    ``value`` is a RationalFunction in p, X and the left generator symbols
    whose denominator is a power of p.
    """

    __slots__ = ("genus", "value")

    def __init__(self, genus, value):
        _check_genus(genus)
        value = RationalFunction.coerce(value)
        allowed = {"p", "X", *GENERATORS[genus]}
        extra = (set(value.num.variables()) | set(value.den.variables())) - allowed
        if extra:
            raise ValueError(f"variables {sorted(extra)} do not belong to the genus-{genus} algebra")
        if value.den.variables() not in ([], ["p"]) or not value.den.is_monomial():
            raise ValueError("Hecke coefficients must lie in Q[p, 1/p]")
        self.genus = genus
        self.value = value

    @classmethod
    def generator(cls, genus, name):
        _check_genus(genus)
        return cls(genus, var(_gen_name(genus, name)))

    @classmethod
    def scalar(cls, genus, c):
        return cls(genus, RationalFunction.coerce(c))

    def _lift(self, other):
        if isinstance(other, HeckeElement):
            if other.genus != self.genus:
                raise ValueError("genus mismatch")
            return other.value
        return RationalFunction.coerce(other)

    def __add__(self, other):
        return HeckeElement(self.genus, self.value + self._lift(other))

    __radd__ = __add__

    def __sub__(self, other):
        return HeckeElement(self.genus, self.value - self._lift(other))

    def __rsub__(self, other):
        return HeckeElement(self.genus, self._lift(other) - self.value)

    def __neg__(self):
        return HeckeElement(self.genus, -self.value)

    def __mul__(self, other):
        return HeckeElement(self.genus, self.value * self._lift(other))

    __rmul__ = __mul__

    def __pow__(self, n):
        return HeckeElement(self.genus, self.value ** n)

    def __eq__(self, other):
        if isinstance(other, HeckeElement):
            return self.genus == other.genus and self.value == other.value
        return self.value == other

    def __hash__(self):
        return hash((self.genus, self.value))

    def __repr__(self):
        return f"HeckeElement(genus={self.genus}, {hecke_str(self.value)})"

    def coefficient(self, d):
        """X^d coefficient as a HeckeElement."""
        return HeckeElement(self.genus, RationalFunction(self.value.num.coefficient("X", d), self.value.den))

    def x_degree(self):
        return self.value.num.degree("X")

    def to_json(self):
        return {"genus": self.genus, "terms": hecke_terms_json(self.value, [GENERATORS[self.genus]])}


def laurent_p_json(num, den_p):
    """Payload ``{"p^e": "a/b"}`` for a univariate Laurent polynomial in p."""
    out = {}
    for k in sorted(num.keys(), reverse=True):
        e = V.exponent(k, "p") - den_p
        c = Fraction(num._t[k])
        out[f"p^{e}"] = f"{c.numerator}/{c.denominator}"
    return out


def hecke_terms_json(value, sides):
    """Serialize a Hecke or tensor-Hecke value keyed by generator-exponent strings.

    ``sides`` lists the generator tuples (one for HeckeElement, two for the
    tensor algebra); sides are joined with ``" ⊗ "``.
    """
    value = RationalFunction.coerce(value)
    den_p = value.den.degree("p")
    names = [g for side in sides for g in side]
    has_x = value.num.degree("X") > 0
    groups = value.num.split(names + (["X"] if has_x else []))
    out = {}
    for g in sorted(groups, reverse=True):
        ex = V.unpack(g)
        parts = []
        for side in sides:
            parts.append(" ".join(f"{LABELS[_base(n)]}^{ex.get(n, 0)}" for n in side))
        key = " ⊗ ".join(parts)
        if has_x:
            key += f" X^{ex.get('X', 0)}"
        out[key] = laurent_p_json(groups[g], den_p)
    return out


def _base(name):
    for b, r in RIGHT.items():
        if name == r:
            return b
    return name


def hecke_str(value):
    s = str(value)
    for a, b in (("T1y", "T1'"), ("T2y", "T2'"), ("Ty", "T'"), ("Py", "[p]'"), ("P", "[p]")):
        s = s.replace(a, b)
    return s


# -- spherical map ---------------------------------------------------------

def _xs(side, n):
    return [var(f"{side}{i}") for i in range(n + 1)]


@lru_cache(maxsize=None)
def generator_images(genus, normalization="polynomial", side="x"):
    """``{generator symbol: image}`` for the spherical map on one side."""
    if normalization not in NORMALIZATIONS:
        raise ValueError(f"normalization must be one of {NORMALIZATIONS}")
    if genus not in (1, 2):
        raise UnsupportedGenus(f"no spherical images at genus {genus}")
    x = _xs(side, genus)
    t = x[0]
    for xi in x[1:]:
        t = t * (1 + xi)
    bracket = x[0] ** 2 * prod(x[1:], start=MultiPoly.const(1))
    if normalization == "polynomial":
        bracket = bracket / var("p", genus * (genus + 1) // 2)
    images = {"T": RationalFunction.coerce(t), "P": RationalFunction.coerce(bracket)}
    if genus == 2:
        images["T1"] = t1_image(normalization, side)
    return images


@lru_cache(maxsize=None)
def t1_image(normalization="polynomial", side="x"):
    """Image of T1(p^2) at genus 2.

    Solved from the genus-2 spinor polynomial
    ``1 - T X + (p T1 + p(p^2+1)[p]) X^2 - p^3 T [p] X^3 + p^6 [p]^2 X^4``:
    the X^2 coefficient of ``(1-x0 X)(1-x0x1 X)(1-x0x2 X)(1-x0x1x2 X)`` equals
    ``p Omega(T1) + p(p^2+1) Omega([p])``.
    """
    x0, x1, x2 = _xs(side, 2)
    X = var("X")
    q = (1 - x0 * X) * (1 - x0 * x1 * X) * (1 - x0 * x2 * X) * (1 - x0 * x1 * x2 * X)
    c2 = q.coefficient("X", 2)
    bracket = x0 ** 2 * x1 * x2
    if normalization == "polynomial":
        bracket = bracket / var("p", 3)
    p = var("p")
    return (RationalFunction.coerce(c2) - p * (p ** 2 + 1) * bracket) / p


def spherical_image(e, normalization="polynomial", side="x"):
    """Apply the spherical map Omega to a HeckeElement (ring homomorphism).

    Returns a RationalFunction whose denominator is a power of p.
    """
    if not isinstance(e, HeckeElement):
        raise TypeError("spherical_image expects a HeckeElement")
    if e.genus not in (1, 2):
        raise UnsupportedGenus(f"genus {e.genus} has no spherical images here")
    images = generator_images(e.genus, normalization, side)
    return e.value.num.subs(images) / e.value.den


# -- closed forms for T(p^delta) -----------------------------------------

def omega_tp_delta(genus, delta):
    """Omega(T(p^delta)) from the closed-form geometric sums.

    The fixed denominators are removed with `exact_divide`, which certifies
    that they cancel.
    """
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    x0, x1, x2 = _xs("x", 2)
    if genus == 1:
        return RationalFunction.coerce(x0 ** delta * exact_divide(1 - x1 ** (delta + 1), 1 - x1))
    if genus != 2:
        raise UnsupportedGenus(f"no closed form for genus {genus}")
    p = var("p")
    d1 = delta + 1
    num = ((1 - x1 * x2) * (p * x1 - x2) * x1 ** d1
           + (1 - x1 * x2) * (x1 - p * x2) * x2 ** d1
           - (1 - p * x1 * x2) * (x1 - x2) * (x1 * x2) ** d1
           - (p - x1 * x2) * (x1 - x2))
    den = (1 - x1) * (1 - x2) * (1 - x1 * x2) * (x1 - x2)
    return -(x0 ** delta) * exact_divide(num, den) / p


def omega_generating_series(genus, order):
    """Truncated expansion of the closed-form generating series sum Omega(T(p^d)) X^d."""
    x0, x1, x2 = _xs("x", 2)
    X = var("X")
    if genus == 1:
        num = RationalFunction.coerce(1)
        den = (1 - x0 * X) * (1 - x0 * x1 * X)
    elif genus == 2:
        num = 1 - x0 ** 2 * x1 * x2 * X ** 2 / var("p")
        den = (1 - x0 * X) * (1 - x0 * x1 * X) * (1 - x0 * x2 * X) * (1 - x0 * x1 * x2 * X)
    else:
        raise UnsupportedGenus(f"no closed form for genus {genus}")
    inv = series_invert(TruncatedSeries.from_poly(den, order))
    return TruncatedSeries(num.coefficients("X"), order) * inv


# -- Satake parameters and Euler factors -----------------------------------

def p_power(exponent, weight_multiple=0, weight=None):
    """``p^(weight_multiple*k + exponent)``; a string weight uses the symbol pk = p^k."""
    if weight_multiple and (weight is None or isinstance(weight, str)):
        base = var("pk", weight_multiple) if weight_multiple > 0 else None
        if base is None:
            return RationalFunction(1, var("pk", -weight_multiple)) * p_power(exponent)
        return base * p_power(exponent)
    e = exponent + (weight_multiple * weight if weight_multiple else 0)
    return RationalFunction.laurent(MultiPoly.const(1), e)


@dataclass(frozen=True)
class SatakeParams:
    genus: int
    alphas: tuple
    weight: object = None   # int, "k" (symbolic), or None

    def __post_init__(self):
        if len(self.alphas) != self.genus + 1:
            raise ValueError(f"genus {self.genus} needs {self.genus + 1} parameters")
        object.__setattr__(self, "alphas", tuple(RationalFunction.coerce(a) for a in self.alphas))

    @classmethod
    def symbolic(cls, genus, weight=None, side="x"):
        return cls(genus, tuple(_xs(side, genus)), weight)


def eisenstein_params(genus, weight):
    """Satake parameters 1, p^(k-n), ..., p^(k-1) of the genus-n Siegel-Eisenstein series."""
    alphas = [RationalFunction.coerce(1)]
    for i in range(1, genus + 1):
        alphas.append(p_power(i - 1 - genus, 1, weight))
    return SatakeParams(genus, tuple(alphas), weight)


def spinor_factor(sp):
    """``Q(X) = prod over subsets I of {1..n} of (1 - alpha0 prod_{i in I} alpha_i X)``."""
    X = var("X")
    a0, rest = sp.alphas[0], sp.alphas[1:]
    out = RationalFunction.coerce(1)
    for r in range(sp.genus + 1):
        for sub in combinations(rest, r):
            out = out * (1 - a0 * prod(sub, start=RationalFunction.coerce(1)) * X)
    return out


def standard_factor(sp):
    """``R(X) = (1-X) prod_i (1 - alpha_i^-1 X)(1 - alpha_i X)``.

    Parameters must be invertible monomials; the result is a RationalFunction
    whose denominator is ``prod alpha_i`` (times normalization constants).
    """
    X = var("X")
    out = RationalFunction.coerce(1 - X)
    for a in sp.alphas[1:]:
        if not (a.num.is_monomial() and a.den.is_monomial()):
            raise NonInvertibleParameter(f"{a} is not an invertible monomial")
        out = out * (1 - a.inverse() * X) * (1 - a * X)
    return out


def standard_factor_cleared(sp):
    """``(prod alpha_i * R(X), prod alpha_i)`` with the first entry a polynomial in X."""
    R = standard_factor(sp)
    m = prod(sp.alphas[1:], start=RationalFunction.coerce(1))
    return R * m, m


def triple_factor(a1, a2, a3):
    """``det(1 - X A1 (x) A2 (x) A3)`` for diagonal 2x2 matrices: degree 8 in X."""
    X = var("X")
    out = RationalFunction.coerce(1)
    for i, j, l in product((0, 1), repeat=3):
        out = out * (1 - RationalFunction.coerce(a1[i]) * a2[j] * a3[l] * X)
    return out


def check_normalization(sp):
    """Does ``alpha0^2 alpha1...alphan == p^(kn - n(n+1)/2)`` hold exactly?"""
    if sp.weight is None:
        raise ValueError("check_normalization needs the weight")
    n = sp.genus
    lhs = sp.alphas[0] ** 2 * prod(sp.alphas[1:], start=RationalFunction.coerce(1))
    rhs = p_power(-n * (n + 1) // 2, n, sp.weight)
    ok = lhs == rhs
    return CheckReport("normalization", ok, {"lhs": str(lhs), "rhs": str(rhs)},
                       None if ok else f"alpha0^2*alpha1*...*alphan = {lhs} != {rhs}")


# -- genus 3 -------------------------------------------------------------

def andrianov_E3():
    """Andrianov's numerator E(X) of sum T(p^delta) X^delta at genus 3."""
    p, X = var("p"), var("X")
    T, T2, B = var("T"), var("T2"), var("P")
    inner = T2 + (p ** 2 - p + 1) * (p ** 2 + p + 1) * B
    E = (1 - p ** 2 * inner * X ** 2
         + (p + 1) * p ** 4 * T * B * X ** 3
         - p ** 7 * B * inner * X ** 4
         + p ** 15 * B ** 3 * X ** 6)
    return HeckeElement(3, E)


# -- Dirichlet series from Euler products ----------------------------------

@dataclass
class DirichletCoefficients:
    bound: int
    coeffs: dict

    def __getitem__(self, h):
        return self.coeffs[h]

    def to_json(self):
        return {"bound": self.bound,
                "coefficients": {str(h): _value_json(c) for h, c in sorted(self.coeffs.items())}}


def _value_json(c):
    if isinstance(c, RationalFunction):
        return c.num.to_json() if c.den == 1 else c.to_json()
    return c.to_json()


def _primes_upto(n):
    sieve = bytearray([1]) * (n + 1)
    sieve[:2] = b"\x00\x00"[: min(2, n + 1)]
    for i in range(2, int(n ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(sieve[i * i::i]))
    return [i for i in range(n + 1) if sieve[i]]


def factorize(n):
    """Prime factorization ``{prime: exponent}`` by trial division."""
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def dirichlet_from_euler(factors, bound, default=None):
    """Coefficients of ``prod_p 1/F_p(p^-s)`` for ``h <= bound``.

    ``factors`` maps primes to polynomials in X with constant term 1;
    primes missing from it use ``default`` (or the trivial factor 1).
    """
    one = MultiPoly.const(1)
    local = {}
    for q in _primes_upto(bound):
        F = factors.get(q, default)
        if F is None:
            F = one
        order = 0
        while q ** (order + 1) <= bound:
            order += 1
        local[q] = series_invert(TruncatedSeries.from_poly(F, order))
    coeffs = {1: one}
    for h in range(2, bound + 1):
        c = one
        for q, e in factorize(h).items():
            c = local[q][e] * c
        coeffs[h] = c
    return DirichletCoefficients(bound, coeffs)
