"""Tensor products of two local Hecke algebras of the same genus."""

from ..algebra import MultiPoly, RationalFunction, var
from ..algebra import variables as V
from ..hecke import GENERATORS, RIGHT, HeckeElement, generator_images, hecke_terms_json, hecke_str, _check_genus


def left_names(genus):
    return GENERATORS[genus]


def right_names(genus):
    return tuple(RIGHT[g] for g in GENERATORS[genus])


class TensorHeckeElement:
    """Polynomial in left generators (T, T1, P) and right generators (Ty, T1y, Py).

    Coefficients live in Q[p, 1/p] and may also involve X, so an element can
    be a whole polynomial R(X) or S(X) with operator coefficients.
    """

    __slots__ = ("genus", "value")

    def __init__(self, genus, value):
        _check_genus(genus)
        value = RationalFunction.coerce(value)
        allowed = {"p", "X", *left_names(genus), *right_names(genus)}
        extra = (set(value.num.variables()) | set(value.den.variables())) - allowed
        if extra:
            raise ValueError(f"variables {sorted(extra)} do not belong to the genus-{genus} tensor algebra")
        if value.den.variables() not in ([], ["p"]) or not value.den.is_monomial():
            raise ValueError("tensor Hecke coefficients must lie in Q[p, 1/p]")
        self.genus = genus
        self.value = value

    @classmethod
    def pure(cls, left, right):
        """``left ⊗ right`` for two HeckeElements of the same genus."""
        if left.genus != right.genus:
            raise ValueError("left and right factors must carry the same genus")
        g = left.genus
        rv = right.value.num.rename(dict(zip(left_names(g), right_names(g))))
        return cls(g, left.value * RationalFunction(rv, right.value.den))

    @classmethod
    def monomial(cls, genus, lam, mu, coeff=1):
        """``coeff * prod gen^lam ⊗ prod gen^mu`` with exponent tuples ``lam``, ``mu``."""
        ex = {}
        for n, e in zip(left_names(genus), lam):
            if e:
                ex[n] = e
        for n, e in zip(right_names(genus), mu):
            if e:
                ex[n] = e
        return cls(genus, RationalFunction.coerce(coeff) * MultiPoly.monomial(ex))

    def _lift(self, other):
        if isinstance(other, TensorHeckeElement):
            if other.genus != self.genus:
                raise ValueError("genus mismatch")
            return other.value
        return RationalFunction.coerce(other)

    def __add__(self, other):
        return TensorHeckeElement(self.genus, self.value + self._lift(other))

    __radd__ = __add__

    def __sub__(self, other):
        return TensorHeckeElement(self.genus, self.value - self._lift(other))

    def __rsub__(self, other):
        return TensorHeckeElement(self.genus, self._lift(other) - self.value)

    def __neg__(self):
        return TensorHeckeElement(self.genus, -self.value)

    def __mul__(self, other):
        return TensorHeckeElement(self.genus, self.value * self._lift(other))

    __rmul__ = __mul__

    def __pow__(self, n):
        return TensorHeckeElement(self.genus, self.value ** n)

    def __eq__(self, other):
        if isinstance(other, TensorHeckeElement):
            return self.genus == other.genus and self.value == other.value
        return self.value == other

    def __hash__(self):
        return hash((self.genus, self.value))

    def __bool__(self):
        return bool(self.value)

    def __repr__(self):
        return f"TensorHeckeElement(genus={self.genus}, {hecke_str(self.value)})"

    def coefficient(self, d):
        """X^d coefficient."""
        return TensorHeckeElement(self.genus, RationalFunction(self.value.num.coefficient("X", d), self.value.den))

    def coefficients(self):
        return [TensorHeckeElement(self.genus, RationalFunction(c, self.value.den))
                for c in self.value.num.coefficients("X")]

    @classmethod
    def from_coefficients(cls, genus, coeffs):
        X = var("X")
        total = RationalFunction(0)
        for d, c in enumerate(coeffs):
            v = c.value if isinstance(c, TensorHeckeElement) else RationalFunction.coerce(c)
            if v:
                total = total + v * X ** d
        return cls(genus, total)

    def x_degree(self):
        return self.value.num.degree("X")

    def is_integral(self):
        """True when every coefficient is in Z[p, 1/p]."""
        return all(c.denominator == 1 for _, c in self.value.num.items())

    def terms(self):
        """``{(lam, mu, X-degree): Laurent coefficient in p}``."""
        g = self.genus
        ln, rn = left_names(g), right_names(g)
        out = {}
        for k, rest in self.value.num.split(list(ln) + list(rn) + ["X"]).items():
            ex = V.unpack(k)
            key = (tuple(ex.get(n, 0) for n in ln), tuple(ex.get(n, 0) for n in rn), ex.get("X", 0))
            out[key] = RationalFunction(rest, self.value.den)
        return out

    def to_json(self):
        g = self.genus
        return {"genus": g, "terms": hecke_terms_json(self.value, [left_names(g), right_names(g)])}


def _power_cache(images):
    cache = {}

    def power(name, e):
        key = (name, e)
        if key not in cache:
            cache[key] = images[name] ** e if e else RationalFunction(1)
        return cache[key]

    return power


def apply_tensor_omega(e, normalization="polynomial"):
    """Omega_x ⊗ Omega_y; left generators go to x-variables, right ones to y.

    The sum is grouped by left monomial so each left image is formed once.
    """
    if isinstance(e, HeckeElement):
        raise TypeError("apply_tensor_omega expects a TensorHeckeElement")
    g = e.genus
    ln, rn = left_names(g), right_names(g)
    left = generator_images(g, normalization, "x")
    right_src = generator_images(g, normalization, "y")
    right = {RIGHT[k]: v for k, v in right_src.items()}
    lpow, rpow = _power_cache(left), _power_cache(right)
    total = RationalFunction(0)
    for lk, rest in e.value.num.split(list(ln)).items():
        lex = V.unpack(lk)
        limg = RationalFunction(1)
        for n, k in lex.items():
            limg = limg * lpow(n, k)
        inner = RationalFunction(0)
        for rk, coeff in rest.split(list(rn)).items():
            rex = V.unpack(rk)
            rimg = RationalFunction.coerce(coeff)
            for n, k in rex.items():
                rimg = rimg * rpow(n, k)
            inner = inner + rimg
        total = total + limg * inner
    return total / e.value.den
