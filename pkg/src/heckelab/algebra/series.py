"""Truncated power series in X with ring-element coefficients."""

from .poly import MultiPoly


class NotAUnit(ArithmeticError):
    """Series inversion needs constant coefficient exactly 1."""


def _zero_like(c):
    return c * 0


class TruncatedSeries:
    """``c_0 + c_1 X + ... + c_N X^N`` modulo ``X^(N+1)``.

    Coefficients are MultiPoly or RationalFunction values; arithmetic never
    reads past ``order``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, order=None):
        coeffs = [MultiPoly.coerce(c) if isinstance(c, int) else c for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        zero = MultiPoly()
        coeffs = list(coeffs[: order + 1]) + [zero] * (order + 1 - len(coeffs))
        self.coeffs = tuple(coeffs)

    @property
    def order(self):
        return len(self.coeffs) - 1

    @classmethod
    def from_poly(cls, poly, order, name="X"):
        """Truncate a polynomial (or Laurent rational function) in ``name``."""
        return cls(poly.coefficients(name), order)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self):
        return len(self.coeffs)

    def __add__(self, other):
        n = min(self.order, other.order)
        return TruncatedSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)])

    def __sub__(self, other):
        n = min(self.order, other.order)
        return TruncatedSeries([self.coeffs[i] - other.coeffs[i] for i in range(n + 1)])

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries([c * other for c in self.coeffs])
        n = min(self.order, other.order)
        out = []
        for k in range(n + 1):
            acc = MultiPoly()
            for i in range(k + 1):
                a, b = self.coeffs[i], other.coeffs[k - i]
                if a and b:
                    acc = a * b + acc
            out.append(acc)
        return TruncatedSeries(out)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return all(self.coeffs[i] == other.coeffs[i] for i in range(n + 1))

    def __repr__(self):
        return f"TruncatedSeries(order={self.order}, {[str(c) for c in self.coeffs]})"

    def to_poly(self, name="X"):
        """Sum ``c_i * name^i`` as a MultiPoly (coefficients must be polynomials)."""
        return MultiPoly.from_coefficients(name, self.coeffs)

    def is_one(self):
        return self.coeffs[0] == 1 and all(not c for c in self.coeffs[1:])


def series_invert(F):
    """Return G with ``F*G == 1`` up to ``F.order``; requires ``F[0] == 1``."""
    if F.coeffs[0] != 1:
        raise NotAUnit(f"constant coefficient {F.coeffs[0]} is not 1")
    G = [MultiPoly.const(1)]
    for n in range(1, F.order + 1):
        acc = MultiPoly()
        for i in range(1, n + 1):
            f = F.coeffs[i]
            if f:
                g = G[n - i]
                if g:
                    acc = f * g + acc
        G.append(-acc)
    return TruncatedSeries(G)
