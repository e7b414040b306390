"""Hodge types, gamma factors, critical strips and p-adic admissibility.

Weights may be ints or symbolic expressions (anything supporting + and -,
e.g. sympy symbols); size checks are only made for integer weights.
"""

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import floor, pi

import numpy as np
from scipy.special import gamma as _gamma

from .report import CheckReport


class WeightTooSmall(ValueError):
    pass


class InvalidWeights(ValueError):
    pass


class PoleAt(ValueError):
    def __init__(self, s):
        super().__init__(f"gamma factor has a pole at s={s}")
        self.s = s


class NegativeOrder(ValueError):
    pass


@dataclass
class HodgeType:
    pairs: list
    weight: object
    rank: int = None

    def __post_init__(self):
        self.pairs = sorted(self.pairs, key=lambda pq: (str(pq[0]), str(pq[1])))
        if self.rank is None:
            self.rank = len(self.pairs)
        if self.rank != len(self.pairs):
            raise ValueError("rank differs from the number of pairs")
        for p, q in self.pairs:
            if _expand(p + q - self.weight) != 0:
                raise ValueError(f"pair {(p, q)} does not have weight {self.weight}")

    def multiset(self):
        return Counter((_expand(p), _expand(q)) for p, q in self.pairs)

    def __eq__(self, other):
        if not isinstance(other, HodgeType):
            return NotImplemented
        return self.rank == other.rank and self.multiset() == other.multiset()

    def to_json(self):
        return {"weight": str(self.weight), "rank": self.rank,
                "pairs": [[str(p), str(q)] for p, q in self.pairs]}


def _expand(e):
    return e.expand() if hasattr(e, "expand") else e


def _is_int(k):
    return isinstance(k, int) or (hasattr(k, "is_Integer") and bool(k.is_Integer))


def hodge_spin(n, k):
    """Hodge type of the spinor motive of a genus-n form of weight k (rank 2^n)."""
    if _is_int(k) and k <= n:
        raise WeightTooSmall(f"weight {k} must exceed the genus {n}")
    idx = range(1, n + 1)
    pairs = []
    for r in range(n + 1):
        for I in combinations(idx, r):
            p = sum((k - i for i in I), 0)
            q = sum((k - j for j in idx if j not in I), 0)
            pairs.append((_expand(p), _expand(q)))
    return HodgeType(pairs, _expand(k * n - n * (n + 1) // 2), 2 ** n)


def hodge_standard(n, k):
    """Hodge type of the standard motive: weight 0, rank 2n+1."""
    pairs = [(0, 0)]
    for i in range(1, n + 1):
        pairs.append((_expand(-k + i), _expand(k - i)))
        pairs.append((_expand(k - i), _expand(-k + i)))
    return HodgeType(pairs, 0, 2 * n + 1)


def hodge_tensor(a, b):
    pairs = [(_expand(p1 + p2), _expand(q1 + q2)) for p1, q1 in a.pairs for p2, q2 in b.pairs]
    return HodgeType(pairs, _expand(a.weight + b.weight), a.rank * b.rank)


def check_lift_hodge(m, k):
    """Spin(2m, k) ⊗ Spin(2m, k-2m) against Spin(4m, k), as multisets."""
    if k <= 4 * m:
        raise WeightTooSmall(f"need k > 4m, got k={k}, m={m}")
    lhs = hodge_tensor(hodge_spin(2 * m, k), hodge_spin(2 * m, k - 2 * m))
    rhs = hodge_spin(4 * m, k)
    details = {"m": m, "k": k, "rank": rhs.rank}
    if lhs == rhs:
        return CheckReport("lift_hodge", True, details)
    extra = lhs.multiset() - rhs.multiset()
    missing = rhs.multiset() - lhs.multiset()
    return CheckReport("lift_hodge", False, details,
                       f"multisets differ: extra {sorted(extra)[:3]}, missing {sorted(missing)[:3]}")


# -- gamma factors ---------------------------------------------------------

@dataclass
class GammaData:
    kind: str
    c_shifts: list
    center: int
    sign: str = None
    r_shifts: list = field(default_factory=list)   # (shift, a_plus, a_minus)
    note: str = None

    def to_json(self):
        out = {"kind": self.kind, "c_shifts": self.c_shifts, "center": self.center, "sign": self.sign,
               "r_shifts": [list(r) for r in self.r_shifts]}
        if self.note:
            out["note"] = self.note
        return out


KINDS = ("spin_n3", "spin_n4", "tensor_g2", "triple")


def gamma_data(kind, weights):
    """Gamma_C shifts and functional-equation center for the four implemented cases."""
    kind = kind.replace("-", "_")
    kind = {"spin3": "spin_n3", "spin4": "spin_n4"}.get(kind, kind)
    if kind not in KINDS:
        raise InvalidWeights(f"unknown kind {kind!r}")
    w = tuple(weights) if isinstance(weights, (list, tuple)) else (weights,)
    if kind == "spin_n3":
        (k,) = _arity(w, 1)
        if k < 5:
            raise InvalidWeights("spin_n3 needs k >= 5")
        return GammaData(kind, sorted([0, k - 3, k - 2, k - 1]), 3 * k - 5, "+1")
    if kind == "spin_n4":
        (k,) = _arity(w, 1)
        if k <= 5:
            raise InvalidWeights("spin_n4 needs k > 5")
        shifts = [0, k - 4, k - 3, k - 2, k - 1, 2 * k - 7, 2 * k - 6, 2 * k - 5]
        return GammaData(kind, sorted(shifts), 4 * k - 9, "+1")
    if kind == "tensor_g2":
        k, l = _arity(w, 2)
        if not k > l + 1 or l < 3:
            raise InvalidWeights("tensor_g2 needs k > l+1 and l >= 3")
        shifts = [0, l - 2, l - 1, k - 2, k - 1, 2 * l - 3, k + l - 2, k + l - 3]
        return GammaData(kind, sorted(shifts), 2 * k + 2 * l - 5, "epsilon(f,g), |epsilon|=1",
                         [(k + l - 3, 1, 1)], "Gamma_C(s-(k+l-3)) = Gamma_R(s-(k+l-3)) Gamma_R(s+1-(k+l-3))")
    k1, k2, k3 = _arity(w, 3)
    if min(k1, k2, k3) < 2:
        raise InvalidWeights("triple needs weights >= 2")
    return GammaData(kind, sorted([0, k3 - 1, k2 - 1, k1 - 1]), k1 + k2 + k3 - 2, None)


def _arity(w, n):
    if len(w) != n or not all(isinstance(x, int) for x in w):
        raise InvalidWeights(f"expected {n} integer weight(s), got {w}")
    return w


def critical_values(g):
    """Integers s with no Gamma_C pole at s nor at center - s."""
    top = max(g.c_shifts)
    return [s for s in range(top + 1, g.center - top) if all(s - a >= 1 and g.center - s - a >= 1 for a in g.c_shifts)]


def _pole_check(z):
    z = complex(z)
    if z.imag == 0 and z.real <= 0 and z.real == int(z.real):
        return True
    return False


def gamma_c(s):
    """Gamma_C(s) = 2 (2 pi)^(-s) Gamma(s)."""
    if _pole_check(s):
        raise PoleAt(s)
    s = complex(s)
    return complex(2 * (2 * pi) ** (-s) * _gamma(s))


def gamma_r(s):
    """Gamma_R(s) = pi^(-s/2) Gamma(s/2)."""
    if _pole_check(complex(s) / 2):
        raise PoleAt(s)
    s = complex(s)
    return complex(pi ** (-s / 2) * _gamma(s / 2))


def gamma_numeric(s, kind="C"):
    return gamma_c(s) if kind == "C" else gamma_r(s)


def duplication_errors(points):
    """Relative errors of Gamma_C(s) = Gamma_R(s) Gamma_R(s+1) at the given points."""
    s = np.asarray(points, dtype=complex)
    gc = 2 * (2 * pi) ** (-s) * _gamma(s)
    gr = pi ** (-s / 2) * _gamma(s / 2) * pi ** (-(s + 1) / 2) * _gamma((s + 1) / 2)
    return np.abs(gc - gr) / np.abs(gc)


# -- admissibility ---------------------------------------------------------

@dataclass
class AdmissibilityReport:
    ord_alpha: Fraction
    kind: str
    h: int = None

    def to_json(self):
        return {"ord_alpha": str(self.ord_alpha), "kind": self.kind, "h": self.h}


def padic_admissibility(ord_alpha):
    """Bounded when ord_p(alpha_0) = 0, else growth exponent h = floor(2 ord) + 1."""
    o = Fraction(ord_alpha)
    if o < 0:
        raise NegativeOrder(f"ord_p = {o} is negative")
    if o == 0:
        return AdmissibilityReport(o, "bounded")
    return AdmissibilityReport(o, "log-growth", floor(2 * o) + 1)
