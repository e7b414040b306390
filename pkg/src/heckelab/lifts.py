"""Satake parameters of Ikeda-type lifts, Eisenstein evidence and p-adic Eisenstein families.

Half-integral powers of p use the variable u with u^2 = p.  The symbol
``at`` stands for the normalized parameter alpha-tilde of the elliptic form,
``ak`` for alpha(k) in a p-adic family, and ``pk`` for p^k when the weight is
symbolic.
"""

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
import warnings

from .algebra import MultiPoly, RationalFunction, var
from .hecke import SatakeParams, p_power, check_normalization, factorize
from .report import CheckReport
from .motives import WeightTooSmall
from .rankin.newton import polygon_from_points


class InvalidInput(ValueError):
    pass


class CongruenceHypothesisFails(ValueError):
    pass


class ZeroInput(ValueError):
    pass


def _rf(x):
    return RationalFunction.coerce(x)


def _one():
    return RationalFunction.coerce(1)


@dataclass
class LiftParams:
    """Parameters beta_0..beta_2n of a genus-2n lift."""
    n: int
    weight: object
    betas: list
    caveat: str = None

    @property
    def genus(self):
        return 2 * self.n

    def invariants(self):
        """(beta_0 has exponent nk - n(n+1)/2, every beta_i beta_{n+i} = p^(2i-1))."""
        n = self.n
        b0 = self.betas[0] == p_power(-n * (n + 1) // 2, n, self.weight)
        pairs = all(self.betas[i] * self.betas[n + i] == p_power(2 * i - 1) for i in range(1, n + 1))
        return b0, pairs

    def to_json(self):
        return {"genus": self.genus, "weight": str(self.weight),
                "betas": [str(b) for b in self.betas]}


def ikeda_satake(n, k, alpha_tilde="at"):
    """beta_0 = p^(nk - n(n+1)/2), beta_i = at p^(i-1/2), beta_{n+i} = at^-1 p^(i-1/2).

    ``k`` is the weight parameter of the display (an int, or "k" for the
    symbolic weight via pk).
    """
    if isinstance(k, int) and (k % 2 or (k - n) % 2):
        warnings.warn("the standing hypothesis asks for k even and k = n mod 2", stacklevel=2)
    at = var(alpha_tilde)
    u = var("u")
    betas = [p_power(-n * (n + 1) // 2, n, k)]
    betas += [_rf(at * u * var("p", i - 1)) for i in range(1, n + 1)]
    betas += [RationalFunction(u * var("p", i - 1), at) for i in range(1, n + 1)]
    return LiftParams(n, k, betas)


def hecke_quadratic_check(alpha_tilde="at", k="k"):
    """(1 - at p^(k-1/2) X)(1 - at^-1 p^(k-1/2) X) = 1 - a(p) X + p^(2k-1) X^2 with a(p) = u^(2k-1)(at + 1/at)."""
    at, u, X = _rf(var(alpha_tilde)), var("u"), var("X")
    half = p_power(-1, 1, k) * u                     # p^(k-1/2)
    lhs = (1 - at * half * X) * (1 - at.inverse() * half * X)
    a_p = half * (at + at.inverse())
    rhs = 1 - a_p * X + p_power(-1, 2, k) * X ** 2
    ok = lhs == rhs
    x2 = RationalFunction(lhs.num.coefficient("X", 2), lhs.den)
    x1 = RationalFunction(lhs.num.coefficient("X", 1), lhs.den)
    return CheckReport("hecke_quadratic", ok,
                       {"X2": str(x2), "X1": str(x1), "a(p)": str(a_p)},
                       None if ok else "Hecke quadratic: first mismatching coefficient in X")


def _standard_lhs(params):
    X = var("X")
    out = _rf(1 - X)
    for b in params.betas[1:]:
        out = out * (1 - b * X) * (1 - b.inverse() * X)
    return out


def _f_factor_shifted(n, k, j, at):
    """Local factor of L(f, s + k + n - j) in X = p^-s, f having parameters at^(+-1) p^(k-1/2)."""
    X = var("X")
    u = var("u")
    alpha = at * u * p_power(k - 1)
    alpha_bar = at.inverse() * u * p_power(k - 1)
    shift = p_power(-(k + n - j))
    return (1 - alpha * shift * X) * (1 - alpha_bar * shift * X)


def _exponents(params):
    """Multiset of (sign of at, exponent of p as a Fraction) over beta_1..beta_2n and inverses."""
    out = Counter()
    for b in params.betas[1:]:
        for v in (b, b.inverse()):
            out[_monomial_signature(v)] += 1
    return out


def _monomial_signature(v):
    from .algebra import variables as V
    num_k, den_k = v.num.leading_key(), v.den.leading_key()
    a = V.exponent(num_k, "at") - V.exponent(den_k, "at")
    e = Fraction(V.exponent(num_k, "p") - V.exponent(den_k, "p")) + Fraction(
        V.exponent(num_k, "u") - V.exponent(den_k, "u"), 2)
    return a, e


def verify_ikeda_standard(n, k=None, miyawaki=False, perturb=None):
    """Standard Euler factor of the lift against prod_j L_p(f, s + k + n - j).

    ``miyawaki`` multiplies both sides by the placeholder Lg for L_p(g, St).
    ``perturb`` maps an index i to a factor multiplying beta_i.
    """
    if k is None:
        k = n if n % 2 == 0 else n + 1
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        params = ikeda_satake(n, k)
    if perturb:
        betas = list(params.betas)
        for i, f in perturb.items():
            betas[i] = betas[i] * f
        params = LiftParams(n, k, betas)
    at = _rf(var("at"))
    lhs = _standard_lhs(params)
    rhs = _rf(1 - var("X"))
    for j in range(1, 2 * n + 1):
        rhs = rhs * _f_factor_shifted(n, k, j, at)
    if miyawaki:
        lg = var("Lg")
        lhs, rhs = lhs * lg, rhs * lg
    ex = _exponents(params)
    want = Counter()
    for j in range(1, 2 * n + 1):
        e = Fraction(2 * j - 2 * n - 1, 2)
        want[(1, e)] += 1
        want[(-1, -e)] += 1
    ok = lhs == rhs
    details = {"n": n, "k": k, "degree": 4 * n + 1,
               "exponents_match": ex == want,
               "exponents": sorted(f"at^{a} p^{e}" for (a, e), c in ex.items() for _ in range(c))}
    if miyawaki:
        details["caveat"] = "identity verified unconditionally; the non-vanishing condition is not modelled"
    mismatch = None
    if not ok:
        diff = (lhs - rhs).num.coefficients("X")
        first = next(d for d, c in enumerate(diff) if c)
        mismatch = f"standard L-factor identity: first mismatching coefficient at X^{first}"
    return CheckReport("ikeda_standard" + ("_miyawaki" if miyawaki else ""), ok, details, mismatch)


def eisenstein_lift_evidence(m, k):
    """gamma_0 = alpha_0 beta_0 and gamma = alphas + betas for Siegel-Eisenstein parameters."""
    if k <= 4 * m:
        raise WeightTooSmall(f"need k > 4m, got k={k}, m={m}")
    alphas = [_one()] + [p_power(e) for e in range(k - 2 * m, k)]
    betas = [_one()] + [p_power(e) for e in range(k - 4 * m, k - 2 * m)]
    gamma0 = alphas[0] * betas[0]
    gammas = alphas[1:] + betas[1:]
    got = Counter(g.num.degree("p") - g.den.degree("p") for g in gammas)
    want = Counter(range(k - 4 * m, k))
    norms = [
        check_normalization(SatakeParams(2 * m, tuple(alphas), k)).passed,
        check_normalization(SatakeParams(2 * m, tuple(betas), k - 2 * m)).passed,
        check_normalization(SatakeParams(4 * m, (gamma0, *gammas), k)).passed,
    ]
    ok = gamma0 == 1 and got == want and all(norms)
    details = {
        "m": m, "k": k, "gamma0": str(gamma0),
        "gamma_exponents": sorted(got.elements()),
        "normalizations": norms,
        "interpretation": "gamma_1..gamma_4m compared as the multiset {p^(k-4m), ..., p^(k-1)}",
    }
    return CheckReport("eisenstein_lift", ok, details,
                       None if ok else "gamma parameters do not match the genus-4m Eisenstein parameters")


def ikeda_family_satake(k="k", n=1, alpha="ak"):
    """beta_i = alpha(k) p^(i-k), beta_{n+i} = alpha(k)^-1 p^(k+i-1)."""
    a = _rf(var(alpha))
    betas = [p_power(-n * (n + 1) // 2, n, k)]
    betas += [a * p_power(i, -1, k) for i in range(1, n + 1)]
    betas += [a.inverse() * p_power(i - 1, 1, k) for i in range(1, n + 1)]
    return LiftParams(n, k, betas)


def family_substitution_check(n=1, k="k"):
    """Substituting at = ak p^(1/2-k) into ikeda_satake reproduces ikeda_family_satake."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        base = ikeda_satake(n, k)
    fam = ikeda_family_satake(k, n)
    at_value = _rf(var("ak")) * var("u") * p_power(0, -1, k)
    subbed = [b.subs({"at": at_value}) for b in base.betas]
    ok = all(s == f for s, f in zip(subbed, fam.betas))
    return CheckReport("family_substitution", ok, {"n": n, "betas": [str(b) for b in fam.betas]},
                       None if ok else "substituted parameters differ from the family form")


# -- Eisenstein family -----------------------------------------------------

def _is_prime(p):
    return isinstance(p, int) and p >= 2 and factorize(p) == {p: 1}


def eisenstein_family_coeff(n, k, p):
    """a_n(k) = sum of d^(k-1) over divisors d of n prime to p."""
    if not isinstance(n, int) or n < 1 or not isinstance(k, int) or k < 2 or not _is_prime(p):
        raise InvalidInput(f"need n >= 1, k >= 2 and p prime; got n={n}, k={k}, p={p}")
    f = factorize(n)
    f.pop(p, None)
    # multiplicative: prod over q^e of (1 + q^(k-1) + ... + q^(e(k-1)))
    return prod(sum(q ** (j * (k - 1)) for j in range(e + 1)) for q, e in f.items())


def kummer_check(bound, k, k2, p, m):
    """a_n(k) = a_n(k2) mod p^m for n <= bound, given k = k2 mod (p-1)p^(m-1)."""
    if not _is_prime(p) or m < 1 or k < 2 or k2 < 2:
        raise InvalidInput("need p prime, m >= 1 and weights >= 2")
    period = (p - 1) * p ** (m - 1)
    if (k - k2) % period:
        raise CongruenceHypothesisFails(f"{k} and {k2} differ mod {period}")
    mod = p ** m
    for n in range(1, bound + 1):
        a, b = eisenstein_family_coeff(n, k, p), eisenstein_family_coeff(n, k2, p)
        if (a - b) % mod:
            return CheckReport("kummer", False, {"p": p, "m": m, "k": k, "k2": k2},
                               f"a_{n}({k}) = {a} and a_{n}({k2}) = {b} differ mod {mod}")
    return CheckReport("kummer", True, {"p": p, "m": m, "k": k, "k2": k2, "bound": bound})


@dataclass
class FamilyPoint:
    k: int
    p: int
    coeffs: dict = field(default_factory=dict)
    slope: Fraction = Fraction(0)

    def to_json(self):
        return {"k": self.k, "p": self.p, "slope": str(self.slope),
                "coefficients": {str(n): c for n, c in sorted(self.coeffs.items())}}


def eisenstein_family(p, weights, bound):
    """FamilyPoints of the Eisenstein family; alpha^(1)(k) = 1 gives slope 0."""
    return [FamilyPoint(k, p, {n: eisenstein_family_coeff(n, k, p) for n in range(1, bound + 1)},
                        slope_of_value(1, p)) for k in weights]


# -- slopes ----------------------------------------------------------------

def ord_p(x, p):
    x = Fraction(x)
    if x == 0:
        raise ZeroInput("valuation of 0")
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def slope_of_quadratic(a, b, p):
    """Smallest valuation of an inverse root of 1 - aX + bX^2 (Newton polygon)."""
    if b == 0:
        raise ZeroInput("b must be nonzero")
    pts = [(0, 0), (2, ord_p(b, p))]
    if a:
        pts.insert(1, (1, ord_p(a, p)))
    return min(polygon_from_points(pts).slopes)


def slope_of_value(value, p):
    """ord_p of an explicit parameter: an integer/Fraction or a Laurent monomial in p."""
    if isinstance(value, (RationalFunction, MultiPoly)):
        v = RationalFunction.coerce(value)
        if not v:
            raise ZeroInput("zero parameter")
        if not v.num.is_monomial() or v.num.variables() not in ([], ["p"]):
            raise InvalidInput("slope_of_value needs a monomial in p")
        c = Fraction(v.num.leading_coefficient())
        return Fraction(v.p_valuation() + ord_p(c, p))
    return Fraction(ord_p(value, p))


def triple_slope(s1, s2, s3):
    return Fraction(s1) + Fraction(s2) + Fraction(s3)


def slope(p, a=None, b=None, value=None):
    """Dispatch: ``slope(p, a=..., b=...)`` or ``slope(p, value=...)``."""
    if value is not None:
        return slope_of_value(value, p)
    if a is None or b is None:
        raise InvalidInput("give a and b, or value")
    return slope_of_quadratic(a, b, p)
