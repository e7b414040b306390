import random
import warnings
from fractions import Fraction
from math import gcd

import pytest

from heckelab.algebra import RationalFunction, var
from heckelab.hecke import p_power
from heckelab.lifts import (
    CongruenceHypothesisFails, InvalidInput, ZeroInput, eisenstein_family, eisenstein_family_coeff,
    eisenstein_lift_evidence, family_substitution_check, hecke_quadratic_check, ikeda_family_satake, ikeda_satake,
    kummer_check, slope, slope_of_quadratic, triple_slope, verify_ikeda_standard,
)
from heckelab.motives import WeightTooSmall

p, u, at, X = var("p"), var("u"), var("at"), var("X")


def test_ikeda_satake_n1():
    lp = ikeda_satake(1, "k")
    assert lp.betas[0] == var("pk") / p
    assert lp.betas[1] == at * u
    assert lp.betas[2] == RationalFunction(u, at)
    assert lp.invariants() == (True, True)
    assert lp.betas[1] * lp.betas[2] == p


def test_ikeda_satake_invariants():
    for n in (1, 2, 3):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            lp = ikeda_satake(n, 2 * n + 2)
        assert lp.genus == 2 * n and len(lp.betas) == 2 * n + 1
        assert all(lp.invariants())
    lp = ikeda_satake(2, 12)
    assert lp.betas[0] == p ** (2 * 12 - 3)


def test_ikeda_hypothesis_warning():
    with pytest.warns(UserWarning):
        ikeda_satake(2, 11)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        ikeda_satake(2, 12)


def test_hecke_quadratic():
    rep = hecke_quadratic_check()
    assert rep.passed
    assert rep.details["X2"] == str(p_power(-1, 2, "k"))
    rep = hecke_quadratic_check(k=6)
    assert rep.passed and rep.details["X2"] == str(RationalFunction.coerce(p ** 11))


def test_hecke_quadratic_at_one():
    # at = 1: the quadratic is a perfect square
    half = p ** 5 * u
    lhs = (1 - half * X) * (1 - half * X)
    assert lhs == 1 - 2 * half * X + p ** 11 * X ** 2


@pytest.mark.parametrize("n", [1, 2, 3])
def test_verify_ikeda_standard(n):
    rep = verify_ikeda_standard(n)
    assert rep.passed and rep.details["exponents_match"]
    assert rep.details["degree"] == 4 * n + 1
    assert verify_ikeda_standard(n, k=n + 10 if n % 2 == 0 else n + 9).passed


def test_verify_ikeda_standard_miyawaki():
    rep = verify_ikeda_standard(1, miyawaki=True)
    assert rep.passed and "caveat" in rep.details


def test_verify_ikeda_standard_perturbed():
    rep = verify_ikeda_standard(1, perturb={2: p})
    assert not rep.passed and "X^1" in rep.mismatch


def test_eisenstein_lift_evidence():
    rep = eisenstein_lift_evidence(1, 8)
    assert rep.passed and rep.details["gamma_exponents"] == [4, 5, 6, 7]
    assert rep.details["gamma0"] == "1"
    for m, wt in [(1, 10), (2, 12)]:
        assert eisenstein_lift_evidence(m, wt).passed
    with pytest.raises(WeightTooSmall):
        eisenstein_lift_evidence(1, 4)


def test_ikeda_family():
    lp = ikeda_family_satake("k", 1)
    ak = var("ak")
    assert lp.betas[1] == ak * p / var("pk")
    assert lp.betas[2] == RationalFunction(var("pk"), ak)
    assert all(lp.invariants())
    for n in (1, 2, 3):
        assert all(ikeda_family_satake("k", n).invariants())
        assert family_substitution_check(n).passed


def test_eisenstein_family_coeff():
    assert eisenstein_family_coeff(1, 12, 7) == 1
    assert eisenstein_family_coeff(6, 2, 7) == 12
    assert eisenstein_family_coeff(7, 5, 7) == 1
    assert eisenstein_family_coeff(49, 5, 7) == 1
    for n in range(1, 40):
        direct = sum(d ** 3 for d in range(1, n + 1) if n % d == 0 and d % 5)
        assert eisenstein_family_coeff(n, 4, 5) == direct
    with pytest.raises(InvalidInput):
        eisenstein_family_coeff(0, 4, 5)
    with pytest.raises(InvalidInput):
        eisenstein_family_coeff(3, 4, 6)


def test_eisenstein_family_multiplicative():
    for a in range(1, 101):
        for b in range(1, 100 // a + 1):
            if gcd(a, b) == 1:
                assert eisenstein_family_coeff(a * b, 6, 5) == eisenstein_family_coeff(a, 6, 5) * eisenstein_family_coeff(b, 6, 5)


def test_kummer_examples():
    assert eisenstein_family_coeff(2, 2, 5) == 3 and eisenstein_family_coeff(2, 6, 5) == 33
    assert kummer_check(2, 2, 6, 5, 1).passed
    assert kummer_check(30, 8, 8, 7, 3).passed
    with pytest.raises(CongruenceHypothesisFails):
        kummer_check(10, 2, 3, 5, 1)


def test_kummer_random():
    rng = random.Random(7)
    for _ in range(10):
        q = rng.choice([3, 5, 7])
        m = rng.randint(1, 2)
        k = rng.randint(2, 12)
        k2 = k + rng.randint(1, 3) * (q - 1) * q ** (m - 1)
        assert kummer_check(50, k, k2, q, m).passed


def test_kummer_modulus_follows_period():
    # 2 = 6 mod 4 gives a congruence mod 5 only; mod 25 needs the period 20
    assert (eisenstein_family_coeff(2, 2, 5) - eisenstein_family_coeff(2, 6, 5)) % 25
    with pytest.raises(CongruenceHypothesisFails):
        kummer_check(10, 2, 6, 5, 2)
    assert kummer_check(50, 2, 22, 5, 2).passed


def test_slopes():
    tau7 = -7 * 2392
    assert tau7 == -16744
    assert slope(7, a=tau7, b=7 ** 11) == 1
    assert slope_of_quadratic(0, 7 ** 11, 7) == Fraction(11, 2)
    assert slope(7, value=1) == 0
    assert slope(5, value=p ** 3) == 3
    assert triple_slope(1, 0, 2) == 3
    for pt in eisenstein_family(5, [4, 8, 12], 20):
        assert pt.slope == 0 and pt.coeffs[1] == 1
    with pytest.raises(ZeroInput):
        slope(7, a=1, b=0)
    with pytest.raises(ZeroInput):
        slope(7, value=0)
    with pytest.raises(InvalidInput):
        slope(7, a=1)
