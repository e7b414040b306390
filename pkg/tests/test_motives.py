from collections import Counter
from fractions import Fraction
from math import pi, sqrt

import numpy as np
import pytest
import sympy
from hypothesis import given, strategies as st

from heckelab.motives import (
    HodgeType, InvalidWeights, NegativeOrder, PoleAt, WeightTooSmall, check_lift_hodge, critical_values,
    duplication_errors, gamma_c, gamma_data, gamma_numeric, gamma_r, hodge_spin, hodge_standard, hodge_tensor,
    padic_admissibility,
)

k, l = sympy.symbols("k l")


def ms(pairs):
    return Counter((sympy.expand(a), sympy.expand(b)) for a, b in pairs)


def test_hodge_spin_examples():
    h = hodge_spin(2, k)
    assert h.multiset() == ms([(0, 2 * k - 3), (k - 2, k - 1), (k - 1, k - 2), (2 * k - 3, 0)])
    assert hodge_spin(1, k).multiset() == ms([(0, k - 1), (k - 1, 0)])
    for n in range(1, 5):
        h = hodge_spin(n, 20)
        assert h.rank == 2 ** n
        assert all(a + b == 20 * n - n * (n + 1) // 2 for a, b in h.pairs)
    with pytest.raises(WeightTooSmall):
        hodge_spin(3, 3)


@given(st.integers(1, 5), st.integers(6, 40))
def test_hodge_spin_symmetry(n, wt):
    h = hodge_spin(n, wt)
    assert h.multiset() == Counter((b, a) for a, b in h.pairs)
    assert sum(a - b for a, b in h.pairs) == 0


def test_hodge_standard():
    assert hodge_standard(1, k).multiset() == ms([(0, 0), (-k + 1, k - 1), (k - 1, -k + 1)])
    h = hodge_standard(3, 10)
    assert h.rank == 7 and all(a + b == 0 for a, b in h.pairs)


def test_hodge_tensor_genus2():
    t = hodge_tensor(hodge_spin(2, k), hodge_spin(2, l))
    assert t.rank == 16
    expected = ms([
        (0, 2 * k + 2 * l - 6), (l - 2, 2 * k + l - 4), (l - 1, 2 * k + l - 5), (2 * l - 3, 2 * k - 3),
        (k - 2, k + 2 * l - 4), (k + l - 4, k + l - 2), (k + l - 3, k + l - 3), (k + 2 * l - 5, k - 1),
        (k - 1, k + 2 * l - 5), (k + l - 3, k + l - 3), (k + l - 2, k + l - 4), (k + 2 * l - 4, k - 2),
        (2 * k - 3, 2 * l - 3), (2 * k + l - 5, l - 1), (2 * k + l - 4, l - 2), (2 * k + 2 * l - 6, 0),
    ])
    assert t.multiset() == expected
    assert t.multiset()[(k + l - 3, k + l - 3)] == 2
    unit = HodgeType([(0, 0)], 0)
    assert hodge_tensor(hodge_spin(2, k), unit) == hodge_spin(2, k)


def test_hodge_type_invariants():
    with pytest.raises(ValueError):
        HodgeType([(1, 2), (2, 2)], 3)
    with pytest.raises(ValueError):
        HodgeType([(1, 2)], 3, rank=2)


@pytest.mark.parametrize("m,wt", [(1, wt) for wt in range(5, 13)] + [(2, wt) for wt in range(9, 14)])
def test_check_lift_hodge(m, wt):
    rep = check_lift_hodge(m, wt)
    assert rep.passed and rep.details["rank"] == 2 ** (4 * m)


def test_check_lift_hodge_too_small():
    with pytest.raises(WeightTooSmall):
        check_lift_hodge(1, 4)


def test_gamma_data_examples():
    g = gamma_data("spin_n3", [12])
    assert g.c_shifts == [0, 9, 10, 11] and g.center == 31
    g = gamma_data("spin_n4", [14])
    assert g.c_shifts == [0, 10, 11, 12, 13, 21, 22, 23] and g.center == 47
    g = gamma_data("triple", [10, 8, 6])
    assert g.c_shifts == [0, 5, 7, 9] and g.center == 22
    g = gamma_data("tensor_g2", [12, 8])
    assert g.center == 35 and len(g.c_shifts) == 8 and g.r_shifts
    for kind, w in [("spin_n3", [4]), ("spin_n4", [5]), ("tensor_g2", [8, 8]), ("triple", [1, 2, 3]),
                    ("triple", [4, 4]), ("unknown", [12])]:
        with pytest.raises(InvalidWeights):
            gamma_data(kind, w)


def test_critical_values_examples():
    assert critical_values(gamma_data("spin_n3", [12])) == list(range(12, 20))
    for wt in range(6, 20):
        assert critical_values(gamma_data("spin_n3", [wt])) == list(range(wt, 2 * wt - 4))
    for a in range(5, 14):
        for b in range(3, a - 1):
            assert critical_values(gamma_data("tensor_g2", [a, b])) == []
    assert critical_values(gamma_data("triple", [10, 8, 6])) == [10, 11, 12]


@given(st.sampled_from(["spin_n3", "spin_n4", "triple"]), st.integers(6, 30), st.integers(2, 30), st.integers(2, 30))
def test_critical_values_symmetric(kind, a, b, c):
    w = [a] if kind != "triple" else sorted([a, b, c], reverse=True)
    g = gamma_data(kind, w)
    crit = critical_values(g)
    assert sorted(g.center - s for s in crit) == crit


def test_gamma_numeric_examples():
    assert gamma_c(1) == pytest.approx(1 / pi, rel=1e-14)
    assert gamma_r(1) == pytest.approx(1, rel=1e-14)
    assert gamma_numeric(2, "R") == pytest.approx(1 / pi, rel=1e-14)
    with pytest.raises(PoleAt):
        gamma_c(0)
    with pytest.raises(PoleAt):
        gamma_r(-2)
    assert gamma_r(-1) == pytest.approx(-2 * sqrt(pi) * pi ** 0.5, rel=1e-12)


def test_duplication_and_recurrence():
    s = 0.5 + 1j * np.linspace(-20, 20, 101)
    assert duplication_errors(s).max() <= 1e-10
    for z in [0.3 + 2j, 1.7 - 0.5j, 4.2 + 7j]:
        ratio = gamma_c(z + 1) * 2 * pi / (z * gamma_c(z))
        assert abs(ratio - 1) < 1e-10


def test_admissibility():
    assert padic_admissibility(0).kind == "bounded"
    r = padic_admissibility(1)
    assert r.kind == "log-growth" and r.h == 3
    assert padic_admissibility(Fraction(1, 2)).h == 2
    assert padic_admissibility("3/4").h == 2
    with pytest.raises(NegativeOrder):
        padic_admissibility(-1)
