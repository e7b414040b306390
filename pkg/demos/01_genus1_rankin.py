"""
Genus 1: the tensor Hecke series in closed form
===============================================

Sum Omega(T(p^d)) (x) Omega(T(p^d)) X^d over d, simplify it, and read the
denominator back as a polynomial in Hecke operators.
"""

from heckelab.algebra import var
from heckelab.rankin import (
    combine_extract, genus1_operator_form_check, rankin_pipeline, series_expansion, tensor_series_genus1,
)

# The series collapses to a single rational function in X.
closed = tensor_series_genus1(4)
print("numerator:  ", closed.num)
print("denominator:", closed.den)

# The same code path used for genus 2 gives R = 1 and a degree-4 S.
dec = combine_extract(1)
print("R =", dec.R)
print("deg S =", dec.S.degree("X"))

# Reconstruct every coefficient of S as a tensor Hecke element.
res = rankin_pipeline(1)
for d, c in enumerate(res.S.coefficients()):
    print(f"s_{d} =", c)

# Omega (x) Omega of the operator identity against the closed form.
print(genus1_operator_form_check().passed)

# A wrong X^3 coefficient is caught at X^3.
print(genus1_operator_form_check(perturb_x3=1).mismatch)

# Expanding the rational form recovers Omega(T(p)) (x) Omega(T(p)) at X^1.
x0, x1, y0, y1 = var("x0"), var("x1"), var("y0"), var("y1")
expansion = series_expansion(dec, 3)
print(expansion[1] == x0 * y0 * (1 + x1) * (1 + y1))
