"""
Lifts and p-adic families
=========================

Satake parameters of Ikeda lifts with a symbolic root at and u = sqrt(p),
then the Eisenstein family and a couple of slopes.
"""

from heckelab.lifts import (
    eisenstein_family, eisenstein_lift_evidence, family_substitution_check, hecke_quadratic_check,
    ikeda_satake, kummer_check, slope, verify_ikeda_standard,
)

print(ikeda_satake(2, 12).betas)
print(hecke_quadratic_check().details)

for n in (1, 2, 3):
    rep = verify_ikeda_standard(n)
    print(n, rep.passed, rep.details["exponents"])

# a perturbed parameter breaks the identity at the first coefficient
print(verify_ikeda_standard(1, perturb={2: 7}).mismatch)

print(eisenstein_lift_evidence(1, 8).details)
print(family_substitution_check(2).passed)

for pt in eisenstein_family(5, [2, 6], 8):
    print(pt.k, pt.coeffs, pt.slope)

print(kummer_check(50, 2, 22, 5, 2).passed)

# Ramanujan Delta at p = 7: tau(7) = -7 * 2392
print(slope(7, a=-7 * 2392, b=7 ** 11))
