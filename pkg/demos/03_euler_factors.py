"""
Spherical map and Euler factors
===============================
"""

from heckelab.algebra import var
from heckelab.hecke import (
    HeckeElement, SatakeParams, andrianov_E3, check_normalization, dirichlet_from_euler, eisenstein_params,
    generator_images, omega_tp_delta, spherical_image, spinor_factor, standard_factor_cleared, triple_factor,
)

# Images of the genus-2 generators.  T1 is solved from the spinor polynomial.
for name, img in generator_images(2).items():
    print(name, "->", img)

# Omega is a ring homomorphism, so T(p^2) can be written through generators
T = HeckeElement.generator(2, "T")
print(spherical_image(T * T) - omega_tp_delta(2, 2))

# Euler factors from symbolic Satake parameters
sp = SatakeParams.symbolic(2)
print("spinor:", spinor_factor(sp))
R, m = standard_factor_cleared(sp)
print("standard * prod(alpha):", R, " / ", m)

X = var("X")
F = triple_factor((var("x0"), var("x1")), (var("y0"), var("y1")), (var("x2"), var("y2")))
print("triple degree:", F.num.degree("X"))

# Eisenstein parameters satisfy the normalization exactly, also for symbolic k
for k in (10, "k"):
    print(k, check_normalization(eisenstein_params(2, k)).passed)

# Genus 3: only the abstract numerator of the Hecke series
print(andrianov_E3())

# Dirichlet coefficients of a genus-1 Euler product at p = 2
x0, x1 = var("x0"), var("x1")
D = dirichlet_from_euler({2: (1 - x0 * X) * (1 - x0 * x1 * X)}, 16)
for h in (1, 2, 4, 8, 16):
    print(h, D[h])
