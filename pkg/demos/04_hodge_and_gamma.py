"""
Hodge types, gamma factors, critical values
===========================================
"""

import numpy as np
import sympy

from heckelab.motives import (
    check_lift_hodge, critical_values, duplication_errors, gamma_c, gamma_data, hodge_spin, hodge_tensor,
    padic_admissibility,
)

k, l = sympy.symbols("k l")
print(hodge_spin(2, k).pairs)

# rank-16 tensor of two genus-2 spinor types; (k+l-3, k+l-3) appears twice
t = hodge_tensor(hodge_spin(2, k), hodge_spin(2, l))
for pq, mult in sorted(t.multiset().items(), key=str):
    print(pq, mult)

# the lifting check is a multiset identity
for m, wt in [(1, 8), (2, 12)]:
    print(m, wt, check_lift_hodge(m, wt).passed)

# critical strips
print(critical_values(gamma_data("spin_n3", [12])))
print(critical_values(gamma_data("tensor_g2", [12, 8])))
print(critical_values(gamma_data("triple", [10, 8, 6])))

# numeric gamma: Gamma_C(1) = 1/pi and the duplication formula
print(gamma_c(1), 1 / np.pi)
s = 0.5 + 1j * np.linspace(-20, 20, 9)
print(duplication_errors(s))

print(padic_admissibility(0), padic_admissibility(1))
