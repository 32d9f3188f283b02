"""
The inertial fine-grained bound
===============================

For an unaccelerated observer every x/z outcome pair has the same
certainty bound, (2 + sqrt(2)) / 4.  Here we evaluate it from the closed
form and by a direct maximisation over the Bloch sphere.
"""

import math

from fgur import UnruhParams, XZ_PAIRS, analytic_bound_uniform, maximize_uniform

inertial = UnruhParams(r=0.0, q_L=0.0)
print(f"target (2 + sqrt2)/4 = {(2 + math.sqrt(2)) / 4:.12f}")

# closed form, then the numerical maximum and the state that reaches it
for pair in XZ_PAIRS:
    res = maximize_uniform(pair, inertial, grid_n=128)
    print(f"pair {pair.code}: closed form {analytic_bound_uniform(pair, inertial):.12f}"
          f"  optimum {res.zeta_true:.12f} at theta={res.theta_star:.6f}, phi={res.phi_star:.3f}")
