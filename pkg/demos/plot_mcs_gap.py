"""
How certain is the fixed-angle state?
=====================================

The closed-form bounds assume the state at theta = pi/4 stays optimal under
acceleration.  A numerical maximisation shows the true optimum drifting
away, with a small positive gap.
"""

import math

import numpy as np

from fgur import OutcomePair, UnruhParams, maximize_uniform

pair = OutcomePair.from_code("00")
print(f"{'r':>6} {'theta*':>10} {'closed form':>12} {'optimum':>12} {'gap':>10}")
for r in np.linspace(0, math.pi / 4, 6):
    res = maximize_uniform(pair, UnruhParams(float(r), 0.0), grid_n=128)
    print(f"{r:6.3f} {res.theta_star:10.6f} {res.zeta_paper:12.8f} {res.zeta_true:12.8f} {res.gap:10.2e}")
