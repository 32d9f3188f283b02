"""Search for the maximally certain state of an outcome pair.

The left-hand side of the uncertainty relation is affine in the density
matrix, so its maximum over the convex set of states sits at an extreme
point, i.e. a pure state.  The search therefore runs over the Bloch-sphere
angles ``(theta, phi)`` only: a dense grid on ``[0, 2pi)^2`` followed by a
Nelder-Mead polish of the best grid point.
"""

from dataclasses import dataclass, field
import math

import numpy as np
from scipy.optimize import minimize

from fgur import cavity, unruh
from fgur.measurement import analytic_bound_uniform, fgur_lhs, paper_mcs_angles

TWO_PI = 2 * math.pi
DEFAULT_GRID_N = 256
MIN_GRID_N = 64
REFINE_TOL = 1e-10
_ROWS_PER_CHUNK = 64

COHERENCE_CAVEAT = (
    "only the real part of the mode-k coherence is modelled; "
    "optima away from phi = 0 may be affected by its unknown imaginary part"
)


@dataclass(frozen=True)
class McsResult:
    theta_star: float
    phi_star: float
    zeta_true: float
    zeta_paper: float | None
    zeta_grid: float
    paper_theta: float | None = None
    notes: tuple = field(default_factory=tuple)

    @property
    def gap(self):
        if self.zeta_paper is None:
            return None
        return self.zeta_true - self.zeta_paper

    @property
    def theta_deviation(self):
        """Angular distance of ``theta_star`` from the fixed angle behind ``zeta_paper``."""
        if self.paper_theta is None:
            return None
        return angular_distance(self.theta_star, self.paper_theta)


def angular_distance(a, b):
    d = math.fmod(abs(a - b), TWO_PI)
    return min(d, TWO_PI - d)


def canonical_angles(theta, phi):
    """Map ``(theta, phi)`` into ``[0, 2pi)^2`` preferring the representative with ``cos(phi) >= 0``.

    ``(theta, phi)`` and ``(2pi - theta, phi + pi)`` describe the same ray.
    """
    theta, phi = theta % TWO_PI, phi % TWO_PI
    if math.cos(phi) < 0:
        theta, phi = (TWO_PI - theta) % TWO_PI, (phi - math.pi) % TWO_PI
    return theta, phi


def grid_search(objective, grid_n):
    """Best point of ``objective`` on an ``grid_n x grid_n`` grid.

    Ties go to the smallest ``theta``, then the smallest ``phi``.
    """
    if grid_n < MIN_GRID_N:
        raise ValueError(f"grid_n must be at least {MIN_GRID_N}, got {grid_n}")
    angles = TWO_PI * np.arange(grid_n) / grid_n
    best_val, best_idx = -np.inf, None
    for start in range(0, grid_n, _ROWS_PER_CHUNK):
        th = angles[start : start + _ROWS_PER_CHUNK, None]
        vals = objective(th, angles[None, :])
        i = int(np.argmax(vals))
        if vals.flat[i] > best_val:
            best_val = float(vals.flat[i])
            best_idx = (start + i // grid_n, i % grid_n)
    return float(angles[best_idx[0]]), float(angles[best_idx[1]]), best_val


def maximize(objective, grid_n=DEFAULT_GRID_N, tol=REFINE_TOL):
    """Maximise a vectorised ``objective(theta, phi)`` over the Bloch sphere.

    Returns ``(theta, phi, value, grid_value)``.
    """
    theta0, phi0, grid_val = grid_search(objective, grid_n)
    step = TWO_PI / grid_n
    simplex = np.array([[theta0, phi0], [theta0 + step, phi0], [theta0, phi0 + step]])
    res = minimize(
        lambda x: -float(objective(x[0], x[1])),
        np.array([theta0, phi0]),
        method="Nelder-Mead",
        options={"initial_simplex": simplex, "xatol": 1e-12, "fatol": tol * 1e-3, "maxiter": 20000},
    )
    theta, phi, val = float(res.x[0]), float(res.x[1]), -float(res.fun)
    if val < grid_val:
        theta, phi, val = theta0, phi0, grid_val
    theta, phi = canonical_angles(theta, phi)
    return theta, phi, val, grid_val


def uniform_objective(pair, params, weights=(0.5, 0.5)):
    def objective(theta, phi):
        rho = unruh.reduced_density_array(theta, phi, params.r, params.q_L)
        return fgur_lhs(pair, rho, weights)

    return objective


def cavity_objective(pair, params, weights=(0.5, 0.5)):
    coeffs = cavity.coefficients(params)

    def objective(theta, phi):
        return fgur_lhs(pair, cavity.reduced_density_array(theta, phi, coeffs), weights)

    return objective


def maximize_uniform(pair, params, grid_n=DEFAULT_GRID_N, weights=(0.5, 0.5)):
    """Maximally certain state for the uniformly accelerated observer.

    ``zeta_paper`` is the closed-form bound (fixed MCS angles); it is ``None``
    for pairs involving the y basis, which have no closed form.
    """
    theta, phi, val, grid_val = maximize(uniform_objective(pair, params, weights), grid_n)
    zeta_paper = paper_theta = None
    if pair.is_xz and tuple(weights) == (0.5, 0.5):
        zeta_paper = analytic_bound_uniform(pair, params)
        paper_theta = paper_mcs_angles(pair)[0]
    return McsResult(theta, phi, val, zeta_paper, grid_val, paper_theta)


def maximize_cavity(pair, params, grid_n=DEFAULT_GRID_N, weights=(0.5, 0.5)):
    """Maximally certain state for the observer inside the accelerated cavity."""
    theta, phi, val, grid_val = maximize(cavity_objective(pair, params, weights), grid_n)
    zeta_paper = paper_theta = None
    if pair.is_xz and tuple(weights) == (0.5, 0.5):
        zeta_paper = cavity.cavity_bound(pair, params)
        paper_theta = paper_mcs_angles(pair)[0]
    return McsResult(theta, phi, val, zeta_paper, grid_val, paper_theta, notes=(COHERENCE_CAVEAT,))
