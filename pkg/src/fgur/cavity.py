"""Fermionic field in a rigid cavity after a period of nonuniform acceleration.

The Bogoliubov coefficients are taken to second order in the dimensionless
acceleration ``h`` and enter every observable through three real numbers:

* ``F_plus``  -- total excitation leaking out of mode ``k``,
* ``F_minus`` -- its particle/antiparticle imbalance,
* ``re_g``    -- real part of the diagonal coefficient for mode ``k``.

All of them depend on the acceleration duration only through the phase
``E1 = exp(2 pi i u)`` and return to their inertial values ``(0, 0, 1)``
whenever ``u`` is an integer.
"""

from dataclasses import dataclass
import math
import warnings

import numpy as np

from fgur.polylog import Q
from fgur.measurement import SQRT2

PI2, PI4 = math.pi**2, math.pi**4

# Printed prefactor of the F_minus polylog term is 16 h^2 / pi^4; 8 is the
# alternative reading kept for sensitivity checks.
F_MINUS_PREFACTORS = (16, 8)


@dataclass(frozen=True)
class CavityParams:
    h: float
    k: int = 1
    s: float = 0.0
    u: float = 0.0
    f_minus_prefactor: int = 16

    def __post_init__(self):
        if not self.h > 0:
            raise ValueError(f"h must be positive, got {self.h}")
        if int(self.k) != self.k or self.k < 1:
            raise ValueError(f"k must be a positive integer, got {self.k}")
        if not 0.0 <= self.s < 1.0:
            raise ValueError(f"s must lie in [0, 1), got {self.s}")
        if self.u < 0:
            raise ValueError(f"u must be non-negative, got {self.u}")
        if self.f_minus_prefactor not in F_MINUS_PREFACTORS:
            raise ValueError(f"f_minus_prefactor must be 16 or 8, got {self.f_minus_prefactor}")
        if self.k * self.h > 0.3:
            warnings.warn(
                f"k*h = {self.k * self.h:.3g} is outside the small-acceleration regime",
                stacklevel=2,
            )

    @property
    def ks(self):
        return self.k + self.s


@dataclass(frozen=True)
class CavityGeometry:
    """Cavity of length ``L`` with its left wall at ``x1``, accelerated for proper time ``tau1``."""

    L: float
    x1: float
    tau1: float = 0.0

    def __post_init__(self):
        if not (self.L > 0 and self.x1 > 0):
            raise ValueError("cavity length and wall position must be positive")
        if self.tau1 < 0:
            raise ValueError("acceleration duration must be non-negative")

    @property
    def x2(self):
        return self.x1 + self.L

    @property
    def h(self):
        return 2 * self.L / (self.x1 + self.x2)

    @property
    def u(self):
        return self.h * self.tau1 / (4 * self.L * self.x1 * math.tanh(self.h / 2))


@dataclass(frozen=True)
class CoefficientSet:
    F_plus: float
    F_minus: float
    reG: float
    E1: complex


def e1_phase(u):
    """``exp(2 pi i u)``, reduced modulo one period first."""
    if u < 0:
        raise ValueError(f"u must be non-negative, got {u}")
    frac = math.fmod(u, 1.0)
    return complex(math.cos(2 * math.pi * frac), math.sin(2 * math.pi * frac))


def f_plus(p):
    E1 = e1_phase(p.u)
    return (4 * p.h**2 / PI4) * (4 * p.ks**2 * (Q(6, 1) - Q(6, E1)) + Q(4, 1) - Q(4, E1))


def p_polynomial(p):
    """Finite sum over odd ``m`` in ``[1, k]`` entering ``F_minus``."""
    E1 = e1_phase(p.u)
    total = 0.0
    for m in range(1, p.k + 1, 2):
        weight = 1 - (E1**m).real
        total += weight * (4 * p.ks * (p.ks / m - 1) + 1 / m**4)
    return (4 * p.h**2 / PI4) * total


def f_minus(p):
    E1 = e1_phase(p.u)
    return (p.f_minus_prefactor * p.h**2 / PI4) * 2 * p.ks * (Q(5, 1) - Q(5, E1)) + p_polynomial(p)


def re_g(p):
    E1 = e1_phase(p.u)
    inertial = 1 / 48 + PI2 * p.ks**2 / 120
    return 1 - p.h**2 * (inertial - (2 / PI4) * (4 * p.ks**2 * Q(6, E1) + Q(4, E1)))


def coefficients(p):
    return CoefficientSet(f_plus(p), f_minus(p), re_g(p), e1_phase(p.u))


def reduced_density_array(theta, phi, coeffs):
    """Mode-``k`` reduced matrices for arrays of ``(theta, phi)`` at fixed coefficients.

    The diagonal is written with ``f+ + f- = F_plus`` and ``f+ - f- = F_minus``
    eliminated in favour of the two sums; the coherence carries only
    ``re_g``.
    """
    theta, phi = np.broadcast_arrays(np.asarray(theta, dtype=float), np.asarray(phi, dtype=float))
    rho = np.zeros(theta.shape + (2, 2), dtype=complex)
    shift = coeffs.F_minus / 2 - coeffs.F_plus / 2 * np.cos(theta)
    rho[..., 0, 0] = np.cos(theta / 2) ** 2 + shift
    rho[..., 1, 1] = np.sin(theta / 2) ** 2 - shift
    rho[..., 0, 1] = 0.5 * np.sin(theta) * np.exp(-1j * phi) * coeffs.reG
    rho[..., 1, 0] = rho[..., 0, 1].conj()
    return rho


def cavity_reduced_density(state, p):
    """Reduced state of mode ``k`` in the basis ``|0_k>, |1_k>``."""
    rho = reduced_density_array(state.theta, state.phi, coefficients(p))
    diag = rho.diagonal().real
    if np.any(diag < 0) or np.any(diag > 1):
        warnings.warn(f"cavity reduced state has diagonal {diag} outside [0, 1]", stacklevel=2)
    return rho


def cavity_bound(pair, p):
    """Closed-form cavity bound of an x/z pair (``+F_minus`` for z outcome 0, ``-F_minus`` for 1)."""
    if not pair.is_xz:
        raise ValueError("closed-form bounds exist only for x/z pairs; use the optimizer")
    c = coefficients(p)
    sign = 1 if pair.second.outcome == 0 else -1
    return 0.25 * (2 + SQRT2 / 2 * (1 - c.F_plus) + sign * c.F_minus + SQRT2 / 2 * c.reG)


def period(geom):
    """Proper-time period of the bounds, ``4 L x1 tanh(h/2) / h``."""
    h = geom.h
    return 4 * geom.L * geom.x1 * math.tanh(h / 2) / h
