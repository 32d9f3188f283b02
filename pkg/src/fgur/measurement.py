"""Projective measurements in the qubit mutually unbiased bases.

Measurements act on the particle sector only.  On the 4x4 wedge-I states of
:mod:`fgur.unruh` a qubit projector ``P`` is applied as ``P (x) 1`` on the
antiparticle factor; on the 2x2 cavity-mode states it is applied directly.
"""

from dataclasses import dataclass
from enum import Enum
import math

import numpy as np

TRACE_TOL = 1e-8
SQRT2 = math.sqrt(2.0)


class Basis(Enum):
    X = "x"
    Y = "y"
    Z = "z"


_EIGENVECTORS = {
    (Basis.Z, 0): np.array([1, 0], dtype=complex),
    (Basis.Z, 1): np.array([0, 1], dtype=complex),
    (Basis.X, 0): np.array([1, 1], dtype=complex) / SQRT2,
    (Basis.X, 1): np.array([1, -1], dtype=complex) / SQRT2,
    (Basis.Y, 0): np.array([1, 1j], dtype=complex) / SQRT2,
    (Basis.Y, 1): np.array([1, -1j], dtype=complex) / SQRT2,
}


@dataclass(frozen=True)
class MeasurementSetting:
    basis: Basis
    outcome: int

    def __post_init__(self):
        if self.outcome not in (0, 1):
            raise ValueError(f"outcome must be 0 or 1, got {self.outcome!r}")
        if not isinstance(self.basis, Basis):
            object.__setattr__(self, "basis", Basis(self.basis))

    def projector(self):
        v = _EIGENVECTORS[(self.basis, self.outcome)]
        return np.outer(v, v.conj())


@dataclass(frozen=True)
class OutcomePair:
    """Two measurement settings in distinct bases, e.g. ``(0^x, 1^z)``."""

    first: MeasurementSetting
    second: MeasurementSetting

    def __post_init__(self):
        if self.first.basis == self.second.basis:
            raise ValueError("the two settings of a pair must use different bases")

    @classmethod
    def xz(cls, x_outcome, z_outcome):
        return cls(MeasurementSetting(Basis.X, x_outcome), MeasurementSetting(Basis.Z, z_outcome))

    @classmethod
    def from_code(cls, code):
        """``"01"`` -> ``(0^x, 1^z)``; the first digit is the x outcome."""
        if len(code) != 2 or any(ch not in "01" for ch in code):
            raise ValueError(f"pair code must be one of 00, 01, 10, 11, got {code!r}")
        return cls.xz(int(code[0]), int(code[1]))

    @property
    def is_xz(self):
        return self.first.basis is Basis.X and self.second.basis is Basis.Z

    @property
    def code(self):
        if not self.is_xz:
            raise ValueError("only x/z pairs have a two-digit code")
        return f"{self.first.outcome}{self.second.outcome}"

    @property
    def settings(self):
        return (self.first, self.second)


XZ_PAIRS = tuple(OutcomePair.from_code(c) for c in ("00", "01", "10", "11"))

# Maximally certain states used for the closed-form bounds (phi = 0).
# (1^x,0^z) and (0^x,1^z) use the reflections theta -> -theta of the
# (0^x,0^z) and (1^x,1^z) angles; both families are then pairwise degenerate.
_FIXED_MCS_THETA = {
    "00": math.pi / 4,
    "10": 7 * math.pi / 4,
    "01": 3 * math.pi / 4,
    "11": 5 * math.pi / 4,
}


def paper_mcs_angles(pair):
    """Fixed ``(theta, phi)`` at which the closed-form bounds are evaluated."""
    return _FIXED_MCS_THETA[pair.code], 0.0


def _lift(projector, dim):
    if dim == 2:
        return projector
    if dim == 4:
        return np.kron(projector, np.eye(2))
    raise ValueError(f"reduced states must be 2x2 or 4x4, got {dim}x{dim}")


def probability(setting, rho):
    """Outcome probability ``tr[(P (x) 1) rho]``; broadcasts over leading axes of ``rho``."""
    rho = np.asarray(rho)
    if rho.ndim < 2 or rho.shape[-1] != rho.shape[-2]:
        raise ValueError(f"rho must be square, got shape {rho.shape}")
    tr = np.trace(rho, axis1=-2, axis2=-1)
    if np.any(np.abs(tr - 1) > TRACE_TOL):
        raise ValueError("rho must have unit trace")
    P = _lift(setting.projector(), rho.shape[-1])
    p = np.einsum("ij,...ji->...", P, rho).real
    return float(p) if p.ndim == 0 else p


def fgur_lhs(pair, rho, weights=(0.5, 0.5)):
    """Weighted sum of the outcome probabilities of ``pair`` on ``rho``."""
    w1, w2 = weights
    return w1 * probability(pair.first, rho) + w2 * probability(pair.second, rho)


def analytic_bound_uniform(pair, params):
    """Closed-form uncertainty bound of an x/z pair for the accelerated observer.

    Pairs with z outcome 0 share one expression and pairs with z outcome 1
    the other; both are the FGUR left-hand side at :func:`paper_mcs_angles`.
    """
    if not pair.is_xz:
        raise ValueError("closed-form bounds exist only for x/z pairs; use the optimizer")
    c, s = math.cos(params.r), math.sin(params.r)
    q_R, q_L = params.q_R, params.q_L
    h = SQRT2 / 2
    if pair.second.outcome == 0:
        return 0.25 * (c**2 * (1 + q_L**2 + h * q_R**2) + h * q_R * c + 1)
    return 0.25 * ((1 + h * c**2) * q_R**2 + (1 + q_L**2) * s**2 + h * q_R * c + 1)


def analytic_probability_uniform(setting, state, params):
    """Closed-form x/z outcome probabilities for the accelerated observer.

    Written directly in terms of the input angles, without building the
    reduced state.
    """
    c, s = math.cos(params.r), math.sin(params.r)
    q_R, q_L = params.q_R, params.q_L
    C2, S2 = math.cos(state.theta / 2) ** 2, math.sin(state.theta / 2) ** 2
    coherence = math.cos(state.theta / 2) * math.sin(state.theta / 2) * math.cos(state.phi) * q_R * c
    if setting.basis is Basis.Z:
        if setting.outcome == 0:
            return c**2 * (C2 + S2 * q_L**2)
        return C2 * s**2 + S2 * (q_R**2 + q_L**2 * s**2)
    if setting.basis is Basis.X:
        return 0.5 + coherence if setting.outcome == 0 else 0.5 - coherence
    raise ValueError("closed-form probabilities exist only for the x and z bases")
