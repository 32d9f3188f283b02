"""Unruh states beyond the single-mode approximation.

Two independent routes lead to the reduced state seen by a uniformly
accelerated observer in wedge I:

* :func:`reduced_density_oracle` builds the 16-dimensional Fock vector of the
  input qubit, forms the projector and traces out wedge II numerically;
* :func:`reduced_density_analytic` fills in the closed-form 4x4 matrix.

The analytic route never calls into :mod:`fgur.fock`, so agreement between
the two is a genuine cross-check of the sign conventions.
"""

from dataclasses import dataclass
import math

import numpy as np

from fgur import fock

R_MAX = math.pi / 4


@dataclass(frozen=True)
class UnruhParams:
    """Acceleration parameter ``r`` (``tan r = exp(-pi omega / a)``) and Unruh-mode weight ``q_L``.

    ``q_R`` is fixed by ``q_R**2 + q_L**2 = 1`` with ``q_R >= 0``.
    """

    r: float
    q_L: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.r <= R_MAX + 1e-15:
            raise ValueError(f"r must lie in [0, pi/4], got {self.r}")
        if not 0.0 <= self.q_L <= 1.0:
            raise ValueError(f"q_L must lie in [0, 1], got {self.q_L}")

    @property
    def q_R(self):
        return math.sqrt(max(0.0, 1.0 - self.q_L**2))


@dataclass(frozen=True)
class BlochState:
    """``cos(theta/2)|0> + exp(i phi) sin(theta/2)|1>``."""

    theta: float
    phi: float = 0.0

    @property
    def amplitudes(self):
        return (
            complex(math.cos(self.theta / 2)),
            complex(math.cos(self.phi), math.sin(self.phi)) * math.sin(self.theta / 2),
        )

    def vector(self):
        return np.array(self.amplitudes)

    def density(self):
        v = self.vector()
        return np.outer(v, v.conj())


def unruh_vacuum(params):
    """Unruh vacuum of a single frequency as a Fock vector."""
    c, s = math.cos(params.r), math.sin(params.r)
    return (
        c**2 * fock.ket("0000")
        - s**2 * fock.ket("1111")
        + s * c * (fock.ket("1100") - fock.ket("0011"))
    )


def unruh_one_particle(params):
    """First particle excitation of the Unruh vacuum."""
    c, s = math.cos(params.r), math.sin(params.r)
    return params.q_R * (c * fock.ket("1000") - s * fock.ket("1011")) + params.q_L * (
        s * fock.ket("1101") + c * fock.ket("0001")
    )


def rindler_annihilators(r):
    """Right and left Unruh-mode particle annihilators ``(C_R, C_L)`` as 16x16 matrices.

    ``C_R = cos r c_I - sin r d_II^dag`` and ``C_L = cos r c_II - sin r d_I^dag``
    with ``c`` the particle and ``d`` the antiparticle operators.
    """
    c, s = math.cos(r), math.sin(r)
    C_R = c * fock.annihilation_matrix(1) - s * fock.creation_matrix(2)
    C_L = c * fock.annihilation_matrix(4) - s * fock.creation_matrix(3)
    return C_R, C_L


def unruh_creator(params):
    """``q_R C_R^dag + q_L C_L^dag``, mapping the Unruh vacuum to its first excitation.

    Both ``C_R`` and ``C_L`` annihilate :func:`unruh_vacuum`; the combination
    ``q_R C_R^dag + q_L C_L`` (annihilator in the left sector) would not
    produce :func:`unruh_one_particle`.
    """
    C_R, C_L = rindler_annihilators(params.r)
    return params.q_R * C_R.T + params.q_L * C_L.T


def rindler_state(state, params):
    """Fock vector of the qubit ``state`` as described in the Rindler frame."""
    a0, a1 = state.amplitudes
    return a0 * unruh_vacuum(params) + a1 * unruh_one_particle(params)


def reduced_density_oracle(state, params, ordering=fock.Ordering.PHYSICAL):
    """Wedge-I reduced state obtained by brute force in the Fock space."""
    psi = rindler_state(state, params)
    return fock.partial_trace_wedge_II(fock.outer_product(psi, psi), ordering=ordering)


def reduced_density_array(theta, phi, r, q_L):
    """Closed-form wedge-I reduced matrices, broadcasting over all four arguments.

    Returns an array of shape ``broadcast_shape + (4, 4)`` in the basis
    ``|n1 n3>_I`` = ``|00>, |01>, |10>, |11>`` (particle, antiparticle).
    """
    theta, phi, r, q_L = np.broadcast_arrays(*(np.asarray(x, dtype=float) for x in (theta, phi, r, q_L)))
    q_R = np.sqrt(np.clip(1.0 - q_L**2, 0.0, None))
    c, s = np.cos(r), np.sin(r)
    C2, S2 = np.cos(theta / 2) ** 2, np.sin(theta / 2) ** 2
    CS = np.cos(theta / 2) * np.sin(theta / 2)
    e = np.exp(1j * phi)

    rho = np.zeros(theta.shape + (4, 4), dtype=complex)
    rho[..., 0, 0] = C2 * c**4 + S2 * q_L**2 * c**2
    rho[..., 3, 3] = C2 * s**4 + S2 * q_R**2 * s**2
    rho[..., 1, 1] = C2 * s**2 * c**2
    rho[..., 2, 2] = C2 * s**2 * c**2 + S2 * q_R**2 * c**2 + S2 * q_L**2 * s**2
    rho[..., 0, 1] = -e * CS * q_L * s * c**2
    rho[..., 0, 2] = e.conj() * CS * q_R * c**3
    rho[..., 0, 3] = -S2 * q_R * q_L * s * c
    rho[..., 1, 3] = e.conj() * CS * q_R * s**2 * c
    rho[..., 2, 3] = e * CS * q_L * s**3
    for i, j in ((0, 1), (0, 2), (0, 3), (1, 3), (2, 3)):
        rho[..., j, i] = rho[..., i, j].conj()
    return rho


def reduced_density_analytic(state, params):
    """Closed-form wedge-I reduced state (4x4)."""
    return reduced_density_array(state.theta, state.phi, params.r, params.q_L)
