"""Four-mode fermionic Fock space.

Kets are labelled by occupation bitstrings ``|n1 n2 n3 n4>`` with the slot
meaning

    slot 1 : wedge-I particle       (I+)
    slot 2 : wedge-II antiparticle  (II-)
    slot 3 : wedge-I antiparticle   (I-)
    slot 4 : wedge-II particle      (II+)

A ket is the operator string ``(a1^dag)^n1 (a2^dag)^n2 (a3^dag)^n3 (a4^dag)^n4``
acting on the vacuum, and the basis index is the bitstring read as a 4-bit
integer with slot 1 as the most significant bit.  Creation operators carry the
Jordan-Wigner sign ``(-1)^(occupations in slots before the target)``.

Reduced states of wedge I are taken after rewriting each ket in *physical
ordering*, where every wedge-I operator stands to the left of every wedge-II
operator (``a1^dag a3^dag a2^dag a4^dag``).  Moving ``a3^dag`` past ``a2^dag``
costs a factor ``(-1)^(n2 n3)``; after that the wedge-I slots are contiguous
and the partial trace is the ordinary tensor one.
"""

from enum import Enum

import numpy as np

N_MODES = 4
DIM = 2**N_MODES

WEDGE_I = (1, 3)
WEDGE_II = (2, 4)

ATOL = 1e-12


class Ordering(Enum):
    """Operator ordering used to identify wedge-I/wedge-II tensor factors."""

    PHYSICAL = "physical"
    # Slot order taken at face value; kept only as a negative control.
    SLOT = "slot"


def _check_mode(mode):
    if mode not in (1, 2, 3, 4):
        raise ValueError(f"mode must be one of 1..4, got {mode!r}")


def occupations(index):
    """Occupation tuple ``(n1, n2, n3, n4)`` of a basis index."""
    return tuple((index >> (N_MODES - slot)) & 1 for slot in range(1, N_MODES + 1))


def basis_index(bits):
    """Basis index of an occupation bitstring given as ``"1011"`` or a tuple."""
    if isinstance(bits, str):
        bits = tuple(int(b) for b in bits)
    if len(bits) != N_MODES or any(b not in (0, 1) for b in bits):
        raise ValueError(f"expected {N_MODES} occupation bits, got {bits!r}")
    index = 0
    for b in bits:
        index = (index << 1) | b
    return index


def basis_label(index):
    return "".join(str(n) for n in occupations(index))


def ket(bits):
    """Unit basis vector ``|bits>``."""
    v = np.zeros(DIM, dtype=complex)
    v[basis_index(bits)] = 1.0
    return v


def vacuum():
    return ket("0000")


def creation_matrix(mode):
    """Matrix of ``a_mode^dag`` on the 16-dimensional space."""
    _check_mode(mode)
    m = np.zeros((DIM, DIM))
    for j in range(DIM):
        n = occupations(j)
        if n[mode - 1]:
            continue
        sign = (-1) ** sum(n[: mode - 1])
        i = j | (1 << (N_MODES - mode))
        m[i, j] = sign
    return m


def annihilation_matrix(mode):
    return creation_matrix(mode).T.copy()


def apply_creation(mode, state):
    """Apply ``a_mode^dag`` to a Fock vector."""
    return creation_matrix(mode) @ np.asarray(state, dtype=complex)


def apply_annihilation(mode, state):
    """Apply ``a_mode`` to a Fock vector (adjoint of :func:`apply_creation`)."""
    return annihilation_matrix(mode) @ np.asarray(state, dtype=complex)


def outer_product(a, b):
    """``|a><b|``."""
    return np.outer(np.asarray(a, dtype=complex), np.conj(np.asarray(b, dtype=complex)))


def physical_ordering_signs():
    """Diagonal of the sign change from slot-ordered to physically ordered kets."""
    return np.array([(-1) ** (n[1] * n[2]) for n in map(occupations, range(DIM))], dtype=float)


def partial_trace_wedge_II(rho, ordering=Ordering.PHYSICAL):
    """Trace out the wedge-II modes (slots 2 and 4).

    Parameters
    ----------
    rho : (16, 16) array
        Density matrix in the slot-ordered occupation basis.
    ordering : Ordering
        ``PHYSICAL`` rewrites kets in physical ordering first.

    Returns
    -------
    (4, 4) complex array in the wedge-I basis ``|n1 n3>`` ordered
    ``|00>, |01>, |10>, |11>``.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (DIM, DIM):
        raise ValueError(f"expected a {DIM}x{DIM} matrix, got shape {rho.shape}")
    if ordering is Ordering.PHYSICAL:
        d = physical_ordering_signs()
        rho = d[:, None] * rho * d[None, :]
    # axes: (n1, n2, n3, n4) for ket then bra
    t = rho.reshape((2,) * (2 * N_MODES))
    # bring to (n1, n3, n2, n4 | n1', n3', n2', n4')
    t = t.transpose(0, 2, 1, 3, 4, 6, 5, 7).reshape(4, 4, 4, 4)
    return np.einsum("ajbj->ab", t)


def is_density_matrix(rho, atol=ATOL, psd_tol=1e-10):
    rho = np.asarray(rho)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        return False
    if not np.allclose(rho, rho.conj().T, atol=atol, rtol=0):
        return False
    if abs(np.trace(rho) - 1) > atol:
        return False
    return bool(np.linalg.eigvalsh(rho).min() >= -psd_tol)


def dump_matrix(m):
    """Plain-text dump, one row per line of ``re,im`` pairs separated by spaces."""
    m = np.asarray(m, dtype=complex)
    return "\n".join(" ".join(f"{float(z.real)!r},{float(z.imag)!r}" for z in row) for row in m) + "\n"


def load_matrix(text):
    rows = []
    for line in text.strip().splitlines():
        rows.append([complex(float(re), float(im)) for re, im in (p.split(",") for p in line.split())])
    return np.array(rows, dtype=complex)
