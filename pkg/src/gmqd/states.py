"""Two-qubit state representations and physicality checks.

A general two-qubit state is held in the Bloch picture: two local Bloch
vectors plus the 3x3 correlation tensor.  The X-state family restricts
both Bloch vectors to the z axis and the correlation tensor to its
diagonal, leaving five real parameters (r, s, c1, c2, c3); in the
computational basis the density matrix is then nonzero only on the
diagonal and anti-diagonal.  Bell states sit at four corners of the
(c1, c2, c3) cube with r = s = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum

import numpy as np

# Eigenvalue slack when classifying a state as physical: wide enough to
# absorb solver round-off, tight enough to reject genuinely bad points.
PSD_TOL = 1e-9

_ID2 = np.eye(2, dtype=complex)

# sigma_1, sigma_2, sigma_3
PAULI = np.array(
    [
        [[0.0, 1.0], [1.0, 0.0]],
        [[0.0, -1.0j], [1.0j, 0.0]],
        [[1.0, 0.0], [0.0, -1.0]],
    ],
    dtype=complex,
)


@dataclass(frozen=True, eq=False)
class BlochState:
    """Bloch-picture form of a two-qubit state.

    Attributes:
        x: Bloch vector of qubit A, shape (3,).
        y: Bloch vector of qubit B, shape (3,).
        R: correlation tensor <sigma_i x sigma_j>, shape (3, 3).
    """

    x: np.ndarray
    y: np.ndarray
    R: np.ndarray


@dataclass(frozen=True)
class XStateParams:
    """Parameters (r, s, c1, c2, c3) of the X-state family.

    r and s are the z components of the two local Bloch vectors; c1, c2,
    c3 are the diagonal correlation coefficients.  Unphysical parameter
    combinations are representable on purpose: physicality is a separate
    query, never a constructor failure.
    """

    r: float
    s: float
    c1: float
    c2: float
    c3: float

    def as_tuple(self) -> tuple[float, float, float, float, float]:
        return (self.r, self.s, self.c1, self.c2, self.c3)


class BellLabel(IntEnum):
    """The four Bell states, indexed by their (c1, c2, c3) cube vertex."""

    PHI_PLUS = 0   # (1, -1, 1)
    PHI_MINUS = 1  # (-1, 1, 1)
    PSI_PLUS = 2   # (1, 1, -1)
    PSI_MINUS = 3  # (-1, -1, -1)


_BELL_VERTICES = {
    BellLabel.PHI_PLUS: (1.0, -1.0, 1.0),
    BellLabel.PHI_MINUS: (-1.0, 1.0, 1.0),
    BellLabel.PSI_PLUS: (1.0, 1.0, -1.0),
    BellLabel.PSI_MINUS: (-1.0, -1.0, -1.0),
}


def bell_state(label: BellLabel | int) -> XStateParams:
    """Return the X-state parameters of the labeled Bell state."""
    c1, c2, c3 = _BELL_VERTICES[BellLabel(label)]
    return XStateParams(0.0, 0.0, c1, c2, c3)


def xstate_to_bloch(params: XStateParams) -> BlochState:
    """Embed X-state parameters into the general Bloch picture."""
    return BlochState(
        x=np.array([0.0, 0.0, params.r]),
        y=np.array([0.0, 0.0, params.s]),
        R=np.diag([params.c1, params.c2, params.c3]).astype(float),
    )


def density_from_bloch(state: BlochState) -> np.ndarray:
    """Reconstruct the 4x4 density matrix from a Bloch-picture state.

    rho = (1/4) [I(x)I + sum_i x_i sigma_i(x)I + sum_j y_j I(x)sigma_j
                 + sum_ij R_ij sigma_i(x)sigma_j]

    Hermitian with unit trace by construction; positivity is not implied
    and must be checked separately.  Basis ordering |00>,|01>,|10>,|11>.
    """
    rho = 0.25 * np.kron(_ID2, _ID2)
    for i in range(3):
        rho = rho + 0.25 * state.x[i] * np.kron(PAULI[i], _ID2)
        rho = rho + 0.25 * state.y[i] * np.kron(_ID2, PAULI[i])
        for j in range(3):
            rho = rho + 0.25 * state.R[i, j] * np.kron(PAULI[i], PAULI[j])
    return rho


def bloch_from_density(rho: np.ndarray, tol: float = 1e-10) -> BlochState:
    """Extract Bloch-picture data from a density matrix.

    x_i = Tr[rho (sigma_i x I)], y_j = Tr[rho (I x sigma_j)],
    R_ij = Tr[rho (sigma_i x sigma_j)].  Exact inverse of
    density_from_bloch.

    Raises:
        ValueError: if rho is not 4x4, not Hermitian within tol, or its
            trace differs from 1 by more than tol.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {rho.shape}")
    if np.max(np.abs(rho - rho.conj().T)) > tol:
        raise ValueError("matrix is not Hermitian within tolerance")
    if abs(np.trace(rho).real - 1.0) > tol or abs(np.trace(rho).imag) > tol:
        raise ValueError("matrix trace is not 1 within tolerance")

    x = np.empty(3)
    y = np.empty(3)
    R = np.empty((3, 3))
    for i in range(3):
        x[i] = np.trace(rho @ np.kron(PAULI[i], _ID2)).real
        y[i] = np.trace(rho @ np.kron(_ID2, PAULI[i])).real
        for j in range(3):
            R[i, j] = np.trace(rho @ np.kron(PAULI[i], PAULI[j])).real
    return BlochState(x=x, y=y, R=R)


def density_from_xstate(params: XStateParams) -> np.ndarray:
    """Density matrix of an X state (convenience composition)."""
    return density_from_bloch(xstate_to_bloch(params))


def eigenvalues_from_params(r, s, c1, c2, c3) -> np.ndarray:
    """Closed-form density-matrix eigenvalues of the X-state family.

    The 4x4 X matrix splits into two 2x2 blocks, giving

        (1/4) (1 -/+ sqrt((r-s)^2 + (c1+c2)^2) - c3)   (inner block)
        (1/4) (1 -/+ sqrt((r+s)^2 + (c1-c2)^2) + c3)   (outer block)

    Broadcasts over array arguments; eigenvalues are stacked on a new
    last axis, sorted descending.
    """
    r, s, c1, c2, c3 = np.broadcast_arrays(
        *(np.asarray(a, dtype=float) for a in (r, s, c1, c2, c3))
    )
    u = np.hypot(r - s, c1 + c2)
    w = np.hypot(r + s, c1 - c2)
    lam = 0.25 * np.stack(
        [1.0 - u - c3, 1.0 + u - c3, 1.0 - w + c3, 1.0 + w + c3], axis=-1
    )
    return np.flip(np.sort(lam, axis=-1), axis=-1)


def min_eigenvalue_from_params(r, s, c1, c2, c3) -> np.ndarray:
    """Smallest X-state eigenvalue, broadcastable (physicality kernel)."""
    r, s, c1, c2, c3 = (np.asarray(a, dtype=float) for a in (r, s, c1, c2, c3))
    u = np.hypot(r - s, c1 + c2)
    w = np.hypot(r + s, c1 - c2)
    return 0.25 * np.minimum(1.0 - u - c3, 1.0 - w + c3)


def xstate_eigenvalues(params: XStateParams) -> np.ndarray:
    """The four density-matrix eigenvalues of an X state, descending."""
    return eigenvalues_from_params(*params.as_tuple())


def is_physical(params: XStateParams, tol: float = PSD_TOL) -> bool:
    """Whether the X-state parameters describe a positive state.

    True iff the smallest closed-form eigenvalue is >= -tol.
    """
    if tol < 0:
        raise ValueError("tolerance must be non-negative")
    return bool(min_eigenvalue_from_params(*params.as_tuple()) >= -tol)
