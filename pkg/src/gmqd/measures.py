"""Correlation measures: geometric discord (three routes) and concurrence.

The geometric discord used here is the squared Hilbert-Schmidt distance
to the nearest zero-discord state, with the measurement on qubit A.  It
is computed three independent ways that must agree:

  * gmqd_bloch  -- eigenvalue form on K = x x^T + R R^T,
  * gmqd_svd    -- singular values of the 3x4 expectation block,
  * gmqd_xstate -- closed form for the X-state family.

Concurrence comes in the general Wootters spin-flip form plus an
X-state closed form used by the geometry sampler.
"""

from __future__ import annotations

import numpy as np

from .states import (
    PAULI,
    PSD_TOL,
    BlochState,
    XStateParams,
)

__all__ = [
    "expectation_matrix",
    "bloch_from_expectation",
    "rprime_from_expectation",
    "gmqd_from_rprime",
    "gmqd_bloch_batch",
    "gmqd_bloch",
    "gmqd_svd",
    "gmqd_xstate",
    "gmqd_from_params",
    "concurrence",
    "concurrence_xstate",
    "concurrence_from_params",
]


def expectation_matrix(state: BlochState) -> np.ndarray:
    """4x4 expectation matrix E with E[0,0]=1, first row (1, y^T),
    first column (1, x^T)^T, and lower-right block R."""
    E = np.empty((4, 4))
    E[0, 0] = 1.0
    E[0, 1:] = state.y
    E[1:, 0] = state.x
    E[1:, 1:] = state.R
    return E


def bloch_from_expectation(E: np.ndarray, atol: float = 1e-10) -> BlochState:
    """Invert expectation_matrix.

    Raises:
        ValueError: if E is not 4x4 or its (0,0) entry is not 1 within
            atol (a trace-preserving evolution never changes it).
    """
    E = np.asarray(E, dtype=float)
    if E.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {E.shape}")
    if abs(E[0, 0] - 1.0) > atol:
        raise ValueError("expectation matrix corner entry must be 1")
    return BlochState(x=E[1:, 0].copy(), y=E[0, 1:].copy(), R=E[1:, 1:].copy())


def rprime_from_expectation(E: np.ndarray) -> np.ndarray:
    """Drop the first row of the expectation matrix: the 3x4 block [x | R].

    Accepts batches of shape (..., 4, 4) and returns (..., 3, 4).
    """
    return np.asarray(E, dtype=float)[..., 1:, :]


def gmqd_from_rprime(rprime: np.ndarray) -> np.ndarray:
    """Discord from singular values of the 3x4 block, batched.

    D = (1/4) (sum_k lambda_k^2 - max_k lambda_k^2) over the three
    singular values.  Accepts shape (..., 3, 4).
    """
    lam2 = np.linalg.svd(np.asarray(rprime, dtype=float), compute_uv=False) ** 2
    return 0.25 * (lam2.sum(axis=-1) - lam2.max(axis=-1))


def gmqd_bloch_batch(x: np.ndarray, R: np.ndarray) -> np.ndarray:
    """Geometric discord via the largest eigenvalue of K = x x^T + R R^T.

    D = (1/4) (|x|^2 + |R|_F^2 - k_max).  Accepts batches: x of shape
    (..., 3) with matching R of shape (..., 3, 3).
    """
    x = np.asarray(x, dtype=float)
    R = np.asarray(R, dtype=float)
    K = x[..., :, None] * x[..., None, :] + R @ np.swapaxes(R, -1, -2)
    k_max = np.linalg.eigvalsh(K)[..., -1]
    norms = (x * x).sum(axis=-1) + (R * R).sum(axis=(-2, -1))
    return 0.25 * (norms - k_max)


def gmqd_bloch(state: BlochState) -> float:
    """Geometric discord of one Bloch-picture state via the K matrix.

    Assumes a physical state; the value is formal otherwise.
    """
    return float(gmqd_bloch_batch(state.x, state.R))


def gmqd_svd(state: BlochState) -> float:
    """Geometric discord via singular values of [x | R]."""
    rprime = np.concatenate(
        [np.asarray(state.x, dtype=float)[:, None], np.asarray(state.R, dtype=float)],
        axis=1,
    )
    return float(gmqd_from_rprime(rprime))


def gmqd_from_params(r, c1, c2, c3) -> np.ndarray:
    """X-state closed form, broadcastable.

    D = (1/4) (c1^2 + c2^2 + c3^2 + r^2 - max(c1^2, c2^2, c3^2 + r^2)).
    Depends on r but never on s: the measurement is on qubit A.

    Evaluated as 1/4 times the sum of the two smallest of
    {c1^2, c2^2, c3^2 + r^2} (the same quantity), so that regimes where
    one term dominates give bit-exact constants.
    """
    r, c1, c2, c3 = (np.asarray(a, dtype=float) for a in (r, c1, c2, c3))
    a = c1 * c1
    b = c2 * c2
    c = c3 * c3 + r * r
    return 0.25 * np.minimum(np.minimum(a + b, b + c), a + c)


def gmqd_xstate(params: XStateParams) -> float:
    """X-state geometric discord in closed form."""
    return float(gmqd_from_params(params.r, params.c1, params.c2, params.c3))


_SYSY = np.kron(PAULI[1], PAULI[1])


def concurrence(rho: np.ndarray, tol: float = PSD_TOL) -> float:
    """Wootters concurrence of a two-qubit density matrix.

    C = max{0, l1 - l2 - l3 - l4} where l_i are the descending square
    roots of the eigenvalues of rho (sy x sy) rho* (sy x sy).

    Raises:
        ValueError: if rho is not Hermitian or has an eigenvalue below
            -tol (non-positive input).
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {rho.shape}")
    if np.max(np.abs(rho - rho.conj().T)) > tol:
        raise ValueError("matrix is not Hermitian within tolerance")
    if np.linalg.eigvalsh(rho)[0] < -tol:
        raise ValueError("matrix is not positive semidefinite within tolerance")

    rho_tilde = _SYSY @ rho.conj() @ _SYSY
    ev = np.linalg.eigvals(rho @ rho_tilde).real
    # eigenvalues of rho rho~ are >= 0 in exact arithmetic; clamp
    # round-off negatives before the square roots
    ev[(ev < 0.0) & (ev > -1e-12)] = 0.0
    if np.any(ev < 0.0):
        raise ValueError("spin-flip spectrum has a significantly negative eigenvalue")
    lam = np.sqrt(np.sort(ev)[::-1])
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def concurrence_from_params(r, s, c1, c2, c3) -> np.ndarray:
    """X-state concurrence in closed form, broadcastable.

    C = 2 max{0, |c1+c2|/4 - sqrt(rho11 rho44), |c1-c2|/4 - sqrt(rho22 rho33)}
    with the diagonal entries rho11 = (1+r+s+c3)/4 etc.  The products
    under the roots are clamped at zero so that unphysical parameter
    points still produce a finite (formal) value.
    """
    r, s, c1, c2, c3 = (np.asarray(a, dtype=float) for a in (r, s, c1, c2, c3))
    outer = np.maximum(((1.0 + c3) ** 2 - (r + s) ** 2) / 16.0, 0.0)
    inner = np.maximum(((1.0 - c3) ** 2 - (r - s) ** 2) / 16.0, 0.0)
    t1 = np.abs(c1 + c2) / 4.0 - np.sqrt(outer)
    t2 = np.abs(c1 - c2) / 4.0 - np.sqrt(inner)
    return 2.0 * np.maximum(0.0, np.maximum(t1, t2))


def concurrence_xstate(params: XStateParams) -> float:
    """X-state concurrence in closed form."""
    return float(concurrence_from_params(*params.as_tuple()))
