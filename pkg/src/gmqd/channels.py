"""Local decoherence channels in the Heisenberg transfer-matrix picture.

Each single-qubit channel is a 4x4 transmission matrix M acting on
expectation-matrix indices (row/column 0 is the identity slot), so a
product channel evolves the two-qubit expectation matrix as

    E' = M_A E M_B^T.

The same channels are also provided as Kraus-operator sets; the
Schroedinger-picture map they induce is the independent oracle against
which the transfer matrices are validated.  Closed-form discord
trajectories for the dephasing / depolarizing combinations round out
the module.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .measures import gmqd_from_params
from .states import PAULI, XStateParams

CHANNEL_KINDS = ("pdc", "dpc", "adc", "identity")


@dataclass(frozen=True, eq=False)
class ChannelTransfer:
    """A single-qubit channel as its 4x4 transmission matrix.

    Attributes:
        kind: one of CHANNEL_KINDS.
        p: channel strength in [0, 1].
        matrix: 4x4 real transmission matrix with matrix[0,0] = 1;
            affine channels use the off-diagonal slots of row/column 0.
    """

    kind: str
    p: float
    matrix: np.ndarray


def _check_p(p: float) -> float:
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"channel strength p={p} outside [0, 1]")
    return p


def identity_transfer() -> ChannelTransfer:
    """The trivial channel (does nothing)."""
    return ChannelTransfer("identity", 0.0, np.eye(4))


def pdc_transfer(p: float) -> ChannelTransfer:
    """Phase damping: diag(1, 1-p, 1-p, 1)."""
    p = _check_p(p)
    return ChannelTransfer("pdc", p, np.diag([1.0, 1.0 - p, 1.0 - p, 1.0]))


def dpc_transfer(p: float) -> ChannelTransfer:
    """Depolarizing: diag(1, 1-p, 1-p, 1-p)."""
    p = _check_p(p)
    q = 1.0 - p
    return ChannelTransfer("dpc", p, np.diag([1.0, q, q, q]))


def adc_transfer(p: float) -> ChannelTransfer:
    """Amplitude damping: diag(1, sqrt(1-p), sqrt(1-p), 1-p) plus the
    affine entry M[3,0] = p that pushes the Bloch vector toward +z.

    Derived from the adjoint action of the standard damping Kraus pair
    (K0 = diag(1, sqrt(1-p)), K1 = sqrt(p)|0><1|) on the Pauli basis and
    validated against that oracle.
    """
    p = _check_p(p)
    root = np.sqrt(1.0 - p)
    M = np.diag([1.0, root, root, 1.0 - p])
    M[3, 0] = p
    return ChannelTransfer("adc", p, M)


def transfer(kind: str, p: float = 0.0) -> ChannelTransfer:
    """Build a ChannelTransfer by kind name."""
    if kind == "identity":
        return identity_transfer()
    if kind == "pdc":
        return pdc_transfer(p)
    if kind == "dpc":
        return dpc_transfer(p)
    if kind == "adc":
        return adc_transfer(p)
    raise ValueError(f"unknown channel kind {kind!r}")


def apply_local_channels(
    E: np.ndarray, a: ChannelTransfer, b: ChannelTransfer
) -> np.ndarray:
    """Evolve an expectation matrix: E' = M_A E M_B^T.

    Accepts batches of shape (..., 4, 4).
    """
    return a.matrix @ np.asarray(E, dtype=float) @ b.matrix.T


# --- Kraus picture (independent oracle) ------------------------------

_ID2 = np.eye(2, dtype=complex)


def identity_kraus() -> list[np.ndarray]:
    return [_ID2.copy()]


def pdc_kraus(p: float) -> list[np.ndarray]:
    """Phase damping as a phase flip with probability p/2."""
    p = _check_p(p)
    return [np.sqrt(1.0 - p / 2.0) * _ID2, np.sqrt(p / 2.0) * PAULI[2]]


def dpc_kraus(p: float) -> list[np.ndarray]:
    """Depolarizing as Pauli noise with weight p/4 on each sigma_i."""
    p = _check_p(p)
    ops = [np.sqrt(1.0 - 3.0 * p / 4.0) * _ID2]
    ops += [np.sqrt(p / 4.0) * PAULI[i] for i in range(3)]
    return ops


def adc_kraus(p: float) -> list[np.ndarray]:
    """Standard amplitude damping toward |0>."""
    p = _check_p(p)
    k0 = np.array([[1.0, 0.0], [0.0, np.sqrt(1.0 - p)]], dtype=complex)
    k1 = np.array([[0.0, np.sqrt(p)], [0.0, 0.0]], dtype=complex)
    return [k0, k1]


def kraus(kind: str, p: float = 0.0) -> list[np.ndarray]:
    """Build a Kraus set by kind name."""
    if kind == "identity":
        return identity_kraus()
    if kind == "pdc":
        return pdc_kraus(p)
    if kind == "dpc":
        return dpc_kraus(p)
    if kind == "adc":
        return adc_kraus(p)
    raise ValueError(f"unknown channel kind {kind!r}")


def _check_complete(ops: list[np.ndarray], atol: float) -> None:
    total = sum(k.conj().T @ k for k in ops)
    if np.max(np.abs(total - _ID2)) > atol:
        raise ValueError("Kraus set is not trace preserving (completeness fails)")


def kraus_apply(
    rho: np.ndarray,
    a: list[np.ndarray],
    b: list[np.ndarray],
    atol: float = 1e-12,
) -> np.ndarray:
    """Schroedinger-picture product-channel action.

    rho' = sum_ij (K_i x L_j) rho (K_i x L_j)^dagger.

    Raises:
        ValueError: if either Kraus set fails completeness within atol.
    """
    _check_complete(a, atol)
    _check_complete(b, atol)
    rho = np.asarray(rho, dtype=complex)
    out = np.zeros_like(rho)
    for ka in a:
        for kb in b:
            op = np.kron(ka, kb)
            out += op @ rho @ op.conj().T
    return out


def p_from_time(gamma: float, t) -> np.ndarray:
    """Decoherence strength p = 1 - exp(-gamma t); broadcastable in t."""
    t = np.asarray(t, dtype=float)
    if gamma < 0 or np.any(t < 0):
        raise ValueError("gamma and t must be non-negative")
    return 1.0 - np.exp(-gamma * t)


# --- Closed-form discord trajectories --------------------------------
#
# Each evaluator must agree with the generic pipeline
# (apply_local_channels, then the SVD form of the discord).


def closed_trajectory(kind_a: str, kind_b: str, r, s, c1, c2, c3, p) -> np.ndarray:
    """Closed-form evolved discord, broadcastable over every argument.

    Supported pairs: pdc,pdc / dpc,dpc / pdc,dpc (each a shifted-weight
    variant of the static closed form) and adc,adc (via the evolved
    parameter map).

    Raises:
        ValueError: if no closed form is implemented for the pair.
    """
    r, s, c1, c2, c3, p = np.broadcast_arrays(
        *(np.asarray(v, dtype=float) for v in (r, s, c1, c2, c3, p))
    )
    q = 1.0 - p
    pair = (kind_a, kind_b)
    if pair == ("pdc", "pdc"):
        a, b, c = q**4 * c1**2, q**4 * c2**2, r**2 + c3**2
    elif pair == ("dpc", "dpc"):
        a, b, c = q**4 * c1**2, q**4 * c2**2, q**2 * r**2 + q**4 * c3**2
    elif pair == ("pdc", "dpc"):
        a, b, c = q**4 * c1**2, q**4 * c2**2, r**2 + q**2 * c3**2
    elif pair == ("adc", "adc"):
        return gmqd_from_params(
            p + q * r, q * c1, q * c2, p * p + p * q * (r + s) + q * q * c3
        )
    else:
        raise ValueError(f"no closed form for channel pair {kind_a},{kind_b}")
    # sum minus max, written as the two smallest terms so the frozen
    # plateau (one dominant term) is a bit-exact constant in p
    return 0.25 * np.minimum(np.minimum(a + b, b + c), a + c)


def gmqd_pdc_closed(state: XStateParams, p) -> np.ndarray:
    """Discord after phase damping on both qubits with equal strength."""
    return closed_trajectory("pdc", "pdc", *state.as_tuple(), p)


def gmqd_dpc_closed(state: XStateParams, p) -> np.ndarray:
    """Discord after depolarizing on both qubits with equal strength."""
    return closed_trajectory("dpc", "dpc", *state.as_tuple(), p)


def gmqd_pdc_dpc_closed(state: XStateParams, p) -> np.ndarray:
    """Discord after phase damping on qubit A and depolarizing on B."""
    return closed_trajectory("pdc", "dpc", *state.as_tuple(), p)


def adc_evolved_params(state: XStateParams, p: float) -> XStateParams:
    """X-state parameters after amplitude damping on both qubits.

    r' = p + (1-p) r            c1' = (1-p) c1
    s' = p + (1-p) s            c2' = (1-p) c2
    c3' = p^2 + p (1-p) (r+s) + (1-p)^2 c3
    """
    p = _check_p(p)
    q = 1.0 - p
    return XStateParams(
        r=p + q * state.r,
        s=p + q * state.s,
        c1=q * state.c1,
        c2=q * state.c2,
        c3=p * p + p * q * (state.r + state.s) + q * q * state.c3,
    )
