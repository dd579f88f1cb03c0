"""State construction, density-matrix round trips, and the closed-form spectrum."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gmqd import (
    PAULI,
    PSD_TOL,
    BellLabel,
    XStateParams,
    bell_state,
    bloch_from_density,
    density_from_bloch,
    density_from_xstate,
    eigenvalues_from_params,
    is_physical,
    min_eigenvalue_from_params,
    xstate_eigenvalues,
    xstate_to_bloch,
)

unit = st.floats(min_value=-1.0, max_value=1.0, allow_nan=False)


def params_st():
    return st.builds(XStateParams, unit, unit, unit, unit, unit)


def physical_params_st():
    return params_st().filter(lambda q: min_eigenvalue_from_params(*q.as_tuple()) >= 0.0)


def test_pauli_algebra():
    eye = np.eye(2)
    for k in range(3):
        np.testing.assert_allclose(PAULI[k] @ PAULI[k], eye, atol=1e-15)
    # sigma_x sigma_y = i sigma_z, cyclically
    np.testing.assert_allclose(PAULI[0] @ PAULI[1], 1j * PAULI[2], atol=1e-15)
    np.testing.assert_allclose(PAULI[1] @ PAULI[2], 1j * PAULI[0], atol=1e-15)
    np.testing.assert_allclose(PAULI[2] @ PAULI[0], 1j * PAULI[1], atol=1e-15)


@pytest.mark.parametrize(
    "label,c",
    [
        (BellLabel.PHI_PLUS, (1.0, -1.0, 1.0)),
        (BellLabel.PHI_MINUS, (-1.0, 1.0, 1.0)),
        (BellLabel.PSI_PLUS, (1.0, 1.0, -1.0)),
        (BellLabel.PSI_MINUS, (-1.0, -1.0, -1.0)),
    ],
)
def test_bell_vertices(label, c):
    q = bell_state(label)
    assert (q.r, q.s) == (0.0, 0.0)
    assert (q.c1, q.c2, q.c3) == c
    assert is_physical(q)
    # each vertex is a pure state: spectrum {1, 0, 0, 0}
    np.testing.assert_allclose(xstate_eigenvalues(q), [1.0, 0.0, 0.0, 0.0], atol=1e-15)


def test_density_from_xstate_shape():
    q = XStateParams(0.3, 0.3, 0.1, 0.1, 0.2)
    rho = density_from_xstate(q)
    assert rho.shape == (4, 4)
    np.testing.assert_allclose(rho, rho.conj().T, atol=1e-15)
    assert abs(np.trace(rho) - 1.0) < 1e-15
    # only the diagonal and anti-diagonal may be populated
    mask = np.zeros((4, 4), dtype=bool)
    mask[np.arange(4), np.arange(4)] = True
    mask[np.arange(4), ::-1][np.arange(4), np.arange(4)] = True
    assert np.all(np.abs(rho[~(np.eye(4, dtype=bool) | np.fliplr(np.eye(4, dtype=bool)))]) < 1e-15)


@settings(max_examples=200, deadline=None)
@given(params_st())
def test_density_bloch_round_trip(q):
    state = xstate_to_bloch(q)
    rho = density_from_bloch(state)
    back = bloch_from_density(rho)
    np.testing.assert_allclose(back.x, state.x, atol=1e-12)
    np.testing.assert_allclose(back.y, state.y, atol=1e-12)
    np.testing.assert_allclose(back.R, state.R, atol=1e-12)


@settings(max_examples=300, deadline=None)
@given(params_st())
def test_eigenvalue_formula_matches_dense_solver(q):
    dense = np.sort(np.linalg.eigvalsh(density_from_xstate(q)))[::-1]
    closed = eigenvalues_from_params(*q.as_tuple())
    np.testing.assert_allclose(closed, dense, atol=1e-10)
    assert abs(min_eigenvalue_from_params(*q.as_tuple()) - dense.min()) < 1e-10


def test_eigenvalues_broadcast():
    r = np.linspace(-0.5, 0.5, 7)
    vals = eigenvalues_from_params(r, 0.1, 0.2, 0.1, 0.3)
    assert vals.shape == (7, 4)
    np.testing.assert_allclose(vals[3], eigenvalues_from_params(r[3], 0.1, 0.2, 0.1, 0.3))


def test_is_physical_examples():
    assert is_physical(XStateParams(0.3, 0.3, 0.1, 0.1, 0.2))
    # cube corner that is not a Bell vertex lies outside the tetrahedron
    assert not is_physical(XStateParams(0.0, 0.0, 1.0, 1.0, 1.0))
    assert not is_physical(XStateParams(0.9, -0.9, 0.9, 0.9, 0.9))
    with pytest.raises(ValueError):
        is_physical(XStateParams(0.0, 0.0, 0.0, 0.0, 0.0), tol=-1.0)


def test_is_physical_tolerance_edge():
    # PSI_MINUS sits on the boundary; a tiny inward nudge must stay physical
    q = XStateParams(0.0, 0.0, -0.999999, -0.999999, -0.999999)
    assert is_physical(q, tol=PSD_TOL)


def test_bloch_from_density_validation():
    with pytest.raises(ValueError):
        bloch_from_density(np.eye(3))
    rho = np.eye(4, dtype=complex) / 4.0
    rho[0, 1] = 0.5  # breaks hermiticity
    with pytest.raises(ValueError):
        bloch_from_density(rho)
    with pytest.raises(ValueError):
        bloch_from_density(np.eye(4, dtype=complex))  # trace 4


@settings(max_examples=100, deadline=None)
@given(physical_params_st())
def test_physical_states_have_psd_density(q):
    rho = density_from_xstate(q)
    assert np.linalg.eigvalsh(rho).min() >= -1e-12
