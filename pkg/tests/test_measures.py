"""Discord and concurrence: closed forms against the generic matrix routes."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gmqd import (
    BellLabel,
    XStateParams,
    bell_state,
    bloch_from_expectation,
    concurrence,
    concurrence_xstate,
    density_from_xstate,
    expectation_matrix,
    gmqd_bloch,
    gmqd_from_rprime,
    gmqd_svd,
    gmqd_xstate,
    min_eigenvalue_from_params,
    xstate_to_bloch,
)

unit = st.floats(min_value=-1.0, max_value=1.0, allow_nan=False)


def physical_params_st():
    return st.builds(XStateParams, unit, unit, unit, unit, unit).filter(
        lambda q: min_eigenvalue_from_params(*q.as_tuple()) >= 0.0
    )


def test_expectation_matrix_layout():
    q = XStateParams(0.3, 0.1, 0.4, -0.2, 0.5)
    E = expectation_matrix(xstate_to_bloch(q))
    expected = np.array(
        [
            [1.0, 0.0, 0.0, 0.1],
            [0.0, 0.4, 0.0, 0.0],
            [0.0, 0.0, -0.2, 0.0],
            [0.3, 0.0, 0.0, 0.5],
        ]
    )
    np.testing.assert_allclose(E, expected, atol=1e-15)
    back = bloch_from_expectation(E)
    np.testing.assert_allclose(back.x, [0.0, 0.0, 0.3], atol=1e-15)
    np.testing.assert_allclose(back.y, [0.0, 0.0, 0.1], atol=1e-15)


def test_bloch_from_expectation_rejects_bad_corner():
    E = np.zeros((4, 4))
    E[0, 0] = 0.5
    with pytest.raises(ValueError):
        bloch_from_expectation(E)


@settings(max_examples=300, deadline=None)
@given(physical_params_st())
def test_gmqd_three_routes_agree(q):
    state = xstate_to_bloch(q)
    d_closed = gmqd_xstate(q)
    d_bloch = gmqd_bloch(state)
    d_svd = gmqd_svd(state)
    assert abs(d_closed - d_bloch) < 1e-10
    assert abs(d_closed - d_svd) < 1e-10


@settings(max_examples=200, deadline=None)
@given(physical_params_st(), unit)
def test_gmqd_ignores_second_qubit_marginal(q, s2):
    # measurement happens on qubit A, so s never enters
    alt = XStateParams(q.r, s2, q.c1, q.c2, q.c3)
    assert gmqd_xstate(alt) == gmqd_xstate(q)


@pytest.mark.parametrize("label", list(BellLabel))
def test_bell_extremes(label):
    q = bell_state(label)
    state = xstate_to_bloch(q)
    assert abs(gmqd_xstate(q) - 0.5) < 1e-12
    assert abs(gmqd_bloch(state) - 0.5) < 1e-12
    assert abs(gmqd_svd(state) - 0.5) < 1e-12
    assert abs(concurrence_xstate(q) - 1.0) < 1e-12
    assert abs(concurrence(density_from_xstate(q)) - 1.0) < 1e-12


def test_gmqd_zero_for_classical_states():
    # c1 = c2 = 0 leaves only commuting correlations
    assert gmqd_xstate(XStateParams(0.4, 0.2, 0.0, 0.0, 0.3)) == 0.0
    assert gmqd_xstate(XStateParams(0.0, 0.0, 0.0, 0.0, 0.0)) == 0.0


@settings(max_examples=100, deadline=None)
@given(
    st.permutations([0, 1, 2]),
    st.tuples(unit, unit, unit).filter(
        lambda c: min_eigenvalue_from_params(0.0, 0.0, *c) >= 0.0
    ),
)
def test_bell_diagonal_axis_permutation_invariance(perm, c):
    permuted = tuple(c[i] for i in perm)
    a = gmqd_xstate(XStateParams(0.0, 0.0, *c))
    b = gmqd_xstate(XStateParams(0.0, 0.0, *permuted))
    assert abs(a - b) < 1e-15


@settings(max_examples=200, deadline=None)
@given(physical_params_st())
def test_concurrence_closed_form_matches_wootters(q):
    closed = concurrence_xstate(q)
    oracle = concurrence(density_from_xstate(q))
    assert abs(closed - oracle) < 1e-10
    assert 0.0 <= closed <= 1.0 + 1e-12


def test_concurrence_zero_for_product_state():
    assert concurrence_xstate(XStateParams(0.5, -0.2, 0.0, 0.0, 0.0)) == 0.0


def test_concurrence_rejects_non_psd_input():
    rho = np.diag([1.2, -0.2, 0.0, 0.0]).astype(complex)
    with pytest.raises(ValueError):
        concurrence(rho)


def test_gmqd_from_rprime_batched():
    qs = [
        XStateParams(0.3, 0.3, 0.1, 0.1, 0.2),
        XStateParams(0.0, 0.0, 1.0, -1.0, 1.0),
    ]
    block = np.stack([expectation_matrix(xstate_to_bloch(q))[1:, :] for q in qs])
    out = gmqd_from_rprime(block)
    assert out.shape == (2,)
    np.testing.assert_allclose(out, [gmqd_xstate(qs[0]), 0.5], atol=1e-12)


def test_known_value_spot_check():
    # hand-evaluated closed form: a=0.01, b=0.01, c=0.13 -> min sum pair = 0.02
    q = XStateParams(0.3, 0.3, 0.1, 0.1, 0.2)
    assert abs(gmqd_xstate(q) - 0.005) < 1e-15
