"""Transfer matrices against the Kraus oracle, plus closed-form trajectories."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gmqd import (
    CHANNEL_KINDS,
    XStateParams,
    adc_evolved_params,
    apply_local_channels,
    bell_state,
    bloch_from_density,
    closed_trajectory,
    density_from_xstate,
    expectation_matrix,
    gmqd_from_rprime,
    gmqd_xstate,
    kraus,
    kraus_apply,
    min_eigenvalue_from_params,
    p_from_time,
    transfer,
    xstate_to_bloch,
)

unit = st.floats(min_value=-1.0, max_value=1.0, allow_nan=False)
prob = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)


def physical_params_st():
    return st.builds(XStateParams, unit, unit, unit, unit, unit).filter(
        lambda q: min_eigenvalue_from_params(*q.as_tuple()) >= 0.0
    )


def evolved_expectation(q, a, b):
    E = expectation_matrix(xstate_to_bloch(q))
    return a.matrix @ E @ b.matrix.T


@pytest.mark.parametrize(
    "kind,p,diag",
    [
        ("pdc", 0.25, (1.0, 0.75, 0.75, 1.0)),
        ("pdc", 1.0, (1.0, 0.0, 0.0, 1.0)),
        ("dpc", 0.25, (1.0, 0.75, 0.75, 0.75)),
        ("dpc", 1.0, (1.0, 0.0, 0.0, 0.0)),
        ("identity", 0.0, (1.0, 1.0, 1.0, 1.0)),
    ],
)
def test_transfer_diagonals(kind, p, diag):
    M = transfer(kind, p).matrix
    np.testing.assert_allclose(M, np.diag(diag), atol=1e-15)


def test_adc_transfer_structure():
    M = transfer("adc", 0.36).matrix
    np.testing.assert_allclose(np.diag(M), [1.0, 0.8, 0.8, 0.64], atol=1e-15)
    assert M[3, 0] == 0.36
    off = M - np.diag(np.diag(M))
    off[3, 0] = 0.0
    assert np.all(off == 0.0)


@pytest.mark.parametrize("kind", CHANNEL_KINDS)
def test_p_zero_is_identity(kind):
    np.testing.assert_allclose(transfer(kind, 0.0).matrix, np.eye(4), atol=1e-15)


@pytest.mark.parametrize("kind", CHANNEL_KINDS)
@pytest.mark.parametrize("p", [0.0, 0.1, 0.5, 0.9, 1.0])
def test_kraus_completeness(kind, p):
    ops = kraus(kind, p)
    total = sum(k.conj().T @ k for k in ops)
    np.testing.assert_allclose(total, np.eye(2), atol=1e-12)


@pytest.mark.parametrize("kind", ["pdc", "dpc", "adc"])
def test_transfer_out_of_range(kind):
    with pytest.raises(ValueError):
        transfer(kind, -0.1)
    with pytest.raises(ValueError):
        transfer(kind, 1.1)
    with pytest.raises(ValueError):
        transfer("squeeze", 0.5)


@settings(max_examples=200, deadline=None)
@given(physical_params_st(), st.sampled_from(CHANNEL_KINDS), st.sampled_from(CHANNEL_KINDS), prob, prob)
def test_transfer_matches_kraus_oracle(q, kind_a, kind_b, pa, pb):
    a, b = transfer(kind_a, pa), transfer(kind_b, pb)
    heisenberg = evolved_expectation(q, a, b)
    rho = kraus_apply(density_from_xstate(q), kraus(kind_a, pa), kraus(kind_b, pb))
    schrodinger = expectation_matrix(bloch_from_density(rho))
    np.testing.assert_allclose(heisenberg, schrodinger, atol=1e-10)


@settings(max_examples=100, deadline=None)
@given(physical_params_st(), st.sampled_from(CHANNEL_KINDS), st.sampled_from(CHANNEL_KINDS), prob, prob)
def test_apply_local_channels_matches_manual_product(q, kind_a, kind_b, pa, pb):
    a, b = transfer(kind_a, pa), transfer(kind_b, pb)
    E1 = apply_local_channels(expectation_matrix(xstate_to_bloch(q)), a, b)
    np.testing.assert_allclose(E1, evolved_expectation(q, a, b), atol=1e-14)


def test_bell_vertex_under_pdc_pair():
    q = bell_state(0)
    p = 0.3
    E1 = evolved_expectation(q, transfer("pdc", p), transfer("pdc", p))
    shrink = (1.0 - p) ** 2
    np.testing.assert_allclose(
        np.diag(E1), [1.0, shrink * q.c1, shrink * q.c2, q.c3], atol=1e-15
    )


@settings(max_examples=150, deadline=None)
@given(physical_params_st(), prob)
def test_adc_evolved_params_match_oracle(q, p):
    r, s, c1, c2, c3 = adc_evolved_params(q, p).as_tuple()
    k = kraus("adc", p)
    state = bloch_from_density(kraus_apply(density_from_xstate(q), k, k))
    np.testing.assert_allclose(state.x, [0.0, 0.0, r], atol=1e-12)
    np.testing.assert_allclose(state.y, [0.0, 0.0, s], atol=1e-12)
    np.testing.assert_allclose(np.diag(state.R), [c1, c2, c3], atol=1e-12)


@pytest.mark.parametrize("pair", [("pdc", "pdc"), ("dpc", "dpc"), ("pdc", "dpc"), ("adc", "adc")])
@settings(max_examples=150, deadline=None)
@given(q=physical_params_st(), p=prob)
def test_closed_trajectory_matches_pipeline(pair, q, p):
    kind_a, kind_b = pair
    closed = closed_trajectory(kind_a, kind_b, *q.as_tuple(), p)
    E1 = evolved_expectation(q, transfer(kind_a, p), transfer(kind_b, p))
    pipeline = gmqd_from_rprime(E1[1:, :])
    assert abs(closed - pipeline) < 1e-10


def test_closed_trajectory_broadcasts():
    p = np.linspace(0.0, 1.0, 11)
    out = closed_trajectory("pdc", "pdc", 0.3, 0.3, 0.0, 0.6, 0.2, p)
    assert out.shape == (11,)
    assert out[0] == gmqd_xstate(XStateParams(0.3, 0.3, 0.0, 0.6, 0.2))


def test_closed_trajectory_rejects_unknown_pair():
    with pytest.raises(ValueError):
        closed_trajectory("pdc", "adc", 0.0, 0.0, 0.5, 0.5, 0.5, 0.1)


def test_p_from_time():
    assert p_from_time(1.0, 0.0) == 0.0
    t = np.array([0.0, 0.5, 2.0])
    np.testing.assert_allclose(p_from_time(0.7, t), 1.0 - np.exp(-0.7 * t), atol=1e-15)
    assert np.all(np.diff(p_from_time(1.3, np.linspace(0, 5, 50))) > 0.0)
    with pytest.raises(ValueError):
        p_from_time(-1.0, 1.0)
    with pytest.raises(ValueError):
        p_from_time(1.0, -0.5)


@settings(max_examples=100, deadline=None)
@given(physical_params_st(), st.sampled_from(CHANNEL_KINDS), st.sampled_from(CHANNEL_KINDS), prob, prob)
def test_kraus_apply_preserves_trace_and_positivity(q, kind_a, kind_b, pa, pb):
    rho = kraus_apply(density_from_xstate(q), kraus(kind_a, pa), kraus(kind_b, pb))
    assert abs(np.trace(rho).real - 1.0) < 1e-12
    assert np.linalg.eigvalsh(rho).min() > -1e-12
