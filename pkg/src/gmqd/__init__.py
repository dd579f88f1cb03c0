"""Geometric discord of two-qubit X states: closed forms, decoherence
dynamics under local channels, a factorization-law verifier, and
level-surface geometry of the state space."""

from .states import (
    PAULI,
    PSD_TOL,
    BellLabel,
    BlochState,
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
from .measures import (
    concurrence,
    concurrence_from_params,
    concurrence_xstate,
    expectation_matrix,
    bloch_from_expectation,
    gmqd_bloch,
    gmqd_from_params,
    gmqd_from_rprime,
    gmqd_svd,
    gmqd_xstate,
)
from .channels import (
    CHANNEL_KINDS,
    ChannelTransfer,
    adc_evolved_params,
    adc_kraus,
    adc_transfer,
    apply_local_channels,
    closed_trajectory,
    dpc_kraus,
    dpc_transfer,
    gmqd_dpc_closed,
    gmqd_pdc_closed,
    gmqd_pdc_dpc_closed,
    identity_kraus,
    identity_transfer,
    kraus,
    kraus_apply,
    p_from_time,
    pdc_kraus,
    pdc_transfer,
    transfer,
)
from .factorization import (
    ALL_PAIRS,
    FactorizationReport,
    FrozenThreshold,
    VerifyConfig,
    bell_channel_factor,
    factorization_bound,
    frozen_threshold,
    sample_physical_xstates,
    verify_theorem,
)
from .geometry import (
    IsoMesh,
    Measure,
    ScalarField,
    export_field,
    export_mesh,
    extract_isosurface,
    load_field,
    physical_point_count,
    sample_field,
)

__version__ = "0.1.0"
