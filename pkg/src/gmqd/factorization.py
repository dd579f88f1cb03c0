"""Factorization law for discord dynamics, frozen plateaus, and the
Monte-Carlo verification harness.

The central inequality compares the discord of a channel-evolved state
against a product bound:

    D[(A x B) rho]  >=  2 D[(A x B) beta] * D[rho]

where beta is a Bell state.  The Bell-state factor is vertex
independent for dephasing / depolarizing channel pairs; for amplitude
damping it is not, so the bound uses the minimum over the four vertices
and the spread is recorded.  Verification is numerical: rejection-
sampled physical X states swept over a p grid, with equality clauses
checked separately where they are proven.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .channels import (
    CHANNEL_KINDS,
    ChannelTransfer,
    apply_local_channels,
    closed_trajectory,
    kraus,
    kraus_apply,
    transfer,
)
from .measures import (
    expectation_matrix,
    gmqd_bloch_batch,
    gmqd_from_rprime,
    gmqd_svd,
)
from .states import (
    XStateParams,
    bell_state,
    bloch_from_density,
    density_from_bloch,
    min_eigenvalue_from_params,
    xstate_to_bloch,
)

DEFAULT_P_GRID = tuple(np.linspace(0.0, 1.0, 11).tolist())

ALL_PAIRS = (
    ("pdc", "pdc"),
    ("dpc", "dpc"),
    ("pdc", "dpc"),
    ("pdc", "identity"),
    ("dpc", "identity"),
    ("adc", "adc"),
)

# pairs whose bound is proven; anything else is reported as evidence only
PROVEN_PAIRS = frozenset(ALL_PAIRS) - {("adc", "adc")}


def xstate_batch_expectation(r, s, c1, c2, c3) -> np.ndarray:
    """Stack X-state expectation matrices: shape (n, 4, 4)."""
    r, s, c1, c2, c3 = np.broadcast_arrays(
        *(np.atleast_1d(np.asarray(a, dtype=float)) for a in (r, s, c1, c2, c3))
    )
    E = np.zeros(r.shape + (4, 4))
    E[..., 0, 0] = 1.0
    E[..., 0, 3] = s
    E[..., 3, 0] = r
    E[..., 1, 1] = c1
    E[..., 2, 2] = c2
    E[..., 3, 3] = c3
    return E


def sample_physical_xstates(
    n: int, rng: np.random.Generator, bell_diagonal: bool = False
) -> np.ndarray:
    """Rejection-sample physical X states, uniform over the parameter cube.

    Returns an (n, 5) array with columns r, s, c1, c2, c3.  With
    bell_diagonal=True, r = s = 0 and the c draw is uniform over the
    Bell tetrahedron.
    """
    if n < 0:
        raise ValueError("sample count must be non-negative")
    out = np.empty((n, 5))
    filled = 0
    while filled < n:
        m = max(4 * (n - filled), 1024)
        cand = rng.uniform(-1.0, 1.0, size=(m, 5))
        if bell_diagonal:
            cand[:, 0] = 0.0
            cand[:, 1] = 0.0
        keep = (
            min_eigenvalue_from_params(
                cand[:, 0], cand[:, 1], cand[:, 2], cand[:, 3], cand[:, 4]
            )
            >= 0.0
        )
        good = cand[keep]
        take = min(len(good), n - filled)
        out[filled : filled + take] = good[:take]
        filled += take
    return out


def bell_channel_factor(a: ChannelTransfer, b: ChannelTransfer) -> tuple[float, float]:
    """The Bell-state factor 2 D[(A x B) beta], minimized over vertices.

    Returns (factor, spread) where spread is the max-min difference
    across the four vertices (zero for dephasing / depolarizing pairs).
    """
    vals = np.empty(4)
    for label in range(4):
        E = expectation_matrix(xstate_to_bloch(bell_state(label)))
        evolved = apply_local_channels(E, a, b)
        vals[label] = 2.0 * gmqd_from_rprime(evolved[1:, :])
    return float(vals.min()), float(vals.max() - vals.min())


def factorization_bound(
    state: XStateParams, a: ChannelTransfer, b: ChannelTransfer
) -> tuple[float, float]:
    """Evaluate both sides of the inequality for one state.

    lhs: discord of the evolved state (generic transfer + SVD pipeline).
    rhs: Bell-state factor times the initial discord.
    """
    E = expectation_matrix(xstate_to_bloch(state))
    lhs = float(gmqd_from_rprime(apply_local_channels(E, a, b)[1:, :]))
    factor, _ = bell_channel_factor(a, b)
    rhs = factor * gmqd_svd(xstate_to_bloch(state))
    return lhs, rhs


@dataclass(frozen=True)
class FrozenThreshold:
    """Dephasing plateau of an X state.

    When a plateau exists, the discord under double phase damping stays
    at plateau_value for all p < p1 and decays beyond.
    """

    exists: bool
    p1: float
    plateau_value: float


def frozen_threshold(state: XStateParams) -> FrozenThreshold:
    """Locate the dephasing plateau, if any.

    A plateau exists iff exactly the cross-correlation pattern
    (c1 = 0 and c2^2 > r^2 + c3^2) or (c2 = 0 and c1^2 > r^2 + c3^2)
    holds; then (1 - p1)^4 c_max^2 = r^2 + c3^2 defines the end point
    and the plateau value is (r^2 + c3^2) / 4.
    """
    base = state.r**2 + state.c3**2
    exists = (state.c1 == 0.0 and state.c2**2 > base) or (
        state.c2 == 0.0 and state.c1**2 > base
    )
    if not exists:
        return FrozenThreshold(False, math.nan, math.nan)
    c_max2 = max(state.c1**2, state.c2**2)
    p1 = 1.0 - (base / c_max2) ** 0.25
    return FrozenThreshold(True, p1, base / 4.0)


# --- Verification harness --------------------------------------------


@dataclass(frozen=True)
class VerifyConfig:
    """Settings for one verification run.

    workers only splits batched linear algebra into slices; results are
    identical for any worker count.
    """

    n_states: int = 10_000
    n_oracle: int = 1_000
    n_bell: int = 2_000
    p_grid: tuple[float, ...] = DEFAULT_P_GRID
    pairs: tuple[tuple[str, str], ...] = ALL_PAIRS
    seed: int = 0
    tol: float = 1e-10
    workers: int = 1
    bell_diagonal_only: bool = False

    def __post_init__(self):
        if self.n_states < 1:
            raise ValueError("n_states must be >= 1")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.tol < 0:
            raise ValueError("tol must be non-negative")
        for p in self.p_grid:
            if not 0.0 <= p <= 1.0:
                raise ValueError("p grid values must lie in [0, 1]")
        for pair in self.pairs:
            for kind in pair:
                if kind not in CHANNEL_KINDS:
                    raise ValueError(f"unknown channel kind {kind!r}")

    def to_dict(self) -> dict:
        # workers is an execution knob, not part of the replayable config;
        # leaving it out keeps reports byte-identical across worker counts.
        return {
            "n_states": self.n_states,
            "n_oracle": self.n_oracle,
            "n_bell": self.n_bell,
            "p_grid": [float(p) for p in self.p_grid],
            "pairs": [list(pair) for pair in self.pairs],
            "seed": self.seed,
            "tol": self.tol,
            "bell_diagonal_only": self.bell_diagonal_only,
        }


@dataclass
class PairReport:
    """Inequality results for one channel pair across the p grid."""

    kind_a: str
    kind_b: str
    samples: int
    p_grid: tuple[float, ...]
    conjecture: bool
    violations: list[dict] = field(default_factory=list)
    violations_truncated: bool = False
    n_violations: int = 0
    max_negative_gap: float = 0.0
    bell_factor_spread: float = 0.0
    equality_criterion: str = "p_zero_only"
    equality_cases_checked: int = 0
    equality_max_abs_gap: float = 0.0
    p_zero_max_abs_gap: float = 0.0

    def to_dict(self) -> dict:
        return {
            "pair": [self.kind_a, self.kind_b],
            "samples": self.samples,
            "p_grid": [float(p) for p in self.p_grid],
            "conjecture": self.conjecture,
            "n_violations": self.n_violations,
            "violations": self.violations,
            "violations_truncated": self.violations_truncated,
            "max_negative_gap": self.max_negative_gap,
            "bell_factor_spread": self.bell_factor_spread,
            "equality": {
                "criterion": self.equality_criterion,
                "cases_checked": self.equality_cases_checked,
                "max_abs_gap": self.equality_max_abs_gap,
            },
            "p_zero_max_abs_gap": self.p_zero_max_abs_gap,
        }


@dataclass
class FactorizationReport:
    """Full output of verify_theorem, JSON-ready via to_dict."""

    config: VerifyConfig
    formula_equivalence: dict
    channel_oracle: dict
    closed_forms: dict
    pairs: list[PairReport]
    bell_diagonal_dpc: dict | None
    observations: dict

    def hard_violations(self) -> list[str]:
        """Names of checks that failed beyond tolerance (conjectural
        channel pairs excluded)."""
        tol = self.config.tol
        bad = []
        if self.formula_equivalence["max_dev_bloch"] > tol:
            bad.append("formula_equivalence:bloch")
        if self.formula_equivalence["max_dev_svd"] > tol:
            bad.append("formula_equivalence:svd")
        for kind, block in self.channel_oracle.items():
            if block["max_entry_dev"] > tol:
                bad.append(f"channel_oracle:{kind}")
        for name, block in self.closed_forms.items():
            if block["max_dev"] > tol:
                bad.append(f"closed_form:{name}")
        for pr in self.pairs:
            name = f"{pr.kind_a},{pr.kind_b}"
            if not pr.conjecture and pr.n_violations > 0:
                bad.append(f"theorem:{name}")
            if pr.equality_cases_checked and pr.equality_max_abs_gap > tol:
                bad.append(f"equality:{name}")
            if pr.p_zero_max_abs_gap > tol:
                bad.append(f"equality_p0:{name}")
        if self.bell_diagonal_dpc is not None:
            if self.bell_diagonal_dpc["max_abs_gap"] > tol:
                bad.append("equality:bell_diagonal_dpc_pq")
        return bad

    def to_dict(self) -> dict:
        return {
            "config": self.config.to_dict(),
            "formula_equivalence": self.formula_equivalence,
            "channel_oracle": self.channel_oracle,
            "closed_forms": self.closed_forms,
            "theorem": [pr.to_dict() for pr in self.pairs],
            "bell_diagonal_dpc": self.bell_diagonal_dpc,
            "observations": self.observations,
            "hard_violations": self.hard_violations(),
        }


def _chunk_slices(n: int, workers: int) -> list[slice]:
    workers = max(1, min(workers, n))
    bounds = np.linspace(0, n, workers + 1).astype(int)
    return [slice(a, b) for a, b in zip(bounds[:-1], bounds[1:]) if b > a]


def _map_chunked(fn, arr: np.ndarray, workers: int) -> np.ndarray:
    """Apply fn to slices of arr along axis 0 and concatenate in order.

    fn must be elementwise along axis 0, so the result is independent
    of the chunking.
    """
    slices = _chunk_slices(arr.shape[0], workers)
    if len(slices) == 1:
        return fn(arr)
    with ThreadPoolExecutor(max_workers=len(slices)) as pool:
        parts = list(pool.map(lambda sl: fn(arr[sl]), slices))
    return np.concatenate(parts, axis=0)


def _evolved_gmqd(E0: np.ndarray, a: ChannelTransfer, b: ChannelTransfer, workers: int) -> np.ndarray:
    """Pipeline discord of a batch of expectation matrices after A x B."""
    return _map_chunked(
        lambda chunk: gmqd_from_rprime(apply_local_channels(chunk, a, b)[..., 1:, :]),
        E0,
        workers,
    )


def _formula_equivalence_block(params: np.ndarray, workers: int) -> dict:
    r, s, c1, c2, c3 = params.T
    n = len(r)
    closed = 0.25 * (
        c1**2
        + c2**2
        + (c3**2 + r**2)
        - np.maximum(np.maximum(c1**2, c2**2), c3**2 + r**2)
    )

    x = np.zeros((n, 3))
    x[:, 2] = r
    R = np.zeros((n, 3, 3))
    R[:, 0, 0] = c1
    R[:, 1, 1] = c2
    R[:, 2, 2] = c3
    via_bloch = _map_chunked(
        lambda idx: gmqd_bloch_batch(x[idx], R[idx]),
        np.arange(n),
        workers,
    )

    E0 = xstate_batch_expectation(r, s, c1, c2, c3)
    via_svd = _map_chunked(
        lambda chunk: gmqd_from_rprime(chunk[..., 1:, :]), E0, workers
    )

    return {
        "samples": n,
        "max_dev_bloch": float(np.max(np.abs(via_bloch - closed))),
        "max_dev_svd": float(np.max(np.abs(via_svd - closed))),
    }


def _channel_oracle_block(params: np.ndarray, p_draws: np.ndarray, tol: float) -> dict:
    """Transfer-matrix evolution vs the Kraus oracle, entrywise."""
    out = {}
    for kind in CHANNEL_KINDS:
        max_dev = 0.0
        for row, p in zip(params, p_draws):
            state = XStateParams(*row)
            a = transfer(kind, p)
            E1 = apply_local_channels(
                expectation_matrix(xstate_to_bloch(state)), a, a
            )
            rho = density_from_bloch(xstate_to_bloch(state))
            rho1 = kraus_apply(rho, kraus(kind, p), kraus(kind, p))
            E2 = expectation_matrix(bloch_from_density(rho1))
            max_dev = max(max_dev, float(np.max(np.abs(E1 - E2))))
        out[kind] = {
            "samples": len(params),
            "max_entry_dev": max_dev,
        }
    return out


_CLOSED_FORM_PAIRS = (
    ("pdc", "pdc"),
    ("dpc", "dpc"),
    ("pdc", "dpc"),
    ("adc", "adc"),
)


def _closed_forms_block(
    params: np.ndarray, E0: np.ndarray, p_grid, workers: int
) -> dict:
    r, s, c1, c2, c3 = params.T
    out = {}
    for kind_a, kind_b in _CLOSED_FORM_PAIRS:
        max_dev = 0.0
        for p in p_grid:
            a = transfer(kind_a, p)
            b = transfer(kind_b, p)
            pipeline = _evolved_gmqd(E0, a, b, workers)
            closed = closed_trajectory(kind_a, kind_b, r, s, c1, c2, c3, p)
            max_dev = max(max_dev, float(np.max(np.abs(pipeline - closed))))
        out[f"{kind_a},{kind_b}"] = {
            "samples": len(params),
            "p_points": len(p_grid),
            "max_dev": max_dev,
        }
    return out


_MAX_RECORDED_VIOLATIONS = 100


def _pair_block(
    params: np.ndarray,
    E0: np.ndarray,
    d0: np.ndarray,
    pair: tuple[str, str],
    p_grid,
    tol: float,
    workers: int,
) -> PairReport:
    kind_a, kind_b = pair
    report = PairReport(
        kind_a=kind_a,
        kind_b=kind_b,
        samples=len(params),
        p_grid=tuple(p_grid),
        conjecture=pair not in PROVEN_PAIRS,
    )

    r, s, c1, c2, c3 = params.T
    if pair == ("pdc", "pdc"):
        report.equality_criterion = "case1"
        eq_mask = r**2 + c3**2 >= np.maximum(c1**2, c2**2)
    elif pair == ("dpc", "dpc"):
        report.equality_criterion = "bell_diagonal"
        eq_mask = (r == 0.0) & (s == 0.0)
    else:
        eq_mask = np.zeros(len(params), dtype=bool)
    report.equality_cases_checked = int(eq_mask.sum())

    min_gap = 0.0
    for p in p_grid:
        a = transfer(kind_a, p)
        b = transfer(kind_b, p)
        factor, spread = bell_channel_factor(a, b)
        report.bell_factor_spread = max(report.bell_factor_spread, spread)

        lhs = _evolved_gmqd(E0, a, b, workers)
        gap = lhs - factor * d0
        min_gap = min(min_gap, float(gap.min()))

        if p == 0.0:
            report.p_zero_max_abs_gap = max(
                report.p_zero_max_abs_gap, float(np.max(np.abs(gap)))
            )
        if eq_mask.any():
            report.equality_max_abs_gap = max(
                report.equality_max_abs_gap, float(np.max(np.abs(gap[eq_mask])))
            )

        bad = np.flatnonzero(gap < -tol)
        report.n_violations += len(bad)
        for idx in bad:
            if len(report.violations) >= _MAX_RECORDED_VIOLATIONS:
                report.violations_truncated = True
                break
            report.violations.append(
                {
                    "state": [float(v) for v in params[idx]],
                    "p": float(p),
                    "lhs": float(lhs[idx]),
                    "rhs": float(factor * d0[idx]),
                    "gap": float(gap[idx]),
                }
            )

    report.max_negative_gap = min_gap
    return report


def _bell_diagonal_dpc_block(
    rng: np.random.Generator, n_bell: int, p_grid, workers: int
) -> dict:
    """Corollary-2 equality: Bell-diagonal states under depolarizing on
    both sides with independent strengths p and q."""
    params = sample_physical_xstates(n_bell, rng, bell_diagonal=True)
    E0 = xstate_batch_expectation(*params.T)
    d0 = gmqd_from_rprime(E0[..., 1:, :])

    max_abs_gap = 0.0
    cases = 0
    for p in p_grid:
        a = transfer("dpc", p)
        for q in p_grid:
            b = transfer("dpc", q)
            factor, _ = bell_channel_factor(a, b)
            lhs = _evolved_gmqd(E0, a, b, workers)
            max_abs_gap = max(max_abs_gap, float(np.max(np.abs(lhs - factor * d0))))
            cases += len(params)
    return {
        "samples": n_bell,
        "p_grid": [float(p) for p in p_grid],
        "independent_strengths": True,
        "cases_checked": cases,
        "max_abs_gap": max_abs_gap,
    }


def _observations_block(params: np.ndarray, p_grid) -> dict:
    """Empirical-only statistics; nothing here is asserted anywhere."""
    r, s, c1, c2, c3 = (col[:, None] for col in params.T)
    p_row = np.asarray(p_grid, dtype=float)[None, :]
    out = {}
    for kind_a, kind_b in _CLOSED_FORM_PAIRS:
        traj = closed_trajectory(kind_a, kind_b, r, s, c1, c2, c3, p_row)
        steps = np.diff(traj, axis=1)
        out[f"{kind_a},{kind_b}"] = float(max(0.0, steps.max()))
    return {"closed_form_monotone_max_increase": out}


def verify_theorem(config: VerifyConfig) -> FactorizationReport:
    """Run the full verification suite for the configured settings.

    Sampling happens once up front from the seeded generator, so the
    report is reproducible bit for bit for a fixed config, regardless
    of worker count.
    """
    rng = np.random.default_rng(config.seed)
    params = sample_physical_xstates(
        config.n_states, rng, bell_diagonal=config.bell_diagonal_only
    )
    oracle_params = sample_physical_xstates(config.n_oracle, rng)
    oracle_p = rng.uniform(0.0, 1.0, size=config.n_oracle)

    E0 = xstate_batch_expectation(*params.T)
    d0 = gmqd_from_rprime(E0[..., 1:, :])

    formula = _formula_equivalence_block(params, config.workers)
    oracle = _channel_oracle_block(oracle_params, oracle_p, config.tol)
    closed = _closed_forms_block(params, E0, config.p_grid, config.workers)

    pair_reports = [
        _pair_block(params, E0, d0, pair, config.p_grid, config.tol, config.workers)
        for pair in config.pairs
    ]

    bell_dpc = None
    if ("dpc", "dpc") in config.pairs:
        bell_dpc = _bell_diagonal_dpc_block(
            rng, config.n_bell, config.p_grid, config.workers
        )

    observations = _observations_block(params, config.p_grid)

    return FactorizationReport(
        config=config,
        formula_equivalence=formula,
        channel_oracle=oracle,
        closed_forms=closed,
        pairs=pair_reports,
        bell_diagonal_dpc=bell_dpc,
        observations=observations,
    )

