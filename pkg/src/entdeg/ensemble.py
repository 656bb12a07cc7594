"""Seeded Haar-random states and the mass property sweep over them.

Reproducibility contract: sample number ``idx`` of a sweep depends only on
(seed, idx), never on worker count or chunking. Each sample owns a Philox
counter block derived from its index (the index sits in the highest counter
word, so per-sample streams cannot overlap), and the Gaussian variates are
produced by an explicit Box-Muller transform on the raw 64-bit output, so
the draw sequence is pinned by this file rather than by library internals.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .bloch import decompose, reconstruct
from .generators import basis_for
from .hyperbolic import degree_hyperbolic
from .measure import analyze
from .states import StateVector, density_from_state, state_from_amplitudes

_U64_SHIFT = np.uint64(11)
_TWO_NEG53 = 2.0 ** -53

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class SweepReport:
    """Worst-case residuals over a seeded Haar ensemble.

    ``worst_residuals`` maps each checked invariant to its largest observed
    residual; ``passed`` is True when every entry is at most ``tol``.
    ``p_e_min`` and ``p_e_max`` record the range of the determinant-route
    degree over the ensemble, for orientation rather than assertion.
    """

    samples: int
    local_dim: int
    seed: int
    tol: float
    worst_residuals: dict[str, float]
    p_e_min: float
    p_e_max: float
    passed: bool


def _box_muller(raw: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Turn 2m raw uint64 words into two arrays of m standard normals."""
    u1 = ((raw[0::2] >> _U64_SHIFT).astype(np.float64) + 1.0) * _TWO_NEG53  # (0, 1]
    u2 = (raw[1::2] >> _U64_SHIFT).astype(np.float64) * _TWO_NEG53  # [0, 1)
    radius = np.sqrt(-2.0 * np.log(u1))
    angle = 2.0 * np.pi * u2
    return radius * np.cos(angle), radius * np.sin(angle)


def haar_random_pure(total_dim: int, rng: np.random.BitGenerator) -> StateVector:
    """One Haar-distributed pure state of dimension 4 or 9.

    Draws 2 * total_dim independent standard normals as the real and
    imaginary amplitude parts and normalizes; the invariance of the
    Gaussian under unitaries makes the result uniform on the sphere.
    ``rng`` is a numpy bit generator, e.g. ``np.random.Philox(key=seed)``.
    """
    if total_dim not in (4, 9):
        raise ValueError(f"total dimension must be 4 or 9, got {total_dim}")
    n = 2 if total_dim == 4 else 3
    raw = rng.random_raw(2 * total_dim)
    re, im = _box_muller(raw)
    amps = re + 1j * im
    amps = amps / np.linalg.norm(amps)
    return state_from_amplitudes(amps, n, n)


def state_for_index(local_dim: int, seed: int, index: int) -> StateVector:
    """The ``index``-th state of the (seed, local_dim) ensemble.

    Workers in a parallel sweep call this independently; the per-sample
    counter keeps the result identical no matter who computes it.
    """
    counter = np.zeros(4, dtype=np.uint64)
    counter[3] = np.uint64(index)
    rng = np.random.Philox(key=seed, counter=counter)
    return haar_random_pure(local_dim * local_dim, rng)


def _sample_residuals(psi: StateVector) -> tuple[dict[str, float], float]:
    rep = analyze(psi)
    basis = basis_for(psi.dim_a)
    rho = density_from_state(psi)
    bf = decompose(rho, basis)
    residuals = {
        "roundtrip": float(np.abs(reconstruct(bf, basis) - rho).max()),
        "alpha_det_negativity": max(0.0, -rep.alpha_det),
    }
    if psi.dim_a == 2:
        residuals.update(rep.constraint_residuals)
        residuals["oracle_det_vs_schmidt"] = abs(rep.p_e_det - rep.p_e_schmidt)
        residuals["oracle_det_vs_concurrence"] = abs(rep.p_e_det - rep.concurrence)
        from_u = np.sqrt(max(0.0, 1.0 - rep.u_norm ** 2))
        residuals["det_vs_u_norm"] = abs(rep.p_e_det - from_u)
        residuals["det_vs_hyperbolic"] = abs(rep.p_e_det - degree_hyperbolic(np.array(rep.u)))
    return residuals, rep.p_e_det


def _sweep_range(local_dim: int, seed: int, lo: int, hi: int):
    worst: dict[str, float] = {}
    p_min, p_max = np.inf, -np.inf
    for idx in range(lo, hi):
        residuals, p_e = _sample_residuals(state_for_index(local_dim, seed, idx))
        for key, val in residuals.items():
            worst[key] = max(worst.get(key, 0.0), val)
        p_min = min(p_min, p_e)
        p_max = max(p_max, p_e)
    return worst, p_min, p_max


def property_sweep(
    samples: int,
    local_dim: int,
    seed: int,
    tol: float = DEFAULT_TOL,
    workers: int = 1,
) -> SweepReport:
    """Run every per-state invariant over a seeded Haar ensemble.

    For qubit pairs this covers the two oracle comparisons, the six purity
    identities, sqrt(1 - |u|^2) and the hyperbolic route, the decomposition
    round trip, and the sign of -det(alpha). For qutrit pairs only the
    round trip and the determinant sign are meaningful, and the degree is
    evaluated as defined without an independent oracle.

    The report is a pure function of (samples, local_dim, seed, tol);
    ``workers`` only splits the index range across threads.
    """
    if samples < 1:
        raise ValueError("samples must be at least 1")
    if local_dim not in (2, 3):
        raise ValueError(f"local dimension must be 2 or 3, got {local_dim}")

    if workers <= 1:
        parts = [_sweep_range(local_dim, seed, 0, samples)]
    else:
        bounds = [i * samples // workers for i in range(workers + 1)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(
                pool.map(
                    lambda span: _sweep_range(local_dim, seed, span[0], span[1]),
                    zip(bounds[:-1], bounds[1:]),
                )
            )

    worst: dict[str, float] = {}
    p_min, p_max = np.inf, -np.inf
    for part_worst, part_min, part_max in parts:
        for key, val in part_worst.items():
            worst[key] = max(worst.get(key, 0.0), val)
        p_min = min(p_min, part_min)
        p_max = max(p_max, part_max)

    return SweepReport(
        samples=samples,
        local_dim=local_dim,
        seed=seed,
        tol=tol,
        worst_residuals=worst,
        p_e_min=float(p_min),
        p_e_max=float(p_max),
        passed=all(val <= tol for val in worst.values()),
    )
