"""Pure bipartite state vectors, density matrices, partial traces, purity.

Index convention, fixed globally: the basis label |i, j> maps to the flat
index i * dim_b + j, so subsystem A is the high-order digit. Density
matrices are plain complex ndarrays; ``validate_density`` checks the
Hermiticity / trace / positivity invariants where a function's contract
requires them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import herm_eigvals

NORM_WARN_TOL = 1e-6

DENSITY_HERM_TOL = 1e-12
DENSITY_TRACE_TOL = 1e-12
DENSITY_EIGVAL_FLOOR = -1e-10

PURITY_GATE_TOL = 1e-10


@dataclass(frozen=True)
class StateVector:
    """A normalized pure state of a (dim_a x dim_b)-dimensional bipartite system.

    Parameters
    ----------
    dim_a, dim_b : int
        Local dimensions, each 2 or 3.
    amplitudes : ndarray
        Complex amplitudes of length dim_a * dim_b in the |i, j> -> i * dim_b + j
        order, unit norm within 1e-12.
    normalization_warning : bool
        Set by ``state_from_amplitudes`` when the raw input deviated from unit
        norm by more than ``NORM_WARN_TOL`` and had to be rescaled.
    """

    dim_a: int
    dim_b: int
    amplitudes: np.ndarray
    normalization_warning: bool = False

    @property
    def total_dim(self) -> int:
        return self.dim_a * self.dim_b


def state_from_amplitudes(amps, dim_a: int, dim_b: int) -> StateVector:
    """Build a StateVector, rescaling to unit norm.

    Parameters
    ----------
    amps : sequence of complex
        Raw amplitudes, length dim_a * dim_b. Any nonzero norm is accepted;
        if it deviates from 1 by more than ``NORM_WARN_TOL`` the state is
        renormalized and its ``normalization_warning`` flag is set.
    dim_a, dim_b : int
        Local dimensions, each 2 or 3.

    Raises
    ------
    ValueError
        On a zero input vector, a length mismatch, or an unsupported dimension.
    """
    if dim_a not in (2, 3) or dim_b not in (2, 3):
        raise ValueError(f"unsupported local dimensions ({dim_a}, {dim_b})")
    a = np.asarray(amps, dtype=complex).ravel()
    if a.size != dim_a * dim_b:
        raise ValueError(
            f"expected {dim_a * dim_b} amplitudes for dims ({dim_a}, {dim_b}), got {a.size}"
        )
    norm = float(np.linalg.norm(a))
    if norm == 0.0:
        raise ValueError("state vector is identically zero")
    warned = abs(norm - 1.0) > NORM_WARN_TOL
    a = a / norm
    a.setflags(write=False)
    return StateVector(dim_a, dim_b, a, normalization_warning=warned)


def density_from_state(psi: StateVector) -> np.ndarray:
    """Projector |psi><psi| as a dense complex matrix."""
    return np.outer(psi.amplitudes, psi.amplitudes.conj())


def validate_density(rho, name: str = "rho") -> np.ndarray:
    """Check the density-matrix invariants, returning the array on success.

    Hermitian within 1e-12 entrywise, unit trace within 1e-12, eigenvalues
    above -1e-10. Raises ValueError naming the violated condition.
    """
    a = np.asarray(rho, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"{name} must be a square matrix, got shape {a.shape}")
    asym = float(np.abs(a - a.conj().T).max())
    if asym > DENSITY_HERM_TOL:
        raise ValueError(f"{name} is not Hermitian: max asymmetry {asym:.3e}")
    tr = complex(np.trace(a))
    if abs(tr - 1.0) > DENSITY_TRACE_TOL:
        raise ValueError(f"{name} has trace {tr}, expected 1")
    low = float(herm_eigvals(a)[0])
    if low < DENSITY_EIGVAL_FLOOR:
        raise ValueError(f"{name} is not positive semidefinite: lowest eigenvalue {low:.3e}")
    return a


def partial_trace(rho, keep: str, dims: tuple[int, int]) -> np.ndarray:
    """Reduced density matrix of one subsystem.

    Parameters
    ----------
    rho : array_like
        Density matrix of the joint system, dimension dims[0] * dims[1].
    keep : str
        "A" to trace out the second subsystem, "B" for the first.
    dims : (int, int)
        Local dimensions (dim_a, dim_b).
    """
    da, db = dims
    a = np.asarray(rho, dtype=complex)
    if a.shape != (da * db, da * db):
        raise ValueError(f"dimension mismatch: rho is {a.shape}, dims give {da * db}")
    blocks = a.reshape(da, db, da, db)
    if keep == "A":
        return np.einsum("ijkj->ik", blocks)
    if keep == "B":
        return np.einsum("ijil->jl", blocks)
    raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")


def purity(rho) -> float:
    """tr(rho^2), real part (the imaginary part vanishes for Hermitian input)."""
    a = np.asarray(rho, dtype=complex)
    return float(np.einsum("ij,ji->", a, a).real)


def is_pure(rho) -> bool:
    """Purity gate: |tr(rho^2) - 1| <= 1e-10."""
    return abs(purity(rho) - 1.0) <= PURITY_GATE_TOL
