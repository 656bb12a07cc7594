"""Bloch decomposition of bipartite density matrices and its inverse.

For qubits the expansion is

    rho = (1/4) (1 x 1 + sum_i u_i s_i x 1 + sum_j v_j 1 x s_j
                 + sum_ij beta_ij s_i x s_j)

with coefficients read off as plain trace projections. For qutrits the
normalization carries extra weights,

    rho = (1/9) (1 x 1 + sqrt(3) sum_i u_i g_i x 1 + sqrt(3) sum_j v_j 1 x g_j
                 + (3/2) sum_ij beta_ij g_i x g_j),

so the extraction picks up the prefactors sqrt(3)/2 on the local vectors and
3/2 on the correlation matrix. These are forced by tr(g_i g_j) = 2 delta_ij
together with the weights above; the round-trip tests pin them down.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .generators import GeneratorSet
from .linalg import kron

IMAG_RESIDUE_TOL = 1e-12

LOCAL_NORM_SLACK = 1e-10


@dataclass(frozen=True)
class BlochForm:
    """Local Bloch vectors u, v and the real correlation matrix beta.

    For local dimension N the vectors have length N*N - 1 and beta is
    (N*N - 1) x (N*N - 1). All entries are real by construction.
    """

    local_dim: int
    u: np.ndarray
    v: np.ndarray
    beta: np.ndarray


def _weights(local_dim: int) -> tuple[float, float, float]:
    # (overall prefactor, local weight, pair weight) of the expansion
    if local_dim == 2:
        return 0.25, 1.0, 1.0
    return 1.0 / 9.0, np.sqrt(3.0), 1.5


_STACKS: dict[int, tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]] = {}


def _operator_stacks(basis: GeneratorSet):
    """Cached arrays of g_i x 1, 1 x g_j and g_i x g_j for fast projection."""
    cached = _STACKS.get(basis.dim)
    if cached is None:
        gens, ident = basis.generators, basis.identity
        first = np.stack([kron(g, ident) for g in gens])
        second = np.stack([kron(ident, g) for g in gens])
        pair = np.stack([np.stack([kron(gi, gj) for gj in gens]) for gi in gens])
        full_ident = kron(ident, ident)
        cached = (first, second, pair, full_ident)
        _STACKS[basis.dim] = cached
    return cached


def decompose(rho, basis: GeneratorSet) -> BlochForm:
    """Extract (u, v, beta) from a joint density matrix by trace projection.

    The projecting traces must be real to within ``IMAG_RESIDUE_TOL``; a
    larger imaginary residue signals a non-Hermitian input and raises.
    """
    n = basis.dim
    a = np.asarray(rho, dtype=complex)
    if a.shape != (n * n, n * n):
        raise ValueError(f"rho has shape {a.shape}, expected {(n * n, n * n)}")
    first, second, pair, _ = _operator_stacks(basis)

    # trace products tr(rho M) for every basis operator M at once
    u_raw = np.einsum("aij,ji->a", first, a)
    v_raw = np.einsum("aij,ji->a", second, a)
    beta_raw = np.einsum("abij,ji->ab", pair, a)

    residue = max(
        float(np.abs(u_raw.imag).max()),
        float(np.abs(v_raw.imag).max()),
        float(np.abs(beta_raw.imag).max()),
    )
    if residue > IMAG_RESIDUE_TOL:
        raise ValueError(
            f"imaginary residue {residue:.3e} in the projection traces, "
            "input is not Hermitian"
        )

    if n == 2:
        u, v, beta = u_raw.real, v_raw.real, beta_raw.real
    else:
        s = np.sqrt(3.0) / 2.0
        u, v, beta = s * u_raw.real, s * v_raw.real, 1.5 * beta_raw.real

    if n == 2:
        for name, vec in (("u", u), ("v", v)):
            ln = float(np.linalg.norm(vec))
            if ln > 1.0 + LOCAL_NORM_SLACK:
                raise ValueError(f"|{name}| = {ln} exceeds 1, rho is not a qubit state")

    return BlochForm(local_dim=n, u=u, v=v, beta=beta)


def reconstruct(bf: BlochForm, basis: GeneratorSet) -> np.ndarray:
    """Evaluate the expansion literally, the exact inverse of ``decompose``.

    The result is Hermitian with unit trace by construction; positivity is
    not checked, since arbitrary (u, v, beta) need not describe a state.
    """
    if bf.local_dim != basis.dim:
        raise ValueError(f"BlochForm dim {bf.local_dim} does not match basis dim {basis.dim}")
    first, second, pair, full_ident = _operator_stacks(basis)
    pref, w_local, w_pair = _weights(basis.dim)
    out = full_ident + w_local * (
        np.einsum("a,aij->ij", bf.u, first) + np.einsum("a,aij->ij", bf.v, second)
    )
    out = out + w_pair * np.einsum("ab,abij->ij", bf.beta, pair)
    return pref * out


def bloch_of_reduced(rho_local, basis: GeneratorSet) -> np.ndarray:
    """Bloch vector of a single-subsystem density matrix.

    Agrees with the u (or v) component of ``decompose`` applied to the joint
    state whose partial trace produced ``rho_local``.
    """
    n = basis.dim
    a = np.asarray(rho_local, dtype=complex)
    if a.shape != (n, n):
        raise ValueError(f"rho_local has shape {a.shape}, expected {(n, n)}")
    scale = 1.0 if n == 2 else np.sqrt(3.0) / 2.0
    comps = np.einsum("aij,ji->a", np.stack(basis.generators), a)
    residue = float(np.abs(comps.imag).max())
    if residue > IMAG_RESIDUE_TOL:
        raise ValueError(
            f"imaginary residue {residue:.3e} in the projection traces, "
            "input is not Hermitian"
        )
    return scale * comps.real
