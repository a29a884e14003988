"""
Reduced density matrices and the information measures used to certify
secrecy, reconstruction and advance sharing.

A SubsystemDensity keeps a factor W with ρ = W W†. Reduced states of pure
codewords are products of this form, and so are their uniform mixtures, so
spectra come from whichever of W W† and W† W is smaller.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np
from scipy.linalg import eigh, eigvalsh
from scipy.special import entr

from app.algebra.linalg import as_share_set, share_columns
from app.core.errors import DimensionMismatch, NotADensity

TRACE_TOLERANCE = 1e-10


@dataclass(frozen=True, eq=False)
class SubsystemDensity:
    """ρ on the shares ``subset`` (1-based), side q^{|A|}."""

    subset: tuple[int, ...]
    q: int
    factor: np.ndarray

    def __post_init__(self) -> None:
        if self.factor.ndim != 2 or self.factor.shape[0] != self.q ** len(self.subset):
            raise DimensionMismatch(
                f"factor of shape {self.factor.shape} does not match {len(self.subset)} qudits of dimension {self.q}"
            )
        trace = float(np.vdot(self.factor, self.factor).real)
        if abs(trace - 1.0) > TRACE_TOLERANCE:
            raise NotADensity(f"trace of the reduced state is {trace}, expected 1")

    @property
    def dim(self) -> int:
        return self.factor.shape[0]

    @property
    def width(self) -> int:
        return self.factor.shape[1]

    @cached_property
    def matrix(self) -> np.ndarray:
        return self.factor @ self.factor.conj().T

    def spectrum(self) -> np.ndarray:
        """Nonzero part of the spectrum, from the smaller Gram matrix."""
        w = self.factor
        gram = w @ w.conj().T if self.dim <= self.width else w.conj().T @ w
        return np.clip(eigvalsh(gram), 0.0, None)


def reduce_states(states: np.ndarray, n: int, q: int, subset: Sequence[int]) -> SubsystemDensity:
    """
    Uniform mixture of the pure states (rows of ``states``, each of length q^n)
    reduced to ``subset``: ρ = N^{-1} Σ_i Tr_Ā |ψ_i⟩⟨ψ_i|.
    """
    chosen = as_share_set(subset)
    keep = share_columns(chosen, n, symplectic=False)
    traced = [i for i in range(n) if i not in keep]
    rows = np.atleast_2d(states)
    count = rows.shape[0]
    tensor = rows.reshape((count,) + (q,) * n).transpose([0] + [1 + i for i in keep + traced])
    blocks = tensor.reshape(count, q ** len(keep), q ** len(traced))
    factor = blocks.transpose(1, 0, 2).reshape(q ** len(keep), count * q ** len(traced)) / np.sqrt(count)
    return SubsystemDensity(subset=chosen, q=q, factor=factor)


def _check_pair(rho: SubsystemDensity, sigma: SubsystemDensity) -> None:
    if rho.dim != sigma.dim:
        raise DimensionMismatch(f"cannot compare states of sides {rho.dim} and {sigma.dim}")


def trace_distance(rho: SubsystemDensity, sigma: SubsystemDensity) -> float:
    """
    ½‖ρ − σ‖₁.

    When the side exceeds the combined factor width, ρ − σ = Y J Y† with
    Y = [W_ρ, W_σ] and J = diag(I, −I); writing Y†Y = L L† its nonzero
    eigenvalues are those of L† J L.
    """
    _check_pair(rho, sigma)
    if rho.dim <= rho.width + sigma.width:
        eigenvalues = eigvalsh(rho.matrix - sigma.matrix)
    else:
        y = np.concatenate([rho.factor, sigma.factor], axis=1)
        values, vectors = eigh(y.conj().T @ y)
        root = vectors * np.sqrt(np.clip(values, 0.0, None))
        signs = np.concatenate([np.ones(rho.width), -np.ones(sigma.width)])
        eigenvalues = eigvalsh(root.conj().T @ (signs[:, None] * root))
    return 0.5 * float(np.abs(eigenvalues).sum())


def overlap(rho: SubsystemDensity, sigma: SubsystemDensity) -> float:
    """Tr(ρσ)."""
    _check_pair(rho, sigma)
    if rho.dim**2 <= rho.width * sigma.width:
        return float(np.sum(rho.matrix * sigma.matrix.conj()).real)
    cross = rho.factor.conj().T @ sigma.factor
    return float(np.vdot(cross, cross).real)


def von_neumann_entropy(rho: SubsystemDensity, base: float = 2) -> float:
    return float(entr(rho.spectrum()).sum() / np.log(base))


def mixture(states: Sequence[SubsystemDensity]) -> SubsystemDensity:
    """Uniform mixture of densities on the same subset."""
    first = states[0]
    for other in states[1:]:
        _check_pair(first, other)
    factor = np.concatenate([s.factor for s in states], axis=1) / np.sqrt(len(states))
    return SubsystemDensity(subset=first.subset, q=first.q, factor=factor)


def holevo(ensemble: Iterable[SubsystemDensity], base: float = 2) -> float:
    """χ = S(ρ̄) − mean S(ρ_i) for a uniform ensemble."""
    members = list(ensemble)
    if not members:
        raise DimensionMismatch("empty ensemble")
    average = von_neumann_entropy(mixture(members), base)
    return average - float(np.mean([von_neumann_entropy(rho, base) for rho in members]))
