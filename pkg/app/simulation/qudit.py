"""
Dense state vectors of n qudits of dimension q = p^m.

Basis states |x⟩, x ∈ F_q^n, are indexed in canonical integer order with
share 1 most significant. X(a)Z(b) acts as |x⟩ ↦ ω^{Tr⟨b, x⟩} |x + a⟩ with
ω = exp(2πi/p), which is the p-level operator X(a')Z(b') on the F_p
expansion (a'|b') of (a|b).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from app.algebra.finite_field import FieldSpec, as_ints, digits_to_elements, element_digits, phi_expand
from app.algebra.linalg import all_elements, as_share_set, coefficient_vectors
from app.codes.symplectic import CodeTriple, css_components
from app.core.config import config
from app.core.errors import AmbientMismatch, NotCss, StateTooLarge
from app.core.logging_config import get_logger
from app.schemes.advance_sharing import Scheme, advance_rep, encode_label
from app.simulation.measures import SubsystemDensity, reduce_states

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class QuantumState:
    field: FieldSpec
    n: int
    amplitudes: np.ndarray

    @property
    def q(self) -> int:
        return self.field.q

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def inner(self, other: "QuantumState") -> complex:
        """⟨self|other⟩."""
        if other.amplitudes.shape != self.amplitudes.shape:
            raise AmbientMismatch("states live on different spaces")
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def same_ray(self, other: "QuantumState", atol: float = 1e-10) -> bool:
        """Equal up to a global phase."""
        return abs(abs(self.inner(other)) - 1.0) < atol


def check_state_size(q: int, n: int) -> None:
    if q**n > config.ADVSHARE_MAX_AMPLITUDES:
        raise StateTooLarge(f"{q}^{n} amplitudes exceed ADVSHARE_MAX_AMPLITUDES = {config.ADVSHARE_MAX_AMPLITUDES}")


def basis_index(field: FieldSpec, elements: np.ndarray) -> np.ndarray:
    """Row-wise index of F_q^n vectors (integer encodings) in the state vector."""
    n = elements.shape[-1]
    return as_ints(elements) @ (field.q ** np.arange(n - 1, -1, -1, dtype=np.int64))


@lru_cache(maxsize=16)
def _basis_digits(field: FieldSpec, n: int) -> np.ndarray:
    """F_p digits of every basis label, shape (q^n, n·m), share-major."""
    elements = coefficient_vectors(field.q, n)
    return element_digits(field, elements).reshape(field.q**n, n * field.m)


def apply_pauli(state: QuantumState, vector: Sequence[int] | np.ndarray) -> QuantumState:
    """X(a)Z(b)|ψ⟩ for the symplectic vector (a|b) ∈ F_q^{2n}."""
    field, n = state.field, state.n
    vec = as_ints(vector).reshape(-1)
    if vec.size != 2 * n:
        raise AmbientMismatch(f"Pauli label has length {vec.size}, expected {2 * n}")
    expanded = as_ints(phi_expand(field, vec))
    shift, phase = expanded[: n * field.m], expanded[n * field.m :]

    digits = _basis_digits(field, n)
    exponents = (digits @ phase) % field.p
    shifted = (digits + shift) % field.p
    targets = basis_index(field, digits_to_elements(field, shifted.reshape(-1, n, field.m)))

    result = np.zeros_like(state.amplitudes)
    result[targets] = np.exp(2j * np.pi * exponents / field.p) * state.amplitudes
    return QuantumState(field=field, n=n, amplitudes=result)


def phi_state(triple: CodeTriple) -> QuantumState:
    """
    |φ⟩ = |C_X|^{-1/2} Σ_{c ∈ C_X} |c⟩ for C_max = {(a|b) : a ∈ C_X, b ∈ C_Z}.

    Raises:
        NotCss: C_max is not spanned by vectors of the shapes (a|0) and (0|b).
        StateTooLarge: q^n exceeds ``ADVSHARE_MAX_AMPLITUDES``.
    """
    field, n = triple.field, triple.n
    check_state_size(field.q, n)
    x_code, _, is_css = css_components(triple.c_max)
    if not is_css:
        raise NotCss(f"C_max of {triple!r} is not of CSS form; complete C_R with prefer_css")
    codewords = all_elements(x_code)
    amplitudes = np.zeros(field.q**n, dtype=np.complex128)
    amplitudes[basis_index(field, codewords)] = 1.0 / np.sqrt(codewords.shape[0])
    logger.debug("|φ⟩ for %r has %d nonzero amplitudes", triple, codewords.shape[0])
    return QuantumState(field=field, n=n, amplitudes=amplitudes)


def encode_state(
    scheme: Scheme,
    secret: Sequence[int],
    randomness: Sequence[int] | None = None,
    use_advance_rep: bool = False,
    base: QuantumState | None = None,
) -> QuantumState:
    """
    The codeword X(a)Z(b)|φ⟩ for the label of (m, r).

    With ``use_advance_rep`` the label is first replaced by its representative
    supported on B̄, which is how the dealer acts after B has been handed out.
    """
    label = encode_label(scheme, secret, randomness)
    vector = advance_rep(scheme, label) if use_advance_rep else label.vector
    return apply_pauli(base if base is not None else phi_state(scheme.triple), vector)


def codeword_amplitudes(scheme: Scheme, use_advance_rep: bool = False) -> np.ndarray:
    """
    Every codeword as an array of shape (q^k, q^s, q^n): secrets and coset
    choices in lexicographic order.
    """
    triple = scheme.triple
    phi = phi_state(triple)
    q = triple.q
    secrets = coefficient_vectors(q, scheme.k)
    choices = coefficient_vectors(q, scheme.s)
    states = np.zeros((secrets.shape[0], choices.shape[0], q**scheme.n), dtype=np.complex128)
    for i, m in enumerate(secrets):
        for j, r in enumerate(choices):
            states[i, j] = encode_state(scheme, m, r, use_advance_rep=use_advance_rep, base=phi).amplitudes
    logger.debug("Built %d codewords of %r", states.shape[0] * states.shape[1], triple)
    return states


def encode_density(
    scheme: Scheme,
    secret: Sequence[int],
    subsets: Iterable[Iterable[int]],
    use_advance_rep: bool = False,
) -> dict[tuple[int, ...], SubsystemDensity]:
    """
    ρ_m^A = q^{-s} Σ_r Tr_Ā |enc(m, r)⟩⟨enc(m, r)| for every requested A.

    Only the q^s pure codewords of m are held; no density on all n shares is formed.
    """
    triple = scheme.triple
    phi = phi_state(triple)
    choices = coefficient_vectors(triple.q, scheme.s)
    states = np.stack(
        [encode_state(scheme, secret, r, use_advance_rep=use_advance_rep, base=phi).amplitudes for r in choices]
    )
    densities = {}
    for subset in subsets:
        chosen = as_share_set(subset)
        densities[chosen] = reduce_states(states, scheme.n, triple.q, chosen)
    return densities
