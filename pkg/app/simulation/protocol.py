"""
Numerical certification of a scheme on the state-vector simulator.

For every share subset A the secret ensemble {ρ_m^A} is checked three ways:
secrecy (largest trace distance to ρ_0^A), distinguishability (largest
pairwise overlap) and the Holevo quantity in base q, which must equal the
leakage dimension ℓ(A). The advance set B is checked separately: every
codeword prepared through its B̄-supported representative must leave the
reduced state on B equal to that of |φ⟩.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable

import numpy as np

from app.algebra.linalg import as_share_set
from app.core.logging_config import get_logger
from app.core.printer import Printer
from app.models.report_schemas import ProtocolCertification, SubsetCertification
from app.schemes.advance_sharing import AccessClass, Scheme, all_subsets, classify, is_advance_shareable
from app.simulation.measures import holevo, overlap, reduce_states, trace_distance
from app.simulation.qudit import codeword_amplitudes, phi_state

logger = get_logger(__name__)

PROTOCOL_TOLERANCE = 1e-9
HOLEVO_TOLERANCE = 1e-6


def certify_subset(
    scheme: Scheme,
    codewords: np.ndarray,
    subset: Iterable[int],
    tolerance: float = PROTOCOL_TOLERANCE,
) -> SubsetCertification:
    """Metrics for one subset from the (q^k, q^s, q^n) array of codewords."""
    triple = scheme.triple
    chosen = as_share_set(subset)
    ensemble = [reduce_states(states, scheme.n, triple.q, chosen) for states in codewords]

    secrecy = max(trace_distance(rho, ensemble[0]) for rho in ensemble)
    distinguishability = max((overlap(a, b) for a, b in combinations(ensemble, 2)), default=0.0)
    chi = holevo(ensemble, base=triple.q)
    result = classify(triple, chosen)

    holevo_matches = abs(chi - result.leakage) < HOLEVO_TOLERANCE
    passed = holevo_matches
    if result.access is AccessClass.FORBIDDEN:
        passed = passed and secrecy < tolerance
    if result.access is AccessClass.QUALIFIED:
        passed = passed and distinguishability < tolerance
    if not holevo_matches:
        logger.warning("χ(%s) = %.9f differs from ℓ = %d", list(chosen), chi, result.leakage)

    return SubsetCertification(
        subset=list(chosen),
        leakage_dim=result.leakage,
        access_class=result.access.value,
        holevo=chi,
        holevo_matches=holevo_matches,
        secrecy=secrecy,
        distinguishability=distinguishability,
        passed=passed,
    )


def advance_invariance(scheme: Scheme) -> float:
    """
    max over (m, r) of the trace distance between Tr_B̄ |enc(m, r)⟩⟨enc(m, r)|
    and Tr_B̄ |φ⟩⟨φ|.

    Advance-shareable sets use the B̄-supported representatives. Otherwise the
    conventional codewords are compared, which measures how much B alone sees.
    """
    triple = scheme.triple
    shareable = is_advance_shareable(triple, scheme.advance_set)
    codewords = codeword_amplitudes(scheme, use_advance_rep=shareable).reshape(-1, triple.q**scheme.n)
    reference = reduce_states(phi_state(triple).amplitudes, scheme.n, triple.q, scheme.advance_set)
    return max(
        trace_distance(reduce_states(state, scheme.n, triple.q, scheme.advance_set), reference)
        for state in codewords
    )


def verify_protocol(
    scheme: Scheme,
    subsets: Iterable[Iterable[int]] | None = None,
    tolerance: float = PROTOCOL_TOLERANCE,
    printer: Printer | None = None,
) -> ProtocolCertification:
    """
    Certify every requested subset (all 2^n by default) and the advance set of ``scheme``.

    Raises:
        NotCss: C_max is not of CSS form.
        StateTooLarge: q^n exceeds ``ADVSHARE_MAX_AMPLITUDES``.
    """
    triple = scheme.triple
    chosen = all_subsets(scheme.n) if subsets is None else [as_share_set(a) for a in subsets]

    if printer:
        printer.update_item("codewords", f"⚛️ Preparing {triple.q ** (scheme.k + scheme.s)} codewords...")
    codewords = codeword_amplitudes(scheme)
    if printer:
        printer.mark_item_done("codewords")

    records = []
    for index, subset in enumerate(chosen, start=1):
        if printer:
            printer.update_item("subsets", f"🔍 Certifying subset {index}/{len(chosen)}: {list(subset)}")
        records.append(certify_subset(scheme, codewords, subset, tolerance))
    if printer:
        printer.update_item("subsets", f"🔍 Certified {len(chosen)} subsets", is_done=True)
        printer.update_item("advance", f"📦 Checking advance set {list(scheme.advance_set)}...")

    invariance = advance_invariance(scheme)
    shareable = is_advance_shareable(triple, scheme.advance_set)
    if printer:
        printer.mark_item_done("advance")

    all_passed = all(r.passed for r in records) and (not shareable or invariance < tolerance)
    logger.debug("Certified %d subsets of %r, all passed: %s", len(records), triple, all_passed)
    return ProtocolCertification(
        q=triple.q,
        n=scheme.n,
        k=scheme.k,
        s=scheme.s,
        advance_set=list(scheme.advance_set),
        advance_shareable=shareable,
        advance_invariance=invariance,
        tolerance=tolerance,
        subsets=records,
        all_passed=all_passed,
    )
