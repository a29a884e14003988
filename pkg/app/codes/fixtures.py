"""
Literal schemes used by the demos and tests: the two-qubit Bell-pair scheme
and the ternary length-4 scheme built on the doubly-extended [4, 2, 3]_3
Reed-Solomon code.
"""
from __future__ import annotations

import numpy as np

from app.algebra.finite_field import field_new
from app.algebra.linalg import Subspace
from app.codes.symplectic import CodeTriple, validate_triple

# basis of the doubly-extended [4, 2, 3]_3 Reed-Solomon code
TERNARY_V1 = (1, 1, 1, 0)
TERNARY_V2 = (2, 1, 0, 1)

# H of the ternary scheme for the C_max basis (v1|0), (0|v1), (v2|0), (0|v2)
TERNARY_PARITY = (
    (0, 0, 0, 0, 2, 2, 2, 0),
    (1, 1, 1, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 1, 2, 0, 2),
    (2, 1, 0, 1, 0, 0, 0, 0),
)


def _x_row(v: tuple[int, ...]) -> list[int]:
    return list(v) + [0] * len(v)


def _z_row(v: tuple[int, ...]) -> list[int]:
    return [0] * len(v) + list(v)


def ternary_c_max_rows() -> np.ndarray:
    """C_max basis in the order matching TERNARY_PARITY."""
    return np.array([_x_row(TERNARY_V1), _z_row(TERNARY_V1), _x_row(TERNARY_V2), _z_row(TERNARY_V2)])


def bell_pair_triple() -> CodeTriple:
    """
    q = 2, n = 2, k = 2, s = 0: |φ⟩ is the Bell state (|00⟩ + |11⟩)/√2 and the
    two secret bits pick one of the four Bell states.
    """
    field = field_new(2)
    c_max = Subspace.span(field.gf, [[1, 1, 0, 0], [0, 0, 1, 1]], symplectic=True)
    c_s = Subspace.zero(field.gf, 4, symplectic=True)
    return validate_triple(field, c_s, c_max, c_max, n=2, k=2, s=0)


def ternary_rs4_triple() -> CodeTriple:
    """q = 3, n = 4, k = s = 2 with C_S = {0}, C_R = ⟨(v1|0), (0|v1)⟩ and C_max = ⟨(v1|0), (v2|0), (0|v1), (0|v2)⟩."""
    field = field_new(3)
    gf = field.gf
    c_s = Subspace.zero(gf, 8, symplectic=True)
    c_r = Subspace.span(gf, [_x_row(TERNARY_V1), _z_row(TERNARY_V1)], symplectic=True)
    c_max = Subspace.span(gf, ternary_c_max_rows(), symplectic=True)
    return validate_triple(field, c_s, c_r, c_max, n=4, k=2, s=2)


DEMO_TRIPLES = {
    "gottesman": bell_pair_triple,
    "example3b": ternary_rs4_triple,
}

DEMO_ALIASES = {
    "bell-pair": "gottesman",
    "ternary-rs4": "example3b",
}

DEMO_ADVANCE_SETS = {
    "gottesman": (1,),
    "example3b": (1, 2),
}

# C_max bases in the order the worked examples list them, with H for that order
DEMO_LISTED_C_MAX = {
    "example3b": (ternary_c_max_rows, TERNARY_PARITY),
}


def demo_names() -> list[str]:
    return sorted([*DEMO_TRIPLES, *DEMO_ALIASES])


def resolve_demo(name: str) -> str:
    """Canonical demo name for ``name`` or one of its aliases."""
    return DEMO_ALIASES.get(name, name)
