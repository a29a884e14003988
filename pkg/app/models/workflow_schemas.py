from dataclasses import dataclass, field
from typing import Optional

from app.codes.symplectic import CodeTriple
from app.schemes.classical import ClassicalScheme


@dataclass
class CertificationWorkflowConfig:
    name: str
    triple: CodeTriple
    advance_set: tuple[int, ...] = ()
    subsets: Optional[list[tuple[int, ...]]] = None
    tolerance: float = 1e-9
    with_advance_reps: bool = False
    show_progress: bool = True
    show_tables: bool = True
    save: bool = False
    refresh: bool = False

    def inputs(self) -> dict:
        return {
            "name": self.name,
            "q": self.triple.q,
            "n": self.triple.n,
            "k": self.triple.k,
            "s": self.triple.s,
            "advance_set": list(self.advance_set),
            "subsets": None if self.subsets is None else [list(a) for a in self.subsets],
            "tolerance": self.tolerance,
        }


@dataclass
class ClassicalComparisonWorkflowConfig:
    name: str
    scheme: ClassicalScheme
    advance_set: Optional[tuple[int, ...]] = None
    base: float = 2
    show_progress: bool = True
    show_tables: bool = True
    save: bool = False
    extra_inputs: dict = field(default_factory=dict)

    def inputs(self) -> dict:
        return {
            "name": self.name,
            "q": self.scheme.q,
            "n": self.scheme.n,
            "k": self.scheme.k,
            "advance_set": None if self.advance_set is None else list(self.advance_set),
            "base": self.base,
            **self.extra_inputs,
        }
