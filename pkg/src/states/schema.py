# src/states/schema.py
from typing import List, Literal, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, Field, field_validator, model_validator

from ..fourier.trig_poly import TrigPoly
from .measure import CircleMeasure
from .moments import MomentState
from .pure import PureState

Pair = Tuple[float, float]


def _to_pairs(values: np.ndarray) -> List[Pair]:
    return [(float(v.real), float(v.imag)) for v in np.asarray(values, dtype=complex)]


def _from_pairs(pairs: List[Pair]) -> np.ndarray:
    return np.array([complex(re, im) for re, im in pairs], dtype=complex)


class PureStateRecord(BaseModel):
    """Pure state persisted by its root angles."""
    kind: Literal["pure"] = "pure"
    n: int = Field(..., ge=1, description="System size")
    roots: List[float] = Field(default_factory=list, description="The n-1 root angles in radians")

    @model_validator(mode="after")
    def check_root_count(self):
        if len(self.roots) != self.n - 1:
            raise ValueError(f"A pure state of size {self.n} has {self.n - 1} roots, got {len(self.roots)}")
        return self

    @classmethod
    def from_state(cls, state: PureState) -> "PureStateRecord":
        return cls(n=state.n, roots=[float(r) for r in state.roots])

    def to_state(self) -> PureState:
        return PureState(np.array(self.roots, dtype=float))


class MomentStateRecord(BaseModel):
    """General state persisted by its moments m_k, k = -(n-1)..n-1, as [re, im] pairs."""
    kind: Literal["moment"] = "moment"
    n: int = Field(..., ge=1, description="System size")
    moments: List[Pair] = Field(..., description="Moments as [re, im] pairs")

    @model_validator(mode="after")
    def check_moments(self):
        if len(self.moments) != 2 * self.n - 1:
            raise ValueError(f"Expected {2 * self.n - 1} moments for n={self.n}, got {len(self.moments)}")
        m0 = self.moments[self.n - 1]
        if abs(m0[0] - 1.0) > 1e-9 or abs(m0[1]) > 1e-9:
            raise ValueError(f"m_0 must be 1, got {m0}")
        return self

    @classmethod
    def from_state(cls, state: MomentState) -> "MomentStateRecord":
        return cls(n=state.n, moments=_to_pairs(state.moments))

    def to_state(self) -> MomentState:
        return MomentState(self.n, _from_pairs(self.moments))


class CircleMeasureRecord(BaseModel):
    """Circle measure persisted as [angle, weight] atoms plus density coefficients."""
    kind: Literal["measure"] = "measure"
    atoms: List[Pair] = Field(default_factory=list, description="Atoms as [angle, weight] pairs")
    degree: Optional[int] = Field(None, ge=0, description="Degree of the density, if any")
    density: Optional[List[Pair]] = Field(None, description="Density coefficients k=-degree..degree as [re, im] pairs")

    @field_validator("atoms")
    @classmethod
    def check_weights(cls, v):
        for angle, weight in v:
            if weight < 0:
                raise ValueError(f"Atom at angle {angle} has negative weight {weight}")
        return v

    @model_validator(mode="after")
    def check_density(self):
        if self.density is None:
            return self
        if self.degree is None:
            self.degree = (len(self.density) - 1) // 2
        if len(self.density) != 2 * self.degree + 1:
            raise ValueError(f"Expected {2 * self.degree + 1} density coefficients, got {len(self.density)}")
        return self

    @classmethod
    def from_measure(cls, mu: CircleMeasure) -> "CircleMeasureRecord":
        atoms = [(float(a), float(w)) for a, w in zip(mu.angles, mu.weights)]
        if mu.density is None:
            return cls(atoms=atoms)
        return cls(atoms=atoms, degree=mu.density.degree, density=_to_pairs(mu.density.coeffs))

    def to_state(self) -> CircleMeasure:
        density = None
        if self.density is not None:
            density = TrigPoly(_from_pairs(self.density), real=True)
        angles = np.array([a for a, _ in self.atoms], dtype=float)
        weights = np.array([w for _, w in self.atoms], dtype=float)
        return CircleMeasure(angles, weights, density)


StateRecord = Union[PureStateRecord, MomentStateRecord, CircleMeasureRecord]
