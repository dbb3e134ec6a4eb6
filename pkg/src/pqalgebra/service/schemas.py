"""Request and response bodies. Complex scalars travel as [re, im] pairs."""

from __future__ import annotations

from typing import Optional, Union

from pydantic import BaseModel

ComplexPair = tuple[float, float]


def to_complex(pair: ComplexPair) -> complex:
    return complex(pair[0], pair[1])


def from_complex(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


class ElementBody(BaseModel):
    dim: int
    coeffs: list[ComplexPair]


class TableRequest(BaseModel):
    family: str
    p: ComplexPair = (0.0, 0.0)
    q: ComplexPair = (1.0, 0.0)
    branch: str = "upper"


class TableResponse(BaseModel):
    family: str
    dim: int
    p: ComplexPair
    q: ComplexPair
    table: list[list[ElementBody]]


class MultiplyRequest(BaseModel):
    family: str
    p: ComplexPair = (0.0, 0.0)
    q: ComplexPair = (1.0, 0.0)
    branch: str = "upper"
    x: list[ComplexPair]
    y: list[ComplexPair]


class MultiplyResponse(BaseModel):
    element: ElementBody


class NormRequest(BaseModel):
    family: str
    p: ComplexPair = (0.0, 0.0)
    q: ComplexPair = (1.0, 0.0)
    branch: str = "upper"
    x: list[ComplexPair]


class NormResponse(BaseModel):
    value: ComplexPair


class ClassifyRequest(BaseModel):
    p: ComplexPair
    q: ComplexPair
    dim: int = 4


class ClassifyResponse(BaseModel):
    kind: str
    minors: list[ComplexPair]


class RepresentationRequest(BaseModel):
    family: str
    p: ComplexPair = (0.0, 0.0)
    q: ComplexPair = (1.0, 0.0)
    branch: str = "upper"
    sqrt_d: Optional[ComplexPair] = None


class MatrixBody(BaseModel):
    coeff_dim: int
    entries: list[list[ElementBody]]


class RepresentationResponse(BaseModel):
    coeff_dim: int
    labels: list[str]
    mats: list[MatrixBody]


class PowerRequest(BaseModel):
    rho: Union[str, float] = "1"
    k: float
    theta: float


class PowerResponse(BaseModel):
    element: ElementBody
    p: ComplexPair
    q: ComplexPair
    rho: str
    k: float
    theta: float


class VerifyRequest(BaseModel):
    family: str
    p: ComplexPair = (0.0, 0.0)
    q: ComplexPair = (1.0, 0.0)
    branch: str = "upper"
    identity: str
    trials: int = 1000
    seed: int = 0
    tol: float = 1e-9


class VerifyResponse(BaseModel):
    identity: str
    trials: int
    max_residual: float
    counterexample: Optional[dict[str, ElementBody]]
    seed: int


class HealthResponse(BaseModel):
    status: str
