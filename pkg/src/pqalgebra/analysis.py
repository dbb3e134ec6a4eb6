"""Conjugation, norms, brackets, associators, and identity checking.

Everything here works over a parametrised product algebra described by an
``AlgebraSpec``.  Conjugation flips the non-scalar coordinates and, when the
linear parameter is nonzero, folds a multiple of their sum back into the
scalar slot; the pair rule used at dimension 16 reduces to the same thing
when that parameter vanishes.  The norm is the plain (unconjugated) bilinear
form whose leading minors are powers of the negated discriminant.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (
    DEFAULT_TOL,
    AlgebraSpec,
    Element,
    conj_array,
    epsilon_array,
    multiply,
)
from .errors import ComplexParameters, DegenerateNorm

__all__ = [
    "Classification",
    "IdentityReport",
    "NormForm",
    "associator_direct",
    "associator_formula",
    "bracket",
    "check_identity",
    "classify",
    "conjugate",
    "conjugate_array",
    "inverse",
    "norm",
    "norm_array",
    "norm_form",
    "norms_equivalent",
    "solve",
]

IDENTITIES = (
    "commutativity",
    "associativity",
    "left-alt",
    "right-alt",
    "flexible",
    "norm-composition",
)


def conjugate_array(spec: AlgebraSpec, coeffs: np.ndarray) -> np.ndarray:
    """Conjugate a batch of coefficient vectors (last axis is the algebra)."""
    a = np.asarray(coeffs, dtype=np.complex128)
    if a.shape[-1] != spec.dim:
        raise ValueError(f"expected last axis {spec.dim}, got {a.shape[-1]}")
    if spec.dim <= 8:
        return conj_array(spec.p, a)
    # pair rule: scalar-half correction keeps the involution exact at dim 16
    a1, a2 = a[..., :8], a[..., 8:]
    first = conj_array(spec.p, a1) - (spec.p / 2) * (a2 + conj_array(spec.p, a2))
    return np.concatenate([first, -a2], axis=-1)


def conjugate(spec: AlgebraSpec, x: Element) -> Element:
    return Element(conjugate_array(spec, x.coeffs))


def _norm_matrix(dim: int, p: complex, q: complex) -> np.ndarray:
    c = np.full((dim, dim), p * p / 4, dtype=np.complex128)
    np.fill_diagonal(c, q)
    c[0, :] = -p / 2
    c[:, 0] = -p / 2
    c[0, 0] = 1.0
    return c


@dataclass(frozen=True)
class NormForm:
    """Symmetric matrix of the norm's bilinear form."""

    dim: int
    C: np.ndarray

    def leading_minors(self) -> list[complex]:
        return [complex(np.linalg.det(self.C[:k, :k])) for k in range(1, self.dim + 1)]


def norm_form(spec: AlgebraSpec) -> NormForm:
    return NormForm(dim=spec.dim, C=_norm_matrix(spec.dim, spec.p, spec.q))


def norm_array(spec: AlgebraSpec, coeffs: np.ndarray) -> np.ndarray:
    a = np.asarray(coeffs, dtype=np.complex128)
    if a.shape[-1] != spec.dim:
        raise ValueError(f"expected last axis {spec.dim}, got {a.shape[-1]}")
    c = _norm_matrix(spec.dim, spec.p, spec.q)
    return np.einsum("...i,ij,...j->...", a, c, a)


def norm(spec: AlgebraSpec, x: Element) -> complex:
    return complex(norm_array(spec, x.coeffs))


def inverse(spec: AlgebraSpec, x: Element, tol: float = DEFAULT_TOL) -> Element:
    n = norm(spec, x)
    if abs(n) <= tol:
        raise DegenerateNorm(f"norm {n!r} too small to invert")
    return conjugate(spec, x) / n


def solve(spec: AlgebraSpec, b: Element, a: Element, side: str = "left",
          tol: float = DEFAULT_TOL) -> Element:
    """Solve b*x = a (side="left") or x*b = a (side="right")."""
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    n = norm(spec, b)
    if abs(n) <= tol:
        raise DegenerateNorm(f"divisor norm {n!r} too small")
    bc = conjugate(spec, b)
    prod = multiply(spec, bc, a) if side == "left" else multiply(spec, a, bc)
    return prod / n


def _check_unit_index(spec: AlgebraSpec, name: str, idx: int) -> None:
    if not 1 <= idx < spec.dim:
        raise IndexError(f"{name} must be in 1..{spec.dim - 1}, got {idx}")


def bracket(spec: AlgebraSpec, i: int, j: int) -> tuple[Element, Element]:
    """Commutator and anticommutator of two non-scalar units, in closed form."""
    if spec.dim == 16:
        raise ValueError("bracket formulas cover dimensions 2, 4, 8")
    _check_unit_index(spec, "i", i)
    _check_unit_index(spec, "j", j)
    p, dim = spec.p, spec.dim
    eps = epsilon_array(dim)
    comm = np.zeros(dim, dtype=np.complex128)
    comm[0] = p * spec.sqrt_neg_d * np.sum(eps[i, j])
    comm += 2 * spec.sqrt_neg_d * eps[i, j]
    anti = np.zeros(dim, dtype=np.complex128)
    anti[0] = 2 * ((spec.D if i == j else 0.0) - p * p / 4)
    anti[i] -= p
    anti[j] -= p
    return Element(comm), Element(anti)


def associator_direct(spec: AlgebraSpec, x: Element, y: Element, z: Element) -> Element:
    return multiply(spec, multiply(spec, x, y), z) - multiply(spec, x, multiply(spec, y, z))


def associator_formula(spec: AlgebraSpec, i: int, j: int, k: int) -> Element:
    """Closed form for the associator of three non-scalar units."""
    if spec.dim == 16:
        raise ValueError("associator formula covers dimensions 2, 4, 8")
    for name, idx in (("i", i), ("j", j), ("k", k)):
        _check_unit_index(spec, name, idx)
    p, dim = spec.p, spec.dim
    eps = epsilon_array(dim)
    h1 = eps[i, j] @ eps[:, k, :]
    h2 = eps[j, k] @ eps[i]
    d_ij = 1.0 if i == j else 0.0
    d_jk = 1.0 if j == k else 0.0
    out = (h1 - h2).astype(np.complex128)
    out[0] -= (p / 2) * (d_ij - d_jk - np.sum(h1) + np.sum(h2))
    out[i] += d_jk
    out[k] -= d_ij
    return Element(-spec.D * out)


_KIND_NIL = "nil-degenerate"
_KIND_DIVISION = "division"
_KIND_SPLIT = "split"


def _is_effectively_real(z: complex, tol: float = DEFAULT_TOL) -> bool:
    return abs(z.imag) < tol * (1 + abs(z.real))


@dataclass(frozen=True)
class Classification:
    kind: str
    minors: list[complex]

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "minors": [[float(m.real), float(m.imag)] for m in self.minors],
        }


def classify(p: complex, q: complex, dim: int = 4) -> Classification:
    """Sort parameters into nil-degenerate, division, or split."""
    p, q = complex(p), complex(q)
    neg_d = q - p * p / 4
    minors = NormForm(dim, _norm_matrix(dim, p, q)).leading_minors()
    if abs(neg_d) <= DEFAULT_TOL:
        kind = _KIND_NIL
    elif _is_effectively_real(p) and _is_effectively_real(q) and neg_d.real > DEFAULT_TOL:
        kind = _KIND_DIVISION
    else:
        kind = _KIND_SPLIT
    return Classification(kind=kind, minors=minors)


def _signature(c: np.ndarray) -> tuple[int, int, int]:
    eigs = np.linalg.eigvalsh(c)
    cut = DEFAULT_TOL * max(1.0, float(np.max(np.abs(eigs))))
    return (int(np.sum(eigs > cut)), int(np.sum(eigs < -cut)),
            int(np.sum(np.abs(eigs) <= cut)))


def norms_equivalent(a: AlgebraSpec, b: AlgebraSpec) -> bool:
    """Whether two real-parameter norms have congruent bilinear forms."""
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    for spec in (a, b):
        if not (_is_effectively_real(spec.p) and _is_effectively_real(spec.q)):
            raise ComplexParameters("norm signatures require real parameters")
    ca = _norm_matrix(a.dim, a.p.real, a.q.real).real
    cb = _norm_matrix(b.dim, b.p.real, b.q.real).real
    return _signature(ca) == _signature(cb)


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    trials: int
    seed: int
    max_residual: float
    counterexample: dict[str, Element] | None

    def to_json(self) -> dict:
        ce = None
        if self.counterexample is not None:
            ce = {name: el.to_json() for name, el in self.counterexample.items()}
        return {
            "identity": self.identity,
            "trials": self.trials,
            "seed": self.seed,
            "max_residual": self.max_residual,
            "counterexample": ce,
        }


def check_identity(spec: AlgebraSpec, identity: str, trials: int = 1000,
                   seed: int = 0, tol: float = DEFAULT_TOL) -> IdentityReport:
    """Randomised check of a multiplicative identity.

    Each trial draws its operands from an independent generator keyed by
    (seed, trial index), so reports are reproducible regardless of batching.
    The residual is the max-abs difference of the two sides, relative to the
    larger side (floored at 1).  The counterexample is the first trial whose
    residual exceeds ``tol``.
    """
    if identity not in IDENTITIES:
        raise ValueError(f"unknown identity {identity!r}; choose from {IDENTITIES}")
    count = 3 if identity == "associativity" else 2
    draws = np.empty((trials, count, spec.dim), dtype=np.complex128)
    for t in range(trials):
        raw = np.random.default_rng([seed, t]).uniform(-1.0, 1.0, (count, spec.dim, 2))
        draws[t] = raw[..., 0] + 1j * raw[..., 1]
    x, y = draws[:, 0], draws[:, 1]
    if identity == "norm-composition":
        ln = norm_array(spec, spec.mul_array(x, y))
        rn = norm_array(spec, x) * norm_array(spec, y)
        residuals = np.abs(ln - rn) / np.maximum(1.0, np.maximum(np.abs(ln), np.abs(rn)))
    else:
        if identity == "commutativity":
            lhs, rhs = spec.mul_array(x, y), spec.mul_array(y, x)
        elif identity == "associativity":
            z = draws[:, 2]
            lhs = spec.mul_array(spec.mul_array(x, y), z)
            rhs = spec.mul_array(x, spec.mul_array(y, z))
        elif identity == "left-alt":
            lhs = spec.mul_array(spec.mul_array(x, x), y)
            rhs = spec.mul_array(x, spec.mul_array(x, y))
        elif identity == "right-alt":
            lhs = spec.mul_array(spec.mul_array(y, x), x)
            rhs = spec.mul_array(y, spec.mul_array(x, x))
        else:  # flexible
            lhs = spec.mul_array(spec.mul_array(x, y), x)
            rhs = spec.mul_array(x, spec.mul_array(y, x))
        scale = np.maximum(1.0, np.maximum(np.max(np.abs(lhs), axis=-1),
                                           np.max(np.abs(rhs), axis=-1)))
        residuals = np.max(np.abs(lhs - rhs), axis=-1) / scale
    bad = np.nonzero(residuals > tol)[0]
    counterexample = None
    if bad.size:
        t = int(bad[0])
        counterexample = {"X": Element(draws[t, 0]), "Y": Element(draws[t, 1])}
        if count == 3:
            counterexample["Z"] = Element(draws[t, 2])
    max_residual = float(np.max(residuals)) if trials else 0.0
    return IdentityReport(identity=identity, trials=trials, seed=seed,
                          max_residual=max_residual, counterexample=counterexample)
