"""Core parameterized hypercomplex algebras.

A family member is a unital algebra over complex scalars with basis
e0..e(d-1), d in {2, 4, 8, 16}.  e0 is the identity.  Every imaginary
unit satisfies

    e_i * e_i = -q*e0 - p*e_i        (i >= 1)

and distinct imaginary units multiply through an oriented triple table
weighted by sqrt(-D), where D = p**2/4 - q:

    e_i * e_j = (eps(i,j,k)*(p/2)*sqrt(-D) - p**2/4)*e0
                - (p/2)*e_i - (p/2)*e_j + eps(i,j,k)*sqrt(-D)*e_k

with eps the alternating symbol of the triple set (one triple for
dim 4, seven for dim 8).  The dim-16 algebra has no closed unit rule;
its table is generated from the doubling product `cd_product` over
dim-8 halves.  Setting p=0, q=1 recovers the classical complex,
quaternion, octonion and sedenion tables.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .errors import SingularParameter, UnsupportedTransform

DEFAULT_TOL = 1e-9

FAMILY_DIMS = {"C": 2, "Q": 4, "O": 8, "S": 16}
_FAMILY_BY_DIM = {1: "R", 2: "C", 4: "Q", 8: "O", 16: "S"}

# Oriented unit triples; each (a, b, c) means e_a*e_b = +sqrt(-D)*e_c
# (plus the shared scalar/linear terms above).
TRIPLES_DIM4 = ((1, 2, 3),)
TRIPLES_DIM8 = ((1, 2, 3), (1, 4, 5), (1, 7, 6), (2, 4, 6),
                (2, 5, 7), (3, 4, 7), (3, 6, 5))


def triples_for_dim(dim: int) -> tuple[tuple[int, int, int], ...]:
    if dim == 4:
        return TRIPLES_DIM4
    if dim == 8:
        return TRIPLES_DIM8
    return ()


@lru_cache(maxsize=None)
def _pair_table(dim: int) -> dict[tuple[int, int], tuple[int, int]]:
    """Map an ordered pair (i, j) of distinct units to (k, sign)."""
    out: dict[tuple[int, int], tuple[int, int]] = {}
    for a, b, c in triples_for_dim(dim):
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            out[(x, y)] = (z, 1)
            out[(y, x)] = (z, -1)
    return out


@lru_cache(maxsize=None)
def _epsilon_table(dim: int) -> dict[tuple[int, int, int], int]:
    """Full alternating symbol on ordered triples of unit indices."""
    out: dict[tuple[int, int, int], int] = {}
    for a, b, c in triples_for_dim(dim):
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            out[(x, y, z)] = 1
        for x, y, z in ((c, b, a), (b, a, c), (a, c, b)):
            out[(x, y, z)] = -1
    return out


def epsilon(dim: int, i: int, j: int, k: int) -> int:
    return _epsilon_table(dim).get((i, j, k), 0)


@lru_cache(maxsize=None)
def epsilon_array(dim: int) -> np.ndarray:
    """Dense alternating symbol, indexed by full unit indices 0..dim-1."""
    e = np.zeros((dim, dim, dim))
    for (i, j, k), sign in _epsilon_table(dim).items():
        e[i, j, k] = sign
    e.setflags(write=False)
    return e


@dataclass(frozen=True, eq=False)
class Element:
    """One algebra element: a dense complex coefficient vector over e0..e(d-1)."""

    coeffs: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.coeffs, dtype=np.complex128)
        if arr.ndim != 1 or len(arr) not in (1, 2, 4, 8, 16):
            raise ValueError(f"bad coefficient vector of shape {arr.shape}")
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    @classmethod
    def zero(cls, dim: int) -> "Element":
        return cls(np.zeros(dim))

    @classmethod
    def basis(cls, dim: int, m: int) -> "Element":
        if not 0 <= m < dim:
            raise IndexError(f"unit index {m} out of range for dim {dim}")
        c = np.zeros(dim)
        c[m] = 1.0
        return cls(c)

    def __add__(self, other: "Element") -> "Element":
        return Element(self.coeffs + other.coeffs)

    def __sub__(self, other: "Element") -> "Element":
        return Element(self.coeffs - other.coeffs)

    def __neg__(self) -> "Element":
        return Element(-self.coeffs)

    def __mul__(self, scalar: complex) -> "Element":
        return Element(self.coeffs * scalar)

    __rmul__ = __mul__

    def __truediv__(self, scalar: complex) -> "Element":
        return Element(self.coeffs / scalar)

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.coeffs)))

    def allclose(self, other: "Element", tol: float = DEFAULT_TOL) -> bool:
        scale = max(1.0, self.max_abs(), other.max_abs())
        return bool(np.max(np.abs(self.coeffs - other.coeffs)) <= tol * scale)

    def to_json(self) -> dict:
        return {"dim": self.dim,
                "coeffs": [[float(z.real), float(z.imag)] for z in self.coeffs]}

    @classmethod
    def from_json(cls, payload: dict) -> "Element":
        coeffs = [complex(re, im) for re, im in payload["coeffs"]]
        if len(coeffs) != payload["dim"]:
            raise ValueError("dim does not match coefficient count")
        return cls(np.array(coeffs))

    def __repr__(self) -> str:
        return f"Element({list(self.coeffs)})"


@dataclass(frozen=True)
class PairView:
    """An element of a doubled algebra written as an ordered pair of halves."""

    first: Element
    second: Element

    def __post_init__(self) -> None:
        if self.first.dim != self.second.dim:
            raise ValueError("pair halves must share a dimension")

    @property
    def half_dim(self) -> int:
        return self.first.dim

    def flat(self) -> np.ndarray:
        return np.concatenate([self.first.coeffs, self.second.coeffs])

    @classmethod
    def from_flat(cls, coeffs: np.ndarray) -> "PairView":
        coeffs = np.asarray(coeffs)
        h = len(coeffs) // 2
        return cls(Element(coeffs[:h]), Element(coeffs[h:]))


@dataclass(frozen=True, eq=False)
class StructureTable:
    """Dense unit-product table: tensor[i, j, k] = coefficient of e_k in e_i*e_j."""

    dim: int
    tensor: np.ndarray

    def entry(self, i: int, j: int) -> Element:
        if not (0 <= i < self.dim and 0 <= j < self.dim):
            raise IndexError(f"unit index ({i}, {j}) out of range for dim {self.dim}")
        return Element(self.tensor[i, j])


@dataclass(frozen=True, eq=False)
class AlgebraSpec:
    """A fully-built algebra: parameters, derived roots and the product table."""

    family: str
    dim: int
    p: complex
    q: complex
    branch: str
    D: complex
    sqrt_d: complex
    sqrt_neg_d: complex
    table: StructureTable

    @cached_property
    def half_spec(self) -> "AlgebraSpec":
        """The half-dimension algebra used by the doubling product."""
        if self.dim == 1:
            raise ValueError("scalars do not halve")
        return _spec_for_dim(self.dim // 2, self.p, self.q, self.branch)

    def unit(self, m: int) -> Element:
        return Element.basis(self.dim, m)

    def zero(self) -> Element:
        return Element.zero(self.dim)

    def mul_array(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Bilinear product on raw coefficient arrays; broadcasts leading axes."""
        return np.einsum("...i,...j,ijk->...k", x, y, self.table.tensor)

    @cached_property
    def _unit_transform(self) -> np.ndarray:
        return transform_matrix(self.dim, self.p, self.sqrt_neg_d)

    def to_units_array(self, flat: np.ndarray) -> np.ndarray:
        return np.asarray(flat, dtype=np.complex128) @ self._unit_transform.T

    def to_pair_array(self, coeffs: np.ndarray, tol: float = DEFAULT_TOL) -> np.ndarray:
        if abs(self.sqrt_neg_d) <= tol:
            raise SingularParameter(
                f"unit transform is not invertible: sqrt(-D) = {self.sqrt_neg_d}")
        inv = np.linalg.inv(self._unit_transform)
        return np.asarray(coeffs, dtype=np.complex128) @ inv.T

    def __repr__(self) -> str:
        return f"AlgebraSpec({self.family}, p={self.p}, q={self.q}, branch={self.branch})"


def _validate_scalar(name: str, z: complex) -> complex:
    z = complex(z)
    if not (cmath.isfinite(z)):
        raise ValueError(f"{name} must be finite, got {z}")
    return z


def _build_table_from_triples(dim: int, p: complex, q: complex,
                              sqrt_neg_d: complex) -> np.ndarray:
    t = np.zeros((dim, dim, dim), dtype=np.complex128)
    pairs = _pair_table(dim)
    for j in range(dim):
        t[0, j, j] = 1.0
        t[j, 0, j] = 1.0
    for i in range(1, dim):
        t[i, i, 0] = -q
        t[i, i, i] = -p
        for j in range(1, dim):
            if i == j:
                continue
            k, sign = pairs[(i, j)]
            t[i, j, 0] = sign * (p / 2) * sqrt_neg_d - p * p / 4
            t[i, j, i] += -p / 2
            t[i, j, j] += -p / 2
            t[i, j, k] += sign * sqrt_neg_d
    return t


def _build_doubled_table(half: AlgebraSpec) -> np.ndarray:
    """Unit table of the doubled algebra, generated from the pair product."""
    h = half.dim
    eye = np.eye(h, dtype=np.complex128)
    zero = np.zeros((h, h), dtype=np.complex128)
    # halves of all 2h units: unit m < h is (e_m, 0); unit h+m is (0, e_m)
    a1 = np.concatenate([eye, zero])[:, None, :]
    a2 = np.concatenate([zero, eye])[:, None, :]
    b1 = np.concatenate([eye, zero])[None, :, :]
    b2 = np.concatenate([zero, eye])[None, :, :]
    first, second = _cd_arrays(half, a1, a2, b1, b2)
    return np.concatenate([first, second], axis=-1)


def _spec_for_dim(dim: int, p: complex, q: complex, branch: str) -> AlgebraSpec:
    family = _FAMILY_BY_DIM[dim]
    d = p * p / 4 - q
    sqrt_d = cmath.sqrt(d)
    sqrt_neg_d = cmath.sqrt(-d)
    if dim == 1:
        tensor = np.ones((1, 1, 1), dtype=np.complex128)
    elif dim <= 8:
        tensor = _build_table_from_triples(dim, p, q, sqrt_neg_d)
    else:
        half = _spec_for_dim(8, p, q, branch)
        tensor = _build_doubled_table(half)
    table = StructureTable(dim=dim, tensor=tensor)
    return AlgebraSpec(family=family, dim=dim, p=p, q=q, branch=branch,
                       D=d, sqrt_d=sqrt_d, sqrt_neg_d=sqrt_neg_d, table=table)


def make_spec(family: str, p: complex = 0.0, q: complex = 1.0,
              branch: str = "upper") -> AlgebraSpec:
    """Build an algebra for family "C", "Q", "O" or "S" with parameters p, q.

    Square roots of D and -D are principal (branch cut along the negative
    real axis).  `branch` selects which root of t**2 + p*t + q = 0 the
    2x2 representation distinguishes; it does not affect the table.
    """
    low = str(family).strip().lower()
    if low in ("s-doubled", "s_doubled", "sdoubled"):
        low = "s"
    name = low.upper()
    if name not in FAMILY_DIMS:
        raise ValueError(f"unknown family {family!r}; expected C, Q, O or S")
    if branch not in ("upper", "lower"):
        raise ValueError(f"branch must be 'upper' or 'lower', got {branch!r}")
    p = _validate_scalar("p", p)
    q = _validate_scalar("q", q)
    return _spec_for_dim(FAMILY_DIMS[name], p, q, branch)


def scalar_spec(p: complex = 0.0, q: complex = 1.0) -> AlgebraSpec:
    """The trivial dim-1 algebra (plain complex scalars)."""
    return _spec_for_dim(1, complex(p), complex(q), "upper")


def basis_product(spec: AlgebraSpec, i: int, j: int) -> Element:
    """The product e_i * e_j as a table lookup."""
    return spec.table.entry(i, j)


def multiply(spec: AlgebraSpec, x: Element, y: Element) -> Element:
    if x.dim != spec.dim or y.dim != spec.dim:
        raise ValueError(f"operands of dim {x.dim}/{y.dim} do not match spec dim {spec.dim}")
    return Element(spec.mul_array(x.coeffs, y.coeffs))


def conj_array(p: complex, a: np.ndarray) -> np.ndarray:
    """Unit-form conjugation on raw coefficients (dims 1..8), broadcastable.

    Each imaginary unit maps to -p*e0 - e_i, so the e0 coefficient picks
    up -p times the sum of the imaginary coefficients and the rest flip sign.
    """
    a = np.asarray(a, dtype=np.complex128)
    out = -a.copy()
    out[..., 0] = a[..., 0] - p * np.sum(a[..., 1:], axis=-1)
    return out


def _cd_arrays(half: AlgebraSpec, a1: np.ndarray, a2: np.ndarray,
               b1: np.ndarray, b2: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Doubling product on raw half-coefficient arrays (broadcasts)."""
    p, q = half.p, half.q
    mul = half.mul_array
    conj = lambda a: conj_array(p, a)
    b1c = conj(b1)
    b2c = conj(b2)
    m_a2_b2 = mul(a2, b2)
    m_b2_a2 = mul(b2, a2)
    first = (mul(a1, b1)
             - (p / 2) * (mul(a1, b2) - mul(b2, a1))
             - (p / 2) * mul(a2, b1 - b1c)
             - q * mul(b2c, a2)
             + (p * p / 2) * (m_a2_b2 - m_b2_a2))
    second = (mul(b2, a1) + mul(a2, b1c)
              - (p / 2) * (mul(a2, b2c) + m_b2_a2))
    return first, second


def cd_product(spec: AlgebraSpec, a: PairView, b: PairView) -> PairView:
    """Doubling product of two pair-form elements of `spec`.

    The halves live in the half-dimension algebra; the result is again a
    pair.  For dim-16 this *is* the definition of the product.
    """
    if a.half_dim * 2 != spec.dim or b.half_dim * 2 != spec.dim:
        raise ValueError("pair halves do not match half of the spec dimension")
    half = spec.half_spec
    first, second = _cd_arrays(half, a.first.coeffs, a.second.coeffs,
                               b.first.coeffs, b.second.coeffs)
    return PairView(Element(first), Element(second))


def pair_basis(spec: AlgebraSpec, m: int) -> PairView:
    """Pair-coordinate basis vector m: (e_m, 0) for m < dim/2, else (0, e_(m-dim/2))."""
    if not 0 <= m < spec.dim:
        raise IndexError(f"unit index {m} out of range for dim {spec.dim}")
    flat = np.zeros(spec.dim)
    flat[m] = 1.0
    return PairView.from_flat(flat)


def transform_matrix(d: int, p: complex, s: complex) -> np.ndarray:
    """Linear map from pair coordinates to unit coordinates.

    `s` is the square root of -D that defines the unit basis; callers
    may pass a non-principal determination.
    """
    if d == 4:
        t = np.eye(4, dtype=np.complex128)
        t[0, 3] = (p / 2) * (s - p / 2)
        t[1, 3] = -p / 2
        t[2, 3] = -p / 2
        t[3, 3] = s
        return t
    if d == 8:
        t = np.eye(8, dtype=np.complex128)
        for col in (5, 6, 7):
            t[0, col] = (p / 2) * (s - p / 2)
            t[4, col] = -p / 2
        t[1, 5] = -p / 2
        t[2, 6] = -p / 2
        t[3, 7] = -p / 2
        t[5, 5] = t[6, 6] = t[7, 7] = s
        return t
    if d == 16:
        if abs(p) > 1e-12:
            raise UnsupportedTransform(
                "dim-16 unit coordinates are only defined for p = 0")
        # the dim-16 unit basis is the pair basis itself
        return np.eye(16, dtype=np.complex128)
    raise UnsupportedTransform(f"no unit transform for dim {d}")


def pair_to_units(spec: AlgebraSpec, pair: PairView) -> Element:
    """Rewrite a pair-form element in unit coordinates."""
    if pair.half_dim * 2 != spec.dim:
        raise ValueError("pair halves do not match half of the spec dimension")
    return Element(spec.to_units_array(pair.flat()))


def units_to_pair(spec: AlgebraSpec, x: Element,
                  tol: float = DEFAULT_TOL) -> PairView:
    """Rewrite a unit-coordinate element as a pair; needs an invertible transform."""
    if x.dim != spec.dim:
        raise ValueError(f"element dim {x.dim} does not match spec dim {spec.dim}")
    return PairView.from_flat(spec.to_pair_array(x.coeffs, tol=tol))
