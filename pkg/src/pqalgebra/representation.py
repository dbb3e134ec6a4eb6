"""2x2 matrix models of the dim-4/8/16 algebras and their verification.

A representation is a list of 2x2 matrices, one per basis unit, whose
entries live in a smaller coefficient algebra.  The quaternion-level
matrices have plain complex entries and multiply the standard way; the
octonion and sedenion models have quaternion/octonion entries and use a
twisted product (`mat_mul_nonstandard`) that matches the doubling rule
when matrices act on row pairs from the right.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .algebra import (
    DEFAULT_TOL,
    AlgebraSpec,
    Element,
    PairView,
    _build_table_from_triples,
    _cd_arrays,
    _validate_scalar,
    make_spec,
    multiply,
    scalar_spec,
    transform_matrix,
)

__all__ = [
    "Mat2",
    "RepReport",
    "RepSet",
    "act_row",
    "mat_mul_nonstandard",
    "rep_octonion",
    "rep_quadratic_quaternion",
    "rep_sedenion",
    "verify_rep",
]


@dataclass(frozen=True, eq=False)
class Mat2:
    """A 2x2 matrix whose entries are elements of one coefficient algebra."""

    entries: tuple[tuple[Element, Element], tuple[Element, Element]]

    def __post_init__(self) -> None:
        rows = tuple(tuple(row) for row in self.entries)
        if len(rows) != 2 or any(len(row) != 2 for row in rows):
            raise ValueError("entries must form a 2x2 grid")
        dims = {e.dim for row in rows for e in row}
        if len(dims) != 1:
            raise ValueError(f"entries mix coefficient dimensions {sorted(dims)}")
        object.__setattr__(self, "entries", rows)

    @property
    def coeff_dim(self) -> int:
        return self.entries[0][0].dim

    def entry(self, r: int, c: int) -> Element:
        return self.entries[r][c]

    @classmethod
    def identity(cls, spec: AlgebraSpec) -> "Mat2":
        one, zero = spec.unit(0), spec.zero()
        return cls(((one, zero), (zero, one)))

    @classmethod
    def from_complex(cls, matrix) -> "Mat2":
        m = np.asarray(matrix, dtype=np.complex128)
        if m.shape != (2, 2):
            raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
        return cls(tuple(tuple(Element(np.array([z])) for z in row) for row in m))

    def to_complex(self) -> np.ndarray:
        if self.coeff_dim != 1:
            raise ValueError("only scalar-entry matrices convert to a complex array")
        return np.array([[self.entries[r][c].coeffs[0] for c in (0, 1)]
                         for r in (0, 1)])

    def scaled(self, scalar: complex) -> "Mat2":
        return Mat2(tuple(tuple(e * scalar for e in row) for row in self.entries))

    def to_json(self) -> dict:
        return {"coeff_dim": self.coeff_dim,
                "entries": [[e.to_json() for e in row] for row in self.entries]}


def mat_mul_nonstandard(a: Mat2, b: Mat2, spec: AlgebraSpec) -> Mat2:
    """Twisted 2x2 product compatible with right action on row pairs.

    Reduces to the standard matrix product when the coefficient algebra
    is commutative.
    """
    a11, a12 = a.entries[0]
    a21, a22 = a.entries[1]
    b11, b12 = b.entries[0]
    b21, b22 = b.entries[1]
    mul = lambda x, y: multiply(spec, x, y)
    return Mat2((
        (mul(a11, b11) + mul(b21, a12), mul(b12, a11) + mul(a12, b22)),
        (mul(b11, a21) + mul(a22, b21), mul(a21, b12) + mul(b22, a22)),
    ))


def act_row(pair: PairView, mat: Mat2, spec: AlgebraSpec) -> PairView:
    """Right action of a matrix on a row pair; off-row factors multiply from the left."""
    m11, m12 = mat.entries[0]
    m21, m22 = mat.entries[1]
    first = multiply(spec, pair.first, m11) + multiply(spec, m21, pair.second)
    second = multiply(spec, m12, pair.first) + multiply(spec, pair.second, m22)
    return PairView(first, second)


@dataclass(frozen=True, eq=False)
class RepSet:
    """A labelled family of unit matrices over one coefficient algebra."""

    coeff_spec: AlgebraSpec
    mats: tuple[Mat2, ...]
    labels: tuple[str, ...]

    def to_json(self) -> dict:
        return {"coeff_dim": self.coeff_spec.dim,
                "labels": list(self.labels),
                "mats": [m.to_json() for m in self.mats]}


def rep_quadratic_quaternion(p: complex, q: complex, branch: str = "upper",
                             sqrt_d: complex | None = None) -> RepSet:
    """Scalar 2x2 matrices u0..u3 whose non-identity members solve u**2 + p*u + q = 0.

    `branch` picks the sign attached to the discriminant root; passing
    `sqrt_d` substitutes an explicit (possibly non-principal) root.
    """
    p = _validate_scalar("p", p)
    q = _validate_scalar("q", q)
    if branch not in ("upper", "lower"):
        raise ValueError(f"branch must be 'upper' or 'lower', got {branch!r}")
    big_d = p * p / 4 - q
    if sqrt_d is None:
        d = cmath.sqrt(big_d)
    else:
        d = complex(sqrt_d)
        if abs(d * d - big_d) > DEFAULT_TOL * max(1.0, abs(big_d)):
            raise ValueError(f"sqrt_d**2 = {d * d} does not match discriminant {big_d}")
    sg = 1.0 if branch == "upper" else -1.0
    u1 = [[-p / 2 + sg * d, 0.0], [-sg * p * d, -p / 2 - sg * d]]
    u2 = [[0.0, 1.0], [-q, -p]]
    u3 = [[(-1 - sg * 1j) * (p / 2), -sg * 1j],
          [sg * 1j * (p * p / 2 - q), (-1 + sg * 1j) * (p / 2)]]
    mats = (Mat2.from_complex(np.eye(2)), Mat2.from_complex(u1),
            Mat2.from_complex(u2), Mat2.from_complex(u3))
    return RepSet(coeff_spec=scalar_spec(p, q), mats=mats,
                  labels=tuple(f"e{m}" for m in range(4)))


def _doubling_rep(coeff_spec: AlgebraSpec) -> RepSet:
    h = coeff_spec.dim
    zero = coeff_spec.zero()
    one = coeff_spec.unit(0)
    mats = [Mat2.identity(coeff_spec)]
    for m in range(1, h):
        u = coeff_spec.unit(m)
        mats.append(Mat2(((u, zero), (zero, -u))))
    mats.append(Mat2(((zero, one), (-one, zero))))
    for m in range(1, h):
        u = coeff_spec.unit(m)
        mats.append(Mat2(((zero, u), (u, zero))))
    return RepSet(coeff_spec=coeff_spec, mats=tuple(mats),
                  labels=tuple(f"e{m}" for m in range(2 * h)))


def rep_octonion() -> RepSet:
    """Octonion units as 2x2 quaternion-entry matrices (classical parameters)."""
    return _doubling_rep(make_spec("Q", 0, 1))


def rep_sedenion() -> RepSet:
    """Sedenion units as 2x2 octonion-entry matrices (classical parameters)."""
    return _doubling_rep(make_spec("O", 0, 1))


@dataclass(frozen=True)
class RepReport:
    trials: int
    seed: int
    action_max_residual: float
    product_max_residual: float
    mismatches: list[list[int]]
    trusted: bool

    def to_json(self) -> dict:
        return {"trials": self.trials, "seed": self.seed,
                "action_max_residual": self.action_max_residual,
                "product_max_residual": self.product_max_residual,
                "mismatches": self.mismatches, "trusted": self.trusted}


def _pair_draws(seed: int, trials: int, dim: int) -> np.ndarray:
    out = np.empty((trials, dim), dtype=np.complex128)
    for t in range(trials):
        raw = np.random.default_rng([seed, t]).uniform(-1.0, 1.0, (dim, 2))
        out[t] = raw[:, 0] + 1j * raw[:, 1]
    return out


def _batch_residual(lhs: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    scale = np.maximum(1.0, np.maximum(np.max(np.abs(lhs), axis=-1),
                                       np.max(np.abs(rhs), axis=-1)))
    return np.max(np.abs(lhs - rhs), axis=-1) / scale


def _flat_residual(lhs: np.ndarray, rhs: np.ndarray) -> float:
    scale = max(1.0, float(np.max(np.abs(lhs))), float(np.max(np.abs(rhs))))
    return float(np.max(np.abs(lhs - rhs))) / scale


def _verify_quadratic(repset: RepSet, target: AlgebraSpec, trials: int,
                      seed: int, tol: float) -> RepReport:
    p, q = target.p, target.q
    uarr = np.stack([m.to_complex() for m in repset.mats])
    # the embedded root sits in the first diagonal entry; the branch sign
    # is baked into the skew matrix as u3[0,1] = -sign*i
    t_root = complex(uarr[1][0, 0])
    sigma = 1.0 if (1j * complex(uarr[3][0, 1])).real > 0 else -1.0
    s_star = 1j * sigma * (t_root + p / 2)
    table = _build_table_from_triples(4, p, q, s_star)
    half = target.half_spec
    phi = lambda h: h[..., 0] + t_root * h[..., 1]

    action_max = 0.0
    if abs(s_star) > DEFAULT_TOL:  # degenerate root leaves no invertible pair basis
        t_inv = np.linalg.inv(transform_matrix(4, p, s_star))
        draws = _pair_draws(seed, trials, 4)
        a1, a2 = draws[:, :2], draws[:, 2:]
        rows = np.stack([phi(a1), phi(a2)], axis=-1)
        for m in range(4):
            b = t_inv @ np.eye(4)[m]
            f, s = _cd_arrays(half, a1, a2, b[None, :2], b[None, 2:])
            lhs = np.stack([phi(f), phi(s)], axis=-1)
            rhs = rows @ uarr[m]
            action_max = max(action_max, float(np.max(_batch_residual(lhs, rhs))))

    product_max = 0.0
    mismatches: list[list[int]] = []
    for i in range(4):
        for j in range(4):
            got = uarr[i] @ uarr[j]
            want = np.einsum("m,mrc->rc", table[i, j], uarr)
            res = _flat_residual(got, want)
            product_max = max(product_max, res)
            if res > tol:
                mismatches.append([i, j])
    trusted = (abs(target.D) > DEFAULT_TOL and not mismatches
               and action_max <= tol and product_max <= tol)
    return RepReport(trials=trials, seed=seed, action_max_residual=action_max,
                     product_max_residual=product_max, mismatches=mismatches,
                     trusted=trusted)


def _verify_pair(repset: RepSet, target: AlgebraSpec, trials: int,
                 seed: int, tol: float) -> RepReport:
    half = repset.coeff_spec
    hd = half.dim
    dim = target.dim
    arr = np.stack([[[mat.entry(r, c).coeffs for c in (0, 1)] for r in (0, 1)]
                    for mat in repset.mats])

    draws = _pair_draws(seed, trials, dim)
    a1, a2 = draws[:, :hd], draws[:, hd:]
    action_max = 0.0
    for m in range(dim):
        m11, m12 = arr[m, 0, 0], arr[m, 0, 1]
        m21, m22 = arr[m, 1, 0], arr[m, 1, 1]
        first = half.mul_array(a1, m11) + half.mul_array(m21, a2)
        second = half.mul_array(m12, a1) + half.mul_array(a2, m22)
        lhs = np.concatenate([first, second], axis=-1)
        b = np.zeros(dim)
        b[m] = 1.0
        f, s = _cd_arrays(target.half_spec, a1, a2, b[None, :hd], b[None, hd:])
        rhs = np.concatenate([f, s], axis=-1)
        action_max = max(action_max, float(np.max(_batch_residual(lhs, rhs))))

    # all unit products at once via the twisted 2x2 rule
    mul = half.mul_array
    x = arr[:, None]
    y = arr[None, :]
    got = np.stack([
        np.stack([mul(x[..., 0, 0, :], y[..., 0, 0, :]) + mul(y[..., 1, 0, :], x[..., 0, 1, :]),
                  mul(y[..., 0, 1, :], x[..., 0, 0, :]) + mul(x[..., 0, 1, :], y[..., 1, 1, :])],
                 axis=-2),
        np.stack([mul(y[..., 0, 0, :], x[..., 1, 0, :]) + mul(x[..., 1, 1, :], y[..., 1, 0, :]),
                  mul(x[..., 1, 0, :], y[..., 0, 1, :]) + mul(y[..., 1, 1, :], x[..., 1, 1, :])],
                 axis=-2),
    ], axis=-3)
    want = np.einsum("ijm,mrch->ijrch", target.table.tensor, arr)
    flat_got = got.reshape(dim, dim, -1)
    flat_want = want.reshape(dim, dim, -1)
    res = _batch_residual(flat_got, flat_want)
    product_max = float(np.max(res))
    mismatches = [[int(i), int(j)] for i, j in np.argwhere(res > tol)]
    trusted = (abs(target.D) > DEFAULT_TOL and not mismatches
               and action_max <= tol and product_max <= tol)
    return RepReport(trials=trials, seed=seed, action_max_residual=action_max,
                     product_max_residual=product_max, mismatches=mismatches,
                     trusted=trusted)


def verify_rep(repset: RepSet, target_spec: AlgebraSpec, trials: int = 100,
               seed: int = 0, tol: float = 1e-8) -> RepReport:
    """Numerically check a representation against a target algebra.

    Scalar-entry sets are tested through the root embedding of their
    half algebra; pair-entry sets are tested by acting on random row
    pairs and by expanding every unit product over the matrices.  The
    report is deterministic in (seed, trials).
    """
    if len(repset.mats) != target_spec.dim:
        raise ValueError(f"{len(repset.mats)} matrices cannot represent "
                         f"dim {target_spec.dim}")
    if repset.coeff_spec.dim == 1:
        if target_spec.dim != 4:
            raise ValueError("scalar-entry sets represent the dim-4 family")
        return _verify_quadratic(repset, target_spec, trials, seed, tol)
    if repset.coeff_spec.dim * 2 != target_spec.dim:
        raise ValueError("coefficient dimension must be half the target dimension")
    return _verify_pair(repset, target_spec, trials, seed, tol)
