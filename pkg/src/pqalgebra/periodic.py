"""Periodic parameter families, fractional unit powers, and their 2x2 models.

The periodic family fixes p and q from a base root rho (1 or i) and a real
exponent k: p = -2*rho**k*cos(pi*k/2), q = rho**(2*k).  Fractional powers of
the generating unit then follow a two-term law whose coefficients blow up
when k is even; those points raise PoleAtEvenK rather than returning junk.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .algebra import AlgebraSpec, Element, make_spec, scalar_spec
from .errors import PoleAtEvenK
from .representation import Mat2, RepSet, rep_quadratic_quaternion

__all__ = [
    "derived_units",
    "orthogonal_unit_power",
    "periodic_params",
    "periodic_rep",
    "periodic_spec",
    "power_law",
    "rho_label",
    "substituted_units",
    "unit_power",
]

_POLE_BAND = 1e-6


def _normalize_rho(rho) -> tuple[complex, str]:
    if isinstance(rho, str):
        token = rho.strip().lower()
        if token == "1":
            return 1.0 + 0j, "1"
        if token in ("i", "1j"):
            return 1j, "i"
        raise ValueError(f"rho must be 1 or i, got {rho!r}")
    z = complex(rho)
    if abs(z - 1) < 1e-12:
        return 1.0 + 0j, "1"
    if abs(z - 1j) < 1e-12:
        return 1j, "i"
    raise ValueError(f"rho must be 1 or i, got {rho!r}")


def rho_label(rho) -> str:
    return _normalize_rho(rho)[1]


def _check_pole(k: float, name: str = "k") -> None:
    r = k % 2.0
    if min(r, 2.0 - r) < _POLE_BAND:
        raise PoleAtEvenK(f"pole at even {name} (got {name}={k})")


def periodic_params(rho, k: float) -> tuple[complex, complex]:
    """The (p, q) pair pinned by a base root and exponent."""
    z, label = _normalize_rho(rho)
    k = float(k)
    if label == "i":
        rk = cmath.exp(1j * math.pi * k / 2)
    else:
        rk = 1.0 + 0j
    p = -2 * rk * math.cos(math.pi * k / 2)
    q = rk * rk
    return p, q


def periodic_spec(rho, k: float, family: str = "C") -> AlgebraSpec:
    """Algebra at the periodic parameters; dims 2 (family C) and 4 (family Q)."""
    name = str(family).strip().upper()
    if name not in ("C", "Q"):
        raise ValueError(f"periodic specs cover families C and Q, got {family!r}")
    p, q = periodic_params(rho, k)
    return make_spec(name, p, q)


def power_law(k: float, theta: float) -> tuple[float, float]:
    """Coefficients (a, b) of the theta-th power of the generating unit.

    x**theta = a(theta)*e0 + b(theta)*x for the degree-k generator; both
    coefficients are real and have poles at even k.
    """
    k = float(k)
    theta = float(theta)
    _check_pole(k)
    half = math.pi * k / 2
    sin_half = math.sin(half)
    a = math.cos(half * theta) - math.cos(half) / sin_half * math.sin(half * theta)
    b = math.sin(half * theta) / sin_half
    return a, b


def unit_power(rho, k: float, theta: float) -> Element:
    """The theta-th power of the periodic unit, as a dim-2 element."""
    z, label = _normalize_rho(rho)
    a, b = power_law(k, theta)
    if label == "i":
        # rho**(k*theta) needs the unwrapped exponent, not (rho**k)**theta
        rkt = cmath.exp(1j * math.pi * k * theta / 2)
        rmk = cmath.exp(-1j * math.pi * k / 2)
    else:
        rkt = rmk = 1.0 + 0j
    return Element(np.array([rkt * a, rkt * rmk * b]))


def orthogonal_unit_power(n: int, theta: float, variant: str) -> Element:
    """Fractional power of an orthogonal quaternion unit e_n (n in 1..3).

    variant "q1" lives in Q(0,1) and is the plain cosine/sine rotation;
    variant "qm1" lives in Q(0,-1) and carries an extra complex phase so
    that squaring still doubles theta.
    """
    if variant not in ("q1", "qm1"):
        raise ValueError(f"variant must be 'q1' or 'qm1', got {variant!r}")
    if n not in (1, 2, 3):
        raise IndexError(f"orthogonal unit index must be 1, 2 or 3, got {n}")
    c = math.cos(math.pi * theta / 2)
    s = math.sin(math.pi * theta / 2)
    out = np.zeros(4, dtype=np.complex128)
    if variant == "q1":
        out[0] = c
        out[n] = s
    else:
        out[0] = c * c + 1j * c * s
        out[n] = s * s - 1j * c * s
    return Element(out)


def periodic_rep(variant: str, k: float) -> RepSet:
    """Scalar 2x2 unit matrices of the periodic algebras, one variant per rho.

    Equivalent to the lower-branch quadratic representation with the
    discriminant root pinned by k, so entries stay continuous in k.
    """
    k = float(k)
    if variant == "u1":
        ck = math.cos(math.pi * k / 2)
        return rep_quadratic_quaternion(-2 * ck, 1.0, branch="lower",
                                        sqrt_d=-1j * math.sin(math.pi * k / 2))
    if variant == "ui":
        w = cmath.exp(1j * math.pi * k)
        return rep_quadratic_quaternion(-1 - w, w, branch="lower", sqrt_d=(w - 1) / 2)
    raise ValueError(f"variant must be 'u1' or 'ui', got {variant!r}")


def substituted_units(variant: str, tau: float) -> RepSet:
    """Orthogonalized unit matrices after the k = theta = tau substitution.

    The "e1" set squares to -I (quaternion-like), the "ei" set to +I
    (spin-like).  Both have poles at even tau from the cot/csc entries.
    """
    if variant not in ("e1", "ei"):
        raise ValueError(f"variant must be 'e1' or 'ei', got {variant!r}")
    tau = float(tau)
    _check_pole(tau, name="tau")
    half = math.pi * tau / 2
    c, s = math.cos(half), math.sin(half)
    cot, csc = c / s, 1 / s
    if variant == "e1":
        m1 = [[1j, 0], [2j * c, -1j]]
        m2 = [[-cot, csc], [-csc, cot]]
        m3 = [[-1j * cot, 1j * csc], [-1j * csc + 2j * s, 1j * cot]]
    else:
        m1 = [[1, 0], [2 * cmath.exp(1j * half) * c, -1]]
        m2 = [[-1j * cot, 1 + 1j * cot], [1 - 1j * cot, 1j * cot]]
        m3 = [[-cot, -1j + cot], [(-1 + 2 * s * s) * (1j + cot), cot]]
    mats = tuple(Mat2.from_complex(m) for m in (np.eye(2), m1, m2, m3))
    return RepSet(coeff_spec=scalar_spec(), mats=mats,
                  labels=tuple(f"e{m}" for m in range(4)))


def derived_units(variant: str, tau: float) -> tuple[RepSet, RepSet]:
    """Two realizations of the Hamilton or Pauli relations at parameter tau.

    The primary set uses the matching substituted units directly; the
    alternate set rescales the other family's non-identity units by -i
    (hamilton) or +i (pauli), which flips their squares to the required
    sign and keeps the triple-product/commutator relations.
    """
    if variant == "hamilton":
        primary = substituted_units("e1", tau)
        base = substituted_units("ei", tau)
        scale = -1j
    elif variant == "pauli":
        primary = substituted_units("ei", tau)
        base = substituted_units("e1", tau)
        scale = 1j
    else:
        raise ValueError(f"variant must be 'hamilton' or 'pauli', got {variant!r}")
    mats = (base.mats[0],) + tuple(m.scaled(scale) for m in base.mats[1:])
    alternate = RepSet(coeff_spec=base.coeff_spec, mats=mats, labels=base.labels)
    return primary, alternate
