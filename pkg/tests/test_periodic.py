import cmath
import math

import numpy as np
import pytest

from pqalgebra.algebra import Element, make_spec, multiply
from pqalgebra.errors import PoleAtEvenK
from pqalgebra.periodic import (
    derived_units,
    orthogonal_unit_power,
    periodic_rep,
    periodic_spec,
    power_law,
    substituted_units,
    unit_power,
)
from pqalgebra.representation import rep_quadratic_quaternion

K_GRID = (1.0, 3.0, 5.0, 0.5, 1.5, 2.5)


def ipow(e):
    return cmath.exp(1j * math.pi / 2 * e)


def test_periodic_spec_named_cases():
    spec = periodic_spec(1, 1)
    assert spec.family == "C"
    assert abs(spec.p) < 1e-12 and abs(spec.q - 1) < 1e-12
    spec = periodic_spec(1j, 1)
    assert abs(spec.p) < 1e-12 and abs(spec.q + 1) < 1e-12
    spec = periodic_spec(1, 2)
    assert abs(spec.p - 2) < 1e-12 and abs(spec.q - 1) < 1e-12
    assert abs(spec.D) < 1e-12
    spec = periodic_spec("i", 1, family="Q")
    assert spec.dim == 4
    with pytest.raises(ValueError):
        periodic_spec(2, 1)


def test_periodic_parameter_identity():
    # -2 i**k cos(pi k / 2) equals -(1 + i**(2k)) for real k
    for k in np.linspace(-3, 3, 61):
        lhs = -2 * ipow(k) * math.cos(math.pi * k / 2)
        rhs = -(1 + ipow(2 * k))
        assert abs(lhs - rhs) < 1e-12


def test_power_law_values():
    a, b = power_law(1, 1)
    assert abs(a) < 1e-12 and abs(b - 1) < 1e-12
    a, b = power_law(1, 2)
    assert abs(a + 1) < 1e-12 and abs(b) < 1e-12


def test_power_law_recombination():
    rng = np.random.default_rng(50)
    for _ in range(200):
        k = float(rng.uniform(-4, 4))
        if min(k % 2, 2 - k % 2) < 1e-3:
            continue
        theta = float(rng.uniform(-2, 2))
        a, b = power_law(k, theta)
        got = a + ipow(k) * b
        want = cmath.exp(1j * math.pi * k * theta / 2)
        assert abs(got - want) < 1e-10


def test_power_law_poles():
    for k in (2, 0, -2, 4, 2 + 1e-9):
        with pytest.raises(PoleAtEvenK):
            power_law(k, 1.0)
    power_law(2.1, 1.0)  # off the pole band


def test_unit_power_values():
    for rho in (1, 1j):
        for k in K_GRID:
            x = unit_power(rho, k, 1.0)
            assert np.max(np.abs(x.coeffs - np.array([0, 1]))) < 1e-12
            x = unit_power(rho, k, 0.0)
            assert np.max(np.abs(x.coeffs - np.array([1, 0]))) < 1e-12
    x = unit_power(1, 3, 2.0)
    assert np.max(np.abs(x.coeffs - np.array([-1, 0]))) < 1e-12
    with pytest.raises(PoleAtEvenK):
        unit_power(1, 2, 0.5)


def test_unit_power_doubling():
    rng = np.random.default_rng(51)
    for rho in (1, 1j):
        for k in K_GRID:
            spec = periodic_spec(rho, k)
            for _ in range(10):
                theta = float(rng.uniform(-2, 2))
                x = unit_power(rho, k, theta)
                got = multiply(spec, x, x)
                want = unit_power(rho, k, 2 * theta)
                scale = max(1.0, float(np.max(np.abs(want.coeffs))))
                assert np.max(np.abs(got.coeffs - want.coeffs)) < 1e-9 * scale


def test_orthogonal_unit_power_values():
    x = orthogonal_unit_power(1, 1.0, "q1")
    assert np.allclose(x.coeffs, np.eye(4)[1])
    x = orthogonal_unit_power(2, 2.0, "q1")
    assert np.max(np.abs(x.coeffs + np.eye(4)[0])) < 1e-12
    x = orthogonal_unit_power(1, 2.0, "qm1")
    assert np.max(np.abs(x.coeffs - np.eye(4)[0])) < 1e-12
    with pytest.raises(IndexError):
        orthogonal_unit_power(4, 1.0, "q1")
    with pytest.raises(ValueError):
        orthogonal_unit_power(1, 1.0, "q2")


def test_orthogonal_unit_power_doubling():
    rng = np.random.default_rng(52)
    q1 = make_spec("Q", 0, 1)
    qm1 = make_spec("Q", 0, -1)
    for n in (1, 2, 3):
        for _ in range(10):
            theta = float(rng.uniform(-2, 2))
            x = orthogonal_unit_power(n, theta, "q1")
            got = multiply(q1, x, x)
            assert np.max(np.abs(got.coeffs - orthogonal_unit_power(n, 2 * theta, "q1").coeffs)) < 1e-9
            x = orthogonal_unit_power(n, theta, "qm1")
            got = multiply(qm1, x, x)
            assert np.max(np.abs(got.coeffs - orthogonal_unit_power(n, 2 * theta, "qm1").coeffs)) < 1e-9


def test_periodic_rep_printed_entries():
    for k in K_GRID:
        ck = math.cos(math.pi * k / 2)
        rep = periodic_rep("u1", k)
        assert np.allclose(rep.mats[2].to_complex(), [[0, 1], [-1, 2 * ck]])
        rep_i = periodic_rep("ui", k)
        w = ipow(2 * k)
        assert np.allclose(rep_i.mats[2].to_complex(), [[0, 1], [-w, 1 + w]])
        assert np.allclose(rep_i.mats[1].to_complex(),
                           [[1, 0], [ipow(2 * k - 1) * math.sin(math.pi * k), w]])
    rep = periodic_rep("u1", 1.0)
    assert np.allclose(rep.mats[1].to_complex(), [[1j, 0], [0, -1j]])
    assert np.allclose(rep.mats[0].to_complex(), np.eye(2))
    with pytest.raises(ValueError):
        periodic_rep("u2", 1.0)


def test_periodic_rep_units_satisfy_quadratic():
    for variant, params in (("u1", lambda k: (-2 * math.cos(math.pi * k / 2), 1.0)),
                            ("ui", lambda k: (-1 - ipow(2 * k), ipow(2 * k)))):
        for k in K_GRID:
            p, q = params(k)
            rep = periodic_rep(variant, k)
            for m in range(1, 4):
                u = rep.mats[m].to_complex()
                res = u @ u + p * u + q * np.eye(2)
                assert np.max(np.abs(res)) < 1e-9, (variant, k, m)


def test_periodic_rep_matches_general_rep_with_explicit_root():
    for k in K_GRID:
        rep = periodic_rep("u1", k)
        p = -2 * math.cos(math.pi * k / 2)
        ref = rep_quadratic_quaternion(p, 1.0, branch="lower",
                                       sqrt_d=-1j * math.sin(math.pi * k / 2))
        for m in range(4):
            assert np.max(np.abs(rep.mats[m].to_complex() - ref.mats[m].to_complex())) < 1e-9
        rep = periodic_rep("ui", k)
        w = ipow(2 * k)
        ref = rep_quadratic_quaternion(-1 - w, w, branch="lower", sqrt_d=(w - 1) / 2)
        for m in range(4):
            assert np.max(np.abs(rep.mats[m].to_complex() - ref.mats[m].to_complex())) < 1e-9


def test_substituted_units_at_tau_one():
    rep = substituted_units("e1", 1.0)
    assert np.allclose(rep.mats[0].to_complex(), np.eye(2))
    assert np.allclose(rep.mats[1].to_complex(), [[1j, 0], [0, -1j]])
    assert np.allclose(rep.mats[2].to_complex(), [[0, 1], [-1, 0]])
    assert np.allclose(rep.mats[3].to_complex(), [[0, 1j], [1j, 0]])
    rep = substituted_units("ei", 1.0)
    assert np.allclose(rep.mats[1].to_complex(), [[1, 0], [0, -1]])
    assert np.allclose(rep.mats[2].to_complex(), [[0, 1], [1, 0]])
    assert np.allclose(rep.mats[3].to_complex(), [[0, -1j], [1j, 0]])


def test_substituted_units_squares():
    for tau in (1.0, 3.0, 0.5, 1.9):
        e1 = substituted_units("e1", tau)
        ei = substituted_units("ei", tau)
        for m in range(1, 4):
            u = e1.mats[m].to_complex()
            assert np.max(np.abs(u @ u + np.eye(2))) < 1e-9, ("e1", tau, m)
            v = ei.mats[m].to_complex()
            assert np.max(np.abs(v @ v - np.eye(2))) < 1e-9, ("ei", tau, m)
    with pytest.raises(PoleAtEvenK):
        substituted_units("e1", 2.0)
    with pytest.raises(ValueError):
        substituted_units("e2", 1.0)


def hamilton_ok(mats, tol=1e-9):
    m1, m2, m3 = (m.to_complex() for m in mats[1:4])
    eye = np.eye(2)
    if np.max(np.abs(m1 @ m1 + eye)) > tol:
        return False
    if np.max(np.abs(m2 @ m2 + eye)) > tol:
        return False
    if np.max(np.abs(m3 @ m3 + eye)) > tol:
        return False
    return np.max(np.abs(m1 @ m2 @ m3 + eye)) <= tol


def pauli_ok(mats, tol=1e-9):
    sig = [m.to_complex() for m in mats[1:4]]
    for x, y, z in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        comm = sig[x] @ sig[y] - sig[y] @ sig[x]
        anti = sig[x] @ sig[y] + sig[y] @ sig[x]
        if np.max(np.abs(comm - 2j * sig[z])) > tol:
            return False
        if np.max(np.abs(anti)) > tol:
            return False
    return True


def test_derived_units_relations():
    for tau in (1.0, 3.0, 0.5):
        primary, alternate = derived_units("hamilton", tau)
        assert hamilton_ok(primary.mats), ("hamilton primary", tau)
        assert hamilton_ok(alternate.mats), ("hamilton alternate", tau)
        primary, alternate = derived_units("pauli", tau)
        assert pauli_ok(primary.mats), ("pauli primary", tau)
        assert pauli_ok(alternate.mats), ("pauli alternate", tau)
    with pytest.raises(PoleAtEvenK):
        derived_units("hamilton", 4.0)
    with pytest.raises(ValueError):
        derived_units("clifford", 1.0)


def test_derived_units_identity_slot():
    primary, alternate = derived_units("hamilton", 1.0)
    assert np.allclose(primary.mats[0].to_complex(), np.eye(2))
    assert np.allclose(alternate.mats[0].to_complex(), np.eye(2))
