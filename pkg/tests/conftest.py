"""Shared test helpers.

`classical_cd_mul` is an independent oracle: the textbook Cayley-Dickson
recursion (a,b)(c,d) = (ac - conj(d)b, da + b conj(c)) with the standard
conjugation, which the parameterized product must reproduce at p=0, q=1.
"""

import numpy as np


def classical_conj(v):
    out = -np.asarray(v, dtype=complex)
    out[0] = -out[0]
    return out


def classical_cd_mul(x, y):
    x = np.asarray(x, dtype=complex)
    y = np.asarray(y, dtype=complex)
    if len(x) == 1:
        return x * y
    h = len(x) // 2
    a, b = x[:h], x[h:]
    c, d = y[:h], y[h:]
    first = classical_cd_mul(a, c) - classical_cd_mul(classical_conj(d), b)
    second = classical_cd_mul(d, a) + classical_cd_mul(b, classical_conj(c))
    return np.concatenate([first, second])


def random_complex(rng, *shape):
    return rng.uniform(-1.0, 1.0, shape) + 1j * rng.uniform(-1.0, 1.0, shape)


def random_pq(rng, min_abs_d=0.1):
    """A random complex parameter pair with |p**2/4 - q| bounded away from zero."""
    while True:
        p = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        q = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        if abs(p * p / 4 - q) > min_abs_d:
            return p, q


def rel_residual(a, b):
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    scale = max(1.0, float(np.max(np.abs(a))), float(np.max(np.abs(b))))
    return float(np.max(np.abs(a - b))) / scale
