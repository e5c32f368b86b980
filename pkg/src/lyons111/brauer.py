"""Brauer character of a mod-5 matrix: eigenvalue multiplicities lifted to
characteristic zero.

Every element of the torus normalizer has order dividing 24, so all its
eigenvalues live in the quadratic extension field (whose multiplicative
group is cyclic of order 24).  A fixed primitive root z is lifted to the
primitive complex 24th root of unity; the character value is the integer
sum of the lifted eigenvalues.  Multiplicities come from exact kernel
dimensions: rank(g - c) for eigenvalues c in the prime field, and
rank(g^2 - tau*g + nu) for a conjugate pair with trace tau and norm nu,
all computed over GF(5).
"""

from __future__ import annotations

import numpy as np

from .gf5 import Mat, _rref_array, identity

# the extension field is GF(5)[s] with s^2 = 3 (3 is a non-square mod 5);
# elements are pairs (a, b) = a + b*s


def _ext_mul(x, y):
    return ((x[0] * y[0] + 3 * x[1] * y[1]) % 5, (x[0] * y[1] + x[1] * y[0]) % 5)


def _find_primitive():
    for a in range(5):
        for b in range(1, 5):
            z = (a, b)
            w = z
            order = 1
            while w != (1, 0):
                w = _ext_mul(w, z)
                order += 1
                if order > 24:
                    raise RuntimeError("extension field arithmetic is broken")
            if order == 24:
                return z
    raise RuntimeError("no generator of order 24 found")


_Z = _find_primitive()

_POWERS = {}
_w = (1, 0)
for _j in range(24):
    _POWERS[_j] = _w
    _w = _ext_mul(_w, _Z)


# ---------------------------------------------------------------------------
# integers in Z[zeta_24]: length-8 vectors over the power basis 1..x^7 of the
# 24th cyclotomic ring, reduced by x^8 = x^4 - 1

_ZETA = [None] * 24
_ZETA[0] = (1, 0, 0, 0, 0, 0, 0, 0)
for _j in range(1, 24):
    prev = _ZETA[_j - 1]
    nxt = [0] * 9
    for _i, _c in enumerate(prev):
        nxt[_i + 1] += _c
    # reduce x^8 -> x^4 - 1
    if nxt[8]:
        nxt[4] += nxt[8]
        nxt[0] -= nxt[8]
    _ZETA[_j] = tuple(nxt[:8])


def _rank(arr):
    _, pivots = _rref_array(arr)
    return len(pivots)


def eigen_multiplicities(m, order):
    """Multiplicity of each 24th-root lift: dict j -> multiplicity of z^j."""
    n = m.rows
    g = m.a.astype(np.int64)
    eye = np.eye(n, dtype=np.int64)
    g2 = (Mat(g) @ Mat(g)).a.astype(np.int64)
    step = 24 // order
    mult = {}
    seen = set()
    for j in range(0, 24, step):
        if j in seen:
            continue
        w = _POWERS[j]
        if w[1] == 0:
            mult[j] = n - _rank((g - w[0] * eye) % 5)
            seen.add(j)
        else:
            jp = (5 * j) % 24
            wp = _POWERS[jp]
            tau = (w[0] + wp[0]) % 5  # w + w^5, the Frobenius trace
            nu = _ext_mul(w, wp)
            assert nu[1] == 0
            dim = n - _rank((g2 - tau * g + nu[0] * eye) % 5)
            if dim % 2:
                raise RuntimeError("odd kernel dimension for a conjugate pair")
            mult[j] = dim // 2
            mult[jp] = dim // 2
            seen.update({j, jp})
    return mult


def brauer_value(m, order):
    """Lifted trace of a matrix whose order divides 24; must be an integer."""
    mult = eigen_multiplicities(m, order)
    total = [0] * 8
    for j, a in mult.items():
        total = [t + a * c for t, c in zip(total, _ZETA[j % 24])]
    if any(total[1:]):
        raise RuntimeError(f"character value is not rational: {total}")
    return total[0]
