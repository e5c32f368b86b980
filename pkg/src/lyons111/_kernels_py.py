"""NumPy implementation of the GF(5) hot kernels.

Matrices are uint8 arrays with entries in {0..4}.  Products are taken in
float32, which is exact here: a dot product of 111 terms, each at most 4*4,
stays below 2**24, so the single reduction mod 5 at the end loses nothing.
The compiled twin of this module (_gf5core) accumulates in uint16 instead;
both satisfy the same contract and are interchangeable.
"""

import numpy as np

BACKEND = "numpy"


def matmul(a, b):
    """Product of two mod-5 matrices, returned as uint8."""
    c = np.matmul(a.astype(np.float32), b.astype(np.float32))
    return (c.astype(np.uint16) % 5).astype(np.uint8)


def matmul_stack(stack, b):
    """Right-multiply a (n, r, k) stack by a single (k, c) matrix."""
    n, r, k = stack.shape
    flat = stack.reshape(n * r, k).astype(np.float32)
    c = np.matmul(flat, b.astype(np.float32))
    return (c.astype(np.uint16) % 5).astype(np.uint8).reshape(n, r, -1)


def pack_digits(stack):
    """Canonical packed keys: two base-5 digits per byte, row-major.

    stack: (n, r, c) uint8 -> (n, ceil(r*c/2)) uint8.
    """
    n = stack.shape[0]
    flat = stack.reshape(n, -1)
    if flat.shape[1] % 2:
        flat = np.hstack([flat, np.zeros((n, 1), dtype=np.uint8)])
    return flat[:, 0::2] * 5 + flat[:, 1::2]
