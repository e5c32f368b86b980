"""Kernel backend selection.

Two interchangeable implementations of the hot kernels exist: the NumPy one
(exact float32 BLAS products, wide accumulators) and the compiled extension
(uint8 entries, uint16 accumulators, one reduction per dot product).  On
hardware with an optimized BLAS the NumPy path measures fastest for both
single products and stacks, so it is the default; the compiled kernel is
kept as an integer-only cross-check and benchmark target and can be chosen
with select().  Run `python -m lyons111.bench` to compare on your machine.
"""

from . import _kernels_py

try:
    from . import _gf5core
except ImportError:
    _gf5core = None

_impl = _kernels_py


def select(name):
    """Switch the active kernels ('numpy' or 'cython'); returns the name."""
    global _impl, matmul, matmul_stack, pack_digits
    impls = available_backends()
    if name not in impls:
        raise ValueError(f"backend {name!r} not available (have {sorted(impls)})")
    _impl = impls[name]
    matmul = _impl.matmul
    matmul_stack = _impl.matmul_stack
    pack_digits = _impl.pack_digits
    return name


def backend_name():
    return _impl.BACKEND


def available_backends():
    out = {_kernels_py.BACKEND: _kernels_py}
    if _gf5core is not None:
        out[_gf5core.BACKEND] = _gf5core
    return out


matmul = _impl.matmul
matmul_stack = _impl.matmul_stack
pack_digits = _impl.pack_digits
