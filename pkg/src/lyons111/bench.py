"""Benchmark the kernel backends against each other.

Run as `python -m lyons111.bench`.  Workloads: single 111x111 products,
batched stack products (the closure-enumeration shape), key packing, and a
small end-to-end closure.
"""

from __future__ import annotations

import time

import numpy as np

from . import _backend
from .closure import closure_enumerate
from .generators import build_alpha, build_beta, build_gamma


def _time(fn, repeats):
    t0 = time.perf_counter()
    for _ in range(repeats):
        fn()
    return (time.perf_counter() - t0) / repeats


def run(report=print):
    rng = np.random.default_rng(12321)
    a = rng.integers(0, 5, (111, 111), dtype=np.uint8)
    b = rng.integers(0, 5, (111, 111), dtype=np.uint8)
    stack = rng.integers(0, 5, (1024, 111, 111), dtype=np.uint8)

    impls = _backend.available_backends()
    report(f"backends available: {sorted(impls)}; active: {_backend.backend_name()}")
    rows = {}
    for name, mod in sorted(impls.items()):
        t_mm = _time(lambda: mod.matmul(a, b), 100)
        t_stack = _time(lambda: mod.matmul_stack(stack, b), 3)
        t_pack = _time(lambda: mod.pack_digits(stack), 3)
        rows[name] = (t_mm, t_stack, t_pack)
        report(
            f"{name:7s} matmul {t_mm * 1e3:7.3f} ms   "
            f"stack(1024) {t_stack * 1e3:8.1f} ms   pack(1024) {t_pack * 1e3:7.1f} ms"
        )

    gens = [build_alpha(), build_beta(), build_gamma()]
    previous = _backend.backend_name()
    for name in sorted(impls):
        _backend.select(name)
        t = _time(lambda: closure_enumerate(gens, cap=100), 3)
        report(f"{name:7s} closure of the 36-element point group: {t * 1e3:7.1f} ms")
    _backend.select(previous)

    if len(rows) == 2 and all(k in rows for k in ("numpy", "cython")):
        ratio = rows["cython"][0] / rows["numpy"][0]
        report(f"single-product ratio cython/numpy: {ratio:.2f}x")
    return rows


if __name__ == "__main__":
    run()
