"""Breadth-first closure of a matrix generating set under right multiplication.

Elements are deduplicated through a canonical packed encoding (two base-5
digits per byte; matrices small enough to fit are packed into a single
integer instead).  Enumeration order is deterministic: waves are processed
in insertion order and generators in the order given.
"""

from __future__ import annotations

import numpy as np

from . import _backend
from .gf5 import Mat, identity


class ClosureCapExceeded(RuntimeError):
    def __init__(self, cap, partial_count):
        super().__init__(f"closure exceeds cap {cap} (at least {partial_count} elements)")
        self.cap = cap
        self.partial_count = partial_count


class GroupClosure:
    """Enumerated closure: canonical keys, order, and (optionally) the
    elements themselves as a uint8 stack in discovery order.

    When elements are stored, parents[i] = (j, g) records that element i was
    discovered as element j times generator g (the identity has no parent),
    so any homomorphism given on the generators extends along the tree.
    """

    def __init__(self, dim, keys, labels, elements=None, parents=None):
        self.dim = dim
        self.keys = keys
        self.labels = labels
        self.elements = elements
        self.parents = parents

    @property
    def order(self):
        return len(self.keys)

    def mats(self):
        if self.elements is None:
            raise ValueError("closure was enumerated without storing elements")
        return [Mat(e) for e in self.elements]

    def extend_morphism(self, gen_images, identity_image, mul):
        """Image of every element under the map sending generator i to
        gen_images[i], following the discovery tree."""
        if self.parents is None:
            raise ValueError("closure was enumerated without storing elements")
        images = [identity_image]
        for j, g in self.parents[1:]:
            images.append(mul(images[j], gen_images[g]))
        return images

    def __contains__(self, m):
        return _key_of(m.a, self.dim) in self.keys

    def __len__(self):
        return len(self.keys)


def _int_packable(dim):
    return dim * dim <= 26  # 5**26 < 2**61


def _key_of(arr, dim):
    if _int_packable(dim):
        flat = arr.reshape(-1).astype(np.int64)
        weights = np.power(5, np.arange(flat.size, dtype=np.int64))
        return int(flat @ weights)
    return _backend.pack_digits(arr.reshape(1, dim, -1))[0].tobytes()


def closure_enumerate(gens, cap, labels=None, store_elements=False, chunk=1024):
    """Enumerate <gens>; raises ClosureCapExceeded if the order passes cap."""
    mats = [g.a if isinstance(g, Mat) else np.asarray(g, dtype=np.uint8) for g in gens]
    if not mats:
        raise ValueError("need at least one generator")
    dim = mats[0].shape[0]
    for m in mats:
        if m.shape != (dim, dim):
            raise ValueError("generators must be square matrices of equal dimension")
    use_int = _int_packable(dim)

    start = identity(dim).a
    keys = {_key_of(start, dim)}
    frontier = [start]
    frontier_ids = [0]
    stored = [start] if store_elements else None
    parents = [None] if store_elements else None

    while frontier:
        nxt = []
        nxt_ids = []
        for lo in range(0, len(frontier), chunk):
            stack = np.stack(frontier[lo : lo + chunk])
            ids = frontier_ids[lo : lo + chunk]
            for gi, g in enumerate(mats):
                prods = _backend.matmul_stack(stack, g)
                if use_int:
                    flat = prods.reshape(len(prods), -1).astype(np.int64)
                    weights = np.power(5, np.arange(flat.shape[1], dtype=np.int64))
                    ks = [int(x) for x in flat @ weights]
                else:
                    packed = _backend.pack_digits(prods)
                    ks = [packed[idx].tobytes() for idx in range(len(prods))]
                for idx, k in enumerate(ks):
                    if k not in keys:
                        keys.add(k)
                        nxt.append(prods[idx])
                        if stored is not None:
                            nxt_ids.append(len(stored))
                            stored.append(prods[idx])
                            parents.append((ids[idx], gi))
                if len(keys) > cap:
                    raise ClosureCapExceeded(cap, len(keys))
        frontier = nxt
        frontier_ids = nxt_ids if store_elements else [0] * len(nxt)

    return GroupClosure(dim, keys, tuple(labels or ()), stored, parents)
