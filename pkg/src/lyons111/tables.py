"""Reference values the verifier checks against: torus eigenvalue tables,
conjugation words, and the echelon bases of the minimal invariant subspaces.

Subspace rows are written as (section, in-section coordinates); sections are
the 16 runs of the fixed index partition.
"""

import numpy as np

from .blocks import DIM, section_slice
from .gf5 import Mat, Subspace, rref

# block-scalar multipliers of the canonical torus generators, per section
TORUS_T1_ROW = (1, 1, 4, 4, 1, 3, 2, 4, 2, 2, 1, 2, 3, 4, 3, 3)
TORUS_T2_ROW = (1, 4, 1, 4, 2, 1, 3, 2, 4, 2, 3, 1, 2, 3, 4, 3)

# conjugates of (t1, t2) by the three point-group generators: multiplier row
# and the same element as a word t1^a t2^b
TORUS_CONJ_TABLE = {
    ("t1", "alpha"): ((1, 1, 4, 4, 4, 3, 3, 1, 2, 3, 4, 2, 2, 1, 3, 2), (1, 2)),
    ("t2", "alpha"): ((1, 4, 1, 4, 2, 4, 2, 2, 1, 3, 3, 4, 3, 3, 1, 2), (2, 1)),
    ("t1", "beta"): ((1, 4, 1, 4, 3, 1, 2, 3, 4, 3, 2, 1, 3, 2, 4, 2), (0, 3)),
    ("t2", "beta"): ((1, 4, 4, 1, 3, 3, 4, 2, 3, 1, 2, 2, 4, 3, 2, 1), (1, 3)),
    ("t1", "gamma"): (TORUS_T1_ROW, (1, 0)),
    ("t2", "gamma"): (TORUS_T2_ROW, (0, 1)),
}

# lines whose reflection elements express the canonical torus generators
TORUS_R_WORDS = {
    "t1": (("(4a,1b)", -1), ("(1a,4b)", 1)),
    "t2": (("(2a,4b)", -1), ("(4a,2b)", 1)),
    "t3": (("(1a,2b)", -1), ("(2a,1b)", 1)),
}

# reflection-word expressions of the base matrices
GENERATOR_R_WORDS = {
    "alpha": (("(3a,1b)", 1), ("(1a,3b)", 1), ("(3a,4b)", 1), ("(2a,1b)", -1)),
    "beta": (("(1a,2b)", 1), ("(3a,4b)", -1), ("(2a,1b)", 1), ("(4a,2b)", -1)),
    "gamma": (("(1b,2c)", 1), ("(1a,2b)", -1)),
}

PI_EXPECTED = {
    "R(1a,2b)": "(3,4)(b,c)",
    "r(1a,2b)": "(3,4)",
    "n1": "(1,2,3)",
    "n2": "(3,4)",
    "n3": "(a,b,c)",
    "n4": "(a,b)",
}


def section_vector(section, coords):
    v = np.zeros(DIM, dtype=np.uint8)
    sl = section_slice(section)
    if len(coords) != sl.stop - sl.start:
        raise ValueError("coordinate count does not match section length")
    v[sl] = coords
    return v


def subspace_from_rows(rows):
    return rref(Mat(np.array([section_vector(s, c) for s, c in rows])))


FIX_S_ROW = (5, (1, 0, 3, 0, 0, 4, 2))

# minimal invariant subspace of the point group: the first row is the unique
# invariance-forced completion (the printed source garbles it; the stored
# value is the one whose span is stable and isotropic)
MIN_SUBSPACE_POINT = (
    (1, (0, 0, 1, 1, 2, 4, 3, 1, 2)),
    (5, (1, 0, 3, 0, 0, 4, 2)),
    (7, (1, 0, 3, 0, 0, 1, 3)),
    (9, (1, 0, 3, 0, 0, 4, 2)),
    (11, (1, 0, 3, 0, 0, 1, 3)),
    (13, (1, 0, 3, 0, 0, 4, 2)),
    (15, (1, 0, 3, 0, 0, 1, 3)),
)

MIN_SUBSPACE_LINE = (
    (5, (1, 0, 3, 0, 0, 4, 2)),
    (12, (1, 2, 2, 0, 0, 3, 2)),
    (14, (1, 2, 2, 0, 0, 2, 3)),
    (15, (1, 0, 3, 0, 0, 1, 3)),
)

# plane-group module: the section-1 row is again the invariance-forced value
MIN_SUBSPACE_PLANE = (
    (1, (0, 1, 0, 2, 2, 3, 0, 0, 3)),
    (5, (1, 0, 3, 0, 0, 4, 2)),
    (7, (1, 0, 3, 0, 0, 1, 3)),
    (8, (1, 3, 0, 0, 0, 2, 4)),
    (9, (1, 3, 0, 0, 0, 2, 4)),
    (12, (1, 2, 2, 0, 0, 3, 2)),
    (13, (1, 2, 2, 0, 0, 2, 3)),
    (14, (1, 2, 2, 0, 0, 2, 3)),
    (15, (1, 0, 3, 0, 0, 1, 3)),
    (16, (1, 3, 0, 0, 0, 3, 1)),
)

# unit vectors fixed by the order-3 generator gamma
GAMMA_FIX_INDICES = (
    1, 2, 3, 10, 11, 16, 17, 22, 23, 28, 35, 42, 49, 56, 63, 70, 77, 84, 91, 98, 105,
)


def special_subspace(indices):
    basis = np.zeros((len(indices), DIM), dtype=np.uint8)
    for r, i in enumerate(sorted(indices)):
        basis[r, i - 1] = 1
    return Subspace(DIM, basis)
