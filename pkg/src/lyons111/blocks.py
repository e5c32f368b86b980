"""The fixed 16-section scheme on indices 1..111 and its block machinery.

Sections are consecutive runs of lengths (9, 6, 6, 6, then twelve 7s).  The
58-minisection refinement cuts section 1 as (1,1,1,6), sections 2-4 as (2,4)
and sections 5-16 as (1,2,2,2).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf5 import Mat

DIM = 111
NSECTIONS = 16
SECTION_LENGTHS = (9, 6, 6, 6, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7)
SECTION_STARTS = tuple(1 + sum(SECTION_LENGTHS[:i]) for i in range(NSECTIONS))
SECTION_ENDS = tuple(s + d - 1 for s, d in zip(SECTION_STARTS, SECTION_LENGTHS))

# length classes that admissible block permutations must respect
_LENGTH_CLASSES = ({1}, {2, 3, 4}, set(range(5, 17)))

_MINI_CUTS = {9: (1, 1, 1, 6), 6: (2, 4), 7: (1, 2, 2, 2)}

# 58 (start, length) pairs, 1-based, in index order
MINISECTIONS = tuple(
    (start + offset, cut)
    for start, d in zip(SECTION_STARTS, SECTION_LENGTHS)
    for offset, cut in zip(np.cumsum((0,) + _MINI_CUTS[d][:-1]), _MINI_CUTS[d])
)

# index sets of the ten unit-vector subspaces refining the section scheme
_SEV = SECTION_STARTS[4:]
J_SETS = (
    (1,),
    (2,),
    (3,),
    tuple(range(4, 10)),
    (10, 11, 16, 17, 22, 23),
    tuple(sorted(set(range(12, 16)) | set(range(18, 22)) | set(range(24, 28)))),
    _SEV,
    tuple(sorted([s + 1 for s in _SEV] + [s + 2 for s in _SEV])),
    tuple(sorted([s + 3 for s in _SEV] + [s + 4 for s in _SEV])),
    tuple(sorted([s + 5 for s in _SEV] + [s + 6 for s in _SEV])),
)


def section_slice(i):
    """0-based slice of section i (1-based)."""
    if not 1 <= i <= NSECTIONS:
        raise ValueError(f"section index {i} out of range")
    return slice(SECTION_STARTS[i - 1] - 1, SECTION_ENDS[i - 1])


def block(x, i, j):
    """The (i, j) block of a 111 x 111 matrix."""
    if x.rows != DIM or x.cols != DIM:
        raise ValueError("block extraction expects a 111x111 matrix")
    return Mat(x.a[section_slice(i), section_slice(j)])


def _cycles_to_map(cycles, domain):
    perm = {i: i for i in domain}
    for cyc in cycles:
        for k, v in zip(cyc, cyc[1:] + cyc[:1]):
            if k not in perm:
                raise ValueError(f"index {k} out of range")
            perm[k] = v
    if sorted(perm.values()) != sorted(domain):
        raise ValueError("cycles do not define a permutation")
    return perm


def perm_matrix(cycles, n=DIM):
    """Permutation matrix for 1-based index cycles: e_i -> e_sigma(i)."""
    perm = _cycles_to_map(cycles, range(1, n + 1))
    m = np.zeros((n, n), dtype=np.uint8)
    for i, j in perm.items():
        m[i - 1, j - 1] = 1
    return Mat(m)


def block_perm_matrix(cycles):
    """111 x 111 matrix permuting whole sections; rejects length-changing moves."""
    perm = _cycles_to_map(cycles, range(1, NSECTIONS + 1))
    for i, j in perm.items():
        if SECTION_LENGTHS[i - 1] != SECTION_LENGTHS[j - 1]:
            raise ValueError(
                f"inadmissible block permutation: sections {i} and {j} have "
                f"lengths {SECTION_LENGTHS[i - 1]} and {SECTION_LENGTHS[j - 1]}"
            )
    m = np.zeros((DIM, DIM), dtype=np.uint8)
    for i, j in perm.items():
        d = SECTION_LENGTHS[i - 1]
        m[
            SECTION_STARTS[i - 1] - 1 : SECTION_STARTS[i - 1] - 1 + d,
            SECTION_STARTS[j - 1] - 1 : SECTION_STARTS[j - 1] - 1 + d,
        ] = np.eye(d, dtype=np.uint8)
    return Mat(m)


@dataclass(frozen=True)
class BlockProfile:
    is_monomial: bool
    is_diagonal: bool
    is_scalar: bool
    support: tuple  # support[I-1] = J for nonzero block (I, J), else None
    scalar_coeffs: tuple | None

    def support_cycles(self):
        """Nontrivial cycles of the support permutation, each starting at its
        smallest member."""
        if not self.is_monomial:
            raise ValueError("support cycles only defined for block-monomial matrices")
        seen = set()
        cycles = []
        for start in range(1, NSECTIONS + 1):
            if start in seen or self.support[start - 1] == start:
                continue
            cyc = [start]
            seen.add(start)
            j = self.support[start - 1]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.support[j - 1]
            cycles.append(tuple(cyc))
        return tuple(cycles)


def classify(x):
    """Shape of a 111 x 111 matrix relative to the section scheme."""
    if x.rows != DIM or x.cols != DIM:
        raise ValueError("classify expects a 111x111 matrix")
    nonzero = np.zeros((NSECTIONS, NSECTIONS), dtype=bool)
    for i in range(NSECTIONS):
        for j in range(NSECTIONS):
            nonzero[i, j] = bool(x.a[section_slice(i + 1), section_slice(j + 1)].any())
    row_counts = nonzero.sum(axis=1)
    col_counts = nonzero.sum(axis=0)
    is_monomial = bool((row_counts == 1).all() and (col_counts == 1).all())
    is_diagonal = not (nonzero & ~np.eye(NSECTIONS, dtype=bool)).any()
    support = tuple(
        int(np.nonzero(nonzero[i])[0][0]) + 1 if row_counts[i] == 1 else None
        for i in range(NSECTIONS)
    )
    is_scalar = False
    coeffs = None
    if is_diagonal:
        cs = []
        for i in range(1, NSECTIONS + 1):
            b = x.a[section_slice(i), section_slice(i)]
            c = b[0, 0]
            if np.array_equal(b, c * np.eye(b.shape[0], dtype=np.uint8)):
                cs.append(int(c))
            else:
                cs = None
                break
        if cs is not None:
            is_scalar = True
            coeffs = tuple(cs)
    return BlockProfile(is_monomial, is_diagonal, is_scalar, support, coeffs)


def monomial_decompose(x):
    """Unique factorization x = x_D @ x_P, block diagonal times block permutation."""
    profile = classify(x)
    if not profile.is_monomial:
        raise ValueError("matrix is not block monomial")
    xp = block_perm_matrix(profile.support_cycles())
    xd = x @ xp.T  # permutation matrices are orthogonal mod 5
    return xd, xp


def miniblock_monomial(x):
    """True when x has exactly one nonzero block per row and column of the
    58-minisection refinement."""
    if x.rows != DIM or x.cols != DIM:
        raise ValueError("miniblock check expects a 111x111 matrix")
    starts = np.array([s - 1 for s, _ in MINISECTIONS])
    rowsum = np.add.reduceat(x.a.astype(np.int64), starts, axis=0)
    occupied = np.add.reduceat(rowsum, starts, axis=1) > 0
    return bool((occupied.sum(axis=0) == 1).all() and (occupied.sum(axis=1) == 1).all())
