"""Construction of the five base matrices, the root elements, and everything
derived from them (configuration generators, tori, reflection elements,
normalizer generators, the Sylow 5-subgroup).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

import numpy as np

from . import apartment, eta_data, hexrel
from .apartment import BASE_LINE, WeylElem, configuration, k_for_line
from .blocks import DIM, SECTION_STARTS, block_perm_matrix, perm_matrix, section_slice
from .closure import ClosureCapExceeded, closure_enumerate
from .gf5 import Mat, Subspace, dirsum_all, exp5, fixed_space, identity, kron, rref

ALPHA_BLOCK_CYCLES = ((5, 8), (6, 15), (7, 13), (9, 12), (10, 16), (11, 14))
ALPHA_NEG_DIAGONAL = (6, 7, 8, 9, 11, 12, 13, 17, 20, 21, 24, 25, 26, 27)
BETA_INDEX_CYCLES = ((4, 6, 8), (5, 7, 9))
BETA_BLOCK_CYCLES = ((2, 3, 4), (5, 12, 16), (6, 10, 11), (7, 14, 9), (8, 15, 13))

ALPHA_W = WeylElem((2, 1, 4, 3), ("a", "b", "c"))  # (1,2)(3,4)
BETA_W = WeylElem((2, 3, 1, 4), ("a", "b", "c"))  # (1,2,3)
GAMMA_W = WeylElem((1, 2, 3, 4), ("b", "c", "a"))  # (a,b,c)

B_CELL = Mat([[0, 1], [4, 4]])
D_CELL = Mat([[3, 1], [1, 3]])
J_CELL = Mat([[0, 1], [1, 0]])

# coordinates (in section 5) of the common fixed vector of the Sylow group
SYLOW_FIX_COORDS = (1, 0, 3, 0, 0, 4, 2)

# directions of the twelve root lines around a point, in degrees: the star
# lines pairwise at 60 degrees, the outer hexagon lines between them
STAR_DIRECTION = {1: 0, 2: 120, 4: 240, 3: 60, 6: 180, 5: 300}
HEX_DIRECTION = {1: 90, 2: 210, 4: 330, 3: 150, 6: 270, 5: 30}


def build_alpha():
    m = np.array(block_perm_matrix(ALPHA_BLOCK_CYCLES).a)
    for i in ALPHA_NEG_DIAGONAL:
        m[i - 1, i - 1] = 4
    return Mat(m)


def build_beta():
    return perm_matrix(BETA_INDEX_CYCLES) @ block_perm_matrix(BETA_BLOCK_CYCLES)


def build_gamma():
    one = identity(1)
    return dirsum_all(
        [
            identity(3),
            kron(identity(3), B_CELL),
            kron(identity(3), dirsum_all([one, one, B_CELL, B_CELL])),
            kron(identity(12), dirsum_all([one, B_CELL, B_CELL, B_CELL])),
        ]
    )


def build_form():
    f1 = dirsum_all([Mat([[4, 0, 0], [0, 4, 0], [0, 0, 3]]), D_CELL, D_CELL, D_CELL])
    f2 = kron(identity(3), dirsum_all([identity(2), 2 * D_CELL, 3 * D_CELL]))
    f4 = kron(J_CELL, kron(identity(6), dirsum_all([identity(1), 4 * D_CELL, D_CELL, 4 * D_CELL])))
    return dirsum_all([f1, f2, f4])


def assemble_eta(block_7_2_row):
    """Full 111x111 nilpotent matrix from the block transcription, with the
    given completion of the first row of block (7,2)."""
    m = np.zeros((DIM, DIM), dtype=np.uint8)
    for (i, j), text in eta_data.ETA_BLOCK_TEXT.items():
        m[section_slice(i), section_slice(j)] = eta_data.parse_block(text)
    tail = eta_data.parse_block(eta_data.ETA_BLOCK_7_2_TAIL)
    m[section_slice(7), section_slice(2)] = [list(block_7_2_row)] + tail
    return Mat(m)


def eta_candidates():
    """All 30 completions (6 insertion positions x 5 digit values)."""
    known = eta_data.ETA_BLOCK_7_2_PARTIAL_ROW
    out = []
    for pos in range(len(known) + 1):
        for val in range(5):
            row = known[:pos] + (val,) + known[pos:]
            out.append((pos, val, row))
    return out


class CalibrationError(RuntimeError):
    def __init__(self, message, witnesses):
        super().__init__(f"{message}: {witnesses}")
        self.witnesses = witnesses


@dataclass(frozen=True)
class Calibration:
    eta: Mat
    completions: tuple  # all (pos, val) pairs yielding the surviving matrix
    row: tuple
    convention: str
    rejected: dict


def _k_matrix_table(alpha, beta, gamma):
    table = {apartment.WEYL_IDENTITY: identity(DIM)}
    frontier = [apartment.WEYL_IDENTITY]
    gens = ((ALPHA_W, alpha), (BETA_W, beta), (GAMMA_W, gamma))
    while frontier:
        nxt = []
        for w in frontier:
            for gw, gm in gens:
                w2 = w * gw
                if w2 not in table:
                    table[w2] = table[w] @ gm
                    nxt.append(w2)
        frontier = nxt
    if set(table) != set(apartment.KBAR_ELEMENTS):
        raise RuntimeError("matrix group of alpha, beta, gamma does not realize A4 x A3")
    if len({m.key() for m in table.values()}) != len(table):
        raise RuntimeError("point-group matrices are not pairwise distinct")
    return table


def _base_hexagon_roots(xi, ktable):
    cfg = configuration(BASE_LINE)
    big, small = {}, {}
    for i in range(1, 7):
        w = k_for_line(cfg.star_lines[i])
        big[i] = ktable[w.inverse()] @ xi @ ktable[w]
        w = k_for_line(cfg.hex_lines[i])
        small[i] = ktable[w.inverse()] @ xi @ ktable[w]
    return big, small


def calibrate_eta(alpha, beta, gamma, f, ktable):
    """Identify the lost cell of block (7,2) by exhausting all completions.

    A candidate survives when the assembled matrix is nilpotent of index 5,
    its exponential preserves the form, and the full relation battery holds
    at the base line.  Exactly one completion must survive.
    """
    rejected = {"nilpotency": [], "form": [], "battery": []}
    survivors = []
    for pos, val, row in eta_candidates():
        eta = assemble_eta(row)
        e2 = eta @ eta
        e4 = e2 @ e2
        if not (e4 @ eta).is_zero():
            rejected["nilpotency"].append((pos, val))
            continue
        xi = identity(DIM) + eta + 3 * e2 + e2 @ eta + 4 * e4
        if xi @ f @ xi.T != f:
            rejected["form"].append((pos, val))
            continue
        big, small = _base_hexagon_roots(xi, ktable)
        convention = None
        for conv in hexrel.CONVENTIONS:
            if hexrel.battery_holds(big, small, convention=conv):
                convention = conv
                break
        if convention is None:
            rejected["battery"].append((pos, val))
            continue
        survivors.append((pos, val, row, eta, convention))

    distinct = {}
    for pos, val, row, eta, conv in survivors:
        entry = distinct.setdefault(eta.key(), [eta, row, conv, []])
        entry[3].append((pos, val))
    if not distinct:
        raise CalibrationError("no completion satisfies all constraints", rejected)
    if len(distinct) > 1:
        raise CalibrationError(
            "multiple distinct completions survive",
            [entry[3] for entry in distinct.values()],
        )
    eta, row, conv, pairs = next(iter(distinct.values()))
    return Calibration(eta, tuple(pairs), tuple(row), conv, rejected)


@dataclass
class DerivedElements:
    """All named elements attached to one line's configurations."""

    line: object
    big: dict  # star generators, index in F7*
    small: dict  # outer hexagon generators
    mu1: Mat
    mu6: Mat
    t: dict
    refl_big: Mat
    refl_small: Mat
    h: dict


class GeneratorBundle:
    """The base matrices plus every root element, built once and shared."""

    def __init__(self, calibrated_row=None):
        self.alpha = build_alpha()
        self.beta = build_beta()
        self.gamma = build_gamma()
        self.f = build_form()
        self.k_table = _k_matrix_table(self.alpha, self.beta, self.gamma)
        if calibrated_row is not None:
            self.calibration = None
            self.eta = assemble_eta(calibrated_row)
        else:
            self.calibration = calibrate_eta(
                self.alpha, self.beta, self.gamma, self.f, self.k_table
            )
            self.eta = self.calibration.eta
        self.xi = exp5(self.eta)
        self.roots = {}
        for line in apartment.LINES:
            w = k_for_line(line)
            self.roots[line] = self.k_table[w.inverse()] @ self.xi @ self.k_table[w]
        self._derived = {}

    def k_matrix(self, w):
        if w not in self.k_table:
            raise ValueError(f"{w} is not in the point group A4 x A3")
        return self.k_table[w]

    def root(self, line):
        return self.roots[line]

    def derived(self, line=BASE_LINE):
        if line not in self._derived:
            cfg = configuration(line)
            big = {i: self.roots[cfg.star_lines[i]] for i in range(1, 7)}
            small = {i: self.roots[cfg.hex_lines[i]] for i in range(1, 7)}
            mu1 = self.roots[cfg.quartet[1]]
            mu6 = self.roots[cfg.quartet[3]]
            t = {
                i: big[i] @ big[7 - i] ** 2 @ big[i] ** 2 @ big[7 - i]
                for i in range(1, 7)
            }
            refl_big = big[1] ** 2 @ big[6] ** 4 @ big[1] ** 2
            refl_small = small[1] ** 2 @ small[6] ** 3 @ small[1] ** 2
            l1, l6 = small[1], small[6]
            h = {
                1: mu1 @ l1 ** 4 @ mu1 ** 4 @ l1 ** 3,
                2: mu1 ** 4 @ l1,
                3: l6 ** 2 @ mu6 ** 4 @ l6 ** 4,
                4: l6 ** 2 @ mu6 ** 2,
            }
            self._derived[line] = DerivedElements(
                line, big, small, mu1, mu6, t, refl_big, refl_small, h
            )
        return self._derived[line]

    @cached_property
    def torus(self):
        """The sixteen torus elements, products of powers of t1 and t2."""
        d = self.derived(BASE_LINE)
        elems = {}
        for a in range(4):
            for b in range(4):
                elems[(a, b)] = d.t[1] ** a @ d.t[2] ** b
        if len({m.key() for m in elems.values()}) != 16:
            raise RuntimeError("torus does not have sixteen distinct elements")
        return elems

    @cached_property
    def n_generators(self):
        x = self.roots
        ln = apartment.parse_line
        n2 = x[ln("(3a,4b)")] @ x[ln("(4a,3b)")] @ x[ln("(3a,4b)")]
        n4 = (
            x[ln("(1b,2c)")] ** 3
            @ x[ln("(2c,1a)")]
            @ x[ln("(1b,2c)")] ** 3
            @ n2
        )
        return (self.beta, n2, self.gamma, n4)


STAR_IMAGES = {
    1: Mat([[1, 0, 0], [0, 1, 3], [0, 0, 1]]),
    2: Mat([[1, 0, 0], [0, 1, 0], [3, 0, 1]]),
    3: Mat([[1, 0, 0], [1, 1, 0], [0, 0, 1]]),
    4: Mat([[1, 3, 0], [0, 1, 0], [0, 0, 1]]),
    5: Mat([[1, 0, 1], [0, 1, 0], [0, 0, 1]]),
    6: Mat([[1, 0, 0], [0, 1, 0], [0, 1, 1]]),
}

STAR_TORUS_DIAGONALS = {
    1: (1, 2, 3),
    2: (3, 1, 2),
    4: (2, 3, 1),
    6: (1, 3, 2),
    5: (2, 1, 3),
    3: (3, 2, 1),
}


def sylow_fix_target():
    vec = np.zeros(DIM, dtype=np.uint8)
    vec[section_slice(5)] = SYLOW_FIX_COORDS
    return rref(Mat(vec.reshape(1, DIM)))


def _half_plane_systems():
    """The twelve closed subsets of six root directions spanning 150 degrees."""
    by_angle = {}
    for i, a in STAR_DIRECTION.items():
        by_angle[a] = ("big", i)
    for i, a in HEX_DIRECTION.items():
        by_angle[a] = ("small", i)
    systems = []
    for start in range(0, 360, 30):
        systems.append(tuple(by_angle[(start + 30 * k) % 360] for k in range(6)))
    return systems


@dataclass(frozen=True)
class SylowRecord:
    generators: tuple  # (kind, index) labels
    order: int
    fix: Subspace


def find_sylow(bundle):
    """Search the closed 6-subsets of the base hexagon generators for the one
    generating the Sylow 5-group with the expected fixed vector; falls back
    to all 6-subsets if no half-plane system matches."""
    d = bundle.derived(BASE_LINE)
    pools = {"big": d.big, "small": d.small}
    target = sylow_fix_target()

    def try_subset(labels):
        gens = [pools[kind][i] for kind, i in labels]
        if fixed_space(gens) != target:
            return None
        try:
            closure = closure_enumerate(gens, cap=5 ** 6, labels=[f"{k}{i}" for k, i in labels])
        except ClosureCapExceeded:
            return None
        if closure.order != 5 ** 6:
            return None
        return SylowRecord(tuple(labels), closure.order, target)

    for labels in _half_plane_systems():
        rec = try_subset(labels)
        if rec is not None:
            return rec
    all_gens = [("big", i) for i in range(1, 7)] + [("small", i) for i in range(1, 7)]
    for labels in combinations(all_gens, 6):
        rec = try_subset(labels)
        if rec is not None:
            return rec
    raise RuntimeError("no 6-generator subset yields the Sylow 5-subgroup")


def sylow_generators(bundle, record):
    d = bundle.derived(BASE_LINE)
    pools = {"big": d.big, "small": d.small}
    return [pools[kind][i] for kind, i in record.generators]
