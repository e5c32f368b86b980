"""Verification suites: relation batteries, torus and normalizer structure,
the invariant form, minimal invariant subspaces, and the character-level
decomposition of the representation restricted to the torus normalizer.

A Session caches the expensive shared artifacts (generator bundle, the
enumerated normalizer, its conjugation action on the root groups, the Sylow
5-subgroup) so suites can run in any order without recomputation.
"""

from __future__ import annotations

import random
from collections import Counter
from functools import cached_property

import numpy as np

from . import apartment, blocks, chartable, generators, hexrel, tables
from .apartment import BASE_LINE, LINES, WEYL_ELEMENTS, act, parse_line
from .brauer import brauer_value
from .closure import closure_enumerate
from .cyclo import Cyc
from .gf5 import (
    Mat,
    Subspace,
    det,
    element_order,
    fixed_space,
    identity,
    inv,
    kernel,
    nilpotency_index,
    orth_complement,
    rref,
    span_closure,
)
from .report import Report

SUITE_NAMES = ("relations", "torus", "weyl", "form", "subspaces", "character")

_GROUP_SIZES = {
    "K": 36,
    "T": 16,
    "N": 2304,
    "quartet": 720,
    "sl2": 120,
    "S": 15625,
    "sl3star": 372000,
}


class Session:
    """Shared state for all verification suites."""

    def __init__(self, bundle=None):
        self._bundle = bundle

    @property
    def bundle(self):
        if self._bundle is None:
            self._bundle = generators.GeneratorBundle()
        return self._bundle

    def derived(self, line=BASE_LINE):
        return self.bundle.derived(line)

    # -- torus ---------------------------------------------------------

    def _r_word(self, spec):
        out = None
        for line_text, exp in spec:
            r = self.bundle.derived(parse_line(line_text)).refl_big
            factor = r if exp == 1 else r ** exp
            out = factor if out is None else out @ factor
        return out

    @cached_property
    def torus_pair(self):
        """The canonical generating pair (t1, t2) of the standard torus."""
        return (self._r_word(tables.TORUS_R_WORDS["t1"]),
                self._r_word(tables.TORUS_R_WORDS["t2"]))

    @cached_property
    def torus_elements(self):
        t1, t2 = self.torus_pair
        return {(a, b): t1 ** a @ t2 ** b for a in range(4) for b in range(4)}

    @cached_property
    def torus_keys(self):
        return {m.key() for m in self.torus_elements.values()}

    # -- normalizer ----------------------------------------------------

    @cached_property
    def normalizer(self):
        return closure_enumerate(
            self.bundle.n_generators, cap=4000, labels=("n1", "n2", "n3", "n4"),
            store_elements=True,
        )

    @cached_property
    def root_power_lookup(self):
        lookup = {}
        for idx, line in enumerate(LINES):
            x = self.bundle.roots[line]
            p = x
            for e in range(1, 5):
                lookup[p.key()] = (idx, e)
                p = p @ x
        return lookup

    @cached_property
    def weyl_by_line_perm(self):
        index = {line: i for i, line in enumerate(LINES)}
        return {
            tuple(index[act(w, line)] for line in LINES): w for w in WEYL_ELEMENTS
        }

    def pi_direct(self, m):
        """Permutation of the root groups induced by conjugation, as a Weyl
        element; None if some conjugate is not a root-element power."""
        mi = inv(m)
        perm = []
        for line in LINES:
            c = mi @ self.bundle.roots[line] @ m
            hit = self.root_power_lookup.get(c.key())
            if hit is None:
                return None
            perm.append(hit[0])
        return self.weyl_by_line_perm.get(tuple(perm))

    @cached_property
    def pi_generator_images(self):
        return tuple(self.pi_direct(n) for n in self.bundle.n_generators)

    @cached_property
    def pi_labels(self):
        """pi on all of N, extended multiplicatively along the discovery tree
        (the generator images are computed directly; verify_weyl cross-checks
        a sample against pi_direct)."""
        return self.normalizer.extend_morphism(
            self.pi_generator_images, apartment.WEYL_IDENTITY, lambda a, b: a * b
        )

    def lift_of(self, w):
        """Some element of N mapping to the Weyl element w."""
        for m, label in zip(self.normalizer.elements, self.pi_labels):
            if label == w:
                return Mat(m)
        raise ValueError(f"no element of N maps to {w}")

    # -- Sylow ---------------------------------------------------------

    @cached_property
    def sylow(self):
        return generators.find_sylow(self.bundle)

    @cached_property
    def sylow_gens(self):
        return generators.sylow_generators(self.bundle, self.sylow)

    # -- conjugacy classes ----------------------------------------------

    @cached_property
    def conjugacy_classes(self):
        """Partition of N by conjugation orbits (indices into the element
        stack of the normalizer closure)."""
        n = self.normalizer
        index = {Mat(e).key(): i for i, e in enumerate(n.elements)}
        gens = [Mat(g.a) for g in self.bundle.n_generators]
        gen_invs = [inv(g) for g in gens]
        assigned = [None] * len(n.elements)
        classes = []
        for start in range(len(n.elements)):
            if assigned[start] is not None:
                continue
            cls = len(classes)
            orbit = [start]
            assigned[start] = cls
            frontier = [start]
            while frontier:
                nxt = []
                for i in frontier:
                    m = Mat(n.elements[i])
                    for g, gi in zip(gens, gen_invs):
                        j = index[(gi @ m @ g).key()]
                        if assigned[j] is None:
                            assigned[j] = cls
                            orbit.append(j)
                            nxt.append(j)
                frontier = nxt
            classes.append(tuple(orbit))
        return classes

    # -- suites ----------------------------------------------------------

    def verify_relations(self, all_lines=False):
        rep = Report("relations")
        b = self.bundle
        rep.check("base.alpha-squared", (b.alpha @ b.alpha).is_identity())
        rep.check("base.beta-cubed", (b.beta ** 3).is_identity())
        rep.check("base.gamma-cubed", (b.gamma ** 3).is_identity())
        rep.check("base.gamma-commutes-alpha", b.gamma @ b.alpha == b.alpha @ b.gamma)
        rep.check("base.gamma-commutes-beta", b.gamma @ b.beta == b.beta @ b.gamma)
        omega = b.alpha.conj(b.beta)
        rep.check(
            "base.a4-presentation",
            omega.conj(b.beta) == b.alpha @ omega == omega @ b.alpha,
        )
        k_closure = closure_enumerate([b.alpha, b.beta, b.gamma], cap=100)
        rep.check("base.point-group-order-36", k_closure.order == 36, k_closure.order)

        e4 = b.eta ** 4
        rep.check("eta.nilpotency-index-5", nilpotency_index(b.eta) == 5)
        rep.check("eta.fourth-power-nonzero", not e4.is_zero())
        vanishing = tuple(
            i for i in range(1, 17) if blocks.block(e4, i, i).is_zero()
        )
        rep.check("eta.eta4-vanishing-diagonal-blocks", vanishing == (2, 3, 10, 16), vanishing)
        prof = blocks.classify(b.eta)
        rep.check(
            "eta.support-cycles",
            prof.support_cycles() == ((1, 16, 4, 10), (2, 13, 3, 7), (5, 6, 14, 9), (8, 12, 11, 15)),
            prof.support_cycles(),
        )
        rep.check("xi.order-5", element_order(b.xi) == 5)
        rep.check("xi.not-identity", not b.xi.is_identity())
        rep.check("xi.determinant-1", det(b.xi) == 1)
        rep.check("xi.unipotency-degree", (b.xi - 1) ** 4 == e4 and not e4.is_zero())

        cal = b.calibration
        if cal is not None:
            rep.check("calibration.unique-completion", len(cal.completions) == 1, cal.completions)
            rejected = {k: len(v) for k, v in cal.rejected.items()}
            rep.check(
                "calibration.thirty-candidates",
                len(cal.completions) + sum(rejected.values()) == 30,
                rejected,
            )
            rep.check(
                "calibration.convention-frozen",
                cal.convention == "a^-1 b^-1 a b",
                cal.convention,
            )

        d = self.derived()
        for conv in hexrel.CONVENTIONS:
            holds = hexrel.battery_holds(d.big, d.small, convention=conv)
            rep.check(
                f"commutator-probe.{'left' if conv.startswith('a^-1') else 'right'}",
                holds == (conv == "a^-1 b^-1 a b"),
                conv,
            )

        for name, ok in hexrel.check_battery(d.big, d.small):
            rep.check(f"hexagon.base {name}", ok)
        if all_lines:
            for line in LINES:
                dl = self.derived(line)
                results = hexrel.check_battery(dl.big, dl.small)
                bad = [n for n, ok in results if not ok]
                rep.check(f"hexagon.line {line}", not bad, bad or None)

        big_pair = closure_enumerate([d.big[1], d.big[6]], cap=200)
        small_pair = closure_enumerate([d.small[1], d.small[6]], cap=200)
        rep.check("hexagon.sl2-order-120-big", big_pair.order == 120, big_pair.order)
        rep.check("hexagon.sl2-order-120-small", small_pair.order == 120, small_pair.order)

        for i in range(1, 5):
            rep.check(f"quartet.h{i}-cubed", (d.h[i] ** 3).is_identity())
        squares = {
            (i, j): (d.h[i] @ d.h[j]) ** 2
            for i in range(1, 5)
            for j in range(1, 5)
            if i != j
        }
        first = next(iter(squares.values()))
        rep.check(
            "quartet.pair-squares-equal",
            all(v == first for v in squares.values()) and not first.is_identity(),
        )
        rep.check("quartet.lambda1-word", d.small[1] == d.h[1] @ d.h[4] ** 2 @ d.h[2] ** 2)
        rep.check("quartet.mu1-word", d.mu1 == d.h[1] @ d.h[4] ** 2 @ d.h[2])
        rep.check("quartet.lambda6-word", d.small[6] == d.h[2] ** 2 @ d.h[4] @ d.h[3] ** 2)
        rep.check(
            "quartet.mu6-word",
            d.mu6
            == d.h[3] @ d.h[2] @ d.h[4] @ d.h[1] @ d.h[3] @ d.h[2] ** 2 @ d.h[4] @ d.h[1],
        )
        quartet_closure = closure_enumerate([d.h[i] for i in range(1, 5)], cap=1000)
        rep.check("quartet.order-720", quartet_closure.order == 720, quartet_closure.order)

        for name, ok in hexrel.check_star_battery(d.big):
            rep.check(f"star.base {name}", ok)
        star_imgs = generators.STAR_IMAGES
        for name, ok in hexrel.check_star_battery(star_imgs):
            rep.check(f"star.images {name}", ok)
        for i in range(1, 7):
            w = star_imgs[i] @ star_imgs[7 - i] ** 2 @ star_imgs[i] ** 2 @ star_imgs[7 - i]
            expected = np.diag(generators.STAR_TORUS_DIAGONALS[i])
            rep.check(f"star.torus-word-image-{i}", np.array_equal(w.a, expected))
        star_closure = closure_enumerate(
            list(star_imgs.values()), cap=400_000, chunk=4096
        )
        rep.check("star.closure-order-372000", star_closure.order == 372000, star_closure.order)
        return rep.done()

    def verify_torus(self):
        rep = Report("torus")
        t1, t2 = self.torus_pair
        p1, p2 = blocks.classify(t1), blocks.classify(t2)
        rep.check("torus.t1-block-scalar", p1.is_scalar)
        rep.check("torus.t2-block-scalar", p2.is_scalar)
        rep.check("torus.t1-multipliers", p1.scalar_coeffs == tables.TORUS_T1_ROW, p1.scalar_coeffs)
        rep.check("torus.t2-multipliers", p2.scalar_coeffs == tables.TORUS_T2_ROW, p2.scalar_coeffs)
        rep.check("torus.order-16", len({m.key() for m in self.torus_elements.values()}) == 16)
        combos = set(zip(p1.scalar_coeffs, p2.scalar_coeffs))
        rep.check("torus.all-16-eigenvalue-combinations", len(combos) == 16, len(combos))

        b = self.bundle
        conjugators = {"alpha": b.alpha, "beta": b.beta, "gamma": b.gamma}
        named = {"t1": t1, "t2": t2}
        for (tname, kname), (row, (a, bb)) in tables.TORUS_CONJ_TABLE.items():
            conj = named[tname].conj(conjugators[kname])
            prof = blocks.classify(conj)
            rep.check(
                f"torus.conj-{tname}^{kname}-multipliers",
                prof.is_scalar and prof.scalar_coeffs == row,
                prof.scalar_coeffs,
            )
            rep.check(
                f"torus.conj-{tname}^{kname}-word",
                conj == t1 ** a @ t2 ** bb,
                (a, bb),
            )
        # the third reflection word completes the generating pair to the
        # triple whose product is the identity
        t3 = self._r_word(tables.TORUS_R_WORDS["t3"])
        rep.check("torus.t3-word", (t1 @ t2 @ t3).is_identity() and t3.key() in self.torus_keys)

        d = self.derived()
        for i in range(1, 7):
            prof = blocks.classify(d.t[i])
            rep.check(f"torus.family-t{i}-block-scalar", prof.is_scalar)
            rep.check(f"torus.family-t{i}-order-4", element_order(d.t[i]) == 4)
            rep.check(f"torus.family-t{i}-in-torus", d.t[i].key() in self.torus_keys)
        for i in (1, 2, 3):
            rep.check(f"torus.family-t{i}-inverse-pairing", d.t[7 - i] == d.t[i] ** -1)
        rep.check("torus.family-product-identity", (d.t[1] @ d.t[2] @ d.t[4]).is_identity())
        gen_ok = True
        for i in range(1, 7):
            for j in range(1, 7):
                if j in (i, 7 - i):
                    continue
                span = {(d.t[i] ** a @ d.t[j] ** bb).key() for a in range(4) for bb in range(4)}
                if span != self.torus_keys:
                    gen_ok = False
        rep.check("torus.family-nonopposite-pairs-generate", gen_ok)

        same = True
        witness = None
        for line in LINES:
            dl = self.derived(line)
            tl = {
                (dl.t[1] ** a @ dl.t[2] ** bb).key() for a in range(4) for bb in range(4)
            }
            if tl != self.torus_keys:
                same = False
                witness = str(line)
                break
        rep.check("torus.equal-for-all-36-lines", same, witness)

        stable = True
        witness = None
        for line in LINES:
            x = self.bundle.roots[line]
            for t in self.torus_elements.values():
                if self.root_power_lookup.get(x.conj(t).key(), (None,))[0] != LINES.index(line):
                    stable = False
                    witness = str(line)
                    break
            if not stable:
                break
        rep.check("torus.root-groups-stable", stable, witness)
        return rep.done()

    def verify_weyl(self):
        rep = Report("weyl")
        n = self.normalizer
        rep.check("weyl.normalizer-order-2304", n.order == 2304, n.order)

        n1, n2, n3, n4 = self.bundle.n_generators
        w1 = n1 @ n4 @ n1 ** -1 @ n4
        w2 = n1 ** -1 @ n4 @ n1 @ n4
        tgen = closure_enumerate([w1, w2], cap=64)
        rep.check(
            "weyl.torus-from-two-words",
            tgen.order == 16 and tgen.keys == {_int_key_or_bytes(m, n.dim) for m in self.torus_elements.values()},
            tgen.order,
        )

        expected_pi = [
            apartment.WeylElem((2, 3, 1, 4), ("a", "b", "c")),
            apartment.WeylElem((1, 2, 4, 3), ("a", "b", "c")),
            apartment.WeylElem((1, 2, 3, 4), ("b", "c", "a")),
            apartment.WeylElem((1, 2, 3, 4), ("b", "a", "c")),
        ]
        rep.check(
            "weyl.pi-generator-images",
            list(self.pi_generator_images) == expected_pi,
            [str(w) for w in self.pi_generator_images],
        )
        d = self.derived()
        rep.check("weyl.pi-R-base", self.pi_direct(d.refl_big) == apartment.WeylElem((1, 2, 4, 3), ("a", "c", "b")))
        rep.check("weyl.pi-r-base", self.pi_direct(d.refl_small) == apartment.WeylElem((1, 2, 4, 3), ("a", "b", "c")))

        labels = self.pi_labels
        fibers = Counter(labels)
        rep.check("weyl.pi-image-size-144", len(fibers) == 144, len(fibers))
        rep.check("weyl.pi-fibers-16", set(fibers.values()) == {16}, sorted(set(fibers.values())))
        kernel_keys = {
            Mat(m).key()
            for m, lab in zip(n.elements, labels)
            if lab == apartment.WEYL_IDENTITY
        }
        rep.check("weyl.pi-kernel-is-torus", kernel_keys == self.torus_keys)

        rng = random.Random(12321)
        sample = rng.sample(range(n.order), 40)
        ok = all(self.pi_direct(Mat(n.elements[i])) == labels[i] for i in sample)
        rep.check("weyl.pi-direct-sample", ok)
        pairs = [(rng.randrange(n.order), rng.randrange(n.order)) for _ in range(20)]
        mult_ok = True
        for i, j in pairs:
            prod = Mat(n.elements[i]) @ Mat(n.elements[j])
            if self.pi_direct(prod) != labels[i] * labels[j]:
                mult_ok = False
        rep.check("weyl.pi-multiplicative-sample", mult_ok)

        t1, t2 = self.torus_pair
        cent = [
            Mat(m)
            for m in n.elements
            if (lambda x: x @ t1 == t1 @ x and x @ t2 == t2 @ x)(Mat(m))
        ]
        expected_cent = {
            (t @ self.bundle.gamma ** e).key()
            for t in self.torus_elements.values()
            for e in range(3)
        }
        rep.check("weyl.torus-centralizer-order-48", len(cent) == 48, len(cent))
        rep.check(
            "weyl.torus-centralizer-is-T-times-gamma",
            {m.key() for m in cent} == expected_cent,
        )

        count = 0
        for entries in np.ndindex(4, 4, 4, 4):
            a, bb, c, dd = entries
            if (a * dd - bb * c) % 4 in (1, 3):
                count += 1
        rep.check("weyl.automorphisms-of-4x4-count-96", count == 96, count)

        named = {"alpha": self.bundle.alpha, "beta": self.bundle.beta, "gamma": self.bundle.gamma}
        for name, spec in tables.GENERATOR_R_WORDS.items():
            rep.check(f"weyl.reflection-word-{name}", self._r_word(spec) == named[name])
        for tname in ("t1", "t2"):
            word = self._r_word(tables.TORUS_R_WORDS[tname])
            rep.check(
                f"weyl.reflection-word-{tname}",
                word == (self.torus_pair[0] if tname == "t1" else self.torus_pair[1]),
            )

        mini_ok = all(blocks.miniblock_monomial(Mat(m)) for m in n.elements)
        rep.check("weyl.all-miniblock-monomial", mini_ok)
        rep.check("weyl.xi-not-miniblock-monomial", not blocks.miniblock_monomial(self.bundle.xi))
        return rep.done()

    def verify_form(self, nwords=100, seed=12321):
        rep = Report("form")
        f = self.bundle.f
        rep.check("form.symmetric", f == f.T)
        rep.check("form.determinant-4", det(f) == 4, det(f))
        rep.check(
            "form.nondegenerate",
            orth_complement(rref(identity(blocks.DIM)), f).dim == 0,
        )
        for name, g in (
            ("alpha", self.bundle.alpha),
            ("beta", self.bundle.beta),
            ("gamma", self.bundle.gamma),
            ("xi", self.bundle.xi),
        ):
            rep.check(f"form.invariant-{name}", g @ f @ g.T == f)
        rng = random.Random(seed)
        ok = True
        witness = None
        for _ in range(nwords):
            word = identity(blocks.DIM)
            for _ in range(rng.randint(1, 8)):
                line = LINES[rng.randrange(36)]
                word = word @ self.bundle.roots[line] ** rng.randint(1, 4)
            if word @ f @ word.T != f:
                ok = False
                witness = "random word failed"
                break
        rep.check(f"form.invariant-{nwords}-random-root-words", ok, witness)
        return rep.done()

    def verify_subspaces(self):
        rep = Report("subspaces")
        b = self.bundle
        rec = self.sylow
        rep.check("subspaces.sylow-order-15625", rec.order == 5 ** 6, rec.order)
        fix_expected = tables.subspace_from_rows([tables.FIX_S_ROW])
        fix_s = fixed_space(self.sylow_gens)
        rep.check("subspaces.sylow-fix-vector", fix_s == fix_expected)

        tset = list(self.torus_elements.values())
        m_s = span_closure(fix_s, self.sylow_gens)
        m_st = span_closure(fix_s, self.sylow_gens + tset)
        rep.check("subspaces.minimal-sylow", m_s == fix_expected)
        rep.check("subspaces.minimal-borel", m_st == fix_expected)

        d = self.derived()
        hex_gens = [d.big[i] for i in range(1, 7)] + [d.small[i] for i in range(1, 7)]
        m_point = span_closure(fix_s, hex_gens)
        rep.check(
            "subspaces.minimal-point-group",
            m_point == tables.subspace_from_rows(tables.MIN_SUBSPACE_POINT),
            m_point.dim,
        )

        line_gens = self._line_group_generators()
        m_line = span_closure(fix_s, line_gens)
        rep.check(
            "subspaces.minimal-line-group",
            m_line == tables.subspace_from_rows(tables.MIN_SUBSPACE_LINE),
            m_line.dim,
        )
        plane_gens = self._plane_group_generators()
        m_plane = span_closure(fix_s, plane_gens)
        rep.check(
            "subspaces.minimal-plane-group",
            m_plane == tables.subspace_from_rows(tables.MIN_SUBSPACE_PLANE),
            m_plane.dim,
        )

        f = b.f
        for name, space in (
            ("sylow", m_s),
            ("borel", m_st),
            ("point", m_point),
            ("line", m_line),
            ("plane", m_plane),
        ):
            gram = Mat(space.basis) @ f @ Mat(space.basis).T
            isotropic = gram.is_zero()
            rep.check(
                f"subspaces.isotropic-or-everything-{name}",
                isotropic or space.dim == blocks.DIM,
            )

        n_gens = list(b.n_generators)
        u_spaces = [tables.special_subspace(js) for js in blocks.J_SETS]
        inv_ok = all(span_closure(u, n_gens) == u for u in u_spaces)
        rep.check("subspaces.u-spaces-invariant", inv_ok)
        total = sum(u.dim for u in u_spaces)
        stacked = rref(Mat(np.vstack([u.basis for u in u_spaces])))
        rep.check("subspaces.u-spaces-direct-sum", total == blocks.DIM and stacked.dim == blocks.DIM)
        orth_ok = True
        for i in range(10):
            for j in range(i + 1, 10):
                prod = Mat(u_spaces[i].basis) @ f @ Mat(u_spaces[j].basis).T
                if not prod.is_zero():
                    orth_ok = False
        rep.check("subspaces.u-spaces-pairwise-orthogonal", orth_ok)

        j9 = blocks.J_SETS[8]
        diag_ok = True
        for m in range(1, 5):
            rows = np.zeros((len(j9), blocks.DIM), dtype=np.uint8)
            for r, i in enumerate(sorted(j9)):
                rows[r, i - 1] = 1
                rows[r, i + 1] = m
            u = rref(Mat(rows))
            if span_closure(u, n_gens) != u:
                diag_ok = False
        rep.check("subspaces.diagonal-u-spaces-invariant", diag_ok)

        t1, t2 = self.torus_pair
        for name, z in (("t1^2", t1 ** 2), ("t2^2", t2 ** 2), ("(t1t2)^2", (t1 @ t2) ** 2)):
            plus = fixed_space([z])
            minus = kernel(z + identity(blocks.DIM))
            special_plus = all(
                np.count_nonzero(row) == 1 for row in plus.basis
            )
            special_minus = all(
                np.count_nonzero(row) == 1 for row in minus.basis
            )
            rep.check(
                f"subspaces.involution-{name}-eigendims-55-56",
                (plus.dim, minus.dim) == (55, 56),
                (plus.dim, minus.dim),
            )
            rep.check(
                f"subspaces.involution-{name}-special",
                special_plus and special_minus,
            )
            rep.check(
                f"subspaces.involution-{name}-orthocomplements",
                orth_complement(plus, f) == minus and orth_complement(minus, f) == plus,
            )

        gfix = fixed_space([b.gamma])
        expected_gfix = tables.special_subspace(tables.GAMMA_FIX_INDICES)
        rep.check("subspaces.gamma-fix-21", gfix == expected_gfix, gfix.dim)
        comp = orth_complement(gfix, f)
        rep.check(
            "subspaces.gamma-fix-complement-90",
            comp.dim == 90
            and comp == tables.special_subspace(
                tuple(i for i in range(1, 112) if i not in tables.GAMMA_FIX_INDICES)
            ),
            comp.dim,
        )
        return rep.done()

    def _weyl_stabilizer_lifts(self, stabilizer):
        return [self.lift_of(w) for w in stabilizer]

    def _line_group_generators(self):
        line = BASE_LINE
        stab = [
            w
            for w in WEYL_ELEMENTS
            if {w.apply_point(line.frm), w.apply_point(line.to)} == set(line.points)
        ]
        gens = [self.bundle.roots[line]]
        gens += list(self.torus_elements.values())
        gens += self._weyl_stabilizer_lifts(stab)
        gens += self.sylow_gens
        return gens

    def _plane_group_generators(self):
        plane = apartment.Plane(
            (apartment.Point(1, "a"), apartment.Point(2, "b"), apartment.Point(3, "c"))
        )
        stab = [
            w
            for w in WEYL_ELEMENTS
            if {w.apply_point(p) for p in plane.pts} == set(plane.pts)
        ]
        gens = [self.bundle.roots[ln] for ln in apartment.lines_of_plane(plane)]
        gens += list(self.torus_elements.values())
        gens += self._weyl_stabilizer_lifts(stab)
        gens += self.sylow_gens
        return gens

    def verify_character(self):
        rep = Report("character")
        classes = self.conjugacy_classes
        rep.check("character.class-count-30", len(classes) == 30, len(classes))
        n = self.normalizer

        computed = []
        for cls in classes:
            m = Mat(n.elements[cls[0]])
            order = element_order(m, cap=24)
            value = brauer_value(m, order)
            computed.append({"order": order, "size": len(cls), "psi": value})
        rep.check(
            "character.identity-value-111",
            any(c["order"] == 1 and c["psi"] == 111 for c in computed),
        )
        table_keys = sorted(
            (chartable.CLASS_ORDERS[i], chartable.class_sizes()[i], chartable.PSI_VALUES[i])
            for i in range(30)
        )
        computed_keys = sorted((c["order"], c["size"], c["psi"]) for c in computed)
        rep.check(
            "character.class-data-matches-table",
            computed_keys == table_keys,
            computed_keys if computed_keys != table_keys else None,
        )
        rep.check(
            "character.order-3-value-minus-24",
            any(c["order"] == 3 and c["psi"] == -24 for c in computed),
        )

        sizes = chartable.class_sizes()
        columns_by_key = {}
        for i in range(30):
            key = (chartable.CLASS_ORDERS[i], sizes[i], chartable.PSI_VALUES[i])
            columns_by_key.setdefault(key, []).append(i)
        assignment = []
        pools = {k: list(v) for k, v in columns_by_key.items()}
        try:
            for c in computed:
                assignment.append(pools[(c["order"], c["size"], c["psi"])].pop())
        except (KeyError, IndexError):
            assignment = None
        rep.check("character.classes-assignable", assignment is not None)

        if assignment is not None:
            mults = []
            ok_integral = True
            for row in chartable.IRREDUCIBLES:
                total = Cyc(0, 0)
                for c, col in zip(computed, assignment):
                    total = total + c["size"] * (Cyc(c["psi"], 0) * row[col].conj())
                if total.b != 0 or total.a % 2304 != 0:
                    ok_integral = False
                    mults.append(None)
                else:
                    mults.append(total.a // 2304)
            rep.check("character.multiplicities-integral", ok_integral)
            if ok_integral:
                rep.check(
                    "character.multiplicities-nonnegative",
                    all(m >= 0 for m in mults),
                )
                rep.check(
                    "character.dimension-sum-111",
                    sum(m * d for m, d in zip(mults, chartable.DEGREES)) == 111,
                )
                shape = sorted(
                    (d, m) for d, m in zip(chartable.DEGREES, mults) if m
                )
                rep.check(
                    "character.decomposition-shape",
                    shape
                    == [(1, 1), (1, 1), (1, 1), (6, 1), (6, 1), (12, 1), (12, 1), (24, 1), (24, 2)],
                    shape,
                )
        return rep.done()

    def run(self, suites=None, all_lines=False):
        chosen = SUITE_NAMES if suites in (None, "all", ("all",)) else suites
        if isinstance(chosen, str):
            chosen = (chosen,)
        out = []
        for name in chosen:
            if name == "relations":
                out.append(self.verify_relations(all_lines=all_lines))
            elif name == "torus":
                out.append(self.verify_torus())
            elif name == "weyl":
                out.append(self.verify_weyl())
            elif name == "form":
                out.append(self.verify_form())
            elif name == "subspaces":
                out.append(self.verify_subspaces())
            elif name == "character":
                out.append(self.verify_character())
            else:
                raise ValueError(f"unknown suite {name!r}")
        return out

    def enumerate_group(self, name, cap):
        b = self.bundle
        d = self.derived()
        if name == "K":
            gens = [b.alpha, b.beta, b.gamma]
        elif name == "T":
            gens = list(self.torus_pair)
        elif name == "N":
            gens = list(b.n_generators)
        elif name == "quartet":
            gens = [d.h[i] for i in range(1, 5)]
        elif name == "sl2":
            gens = [d.big[1], d.big[6]]
        elif name == "S":
            gens = self.sylow_gens
        elif name == "sl3star":
            gens = list(generators.STAR_IMAGES.values())
        else:
            raise ValueError(f"unknown group {name!r}")
        return closure_enumerate(gens, cap=cap, chunk=4096)


def _int_key_or_bytes(m, dim):
    from .closure import _key_of

    return _key_of(m.a, dim)


def expected_group_order(name):
    return _GROUP_SIZES[name]
