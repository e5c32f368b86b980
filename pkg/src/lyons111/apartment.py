"""Combinatorics of the apartment: 12 points, 36 oriented lines, 24 planes,
144 maximal flags, with the S4 x S3 symmetry group acting on names.

Points are named by a number in {1,2,3,4} and a letter in {a,b,c}.  A line
joins two points differing in both coordinates and is oriented by the letter
rule a->b, b->c, c->a.  A plane holds one point of each letter, pairwise
differing in number.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import permutations

NUMBERS = (1, 2, 3, 4)
LETTERS = ("a", "b", "c")
_NEXT_LETTER = {"a": "b", "b": "c", "c": "a"}


@dataclass(frozen=True, order=True)
class Point:
    num: int
    letter: str

    def __str__(self):
        return f"{self.num}{self.letter}"


@dataclass(frozen=True, order=True)
class Line:
    frm: Point
    to: Point

    def __str__(self):
        return f"({self.frm},{self.to})"

    @property
    def points(self):
        return (self.frm, self.to)

    @property
    def parallel_class(self):
        return self.frm.letter + self.to.letter


@dataclass(frozen=True, order=True)
class Plane:
    pts: tuple  # three points ordered by letter

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.pts) + ")"


@dataclass(frozen=True, order=True)
class WeylElem:
    """Pair of permutations: nums[i-1] is the image of i, letters likewise."""

    nums: tuple
    letters: tuple

    def apply_point(self, p):
        return Point(self.nums[p.num - 1], self.letters[LETTERS.index(p.letter)])

    def __mul__(self, other):
        """self then other (actions compose left to right)."""
        return WeylElem(
            tuple(other.nums[n - 1] for n in self.nums),
            tuple(other.letters[LETTERS.index(x)] for x in self.letters),
        )

    def inverse(self):
        nums = [0] * 4
        letters = [""] * 3
        for i, n in enumerate(self.nums):
            nums[n - 1] = i + 1
        for i, x in enumerate(self.letters):
            letters[LETTERS.index(x)] = LETTERS[i]
        return WeylElem(tuple(nums), tuple(letters))

    @property
    def num_parity_even(self):
        return _parity(self.nums, NUMBERS)

    @property
    def letter_parity_even(self):
        return _parity(self.letters, LETTERS)

    @property
    def orientation_preserving(self):
        return self.letter_parity_even

    @property
    def in_kbar(self):
        return self.num_parity_even and self.letter_parity_even

    def __str__(self):
        return _cycle_str(self.nums, NUMBERS) + _cycle_str(self.letters, LETTERS) or "()"


def _parity(images, domain):
    seen = set()
    even = True
    lookup = {d: images[i] for i, d in enumerate(domain)}
    for d in domain:
        if d in seen:
            continue
        length = 0
        x = d
        while x not in seen:
            seen.add(x)
            x = lookup[x]
            length += 1
        if length % 2 == 0:
            even = not even
    return even


def _cycle_str(images, domain):
    lookup = {d: images[i] for i, d in enumerate(domain)}
    seen = set()
    out = []
    for d in domain:
        if d in seen or lookup[d] == d:
            seen.add(d)
            continue
        cyc = [d]
        seen.add(d)
        x = lookup[d]
        while x != d:
            cyc.append(x)
            seen.add(x)
            x = lookup[x]
        out.append("(" + ",".join(str(c) for c in cyc) + ")")
    return "".join(out)


WEYL_IDENTITY = WeylElem(NUMBERS, LETTERS)

WEYL_ELEMENTS = tuple(
    WeylElem(nums, letters)
    for nums in permutations(NUMBERS)
    for letters in permutations(LETTERS)
)

KBAR_ELEMENTS = tuple(w for w in WEYL_ELEMENTS if w.in_kbar)

# the twelve parallel shifts: commutator subgroup of A4 times the letter rotations
TRANSLATIONS = tuple(
    w
    for w in WEYL_ELEMENTS
    if w.letter_parity_even
    and w.num_parity_even
    and all(w.nums[w.nums[i] - 1] == i + 1 for i in range(4))
)

POINTS = tuple(Point(n, x) for n in NUMBERS for x in LETTERS)


def orient(p, q):
    """Canonically oriented line through an unordered point pair."""
    if p.num == q.num or p.letter == q.letter:
        raise ValueError(f"{p} and {q} do not span a line")
    if _NEXT_LETTER[p.letter] == q.letter:
        return Line(p, q)
    return Line(q, p)


LINES = tuple(
    sorted(
        orient(p, q)
        for i, p in enumerate(POINTS)
        for q in POINTS[i + 1 :]
        if p.num != q.num and p.letter != q.letter
    )
)

PLANES = tuple(
    sorted(
        Plane((Point(n, "a"), Point(m, "b"), Point(k, "c")))
        for n in NUMBERS
        for m in NUMBERS
        for k in NUMBERS
        if len({n, m, k}) == 3
    )
)


def lines_of_plane(plane):
    a, b, c = plane.pts
    return (orient(a, b), orient(b, c), orient(c, a))


def lines_through(point):
    return tuple(ln for ln in LINES if point in ln.points)


def planes_through_line(line):
    return tuple(
        pl for pl in PLANES if line.frm in pl.pts and line.to in pl.pts
    )


FLAGS = tuple(
    (p, ln, pl)
    for pl in PLANES
    for ln in lines_of_plane(pl)
    for p in ln.points
)


def act_ordered(w, line):
    """Image of an oriented line; second value reports orientation reversal."""
    p, q = w.apply_point(line.frm), w.apply_point(line.to)
    img = orient(p, q)
    return img, img.frm != p


def act(w, obj):
    """Apply a Weyl element to a point, line (re-canonicalized), or plane."""
    if isinstance(obj, Point):
        return w.apply_point(obj)
    if isinstance(obj, Line):
        return act_ordered(w, obj)[0]
    if isinstance(obj, Plane):
        pts = sorted((w.apply_point(p) for p in obj.pts), key=lambda p: p.letter)
        return Plane(tuple(pts))
    if isinstance(obj, tuple) and len(obj) == 3:
        return (act(w, obj[0]), act(w, obj[1]), act(w, obj[2]))
    raise TypeError(f"cannot act on {obj!r}")


BASE_LINE = Line(Point(1, "a"), Point(2, "b"))

_K_FOR_LINE = {}
for _w in KBAR_ELEMENTS:
    _K_FOR_LINE.setdefault(act(_w, BASE_LINE), _w)


def k_for_line(line):
    """The unique element of the 36-element group A4 x A3 taking the base
    line (1a,2b) to the given line (the action is sharply transitive)."""
    return _K_FOR_LINE[line]


def translation(p, q):
    """The unique parallel shift moving p to q."""
    for w in TRANSLATIONS:
        if w.apply_point(p) == q:
            return w
    raise ValueError(f"no translation from {p} to {q}")


def continuation(line):
    """Image of a line under the shift taking its start to its end."""
    return act(translation(line.frm, line.to), line)


@dataclass(frozen=True)
class Configuration:
    """Star, hexagon and quartet labels around an oriented line.

    Indices live in F7*: star_lines[i] and star_points[i] for i in 1..6, the
    hexagon adds hex_lines[i], and the quartet is (l1, m1, l6, m6).
    """

    line: Line
    center: Point
    star_lines: dict
    star_points: dict
    hex_lines: dict
    quartet: tuple


def _base_configuration():
    # the rotation by one step around the base point 1a
    rho = WeylElem((1, 3, 4, 2), ("a", "c", "b"))  # (2,3,4)(b,c)
    star = {1: BASE_LINE}
    i = 1
    for _ in range(5):
        img, reversed_ = act_ordered(rho, star[i])
        assert reversed_, "rotation must reverse orientation"
        i = (3 * i) % 7
        star[i] = img
    center = BASE_LINE.frm
    pts = {i: ln.to if ln.frm == center else ln.frm for i, ln in star.items()}
    hexl = {i: orient(pts[(2 * i) % 7], pts[(3 * i) % 7]) for i in range(1, 7)}
    quartet = (hexl[1], continuation(hexl[1]), hexl[6], continuation(hexl[6]))
    return Configuration(BASE_LINE, center, star, pts, hexl, quartet)


_BASE_CONFIG = _base_configuration()
_CONFIG_CACHE = {}


def configuration(line):
    """Configuration at a line, transported from the base line by the unique
    carrier in A4 x A3 (so identically built words transport to conjugates)."""
    if line in _CONFIG_CACHE:
        return _CONFIG_CACHE[line]
    k = k_for_line(line)
    base = _BASE_CONFIG
    cfg = Configuration(
        line,
        act(k, base.center),
        {i: act(k, ln) for i, ln in base.star_lines.items()},
        {i: act(k, p) for i, p in base.star_points.items()},
        {i: act(k, ln) for i, ln in base.hex_lines.items()},
        tuple(act(k, ln) for ln in base.quartet),
    )
    _CONFIG_CACHE[line] = cfg
    return cfg


def star(line):
    return configuration(line)


def hexagon(line):
    return configuration(line)


def quartet(line):
    return configuration(line)


_POINT_RE = re.compile(r"^([1-4])([abc])$")


def parse_point(text):
    m = _POINT_RE.match(text.strip())
    if not m:
        raise ValueError(f"bad point {text!r}: expected like '1a'")
    return Point(int(m.group(1)), m.group(2))


def parse_line(text):
    """Parse '(1a,2b)' with whitespace tolerance; anti-canonical orientation
    is rejected with a hint rather than silently flipped."""
    cleaned = text.strip()
    if cleaned.startswith("(") and cleaned.endswith(")"):
        cleaned = cleaned[1:-1]
    parts = [p.strip() for p in cleaned.split(",")]
    if len(parts) != 2:
        raise ValueError(f"bad line {text!r}: expected like '(1a,2b)'")
    p, q = parse_point(parts[0]), parse_point(parts[1])
    ln = orient(p, q)
    if ln.frm != p:
        raise ValueError(
            f"line {text!r} is oriented against the letter rule; did you mean {ln}?"
        )
    return ln


def graph_data():
    """Adjacency data for the apartment: points, oriented edges with their
    parallel-class tag, and planes as point triples."""
    return {
        "points": [str(p) for p in POINTS],
        "lines": [
            {"from": str(ln.frm), "to": str(ln.to), "class": ln.parallel_class}
            for ln in LINES
        ],
        "planes": [[str(p) for p in pl.pts] for pl in PLANES],
    }
