"""Character table of the torus normalizer (order 2304, thirty classes).

Irrational entries lie in Z[sqrt(-3)]: A = -1 - 2*sqrt(-3) and B = sqrt(-3),
with *A the conjugate of A.  Class sizes are not stored; they follow from
column orthogonality (the centralizer order is the column norm) and that
derivation is covered by tests.
"""

from .cyclo import Cyc

CLASS_NAMES = (
    "1a", "2a", "2b", "2c", "2d", "2e", "3a", "3b", "3c", "4a", "4b", "4c",
    "4d", "4e", "6a", "6b", "6c", "6d", "6e", "8a", "8b", "8c", "8d", "8e",
    "12a", "12b", "12c", "12d", "12e", "24a",
)

AMBIENT_FUSION = (
    "1a", "2a", "2a", "2a", "2a", "2a", "3a", "3b", "3b", "4a", "4a", "4a",
    "4a", "4a", "6a", "6a", "6a", "6a", "6c", "8a", "8a", "8b", "8b", "8b",
    "12a", "12a", "12a", "12a", "12a", "24a",
)

_ROWS = """
1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1
1 1 1 -1 -1 1 1 1 1 1 1 -1 1 -1 1 1 1 -1 -1 -1 -1 -1 1 1 1 1 -1 -1 -1 -1
1 1 1 -1 1 -1 1 1 1 1 1 -1 -1 -1 1 1 1 -1 1 -1 1 1 -1 -1 1 1 -1 -1 -1 -1
1 1 1 1 -1 -1 1 1 1 1 1 1 -1 1 1 1 1 1 -1 1 -1 -1 -1 -1 1 1 1 1 1 1
2 2 2 -2 . . -1 2 -1 2 2 -2 . -2 -1 -1 -1 1 . -2 . . . . -1 -1 1 1 1 1
2 2 2 2 . . -1 2 -1 2 2 2 . 2 -1 -1 -1 -1 . 2 . . . . -1 -1 -1 -1 -1 -1
2 2 2 . -2 . 2 -1 -1 2 2 . . . 2 2 2 . 1 . -2 -2 . . 2 2 . . . .
2 2 2 . 2 . 2 -1 -1 2 2 . . . 2 2 2 . -1 . 2 2 . . 2 2 . . . .
3 3 -1 -1 3 -1 3 . . 3 -1 -1 -1 1 3 -1 -1 -1 . -1 -1 -1 -1 1 3 -1 -1 1 1 -1
3 3 -1 -1 -3 1 3 . . 3 -1 -1 1 1 3 -1 -1 -1 . -1 1 1 1 -1 3 -1 -1 1 1 -1
3 3 -1 1 3 1 3 . . 3 -1 1 1 -1 3 -1 -1 1 . 1 -1 -1 1 -1 3 -1 1 -1 -1 1
3 3 -1 1 -3 -1 3 . . 3 -1 1 -1 -1 3 -1 -1 1 . 1 1 1 -1 1 3 -1 1 -1 -1 1
4 4 4 . . . -2 -2 1 4 4 . . . -2 -2 -2 . . . . . . . -2 -2 . . . .
6 6 -2 -2 . . -3 . . 6 -2 -2 . 2 -3 1 1 1 . -2 . . . . -3 1 1 -1 -1 1
6 6 -2 2 . . -3 . . 6 -2 2 . -2 -3 1 1 -1 . 2 . . . . -3 1 -1 1 1 -1
6 6 2 -2 . . 6 . . -2 -2 -2 . . 6 2 2 -2 . 2 . . . . -2 -2 -2 . . 2
6 6 2 2 . . 6 . . -2 -2 2 . . 6 2 2 2 . -2 . . . . -2 -2 2 . . -2
6 6 -2 . . -2 6 . . -2 2 . -2 . 6 -2 -2 . . . . . 2 . -2 2 . . . .
6 6 -2 . . 2 6 . . -2 2 . 2 . 6 -2 -2 . . . . . -2 . -2 2 . . . .
6 6 2 -2 . . -3 . . -2 -2 -2 . . -3 A *A 1 . 2 . . . . 1 1 1 B -B -1
6 6 2 -2 . . -3 . . -2 -2 -2 . . -3 *A A 1 . 2 . . . . 1 1 1 -B B -1
6 6 2 2 . . -3 . . -2 -2 2 . . -3 A *A -1 . -2 . . . . 1 1 -1 -B B 1
6 6 2 2 . . -3 . . -2 -2 2 . . -3 *A A -1 . -2 . . . . 1 1 -1 B -B 1
12 12 -4 . . . -6 . . -4 4 . . . -6 2 2 . . . . . . . 2 -2 . . . .
12 -4 . 2 . -2 12 . . . . -2 2 . -4 . . 2 . . -2 2 . . . . -2 . . .
12 -4 . 2 . 2 12 . . . . -2 -2 . -4 . . 2 . . 2 -2 . . . . -2 . . .
12 -4 . -2 . 2 12 . . . . 2 -2 . -4 . . -2 . . -2 2 . . . . 2 . . .
12 -4 . -2 . -2 12 . . . . 2 2 . -4 . . -2 . . 2 -2 . . . . 2 . . .
24 -8 . 4 . . -12 . . . . -4 . . 4 . . -2 . . . . . . . . 2 . . .
24 -8 . -4 . . -12 . . . . 4 . . 4 . . 2 . . . . . . . . -2 . . .
"""

PSI_VALUES = (
    111, -1, -1, -1, -1, -1, -24, 3, 3, 3, 3, 3, 3, 3, 8, 8, 8, 8, -1,
    -3, -3, 1, 1, 1, 0, 0, 0, 0, 0, 0,
)

_SYMBOLS = {
    "A": Cyc(-1, -2),
    "*A": Cyc(-1, 2),
    "-A": Cyc(1, 2),
    "-*A": Cyc(1, -2),
    "B": Cyc(0, 1),
    "-B": Cyc(0, -1),
    ".": Cyc(0, 0),
}


def _parse_token(tok):
    if tok in _SYMBOLS:
        return _SYMBOLS[tok]
    return Cyc(int(tok), 0)


IRREDUCIBLES = tuple(
    tuple(_parse_token(tok) for tok in line.split())
    for line in _ROWS.strip().splitlines()
)

DEGREES = tuple(int(row[0].a) for row in IRREDUCIBLES)

CLASS_ORDERS = tuple(int(name.rstrip("abcdefgh")) for name in CLASS_NAMES)


def centralizer_orders():
    """Column norms of the table: |C(g)| = sum over rows of |chi(g)|^2."""
    out = []
    for c in range(len(CLASS_NAMES)):
        total = 0
        for row in IRREDUCIBLES:
            v = row[c]
            total += (v * v.conj()).a
        out.append(total)
    return tuple(out)


def class_sizes(group_order=2304):
    return tuple(group_order // c for c in centralizer_orders())
