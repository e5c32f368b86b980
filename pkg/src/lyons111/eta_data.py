"""Transcription of the sixteen nonzero blocks of the nilpotent generator.

One cell of the printed source is unrecoverable: the first row of block
(7,2) shows five entries for six columns, with no indication of which column
was dropped.  That row is stored here as-is; generators.calibrate_eta
enumerates the 30 possible completions and keeps the unique one consistent
with every structural constraint.
"""

# '.' denotes 0
ETA_BLOCK_TEXT = {
    (1, 16): """
        . . . 4 3 . .
        . . . . . 2 .
        3 1 . . . . .
        2 4 4 . . . .
        3 . 4 . . . .
        1 1 4 . . 1 1
        1 2 1 . . . 4
        4 4 1 . . 1 1
        4 3 4 . . . 4
    """,
    (2, 13): """
        2 1 . 3 1 4 .
        4 2 . 4 3 3 .
        . 3 1 2 . 2 4
        4 2 2 2 1 . 3
        . 2 4 2 . 3 1
        1 3 3 2 1 . 2
    """,
    (3, 7): """
        3 4 . 3 1 4 .
        4 2 . 1 2 2 .
        3 4 4 4 2 . 4
        2 . 4 2 3 4 4
        3 . 1 2 3 1 1
        . 4 3 4 . 4 3
    """,
    (4, 10): """
        . . . 2 4 3 .
        . . . 3 1 3 .
        4 3 4 3 4 . .
        2 3 . 1 2 . .
        2 2 3 2 3 . .
        2 4 2 1 3 . .
    """,
    (5, 6): """
        4 2 . 2 2 3 .
        4 2 4 . 2 3 2
        3 1 3 1 1 3 2
        2 4 . . 2 4 4
        1 . 2 4 . . .
        4 . 4 2 3 . 3
        3 . . 1 4 4 1
    """,
    (6, 14): """
        1 2 4 3 . 1 4
        . 1 . 2 . 4 4
        1 4 4 . . 2 2
        1 1 3 1 2 1 2
        2 2 1 3 3 2 4
        2 . 4 . . 1 .
        3 . 4 1 . 4 4
    """,
    (8, 12): """
        4 3 1 3 . 1 4
        . 4 . 2 . 4 4
        4 1 1 . . 2 2
        1 1 3 4 3 4 3
        2 2 1 2 2 3 1
        2 . 4 . . 4 .
        3 . 4 4 . 1 1
    """,
    (9, 5): """
        2 1 2 1 . 4 2
        . 2 . 4 . . 2
        3 3 3 1 . . 2
        2 1 4 3 1 3 1
        4 2 3 2 . 1 2
        4 2 2 . . 2 .
        . 1 1 3 . 3 3
    """,
    (10, 1): """
        . . 4 4 1 1 1 4 4
        . . 1 3 2 3 3 2 2
        . . 2 2 . 3 4 2 1
        . . . . . . . . .
        3 . . . . . . . .
        . 4 . . . 1 1 1 1
        . 3 . . . . 4 . 4
    """,
    (11, 15): """
        3 4 3 1 . 4 2
        . 3 . 4 . . 2
        2 2 2 1 . . 2
        2 1 4 2 4 2 4
        4 2 3 3 . 4 3
        4 2 2 . . 3 .
        . 1 1 2 . 2 2
    """,
    (12, 11): """
        1 3 . . 3 3 .
        1 2 4 3 3 1 3
        2 1 3 2 3 3 4
        2 4 . 2 2 . 4
        2 3 2 2 3 . 1
        4 1 1 1 3 3 3
        3 4 4 1 3 . 1
    """,
    (13, 3): """
        2 1 3 2 4 2
        2 1 4 1 2 1
        4 2 1 . 4 4
        . . 2 2 . 2
        4 3 1 2 4 1
        2 1 1 4 3 4
        4 2 . 1 1 .
    """,
    (14, 9): """
        4 2 . . 3 3 .
        4 3 1 3 3 1 3
        3 4 2 2 3 3 4
        2 4 . 3 3 . 1
        2 3 2 3 2 . 4
        4 1 1 4 2 2 2
        3 4 4 4 2 . 4
    """,
    (15, 8): """
        1 3 . 2 2 3 .
        1 3 1 . 2 3 2
        2 4 2 1 1 3 2
        2 4 . . 3 1 1
        1 . 2 1 . . .
        4 . 4 3 2 . 2
        3 . . 4 1 1 4
    """,
    (16, 4): """
        . . . 3 4 4
        . . . 4 2 2
        . . 2 4 2 1
        . . 1 3 1 4
        1 4 2 4 3 4
        4 4 . . . .
        3 3 . . . .
    """,
}

# block (7,2): the incomplete first row (five of six entries, order preserved)
# followed by the six complete rows
ETA_BLOCK_7_2_PARTIAL_ROW = (1, 4, 3, 4, 3)
ETA_BLOCK_7_2_TAIL = """
    3 1 2 4 2 4
    1 2 . 3 . 3
    . . 4 . 1 .
    4 2 4 2 1 3
    2 4 2 4 2 4
    4 3 3 3 3 3
"""


def parse_block(text):
    rows = []
    for line in text.strip().splitlines():
        toks = line.split()
        rows.append([0 if t == "." else int(t) for t in toks])
    widths = {len(r) for r in rows}
    if len(widths) != 1:
        raise ValueError("ragged block transcription")
    return rows
