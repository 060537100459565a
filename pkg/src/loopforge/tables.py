"""Fixed tables and small-group constructors for the test corpus.

The two embedded 16x16 tables are kept verbatim as data (their element
index order documents the name-to-index map).  Groups are generated from
closed formulas.
"""

from __future__ import annotations

from .core import LoopTable, direct_product

# Element i is just the integer i; 0 is the identity.
_TABLE1_ROWS = (
    (0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15),
    (1, 0, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10, 13, 12, 15, 14),
    (2, 3, 0, 1, 6, 7, 4, 5, 10, 11, 8, 9, 14, 15, 12, 13),
    (3, 2, 1, 0, 7, 6, 5, 4, 11, 10, 9, 8, 15, 14, 13, 12),
    (4, 5, 6, 7, 0, 1, 2, 3, 12, 13, 14, 15, 8, 9, 10, 11),
    (5, 4, 7, 6, 1, 0, 3, 2, 13, 12, 15, 14, 9, 8, 11, 10),
    (6, 7, 4, 5, 2, 3, 0, 1, 14, 15, 12, 13, 10, 11, 8, 9),
    (7, 6, 5, 4, 3, 2, 1, 0, 15, 14, 13, 12, 11, 10, 9, 8),
    (8, 9, 11, 10, 14, 15, 13, 12, 0, 1, 3, 2, 6, 7, 5, 4),
    (9, 8, 10, 11, 15, 14, 12, 13, 1, 0, 2, 3, 7, 6, 4, 5),
    (10, 11, 9, 8, 12, 13, 15, 14, 2, 3, 1, 0, 4, 5, 7, 6),
    (11, 10, 8, 9, 13, 12, 14, 15, 3, 2, 0, 1, 5, 4, 6, 7),
    (12, 13, 15, 14, 10, 11, 9, 8, 5, 4, 6, 7, 3, 2, 0, 1),
    (13, 12, 14, 15, 11, 10, 8, 9, 4, 5, 7, 6, 2, 3, 1, 0),
    (14, 15, 13, 12, 8, 9, 11, 10, 7, 6, 4, 5, 1, 0, 2, 3),
    (15, 14, 12, 13, 9, 8, 10, 11, 6, 7, 5, 4, 0, 1, 3, 2),
)

# Name-to-index map for the second table:
# 1 c u v a ca ua va b cb ub vb ab cab uab vab -> 0..15 in that order.
TABLE2_NAMES = ("1", "c", "u", "v", "a", "ca", "ua", "va",
                "b", "cb", "ub", "vb", "ab", "cab", "uab", "vab")

_TABLE2_ROWS = (
    (0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15),
    (1, 0, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10, 13, 12, 15, 14),
    (2, 3, 0, 1, 6, 7, 4, 5, 10, 11, 8, 9, 14, 15, 12, 13),
    (3, 2, 1, 0, 7, 6, 5, 4, 11, 10, 9, 8, 15, 14, 13, 12),
    (4, 5, 7, 6, 0, 1, 3, 2, 12, 13, 15, 14, 9, 8, 10, 11),
    (5, 4, 6, 7, 1, 0, 2, 3, 13, 12, 14, 15, 8, 9, 11, 10),
    (6, 7, 5, 4, 2, 3, 1, 0, 14, 15, 13, 12, 11, 10, 8, 9),
    (7, 6, 4, 5, 3, 2, 0, 1, 15, 14, 12, 13, 10, 11, 9, 8),
    (8, 9, 11, 10, 14, 15, 13, 12, 0, 1, 3, 2, 6, 7, 5, 4),
    (9, 8, 10, 11, 15, 14, 12, 13, 1, 0, 2, 3, 7, 6, 4, 5),
    (10, 11, 9, 8, 12, 13, 15, 14, 2, 3, 1, 0, 4, 5, 7, 6),
    (11, 10, 8, 9, 13, 12, 14, 15, 3, 2, 0, 1, 5, 4, 6, 7),
    (12, 13, 14, 15, 11, 10, 9, 8, 5, 4, 7, 6, 3, 2, 1, 0),
    (13, 12, 15, 14, 10, 11, 8, 9, 4, 5, 6, 7, 2, 3, 0, 1),
    (14, 15, 12, 13, 9, 8, 11, 10, 7, 6, 5, 4, 1, 0, 3, 2),
    (15, 14, 13, 12, 8, 9, 10, 11, 6, 7, 4, 5, 0, 1, 2, 3),
)


def table1() -> LoopTable:
    return LoopTable(_TABLE1_ROWS, name="table1")


def table2() -> LoopTable:
    return LoopTable(_TABLE2_ROWS, name="table2")


def cyclic(n: int) -> LoopTable:
    rows = [[(i + j) % n for j in range(n)] for i in range(n)]
    return LoopTable(rows, name="Z%d" % n)


def elem_abelian2(k: int) -> LoopTable:
    n = 1 << k
    rows = [[i ^ j for j in range(n)] for i in range(n)]
    return LoopTable(rows, name="Z2^%d" % k)


def dihedral8() -> LoopTable:
    # element (i, s) -> index i*2 + s; r^i f^s with f r f = r^-1
    def mul(a, b):
        i, s = divmod(a, 2)
        j, t = divmod(b, 2)
        i2 = (i + (j if s == 0 else -j)) % 4
        return i2 * 2 + (s ^ t)
    rows = [[mul(a, b) for b in range(8)] for a in range(8)]
    return LoopTable(rows, name="D4")


def quaternion8() -> LoopTable:
    # element (i, s) -> index i*2 + s;  a^4 = 1, b^2 = a^2, b a b^-1 = a^-1
    def mul(x, y):
        i, s = divmod(x, 2)
        j, t = divmod(y, 2)
        i2 = (i + (j if s == 0 else -j)) % 4
        s2 = s + t
        if s2 == 2:
            i2 = (i2 + 2) % 4
            s2 = 0
        return i2 * 2 + s2
    rows = [[mul(x, y) for y in range(8)] for x in range(8)]
    return LoopTable(rows, name="Q8")


def product(a: LoopTable, b: LoopTable) -> LoopTable:
    return direct_product(a, b)
