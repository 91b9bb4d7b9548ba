"""Reference tables of ell-numbers and geometric invariants, with the binomial relation matrices.

Rows that name an operator listed elsewhere in this catalog carry its id;
the others (Hadamard products with fourth-order operators that are not
reproduced here) are metadata only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

F = Fraction


@dataclass(frozen=True)
class EllRow:
    ref: str
    ell: tuple
    catalog_id: str | None = None
    excluded: str | None = None


ELL_TABLE = (
    EllRow("#32", (39, 117, 0), "AESZ-32"),
    EllRow("#37=C(4n,2n)*#16", (24, 144, -448)),
    EllRow("#39=C(2n,n)*#16", (48, 144, -224)),
    EllRow("#44=C(2n,n)*#29", (24, 96, -164)),
    EllRow("#50=C(3n,n)*#16", (24, 96, -208),
           excluded="inconsistent with the C(3n,n) relation and #16 = (48, 96, -128)"),
    EllRow("C(3n,n)*#42", (24, 108, -231)),
    EllRow("C(4n,2n)*#42", (16, 104, -314)),
    EllRow("#60", (184, 368, -400), "AESZ-60"),
    EllRow("#130", (360, 360, -240), "AESZ-130"),
    EllRow("#188=C(2n,n)*#34", (120, 240, -448), "AESZ-188",
           excluded="ell_3 conflicts with #34 c_3 = -80 under the C(2n,n) relation"),
    EllRow("#189=C(2n,n)*#28", (42, 126, -180), "AESZ-189"),
    EllRow("#244", (84, 168, -168), "AESZ-244"),
    EllRow("#355", (132, 264, -360), "AESZ-355"),
    EllRow("#356=C(2n,n)*#205", (160, 320, -448), "AESZ-356"),
    EllRow("C(2n,n)*4'", (8, 40, -24), "bin2*4'"),
    EllRow("C(2n,n)*5'", (9, 39, -6), "bin2*5'"),
    EllRow("C(2n,n)*6'", (6, 42, -76), "bin2*6'"),
    EllRow("C(2n,n)*(3.5)", (18, 78, -124), "bin2*3.5"),
    EllRow("C(2n,n)*(3.8)", (36, 108, -144), "bin2*3.8"),
    EllRow("C(2n,n)*(3.9)", (25, 95, -150), "bin2*3.9"),
    EllRow("C(2n,n)*(3.15)", (16, 68, -90), "bin2*3.15"),
    EllRow("C(2n,n)*#388", (6, 42, -76), "bin2*388"),
)

INVARIANT_TABLE = {
    "#16": (48, 96, -128),
    "#29": (24, 72, -116),
    "#34": (120, 120, -80),
    "#28": (42, 84, -96),
    "#42": (32, 80, -116),
    "#205": (160, 160, -128),
    "4'": (8, 32, -8),
    "5'": (9, 30, 12),
    "6'": (6, 36, -64),
    "(3.5)": (18, 60, -88),
    "(3.8)": (36, 72, -72),
    "(3.9)": (25, 70, -100),
    "(3.15)": (16, 52, -58),
}

# (H^3, c2H, c3) = M (l1, l2, l3); rows indexed by the multiplier C_n
RELATION_MATRICES = {
    "C(2n,n)": ((1, 0, 0), (-1, 1, 0), (2, 0, 1)),
    "C(4n,2n)": ((2, 0, 0), (-8, 2, 0), (32, 0, 2)),
    "C(3n,n)": ((F(4, 3), 0, 0), (F(-8, 3), F(4, 3), 0), (8, 0, F(4, 3))),
    "C(6n,3n)C(3n,n)/C(2n,n)": ((4, 0, 0), (-40, 4, 0), (232, 0, 4)),
}

# (ell row, multiplier, invariant row)
RELATION_PAIRS = (
    ("#37=C(4n,2n)*#16", "C(4n,2n)", "#16"),
    ("#39=C(2n,n)*#16", "C(2n,n)", "#16"),
    ("#44=C(2n,n)*#29", "C(2n,n)", "#29"),
    ("#189=C(2n,n)*#28", "C(2n,n)", "#28"),
    ("C(3n,n)*#42", "C(3n,n)", "#42"),
    ("C(4n,2n)*#42", "C(4n,2n)", "#42"),
    ("#356=C(2n,n)*#205", "C(2n,n)", "#205"),
    ("C(2n,n)*4'", "C(2n,n)", "4'"),
    ("C(2n,n)*5'", "C(2n,n)", "5'"),
    ("C(2n,n)*6'", "C(2n,n)", "6'"),
    ("C(2n,n)*(3.5)", "C(2n,n)", "(3.5)"),
    ("C(2n,n)*(3.8)", "C(2n,n)", "(3.8)"),
    ("C(2n,n)*(3.9)", "C(2n,n)", "(3.9)"),
    ("C(2n,n)*(3.15)", "C(2n,n)", "(3.15)"),
    ("C(2n,n)*#388", "C(2n,n)", "6'"),
)

EXCLUDED_PAIRS = (
    ("#50=C(3n,n)*#16", "C(3n,n)", "#16"),
    ("#188=C(2n,n)*#34", "C(2n,n)", "#34"),
)

# the fourteen hypergeometric (s1, s2) pairs of fourth-order operators
HYPERGEOMETRIC_PAIRS = (
    (F(1, 5), F(2, 5)), (F(1, 10), F(3, 10)), (F(1, 2), F(1, 2)), (F(1, 3), F(1, 3)),
    (F(1, 4), F(1, 4)), (F(1, 6), F(1, 6)), (F(1, 12), F(5, 12)), (F(1, 8), F(3, 8)),
    (F(1, 6), F(1, 3)), (F(1, 4), F(1, 3)), (F(1, 3), F(1, 2)), (F(1, 4), F(1, 2)),
    (F(1, 6), F(1, 2)), (F(1, 6), F(1, 4)),
)

INSTANTONS = {
    "7-B": (F(1485), F(9853515, 8), F(2555194005), F(8549298943740)),
    "7-C": (F(29400), F(277414560), F(7671739956480), F(346114703998148120)),
    "7-D": (F(17342208), F(42976872163296), F(380850322188446486784),
            F(5581133974953140362085043072)),
    "7-A-transformed": (F(768), F(-136800), F(35597568), F(-5313408000)),
}


def ell_row(ref: str) -> EllRow:
    for row in ELL_TABLE:
        if row.ref == ref:
            return row
    raise KeyError(ref)


def ell_for(catalog_id: str) -> tuple | None:
    for row in ELL_TABLE:
        if row.catalog_id == catalog_id:
            return row.ell
    return None
