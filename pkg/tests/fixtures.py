"""Matrices printed in LaTeX ``pmatrix`` bodies, used verbatim as fixtures."""

W_ALPHA = {
    "122133": (1, 2, 5, 4, 3, 6),
    "1+12-2": (1, 2, 4, 3, 6, 5),
    "1+21-2": (1, 2, 3, 4, 6, 5),
}

M_1P12M2 = r"""    1 & 0 & 0 & 1 & 0 & 0 \\
    0 & 1 & 0 & 0 & 0 & 0 \\
    -1 & 0 & 0 & 1 & 0 & 0 \\
    0 & 0 & 1 & 0 & 1 & 0 \\
    z_{5,1} & z_{5,2} & 0 & 0 & 0 & 1 \\
    z_{6,1} & z_{6,2} & -1 & z_{6,4} & 1 & 0"""

M_1P21M2 = r"""    1 & 0 & 0 & 1 & 0 & 0 \\
    0 & 1 & 0 & 0 & 0 & 0 \\
    0 & 0 & 1 & 0 & 1 & 0 \\
    -1 & 0 & 0 & 1 & 0 & 0 \\
    z_{5,1} & z_{5,2} & 0 & 0 & 0 & 1 \\
    z_{6,1} & z_{6,2} & -1 & -z_{6,1} & 1 & 0"""

M_123123 = r"""    1 & 0 & 0 & 1 & 0 & 0 \\
    0 & 1 & 0 & 0 & 1 & 0 \\
    0 & 0 & 1 & 0 & 0 & 1 \\
    -1 & 0 & 0 & 1 & 0 & 0 \\
    z_{5,1} & -1 & 0 & -z_{5,1} & 1 & 0 \\
    z_{6,1} & z_{6,2} & -1 & -z_{6,1} & -z_{6,2} & 1"""

M_1PMMP1 = r"""    1 & 0 & 0 & 1 & 0 & 0 \\
    0 & 1 & 0 & 0 & 0 & 0 \\
    0 & z_{3,2} & 0 & 0 & 1 & 0 \\
    0 & z_{4,2} & 0 & 0 & 0 & 1 \\
    0 & 0 & 1 & 0 & z_{5,5} & z_{5,6} \\
    -1 & 0 & 0 & 1 & 0 & 0"""

# As printed.  Entry (3,5) reads 1/2; the inverse of M_1PMMP1 has 1 there.
M_1PMMP1_INV = r"""    \frac{1}{2} & 0 & 0 & 0 & 0 & -\frac{1}{2} \\
    0 & 1 & 0 & 0 & 0 & 0 \\
    0 & z_{3,2}z_{5,5}+z_{4,2}z_{5,6} & -z_{5,5} & -z_{5,6} & \frac{1}{2} & 0 \\
    \frac{1}{2} & 0 & 0 & 0 & 0 & \frac{1}{2} \\
    0 & -z_{3,2} & 1 & 0 & 0 & 0 \\
    0 & -z_{4,2} & 0 & 1 & 0 & 0"""

M_1PMMP1_AUX_2_4 = r"""    \frac{1}{2} & 0 & \frac{1}{2} & 0 & 0 & 0 \\
    0 & 1 & 0 & 1 & 0 & 0 \\
    0 & z_{3,2}z_{5,5}+z_{4,2}z_{5,6} & 0 & z_{3,2}z_{5,5}+z_{4,2}z_{5,6} & -z_{5,5} & -z_{5,6} \\
    0 & 0 & \frac{1}{2} & 0 & 0 & 0 \\
    0 & 0 & 0 & -z_{3,2} & 1 & 0 \\
    0 & 0 & 0 & -z_{4,2} & 0 & 1"""

GENERIC_MATRICES = {"1+12-2": M_1P12M2, "1+21-2": M_1P21M2, "123123": M_123123, "1+--+1": M_1PMMP1}

# Singular (3,2)-clans: (clan, length, maximal singular orbits).
TABLE_3_2 = [
    ("122+1", 5, {"1-1++"}),
    ("1+221", 5, {"++1-1"}),
    ("12+12", 5, {"-+++-", "+1-1+"}),
    ("1+212", 4, {"++--+", "11++-"}),
    ("1-++1", 4, {"--+++"}),
    ("121+2", 4, {"+--++", "-++11"}),
    ("1+-+1", 4, {"11-++", "++-11"}),
    ("1++-1", 4, {"+++--"}),
    ("1+-1+", 3, {"++--+"}),
    ("+1+-1", 3, {"+++--"}),
    ("+1-+1", 3, {"+--++"}),
    ("1212+", 3, {"+--++", "-++-+"}),
    ("+1212", 3, {"+-++-", "++--+"}),
    ("1-+1+", 3, {"--+++"}),
]
