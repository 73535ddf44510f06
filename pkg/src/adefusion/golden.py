"""Frozen reference values for the E6 diagram and its A11 path partner.

Every table in this module was transcribed by hand and cross-checked for
internal consistency (symmetry of the decomposition tables, dimension
sums, column totals) before being frozen.  Tests compare computed objects
against these values bit for bit; nothing here is produced by the code
under test.

Matrices are written over vertex positions 0..5 of the E6 diagram, whose
display labels are (0, 1, 2, 5, 4, 3).  Dictionary keys use the labels
themselves, as integers.  A11 vertices are 0..10 (labels and positions
coincide).
"""

E6_LABELS = ("0", "1", "2", "5", "4", "3")

# Display order for the multiplication table: the extended-fusion block
# {0,3,4} first, then {1,2,5}.
E6_BLOCK_ORDER = (0, 3, 4, 1, 2, 5)

# sigma_a * sigma_b as a multiset of labels (tuples sorted, repeats kept).
E6_FUSION_CELLS = {
    (0, 0): (0,), (0, 3): (3,), (0, 4): (4,),
    (0, 1): (1,), (0, 2): (2,), (0, 5): (5,),
    (3, 0): (3,), (3, 3): (0, 4), (3, 4): (3,),
    (3, 1): (2,), (3, 2): (1, 5), (3, 5): (2,),
    (4, 0): (4,), (4, 3): (3,), (4, 4): (0,),
    (4, 1): (5,), (4, 2): (2,), (4, 5): (1,),
    (1, 0): (1,), (1, 3): (2,), (1, 4): (5,),
    (1, 1): (0, 2), (1, 2): (1, 3, 5), (1, 5): (2, 4),
    (2, 0): (2,), (2, 3): (1, 5), (2, 4): (2,),
    (2, 1): (1, 3, 5), (2, 2): (0, 2, 2, 4), (2, 5): (1, 3, 5),
    (5, 0): (5,), (5, 3): (2,), (5, 4): (1,),
    (5, 1): (2, 4), (5, 2): (1, 3, 5), (5, 5): (0, 2),
}

# Fusion matrices N_a (a = label), rows/columns over positions.
E6_N = {
    0: ((1, 0, 0, 0, 0, 0),
        (0, 1, 0, 0, 0, 0),
        (0, 0, 1, 0, 0, 0),
        (0, 0, 0, 1, 0, 0),
        (0, 0, 0, 0, 1, 0),
        (0, 0, 0, 0, 0, 1)),
    1: ((0, 1, 0, 0, 0, 0),
        (1, 0, 1, 0, 0, 0),
        (0, 1, 0, 1, 0, 1),
        (0, 0, 1, 0, 1, 0),
        (0, 0, 0, 1, 0, 0),
        (0, 0, 1, 0, 0, 0)),
    2: ((0, 0, 1, 0, 0, 0),
        (0, 1, 0, 1, 0, 1),
        (1, 0, 2, 0, 1, 0),
        (0, 1, 0, 1, 0, 1),
        (0, 0, 1, 0, 0, 0),
        (0, 1, 0, 1, 0, 0)),
    5: ((0, 0, 0, 1, 0, 0),
        (0, 0, 1, 0, 1, 0),
        (0, 1, 0, 1, 0, 1),
        (1, 0, 1, 0, 0, 0),
        (0, 1, 0, 0, 0, 0),
        (0, 0, 1, 0, 0, 0)),
    4: ((0, 0, 0, 0, 1, 0),
        (0, 0, 0, 1, 0, 0),
        (0, 0, 1, 0, 0, 0),
        (0, 1, 0, 0, 0, 0),
        (1, 0, 0, 0, 0, 0),
        (0, 0, 0, 0, 0, 1)),
    3: ((0, 0, 0, 0, 0, 1),
        (0, 0, 1, 0, 0, 0),
        (0, 1, 0, 1, 0, 0),
        (0, 0, 1, 0, 0, 0),
        (0, 0, 0, 0, 0, 1),
        (1, 0, 0, 0, 1, 0)),
}

# Characteristic polynomial of the adjacency matrix,
# (X^2 - 1)(X^4 - 4 X^2 + 1), highest degree first.
E6_CHAR_POLY = (1, 0, -5, 0, 5, 0, -1)

# Paths of length 7 from vertex 0, counted by endpoint position.
E6_PATHS7_BY_END = (0, 21, 0, 20, 0, 15)
E6_PATHS7_TOTAL = 56

# The two underlying paths (as position sequences) of the unique
# essential combination of length 4 from vertex 0 back to vertex 2:
# sqrt(q2) * first - sqrt(q3/q2) * second, with q-integers at N = 12.
E6_ESS4_PATHS = ((0, 1, 2, 5, 2), (0, 1, 2, 3, 2))

# Essential matrices E_a (a = label): 11 rows (lengths 0..10), position
# columns.
E6_E = {
    0: ((1, 0, 0, 0, 0, 0),
        (0, 1, 0, 0, 0, 0),
        (0, 0, 1, 0, 0, 0),
        (0, 0, 0, 1, 0, 1),
        (0, 0, 1, 0, 1, 0),
        (0, 1, 0, 1, 0, 0),
        (1, 0, 1, 0, 0, 0),
        (0, 1, 0, 0, 0, 1),
        (0, 0, 1, 0, 0, 0),
        (0, 0, 0, 1, 0, 0),
        (0, 0, 0, 0, 1, 0)),
    1: ((0, 1, 0, 0, 0, 0),
        (1, 0, 1, 0, 0, 0),
        (0, 1, 0, 1, 0, 1),
        (0, 0, 2, 0, 1, 0),
        (0, 1, 0, 2, 0, 1),
        (1, 0, 2, 0, 1, 0),
        (0, 2, 0, 1, 0, 1),
        (1, 0, 2, 0, 0, 0),
        (0, 1, 0, 1, 0, 1),
        (0, 0, 1, 0, 1, 0),
        (0, 0, 0, 1, 0, 0)),
    2: ((0, 0, 1, 0, 0, 0),
        (0, 1, 0, 1, 0, 1),
        (1, 0, 2, 0, 1, 0),
        (0, 2, 0, 2, 0, 1),
        (1, 0, 3, 0, 1, 0),
        (0, 2, 0, 2, 0, 2),
        (1, 0, 3, 0, 1, 0),
        (0, 2, 0, 2, 0, 1),
        (1, 0, 2, 0, 1, 0),
        (0, 1, 0, 1, 0, 1),
        (0, 0, 1, 0, 0, 0)),
    5: ((0, 0, 0, 1, 0, 0),
        (0, 0, 1, 0, 1, 0),
        (0, 1, 0, 1, 0, 1),
        (1, 0, 2, 0, 0, 0),
        (0, 2, 0, 1, 0, 1),
        (1, 0, 2, 0, 1, 0),
        (0, 1, 0, 2, 0, 1),
        (0, 0, 2, 0, 1, 0),
        (0, 1, 0, 1, 0, 1),
        (1, 0, 1, 0, 0, 0),
        (0, 1, 0, 0, 0, 0)),
    4: ((0, 0, 0, 0, 1, 0),
        (0, 0, 0, 1, 0, 0),
        (0, 0, 1, 0, 0, 0),
        (0, 1, 0, 0, 0, 1),
        (1, 0, 1, 0, 0, 0),
        (0, 1, 0, 1, 0, 0),
        (0, 0, 1, 0, 1, 0),
        (0, 0, 0, 1, 0, 1),
        (0, 0, 1, 0, 0, 0),
        (0, 1, 0, 0, 0, 0),
        (1, 0, 0, 0, 0, 0)),
    3: ((0, 0, 0, 0, 0, 1),
        (0, 0, 1, 0, 0, 0),
        (0, 1, 0, 1, 0, 0),
        (1, 0, 1, 0, 1, 0),
        (0, 1, 0, 1, 0, 1),
        (0, 0, 2, 0, 0, 0),
        (0, 1, 0, 1, 0, 1),
        (1, 0, 1, 0, 1, 0),
        (0, 1, 0, 1, 0, 0),
        (0, 0, 1, 0, 0, 0),
        (0, 0, 0, 0, 0, 1)),
}

# Rows 11 and 12 of the recurrence that builds E_0: the first closes the
# window (all zeros), the next leaves the positive cone.
E6_E0_ROW11 = (0, 0, 0, 0, 0, 0)
E6_E0_ROW12 = (0, 0, 0, 0, -1, 0)

# F_n = sum of the listed E6 fusion matrices (by label), n = 0..10.
A11_F_DECOMP = {
    0: (0,), 1: (1,), 2: (2,), 3: (3, 5), 4: (2, 4), 5: (1, 5),
    6: (0, 2), 7: (1, 3), 8: (2,), 9: (5,), 10: (4,),
}

# E_a . transpose(E_b) over the A11 fusion matrices: cell (a, b) maps
# the A11 vertex n to the coefficient of N_n.  Zero coefficients omitted.
E6_LEFT_TABLE = {
    (0, 0): {0: 1, 6: 1},
    (0, 3): {3: 1, 7: 1},
    (0, 4): {4: 1, 10: 1},
    (0, 1): {1: 1, 5: 1, 7: 1},
    (0, 2): {2: 1, 4: 1, 6: 1, 8: 1},
    (0, 5): {3: 1, 5: 1, 9: 1},
    (3, 0): {3: 1, 7: 1},
    (3, 3): {0: 1, 4: 1, 6: 1, 10: 1},
    (3, 4): {3: 1, 7: 1},
    (3, 1): {2: 1, 4: 1, 6: 1, 8: 1},
    (3, 2): {1: 1, 3: 1, 5: 2, 7: 1, 9: 1},
    (3, 5): {2: 1, 4: 1, 6: 1, 8: 1},
    (4, 0): {4: 1, 10: 1},
    (4, 3): {3: 1, 7: 1},
    (4, 4): {0: 1, 6: 1},
    (4, 1): {3: 1, 5: 1, 9: 1},
    (4, 2): {2: 1, 4: 1, 6: 1, 8: 1},
    (4, 5): {1: 1, 5: 1, 7: 1},
    (1, 0): {1: 1, 5: 1, 7: 1},
    (1, 3): {2: 1, 4: 1, 6: 1, 8: 1},
    (1, 4): {3: 1, 5: 1, 9: 1},
    (1, 1): {0: 1, 2: 1, 4: 1, 6: 2, 8: 1},
    (1, 2): {1: 1, 3: 2, 5: 2, 7: 2, 9: 1},
    (1, 5): {2: 1, 4: 2, 6: 1, 8: 1, 10: 1},
    (2, 0): {2: 1, 4: 1, 6: 1, 8: 1},
    (2, 3): {1: 1, 3: 1, 5: 2, 7: 1, 9: 1},
    (2, 4): {2: 1, 4: 1, 6: 1, 8: 1},
    (2, 1): {1: 1, 3: 2, 5: 2, 7: 2, 9: 1},
    (2, 2): {0: 1, 2: 2, 4: 3, 6: 3, 8: 2, 10: 1},
    (2, 5): {1: 1, 3: 2, 5: 2, 7: 2, 9: 1},
    (5, 0): {3: 1, 5: 1, 9: 1},
    (5, 3): {2: 1, 4: 1, 6: 1, 8: 1},
    (5, 4): {1: 1, 5: 1, 7: 1},
    (5, 1): {2: 1, 4: 2, 6: 1, 8: 1, 10: 1},
    (5, 2): {1: 1, 3: 2, 5: 2, 7: 2, 9: 1},
    (5, 5): {0: 1, 2: 1, 4: 1, 6: 2, 8: 1},
}

# Diagonal entries E_a[n, a] (closed essential paths), rows by label.
E6_PARA = {
    0: (1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0),
    1: (1, 0, 1, 0, 1, 0, 2, 0, 1, 0, 0),
    2: (1, 0, 2, 0, 3, 0, 3, 0, 2, 0, 1),
    5: (1, 0, 1, 0, 1, 0, 2, 0, 1, 0, 0),
    4: (1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0),
    3: (1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1),
}
E6_PARA_TOTALS = (6, 0, 4, 0, 6, 0, 10, 0, 4, 0, 2)

E6_DIMS = (6, 10, 14, 18, 20, 20, 20, 18, 14, 10, 6)
E6_DIMS_SUM = 156
E6_DIMS_SQ = 2512

# The sum is the row total; a squared total of 8294 pins the row as well.
A11_DIMS = (11, 20, 27, 32, 35, 36, 35, 32, 27, 20, 11)
A11_DIMS_SUM = 286
A11_DIMS_SQ = 8294

# ---------------------------------------------------------------------
# Quantum symmetries of E6.

E6_QS_DIM = 12
A11_QS_DIM = 11
E8_QS_DIM = 32

# Ambichiral vertices, as positions and as labels.
E6_AMBI_POSITIONS = (0, 4, 5)
E6_AMBI_LABELS = (0, 4, 3)

# Pairs of label pairs naming the same element of the quotient.
E6_QS_EQUAL_PAIRS = (
    ((3, 0), (0, 3)),
    ((4, 0), (0, 4)),
    ((0, 2), (3, 1)),
    ((0, 5), (4, 1)),
    ((2, 0), (1, 3)),
    ((5, 0), (1, 4)),
    ((2, 1), (1, 2)),
    ((5, 1), (1, 5)),
)

# Elements that normalize to sums of basis elements.
E6_QS_SUM_IDENTITIES = {
    (2, 2): ((1, 1), (5, 1)),
    (5, 5): ((1, 1),),
}

# Products in the quotient: (x, y) -> multiset of representative pairs.
E6_QS_PRODUCTS = {
    ((2, 1), (0, 1)): ((1, 1), (2, 0), (5, 1)),
    ((5, 1), (1, 0)): ((2, 1), (0, 5)),
}

# The four chiral classes, as representative label pairs.
E6_QS_CLASS_A = ((0, 0), (3, 0), (4, 0))
E6_QS_CLASS_L = ((1, 0), (2, 0), (5, 0))
E6_QS_CLASS_R = ((0, 1), (0, 2), (0, 5))
E6_QS_CLASS_C = ((1, 1), (2, 1), (5, 1))

# S_x for x = 5 (x) 1, over positions.
E6_S51 = ((0, 0, 1, 0, 1, 0),
          (0, 1, 0, 2, 0, 1),
          (1, 0, 3, 0, 1, 0),
          (0, 2, 0, 1, 0, 1),
          (1, 0, 1, 0, 0, 0),
          (0, 1, 0, 1, 0, 1))

# Entry totals d_x of the twelve S_x, keyed by representative pair.
E6_QS_DVEC = {
    (0, 0): 6, (3, 0): 8, (4, 0): 6,
    (1, 0): 10, (2, 0): 14, (5, 0): 10,
    (0, 1): 10, (0, 2): 14, (0, 5): 10,
    (1, 1): 20, (2, 1): 28, (5, 1): 20,
}
E6_QS_DSQ = 2512

# transpose(E_c) . E_d over the S_x: cell (c, d) maps a representative
# pair to the coefficient of S_x.  Zero coefficients omitted.
E6_RIGHT_TABLE = {
    (0, 0): {(0, 0): 1, (1, 1): 1},
    (0, 3): {(3, 0): 1, (2, 1): 1},
    (0, 4): {(4, 0): 1, (5, 1): 1},
    (0, 1): {(1, 0): 1, (0, 1): 1, (2, 1): 1},
    (0, 2): {(2, 0): 1, (1, 1): 1, (3, 1): 1, (5, 1): 1},
    (0, 5): {(5, 0): 1, (2, 1): 1, (4, 1): 1},
    (3, 0): {(3, 0): 1, (2, 1): 1},
    (3, 3): {(0, 0): 1, (4, 0): 1, (1, 1): 1, (5, 1): 1},
    (3, 4): {(3, 0): 1, (2, 1): 1},
    (3, 1): {(2, 0): 1, (1, 1): 1, (3, 1): 1, (5, 1): 1},
    (3, 2): {(1, 0): 1, (5, 0): 1, (0, 1): 1, (2, 1): 2, (4, 1): 1},
    (3, 5): {(2, 0): 1, (1, 1): 1, (3, 1): 1, (5, 1): 1},
    (4, 0): {(4, 0): 1, (5, 1): 1},
    (4, 3): {(3, 0): 1, (2, 1): 1},
    (4, 4): {(0, 0): 1, (1, 1): 1},
    (4, 1): {(5, 0): 1, (2, 1): 1, (4, 1): 1},
    (4, 2): {(2, 0): 1, (1, 1): 1, (3, 1): 1, (5, 1): 1},
    (4, 5): {(1, 0): 1, (0, 1): 1, (2, 1): 1},
    (1, 0): {(1, 0): 1, (0, 1): 1, (2, 1): 1},
    (1, 3): {(2, 0): 1, (1, 1): 1, (3, 1): 1, (5, 1): 1},
    (1, 4): {(5, 0): 1, (2, 1): 1, (4, 1): 1},
    (1, 1): {(0, 0): 1, (2, 0): 1, (1, 1): 2, (3, 1): 1, (5, 1): 1},
    (1, 2): {(1, 0): 1, (3, 0): 1, (5, 0): 1, (0, 1): 1, (2, 1): 3,
             (4, 1): 1},
    (1, 5): {(2, 0): 1, (4, 0): 1, (1, 1): 1, (3, 1): 1, (5, 1): 2},
    (2, 0): {(2, 0): 1, (1, 1): 1, (3, 1): 1, (5, 1): 1},
    (2, 3): {(1, 0): 1, (5, 0): 1, (0, 1): 1, (2, 1): 2, (4, 1): 1},
    (2, 4): {(2, 0): 1, (1, 1): 1, (3, 1): 1, (5, 1): 1},
    (2, 1): {(1, 0): 1, (3, 0): 1, (5, 0): 1, (0, 1): 1, (2, 1): 3,
             (4, 1): 1},
    (2, 2): {(0, 0): 1, (2, 0): 2, (4, 0): 1, (1, 1): 3, (3, 1): 2,
             (5, 1): 3},
    (2, 5): {(1, 0): 1, (3, 0): 1, (5, 0): 1, (0, 1): 1, (2, 1): 3,
             (4, 1): 1},
    (5, 0): {(5, 0): 1, (2, 1): 1, (4, 1): 1},
    (5, 3): {(2, 0): 1, (1, 1): 1, (3, 1): 1, (5, 1): 1},
    (5, 4): {(1, 0): 1, (0, 1): 1, (2, 1): 1},
    (5, 1): {(2, 0): 1, (4, 0): 1, (1, 1): 1, (3, 1): 1, (5, 1): 2},
    (5, 2): {(1, 0): 1, (3, 0): 1, (5, 0): 1, (0, 1): 1, (2, 1): 3,
             (4, 1): 1},
    (5, 5): {(0, 0): 1, (2, 0): 1, (1, 1): 2, (3, 1): 1, (5, 1): 1},
}

# ---------------------------------------------------------------------
# Toric matrices, 11 x 11, keyed by representative label pair.

E6_W = {
    (0, 0): ((1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0),
             (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
             (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
             (0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0),
             (0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1),
             (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
             (1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0),
             (0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0),
             (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
             (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
             (0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1)),
    (1, 1): ((0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
             (0, 1, 0, 0, 0, 1, 0, 1, 0, 0, 0),
             (0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0),
             (0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0),
             (0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0),
             (0, 1, 0, 1, 0, 2, 0, 1, 0, 1, 0),
             (0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0),
             (0, 1, 0, 0, 0, 1, 0, 1, 0, 0, 0),
             (0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0),
             (0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0),
             (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0)),
    (3, 0): ((0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0),
             (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
             (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
             (1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1),
             (0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0),
             (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
             (0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0),
             (1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1),
             (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
             (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
             (0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0)),
    (2, 1): ((0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
             (0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0),
             (0, 1, 0, 1, 0, 2, 0, 1, 0, 1, 0),
             (0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0),
             (0, 1, 0, 1, 0, 2, 0, 1, 0, 1, 0),
             (0, 0, 2, 0, 2, 0, 2, 0, 2, 0, 0),
             (0, 1, 0, 1, 0, 2, 0, 1, 0, 1, 0),
             (0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0),
             (0, 1, 0, 1, 0, 2, 0, 1, 0, 1, 0),
             (0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0),
             (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0)),
    (4, 0): ((0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1),
             (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
             (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
             (0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0),
             (1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0),
             (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
             (0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1),
             (0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0),
             (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
             (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
             (1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0)),
    (5, 1): ((0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
             (0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0),
             (0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0),
             (0, 1, 0, 0, 0, 1, 0, 1, 0, 0, 0),
             (0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0),
             (0, 1, 0, 1, 0, 2, 0, 1, 0, 1, 0),
             (0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0),
             (0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0),
             (0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0),
             (0, 1, 0, 0, 0, 1, 0, 1, 0, 0, 0),
             (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0)),
    (1, 0): ((0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
             (1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0),
             (0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0),
             (0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1),
             (0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0),
             (1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1),
             (0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0),
             (1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0),
             (0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0),
             (0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1),
             (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0)),
    (0, 1): ((0, 1, 0, 0, 0, 1, 0, 1, 0, 0, 0),
             (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
             (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
             (0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0),
             (0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0),
             (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
             (0, 1, 0, 0, 0, 1, 0, 1, 0, 0, 0),
             (0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0),
             (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
             (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
             (0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0)),
    (2, 0): ((0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
             (0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0),
             (1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1),
             (0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0),
             (1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1),
             (0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0),
             (1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1),
             (0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0),
             (1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1),
             (0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0),
             (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0)),
    (0, 2): ((0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0),
             (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
             (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
             (0, 1, 0, 1, 0, 2, 0, 1, 0, 1, 0),
             (0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0),
             (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
             (0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0),
             (0, 1, 0, 1, 0, 2, 0, 1, 0, 1, 0),
             (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
             (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
             (0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0)),
    (5, 0): ((0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
             (0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1),
             (0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0),
             (1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0),
             (0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0),
             (1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1),
             (0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0),
             (0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1),
             (0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0),
             (1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0),
             (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0)),
    (0, 5): ((0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0),
             (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
             (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
             (0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0),
             (0, 1, 0, 0, 0, 1, 0, 1, 0, 0, 0),
             (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
             (0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0),
             (0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0),
             (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
             (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
             (0, 1, 0, 0, 0, 1, 0, 1, 0, 0, 0)),
}

# Representative pairs naming the same toric matrix.
E6_W_COINCIDENCES = (((0, 2), (3, 1)), ((0, 5), (4, 1)))

# Modular generator facts at N = 12.
T_ORDER_12 = 48
E6_EXPONENTS = (1, 4, 5, 7, 8, 11)

# Level-11 characters paired by equal T eigenvalue (1-based indices).
E6_T_BLOCKS = ((1, 7), (4, 8), (5, 11))

E6_PARTITION_FUNCTION = "|χ1+χ7|²+|χ4+χ8|²+|χ5+χ11|²"
