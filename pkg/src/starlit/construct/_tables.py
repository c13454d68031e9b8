"""Fixed colorings found by the exact solver (regenerate with scripts/make_tables.py).

Each table lists colors in the canonical edge order of the named graph.
"""

# C_5, 4 colors
C5_STAR = (0, 1, 0, 2, 3)

# P_3□P_3, 5 colors
P3P3 = (0, 1, 0, 3, 4, 0, 4, 3, 2, 1, 4, 2)

# P_4□P_3, 5 colors
P4P3 = (0, 1, 2, 4, 0, 1, 2, 1, 3, 3, 1, 2, 3, 3, 4, 0, 2)

# P_2□C_4, 4 colors
P2C4 = (0, 2, 1, 3, 1, 3, 0, 2, 3, 0, 2, 1)

# P_2□C_5, 5 colors
P2C5 = (0, 0, 4, 4, 3, 1, 2, 3, 0, 2, 3, 2, 1, 2, 4)

# Q_3, 4 colors
Q3 = (0, 2, 1, 3, 3, 1, 0, 2, 2, 3, 1, 0)

# C_3□C_3, 6 colors
C3C3 = (0, 1, 2, 1, 2, 0, 2, 0, 1, 3, 5, 4, 4, 3, 5, 5, 4, 3)

# C_5□C_5, 7 colors
C5C5 = (0, 1, 0, 6, 3, 0, 4, 0, 3, 1, 5, 1, 6, 2, 0, 1, 2, 4, 5, 6, 6, 5, 6, 2, 0, 5, 6, 4, 2, 4, 2, 3, 0, 4, 3, 2, 3, 5, 0, 3, 5, 1, 0, 3, 4, 2, 4, 3, 1, 5)

# three pairwise star compatible colorings of C_5 over 8 colors
C5_FAMILY_8_3 = [[0, 3, 0, 2, 5], [1, 4, 1, 3, 6], [2, 5, 6, 4, 7]]

# three pairwise star compatible colorings of C_5□C_5 over 14 colors
C5C5_FAMILY_14_3 = [[0, 3, 0, 4, 5, 2, 1, 2, 0, 10, 3, 0, 3, 12, 6, 8, 1, 5, 12, 6, 7, 1, 5, 8, 1, 6, 8, 11, 0, 4, 6, 9, 7, 2, 9, 6, 9, 7, 4, 9, 7, 10, 2, 3, 10, 2, 3, 1, 5, 9], [1, 4, 1, 3, 10, 5, 0, 5, 6, 1, 4, 1, 4, 0, 7, 9, 0, 8, 10, 4, 6, 0, 6, 13, 2, 3, 9, 2, 3, 8, 7, 10, 6, 5, 10, 7, 10, 6, 2, 10, 8, 11, 6, 1, 11, 7, 5, 9, 11, 0], [2, 5, 2, 6, 11, 4, 3, 4, 12, 11, 5, 2, 5, 8, 10, 10, 3, 9, 13, 7, 12, 3, 7, 4, 10, 7, 0, 1, 5, 9, 8, 11, 12, 4, 11, 8, 11, 12, 13, 11, 9, 1, 7, 0, 12, 8, 13, 2, 3, 12]]

# outcome of the exhaustive search for three compatible colorings of C_5 over 7 colors
C5_FAMILY_7_3_EXISTS = False
