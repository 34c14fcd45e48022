"""Published reference values for the independent sets of S_n, n = 1..7.

Keys are degrees.  The n = 1 entries of the count and dead-end tables are
kept for display; they disagree with the conventions used here (the empty
set and ``{()}`` are both independent, and ``{()}`` generates S_1).
"""

INDEPENDENT_SETS = {1: 1, 2: 3, 3: 16, 4: 413, 5: 25346, 6: 6825268, 7: 750102585}
CLASSES = {1: 1, 2: 3, 3: 6, 4: 31, 5: 258, 6: 10294, 7: 155305}
GENERATING_CLASSES = {1: 1, 2: 1, 3: 2, 4: 14, 5: 178, 6: 8621, 7: 126515}

DEAD_ENDS = {1: 1, 2: 1, 3: 1, 4: 4, 5: 19, 6: 278, 7: 17591}

SIZE_DISTRIBUTION = {
    3: {2: 2},
    4: {2: 5, 3: 9},
    5: {2: 31, 3: 138, 4: 9},
    6: {2: 163, 3: 6355, 4: 2059, 5: 44},
    7: {2: 1576, 3: 67078, 4: 54398, 5: 3415, 6: 48},
}
TWO_ELEMENT_PERCENT = {3: "100", 4: "35.71", 5: "17.41", 6: "1.89"}
GENERATING_PAIRS_S8 = 21912

DIAMETER_MIN = {1: 0, 2: 1, 3: 2, 4: 4, 5: 5, 6: 7, 7: 8}
DIAMETER_MAX = {1: 0, 2: 1, 3: 3, 4: 7, 5: 14, 6: 18, 7: 34}
SLOW_SETS = {
    2: [["(1,2)"]],
    3: [["(1,2)", "(2,3)"]],
    4: [["(1,2,3)", "(3,4)"]],
    5: [["(1,2,4,3)", "(2,3)(4,5)"]],
    6: [["(2,3)(4,5,6)", "(1,2)(3,4)(5,6)"], ["(5,6)", "(1,2,3,4,5,6)"]],
}

SYMMETRY = {
    2: {"Z2": 1},
    3: {"trivial": 1, "Z2": 1},
    4: {"trivial": 8, "Z2": 5, "S3": 1},
    5: {"trivial": 150, "Z2": 25, "Z3": 1, "S3": 1, "S4": 1},
    6: {"trivial": 7931, "Z2": 645, "Z2xZ2": 11, "Z3": 6, "D4": 4, "S3": 20, "S4": 2, "S5": 2},
    7: {"trivial": 121426, "Z2": 4846, "Z2xZ2": 78, "Z3": 7, "D4": 7, "D6": 7, "S3": 134,
        "S4": 8, "S5": 1, "S6": 1},
}

INCREMENTAL = {1: 0, 2: 1, 3: 2, 4: 9, 5: 92, 6: 6907}

# The 14 conjugacy classes of independent generating sets of S_4; the
# classical ones (chain, base point, cycle plus transposition) are flagged.
APPENDIX_S4 = [
    (["(3,4)", "(2,3)", "(1,2)"], True),
    (["(3,4)", "(2,3)", "(1,2)(3,4)"], False),
    (["(3,4)", "(2,3)", "(1,3)"], True),
    (["(3,4)", "(2,3)", "(1,3)(2,4)"], False),
    (["(3,4)", "(2,3,4)", "(1,2)(3,4)"], False),
    (["(3,4)", "(2,3,4)", "(1,3,4)"], False),
    (["(3,4)", "(2,3,4)", "(1,3)(2,4)"], False),
    (["(3,4)", "(2,3,4)", "(1,4,3)"], False),
    (["(3,4)", "(2,3,4)", "(1,4)(2,3)"], False),
    (["(3,4)", "(1,2,3)"], False),
    (["(3,4)", "(1,2,3,4)"], True),
    (["(2,3,4)", "(1,2,3,4)"], False),
    (["(2,3,4)", "(1,2,4,3)"], False),
    (["(1,2,3,4)", "(1,2,4,3)"], False),
]

# The three non-trivial dead ends of S_4 and the groups they generate.
DEAD_ENDS_S4 = [
    (["(1,3)", "(1,2,3,4)"], "D4"),
    (["(1,2)(3,4)", "(1,2,3,4)"], "D4"),
    (["(1,2)(3,4)", "(1,3)(2,4)"], "Z2xZ2"),
]
