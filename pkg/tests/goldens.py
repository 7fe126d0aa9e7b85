"""Reference fixtures shared across the test suite.

TABLE_2FRA holds the published family configurations for N = 6..30 with
their known HES locations (empty tuple = none). The named arrays below are
the standard validation cases: a hole-free but single-redundant MISC array,
the 9-element family member with its hidden essential sensor at 6, its
flipped twin, and the 13-element member used in the DOA comparison.
"""

MISC_6 = (0, 1, 2, 6, 10, 13)

TFRA_9 = (0, 1, 5, 6, 12, 13, 14, 15, 16)
TFRA_9_FLIPPED = (0, 1, 2, 3, 4, 10, 11, 15, 16)

TFRA_13 = (0, 1, 7, 8, 16, 17, 25, 26, 27, 28, 29, 30, 31)

#: N -> (positions, hes positions)
TABLE_2FRA = {
    6: ((0, 1, 2, 3, 6, 7), (3,)),
    7: ((0, 1, 3, 4, 8, 9, 10), (4,)),
    8: ((0, 1, 4, 5, 10, 11, 12, 13), (5,)),
    9: (TFRA_9, (6,)),
    10: ((0, 1, 4, 5, 10, 11, 16, 17, 18, 19), (10,)),
    11: ((0, 1, 5, 6, 12, 13, 19, 20, 21, 22, 23), (12,)),
    12: ((0, 1, 6, 7, 14, 15, 22, 23, 24, 25, 26, 27), (14,)),
    13: (TFRA_13, (16,)),
    14: ((0, 1, 6, 7, 14, 15, 22, 23, 30, 31, 32, 33, 34, 35), ()),
    15: ((0, 1, 7, 8, 16, 17, 25, 26, 34, 35, 36, 37, 38, 39, 40), ()),
    16: ((0, 1, 8, 9, 18, 19, 28, 29, 38, 39, 40, 41, 42, 43, 44, 45), ()),
    17: ((0, 1, 9, 10, 20, 21, 31, 32, 42, 43, 44, 45, 46, 47, 48, 49, 50), ()),
    18: ((0, 1, 8, 9, 18, 19, 28, 29, 38, 39, 48, 49, 50, 51, 52, 53, 54, 55), (28,)),
    19: (
        (0, 1, 9, 10, 20, 21, 31, 32, 42, 43, 53, 54, 55, 56, 57, 58, 59, 60, 61),
        (31,),
    ),
    20: (
        (0, 1, 10, 11, 22, 23, 34, 35, 46, 47, 58, 59, 60, 61, 62, 63, 64, 65, 66, 67),
        (34,),
    ),
    21: (
        (0, 1, 11, 12, 24, 25, 37, 38, 50, 51, 63, 64, 65, 66, 67, 68, 69, 70, 71, 72, 73),
        (37,),
    ),
    22: (
        (0, 1, 10, 11, 22, 23, 34, 35, 46, 47, 58, 59, 70, 71, 72, 73, 74, 75, 76, 77, 78, 79),
        (),
    ),
    23: (
        (0, 1, 11, 12, 24, 25, 37, 38, 50, 51, 63, 64, 76, 77, 78, 79, 80, 81, 82, 83, 84, 85, 86),
        (),
    ),
    24: (
        (0, 1, 12, 13, 26, 27, 40, 41, 54, 55, 68, 69, 82, 83, 84, 85, 86, 87, 88, 89, 90, 91, 92, 93),
        (),
    ),
    25: (
        (0, 1, 13, 14, 28, 29, 43, 44, 58, 59, 73, 74, 88, 89, 90, 91, 92, 93, 94, 95, 96, 97, 98, 99, 100),
        (),
    ),
    26: (
        (0, 1, 12, 13, 26, 27, 40, 41, 54, 55, 68, 69, 82, 83, 96, 97, 98, 99, 100, 101, 102, 103, 104, 105, 106, 107),
        (54,),
    ),
    27: (
        (0, 1, 13, 14, 28, 29, 43, 44, 58, 59, 73, 74, 88, 89, 103, 104, 105, 106, 107, 108, 109, 110, 111, 112, 113, 114, 115),
        (58,),
    ),
    28: (
        (0, 1, 14, 15, 30, 31, 46, 47, 62, 63, 78, 79, 94, 95, 110, 111, 112, 113, 114, 115, 116, 117, 118, 119, 120, 121, 122, 123),
        (62,),
    ),
    29: (
        (0, 1, 15, 16, 32, 33, 49, 50, 66, 67, 83, 84, 100, 101, 117, 118, 119, 120, 121, 122, 123, 124, 125, 126, 127, 128, 129, 130, 131),
        (66,),
    ),
    30: (
        (0, 1, 14, 15, 30, 31, 46, 47, 62, 63, 78, 79, 94, 95, 110, 111, 126, 127, 128, 129, 130, 131, 132, 133, 134, 135, 136, 137, 138, 139),
        (),
    ),
}
