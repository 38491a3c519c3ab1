"""The 90 published Tribonacci / Tribonacci-Lucas values for r in [-20, 24]."""

_T_VALUES = [
    -56, 159, -103, 0, 56, -47, 9, 18, -20,
    7, 5, -8, 4, 1, -3, 2, 0, -1,
    1, 0, 0, 1, 1, 2, 4, 7, 13,
    24, 44, 81, 149, 274, 504, 927, 1705, 3136,
    5768, 10609, 19513, 35890, 66012, 121415, 223317, 410744, 755476,
]

_K_VALUES = [
    795, -571, 47, 271, -253, 65, 83, -105, 43,
    21, -41, 23, 3, -15, 11, -1, -5, 5,
    -1, -1, 3, 1, 3, 7, 11, 21, 39,
    71, 131, 241, 443, 815, 1499, 2757, 5071, 9327,
    17155, 31553, 58035, 106743, 196331, 361109, 664183, 1221623, 2246915,
]

T_TABLE = {r: v for r, v in zip(range(-20, 25), _T_VALUES)}
K_TABLE = {r: v for r, v in zip(range(-20, 25), _K_VALUES)}
