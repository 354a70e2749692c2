"""Published tables, transcribed cell by cell."""

# (n, k) -> (N_0, N_1, N_2)
N_I_TABLE = {
    (3, 3): (0, 3, 0), (3, 4): (0, 8, 0), (3, 5): (0, 5, 0), (3, 6): (0, 12, 0),
    (4, 3): (1, 1, 4), (4, 4): (7, 2, 7), (4, 5): (2, 1, 12), (4, 6): (11, 2, 17),
    (5, 3): (0, 9, 0), (5, 4): (0, 32, 0), (5, 5): (0, 25, 0), (5, 6): (0, 72, 0),
    (6, 3): (3, 3, 12), (6, 4): (28, 8, 28), (6, 5): (10, 5, 60), (6, 6): (66, 12, 102),
    (7, 3): (0, 27, 0), (7, 4): (0, 128, 0), (7, 5): (0, 125, 0), (7, 6): (0, 432, 0),
    (8, 3): (13, 1, 40), (8, 4): (127, 2, 127), (8, 5): (62, 1, 312), (8, 6): (431, 2, 647),
}

_KS = range(3, 11)

# rows n = 3..9; columns k = 3..10
_S_ROWS = {
    3: [10, 22, 56, 92, 162, 234, 352, 472],
    4: [30, 99, 284, 591, 1146, 1955, 3192, 4863],
    5: [101, 436, 1502, 3712, 8283, 16068, 29324, 49504],
    6: [316, 1870, 7596, 22808, 58248, 129946, 264520, 497932],
    7: [1002, 7750, 38628, 138462, 410574, 1044998, 2388936, 4993006],
    8: [3068, 31751, 193816, 835495, 2876916, 8376327, 21508784, 49972007],
    9: [9481, 128776, 973754, 5027192, 20166003, 67072008, 193680724, 499910008],
}
_E_ROWS = {
    3: [10, 22, 56, 89, 162, 225, 352, 454],
    4: [31, 93, 278, 550, 1109, 1835, 3084, 4604],
    5: [96, 386, 1432, 3362, 8008, 14858, 28624, 46449],
    6: [294, 1586, 7162, 20441, 55518, 119895, 254004, 467468],
    7: [897, 6476, 36220, 123895, 393991, 965569, 2321848, 4697914],
    8: [2727, 26333, 181550, 749422, 2748581, 7766075, 20750748, 47167644],
    9: [8272, 106762, 912944, 4526720, 19373760, 62405190, 188369056, 473247274],
}
# (n, k) -> s_k(n-1) and the bracketed |E_k(n-1)|
S_TABLE = {(n, k): v for n, row in _S_ROWS.items() for k, v in zip(_KS, row)}
E_TABLE = {(n, k): v for n, row in _E_ROWS.items() for k, v in zip(_KS, row)}

# (order, k) -> top-line period bound k * s_k(order - 2)
OS_TABLE = {}
for _n, _row in {
    4: [30, 88, 280, 552, 1134, 1872],
    5: [90, 396, 1420, 3546, 8022, 15640],
    6: [303, 1744, 7510, 22272, 57981, 128544],
    7: [948, 7480, 37980, 136848, 407736, 1039568],
    8: [3006, 31000, 193140, 830772, 2874018, 8359984],
}.items():
    for _k, _v in zip(range(3, 9), _row):
        OS_TABLE[_n, _k] = _v

# middle-shell sizes r_{k,n,kn/2}: (k, n) -> count
R_MIDDLE = {(3, 3): 7, (5, 3): 13, (3, 4): 19, (3, 5): 51, (3, 6): 141, (4, 3): 20, (4, 4): 70}
