"""Published reference values for the pairwise payoff tables and rankings.

All at c=1, delta=0.25. Pairwise payoffs are keyed (w, b) -> row in the
column order CD:CL, CL:CD, CD:DL, DL:CD, CL:DL, DL:CL, CD:CD, CL:CL, DL:DL.
Two cells of the w=10 DL:CL column are misprints and are excluded from
value checks: (w=10, b=5) printed as 1.3459 duplicates the w=1 value, and
(w=10, b=4) printed as 0.7250 actually carries the b=5 value (the column
was shifted). Both corrections are confirmed independently by the source's
own closed-form stationary distribution (0.6250 and 0.7250 respectively)
and by its combined scores, which only sum correctly with the corrected
values (e.g. 1.6585 = 0.7902 + 0.6250 + 0.2433).
"""

PAIR_COLUMNS = [
    ("CD", "CL"), ("CL", "CD"), ("CD", "DL"), ("DL", "CD"),
    ("CL", "DL"), ("DL", "CL"), ("CD", "CD"), ("CL", "CL"), ("DL", "DL"),
]

SUSPECT_CELLS = {(10, 5.0, "DL", "CL"), (10, 4.0, "DL", "CL")}

TABLE1 = {
    (0.1, 1.5): [0.6197, 0.0000, -0.1290, 0.4985, -0.0616, 0.5616, 0.2375, 0.3137, 0.1887],
    (0.1, 2.0): [0.8694, 0.1208, -0.1349, 0.6314, -0.0670, 0.6939, 0.4750, 0.4482, 0.1887],
    (0.1, 3.0): [1.3870, 0.3759, -0.1467, 0.9101, -0.0779, 0.9713, 0.9500, 0.7474, 0.1887],
    (0.1, 4.0): [1.9285, 0.6485, -0.1583, 1.2060, -0.0885, 1.2656, 1.4251, 1.0887, 0.1887],
    (0.1, 5.0): [2.4933, 0.9382, -0.1697, 1.5183, -0.0990, 1.5761, 1.9001, 1.4747, 0.1887],
    (1, 1.5): [0.5390, 0.0439, -0.1103, 0.4384, 0.0044, 0.4956, 0.1345, 0.3249, 0.1985],
    (1, 2.0): [0.7712, 0.1254, -0.1313, 0.5713, -0.0110, 0.6154, 0.2689, 0.5603, 0.1985],
    (1, 3.0): [1.3102, 0.3533, -0.1553, 0.8486, -0.0285, 0.8627, 0.5379, 1.4003, 0.1985],
    (1, 4.0): [1.8721, 0.6182, -0.1651, 1.1241, -0.0357, 1.1070, 0.8068, 2.5575, 0.1985],
    (1, 5.0): [2.4211, 0.8879, -0.1689, 1.3940, -0.0384, 1.3459, 1.0758, 3.7529, 0.1985],
    (10, 1.5): [0.4870, 0.0920, 0.0000, 0.3951, 0.1250, 0.3750, 0.0000, 0.4506, 0.2433],
    (10, 2.0): [0.6665, 0.1667, 0.0000, 0.4741, 0.1250, 0.4250, 0.0000, 0.9988, 0.2433],
    (10, 3.0): [1.0000, 0.3334, 0.0000, 0.6321, 0.1250, 0.5250, 0.0000, 2.0000, 0.2433],
    (10, 4.0): [1.3334, 0.5000, 0.0000, 0.7902, 0.1250, 0.7250, 0.0000, 3.0000, 0.2433],
    (10, 5.0): [1.6667, 0.6667, 0.0000, 0.9482, 0.1250, 1.3459, 0.0000, 4.0000, 0.2433],
}

# Underlined pairwise winners per w-block: (row set, col set) -> winner set.
TABLE1_PAIR_WINNERS = {
    0.1: {("CD", "CL"): "CD", ("CD", "DL"): "DL", ("CL", "DL"): "DL"},
    1: {("CD", "CL"): "CD", ("CD", "DL"): "DL", ("CL", "DL"): "DL"},
    10: {("CD", "CL"): "CD", ("CD", "DL"): "DL", ("CL", "DL"): "DL"},
}

# Combined scores over the three 2-sets, rows in order (CD, CL, DL) per b.
TABLE2 = {
    0.1: {
        1.5: [0.7282, 0.2520, 1.2488],
        2.0: [1.2095, 0.5020, 1.5139],
        3.0: [2.1903, 1.0454, 2.0701],
        4.0: [3.1952, 1.6487, 2.6602],
        5.0: [4.2237, 2.3140, 3.2830],
    },
    1: {
        1.5: [0.5632, 0.3733, 1.1324],
        2.0: [0.9088, 0.6747, 1.3852],
        3.0: [1.6928, 1.7251, 1.9097],
        4.0: [2.5138, 3.1400, 2.4296],
        5.0: [3.3280, 4.6024, 2.9384],
    },
    10: {
        1.5: [0.4870, 0.6676, 1.0134],
        2.0: [0.6666, 1.2905, 1.1424],
        3.0: [1.0001, 2.4584, 1.4005],
        4.0: [1.3335, 3.6250, 1.6585],
        5.0: [1.6669, 4.7917, 1.9165],
    },
}

TABLE2_WINNERS = {
    0.1: {1.5: "DL", 2.0: "DL", 3.0: "CD", 4.0: "CD", 5.0: "CD"},
    1: {1.5: "DL", 2.0: "DL", 3.0: "DL", 4.0: "CL", 5.0: "CL"},
    10: {1.5: "DL", 2.0: "CL", 3.0: "CL", 4.0: "CL", 5.0: "CL"},
}

# Combined scores over all seven sets, rows in order (C, D, L, CD, CL, DL, CDL).
TABLE3 = {
    0.1: {
        1.5: [-0.6922, 3.9758, 1.7500, 1.7639, 0.6234, 2.9526, 1.8086],
        2.0: [0.4513, 5.1021, 1.7500, 2.9035, 1.2181, 3.5920, 2.6090],
        3.0: [2.7912, 7.3547, 1.7500, 5.2085, 2.5030, 4.9417, 4.2846],
        4.0: [5.1998, 9.6073, 1.7500, 7.5470, 3.9172, 6.3840, 6.0573],
        5.0: [7.6751, 11.8599, 1.7500, 9.9180, 5.4620, 7.9159, 7.9231],
    },
    1: {
        1.5: [-1.6276, 3.1515, 1.7500, 1.9080, 1.0809, 3.1069, 2.2868],
        2.0: [-0.6495, 3.9666, 1.7500, 2.8438, 1.8274, 3.9551, 3.1849],
        3.0: [1.6995, 5.5970, 1.7500, 4.8335, 4.1137, 5.7315, 5.2078],
        4.0: [4.2680, 7.2274, 1.7500, 6.8717, 6.9468, 7.4868, 7.3189],
        5.0: [6.8634, 8.8577, 1.7500, 8.9030, 9.8203, 9.1944, 9.4013],
    },
    10: {
        1.5: [-2.7688, 2.4621, 1.7500, 2.3669, 1.7908, 3.3280, 3.0742],
        2.0: [-1.7502, 2.9622, 1.7500, 3.0970, 3.0383, 3.9953, 3.8909],
        3.0: [0.2503, 3.9622, 1.7500, 4.5209, 5.4253, 5.3299, 5.5023],
        4.0: [2.2504, 4.9623, 1.7500, 5.9446, 7.8105, 6.6645, 7.1134],
        5.0: [4.2505, 5.9623, 1.7500, 7.3683, 10.1957, 7.9992, 8.7244],
    },
}

# Underlined top scorers as printed. Three cells are inconsistent with the
# table's own printed scores: at (w=1, b=1.5) and (w=1, b=2.0) the printed
# {D} score exceeds the underlined {D,L} score, and at (w=10, b=3.0) the
# printed {C,D,L} score exceeds the underlined {C,L} score.
TABLE3_WINNERS = {
    0.1: {1.5: "D", 2.0: "D", 3.0: "D", 4.0: "D", 5.0: "D"},
    1: {1.5: "DL", 2.0: "DL", 3.0: "DL", 4.0: "DL", 5.0: "CL"},
    10: {1.5: "DL", 2.0: "DL", 3.0: "CL", 4.0: "CL", 5.0: "CL"},
}

W_VALUES = [0.1, 1, 10]
B_VALUES = [1.5, 2.0, 3.0, 4.0, 5.0]
