"""Transcribed reference data: reflective Jacobi bases and their printed invariants.

Expressions use the symbols understood by ``jacobi.ExpressionEvaluator``.
Printed leading coefficients are tuples (n, l, f(n, l)) or
(n, l, f(n, l), bracketed norm).  ``complete`` lists the q-orders whose slice is
printed in full; in other slices unlisted l between printed ones are zero.
"""

SUPPORTED_T = (1, 2, 3, 4, 8, 9, 12, 16, 36)

XI_16_2 = (
    "E43*(E4*E41*p3**4 - E4**2*p3**3*p4 - 2*E41*E42*p3**2*p4 + E4*E42*p3*p4**2"
    " - E41*E42*p3**2*p4 + 2*E4*E42*p3*p4**2 - E4*E41*p4**3)/Delta"
    " + 2*p1**3*p3**3*p4 - 3*p1**2*p2*p3**4 - 7*p1**2*p3**2*p4**2 - 31*p1*p2*p3**3*p4"
    " + 46*p1*p3**5 + 72*p1*p3*p4**3 + 7*p2**3*p3**2*p4 - 72*p2*p3**2*p4**2"
    " - 197*p3**4*p4 + 2*p1**2*p2*p4**3 + 21*p3**4*p4 - 26*p4**4"
    " + 2*p1*p2**2*p3*p4**2 - p2**2*p3**4 - 4*p2**2*p4**3 - 2*p2**4*p4**2"
)

XI_36_3 = (
    "((-36*p3**4 + 56*p4**3)*p4**3*p3**3*E4**2"
    " + (45*p3**8 - 126*p4**3*p3**4 + p4**6)*p4**2*E4*E41"
    " + (-10*p3**8 + 126*p4**3*p3**4 - 8*p4**6)*p4*p3*E4*E42"
    " + (p3**8 - 84*p4**3*p3**4 + 28*p4**6)*p3**2*E41*E42)*E43/Delta"
    " + (770*p4**6*p3**2 - 731*p4**7*p2 - 731*p4**6*p2**3 + 2924*p4**5*p3**2*p2**2"
    " - 3655*p4**4*p3**4*p2 - 29*p4**4*p3**2*p2**4 + 133*p4**3*p3**4*p2**3"
    " + 1472*p4**3*p3**6 - 225*p4**2*p3**6*p2**2 + 167*p4*p3**8*p2 - 46*p3**10)*D06"
    " + (72*p3**4 - 112*p4**3)*p4**3*p3**3*p1**3"
    " + (-731*p4**6*p2**3 + 1462*p4**5*p3**2*p2**2"
    " + (-126*p4*p3**8 + 1039*p4**4*p3**4 - 733*p4**7)*p2"
    " + 29*p3**10 - 1615*p4**3*p3**6 - 714*p4**6*p3**2)*p4*p1**2"
    " + (12425*p4**6*p3*p2**4 - 50600*p4**5*p3**3*p2**3"
    " + (67608*p4**4*p3**5 + 20633*p4**7*p3)*p2**2"
    " - (3*p3**11 + 37314*p4**3*p3**7 + 35785*p4**6*p3**3)*p2"
    " + 8144*p4**2*p3**9 + 17917*p4**5*p3**5 + 8005*p4**8*p3)*p1"
    " - 29*p4**5*p2**8 + 162*p4**4*p3**2*p2**7 - (358*p3**4 + 10464*p4**3)*p4**3*p2**6"
    " + (392*p3**4 + 45141*p4**3)*p4**2*p3**2*p2**5"
    " - (213*p3**8 + 66918*p4**3*p3**4 + 30811*p4**6)*p4*p2**4"
    " + (46*p3**8 + 43947*p4**3*p3**4 + 83053*p4**6)*p3**2*p2**3"
    " - (14354*p3**8 + 64611*p4**3*p3**4 + 30093*p4**6)*p4**2*p2**2"
    " + (3426*p3**8 - 496*p4**3*p3**4 + 37331*p4**6)*p4*p3**2*p2 - 569*p3**12"
    " + 3899*p4**3*p3**8 - 455*p4**6*p3**4 - 9861*p4**9 - 83*XI(36, 1)"
)


def _sym(n, pairs):
    """Expand (l, c[, D]) entries with l > 0 to +-l; l = 0 kept once."""
    out = []
    for p in pairs:
        l = p[0]
        out.append((n, l) + tuple(p[1:]))
        if l:
            out.append((n, -l) + tuple(p[1:]))
    return out


def _desc(n, top, coeffs, brackets=None):
    """A descending listing c_top r^top + c r^(top-1) + ... (zeros explicit)."""
    brackets = brackets or {}
    out = []
    for i, c in enumerate(coeffs):
        l = top - i
        out.append((n, l, c, brackets[l]) if l in brackets else (n, l, c))
    return out


TABLE1 = {
    1: {
        "forms": ["p1", "E4**2*E41/Delta - 57*p1"],
        "leading": [
            _sym(0, [(1, 1, -1), (0, 10)]),
            [(-1, 0, 1, -4)] + _sym(0, [(2, 1, -4), (1, -1, -1), (0, 60)]),
        ],
        "complete": [[0], [-1, 0]],
        "P0": [(1, 2, 0), (0, -1, 0), (-1, 0, 1)],
        "P0_classes": [(4, 0), (1, 1), (4, 0)],
        "R": None,
        "mul": [[0, 1], [1, 0], [0, 1]],
        "gram": [[4, -2, -2], [-2, 1, 0], [-2, 0, 4]],
    },
    2: {
        "forms": ["p2", "p1**2 - 21*p2", "E4**2*E42/Delta - 14*p1**2 + 216*p2"],
        "leading": [
            _sym(0, [(1, 1, -1), (0, 4)]),
            _sym(0, [(2, 1, -4), (1, -1, -1), (0, 18)]),
            [(-1, 0, 1, -8), (0, 0, 24)],
        ],
        "complete": [[0], [0], [-1, 0]],
        "P0": [(1, 2, 0), (0, -1, 0), (-1, 0, 1)],
        "P0_classes": [(4, 2), (1, 1), (8, 0)],
        "R": None,
        "mul": [[0, 1, 0], [1, 0, 0], [0, 0, 1]],
        "gram": [[4, -2, -4], [-2, 1, 0], [-4, 0, 8]],
    },
    3: {
        "forms": ["p3", "p1*p2 - 15*p3", "E4**2*E43/Delta - 2*p1**3 + 33*p1*p2 + 90*p3"],
        "leading": [
            _sym(0, [(1, 1, -1), (0, 2)]),
            _sym(0, [(2, 1, -4), (1, -1, -1), (0, 12)]),
            [(-1, 0, 1, -12), (0, 0, 24)],
        ],
        "complete": [[0], [0], [-1, 0]],
        "P0": [(1, 2, 0), (0, -1, 0), (-1, 0, 1)],
        "P0_classes": [(4, 2), (1, 1), (12, 0)],
        "R": None,
        "mul": [[0, 1, 0], [1, 0, 0], [0, 0, 1]],
        "gram": [[4, -2, -6], [-2, 1, 0], [-6, 0, 12]],
    },
    4: {
        "forms": ["p4", "p2**2 - 9*p4", "E4*E41*E43/Delta - 2*p1**2*p2 + 20*p1*p3 + 16*p4"],
        "leading": [
            _sym(0, [(1, 1, -1), (0, 1)]),
            _sym(0, [(2, 1, -4), (1, -1, -1), (0, 9)]),
            [(-1, 0, 1, -16), (0, 0, 24)],
        ],
        "complete": [[0], [0], [-1, 0]],
        "P0": [(1, 2, 0), (0, -1, 0), (-1, 0, 1)],
        "P0_classes": [(4, 2), (1, 1), (16, 0)],
        "R": None,
        "mul": [[0, 1, 0], [1, 0, 0], [0, 0, 1]],
        "gram": [[4, -2, -8], [-2, 1, 0], [-8, 0, 16]],
    },
    8: {
        "forms": [
            "p2**2*p4 - p2*p3**2 - p4**2",
            "p1*p3*p4 + p2*p3**2 - 2*p2**2*p4 - 2*p4**2",
            # printed with coefficient 1 on p1*p3*p4; 8 is forced by the printed expansion
            "E4*E43*(E42*p3 - E41*p4)/Delta - 3*p1**2*p3**2 + 2*p1**2*p2*p4 + 8*p1*p3*p4 - 16*p4**2",
        ],
        "leading": [
            _sym(0, [(1, 2, -1), (0, -1)]) + _desc(1, 6, [-1, -2, 4, -4, 1, 6, -8], {6: -4}),
            _sym(0, [(2, 1, -4), (0, 4)]) + [(1, 6, 1, -4), (1, 4, -8), (1, 2, -1), (1, 0, 16)],
            [(-1, 0, 1, -32), (0, 0, 24)]
            + _desc(1, 6, [8, 256, 2268, 9472, 23608, 39424, 46812], {6: -4}),
        ],
        "complete": [[0], [0], [-1, 0]],
        "P0": [(1, 2, 0), (0, -1, 0), (-1, 0, 1), (1, 6, 1)],
        "P0_classes": [(4, 2), (1, 1), (32, 0), (4, 6)],
        "R": None,
        "mul": [[0, 1, 0], [2, 1, 0], [0, 0, 1], [-1, 1, 8]],
        "gram": [[4, -2, -16, -4], [-2, 1, 0, -6], [-16, 0, 32, 0], [-4, -6, 0, 4]],
    },
    9: {
        "forms": [
            "-p1*p4**2 + 6*p2*p3*p4 - 5*p3**3",
            "p1*p4**2 - 5*p2*p3*p4 + 4*p3**3",
            "E42*E43*(E41*p3 - E4*p4)/Delta - 3*p1*p2*p3**2 + 2*p1**2*p3*p4 - 30*p1*p4**2"
            " + 27*p2*p3*p4 + 9*p3**3",
        ],
        "leading": [
            _sym(0, [(1, 3, -1), (0, -2)])
            + _desc(1, 6, [-4, 6, -12, 22, -30, 36, -36])
            + _desc(2, 9, [-1, -6, 15, -36, 72, -120, 171, -216, 255, -268], {9: -9}),
            _desc(0, 2, [1, -1, 4], {2: -4, 1: -1})
            + _desc(1, 6, [3, -8, 9, -24, 31, -32, 42])
            + _desc(2, 9, [1, 7, -15, 33, -80, 110, -177, 219, -241, 286], {9: -9}),
            [(-1, 0, 1, -36), (0, 0, 24)]
            + _desc(1, 6, [33, 486, 3159, 10758, 24057, 37908, 44082])
            + _desc(2, 9, [2, 243, 5346, 44055, 204120, 642978, 1483416, 2632905, 3679020,
                           4109590], {9: -9}),
        ],
        "complete": [[0], [], [-1, 0]],
        "P0": [(1, 2, 0), (0, -1, 0), (-1, 0, 1), (2, 9, 1)],
        "P0_classes": [(4, 2), (1, 1), (36, 0), (9, 9)],
        "R": None,
        "mul": [[0, 1, 0], [3, 0, 0], [0, 0, 1], [-1, 1, 3]],
        "gram": [[4, -2, -18, 0], [-2, 1, 0, -9], [-18, 0, 36, -18], [0, -9, -18, 9]],
    },
    12: {
        # printed as (theta/eta)^12, which has index 6; the printed expansion is
        # that of phi_{0,3}^2 (theta/eta)^12 = theta(2z)^4 theta(z)^8 / eta^12
        "forms": [
            "p3**2*D06",
            "3*p2*p3**2*p4 - p2**2*p4**2 - 2*p3**4 - p4**3",
            "2*p2**2*p4**2 - 5*p2*p3**2*p4 + 3*p3**4 + p4**3",
            "E43*(E41*E42*p3**2 - 2*E4*E42*p3*p4 + E4*E41*p4**2)/Delta"
            " - 2*p1**2*p2*p4**2 + 5*p1**2*p3**2*p4 - 3*p1*p2*p3**3 - 36*p1*p3*p4**2"
            " + 24*p2*p3**2*p4 + 9*p3**4 + 16*p4**3",
        ],
        "leading": [
            _desc(1, 8, [1, -8, 24, -24, -36, 120, -88, -88, 198], {8: -16, 7: -1})
            + _desc(2, 10, [-4, 24, -32, -104, 396, -352, -512, 1440, -904, -1008, 2112], {10: -4}),
            _sym(0, [(1, 1, -1), (0, -1)])
            + _desc(1, 7, [-1, 1, -1, 1, 0, -1, 2, -2], {7: -1})
            + _desc(2, 10, [-1, 0, 1, -2, 3, -3, 2, 0, -2, 5, -6], {10: -4}),
            _desc(0, 2, [1, -1, 3], {2: -4, 1: -1})
            + _desc(1, 7, [1, -3, 1, -3, 0, 3, -2, 6], {7: -1})  # printed 3r^3 for 3r^2
            + _desc(2, 10, [2, 0, -3, 2, -9, 3, -6, 0, 7, -5, 18], {10: -4}),
            [(-1, 0, 1, -48), (0, 0, 24)]
            + _desc(1, 7, [24, 264, 1608, 5610, 13464, 24312, 34056, 38208], {7: -1})
            + _desc(2, 10, [12, 440, 5544, 34104, 135388, 395808, 902352, 1667360, 2550552,
                            3276240, 3558160], {10: -4}),
        ],
        "complete": [[0], [0], [], [-1, 0]],
        "P0": [(1, 2, 0), (0, -1, 0), (-1, 0, 1), (1, 8, 1)],
        "P0_classes": [(4, 2), (1, 1), (48, 0), (16, 8)],
        "R": [(4, 2), (1, 1), (48, 0), (16, 8), (4, 10), (1, 7)],
        "mul": [[0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1], [1, 0, 0, 0],
                [-4, -1, 2, 12], [-12, -2, 3, 36]],
        "gram": [[4, -2, -24, -8], [-2, 1, 0, -8], [-24, 0, 48, 0], [-8, -8, 0, 16]],
    },
    16: {
        "forms": ["R(p4, 2)", XI_16_2],
        "leading": [
            _sym(0, [(2, 1, -4), (0, 1)])
            + [(1, 8, -1), (1, 6, -1), (1, 2, 1), (1, 0, 2)]  # printed as the q^2 slice
            + [(3, 14, 1, -4), (3, 10, -2), (3, 8, -4), (3, 6, -4), (3, 2, 5), (3, 0, 8)],
            [(-1, 0, 1, -64)] + _sym(0, [(1, 8, -1), (0, 14)])
            + _desc(1, 8, [21, 200, 1036, 3360, 8100, 15240, 23604, 30352, 33058])
            + _desc(2, 11, [56, 1008, 7336, 32932, 108800, 283504, 610344, 1112832, 1750728,
                            2401952, 2896688, 3081400])
            + _desc(3, 14, [4, 560, 8092, 58328, 283784, 1042328, 3082176, 7616904, 16136000,
                            29802144, 48582612, 70497736, 91619124, 107054192, 112732002],
                    {14: -4}),
        ],
        "complete": [[0], [-1, 0]],
        "P0": [(1, 2, 0), (0, -1, 0), (-1, 0, 1), (5, 32, 3), (3, 14, 1)],
        "P0_classes": [(4, 2), (1, 1), (64, 0), (64, 0), (4, 14)],
        "R": None,
        "mul": [[1, 0], [1, 8], [0, 1], [0, 1], [1, 4]],
        "gram": [[4, -2, -32, -32, -4], [-2, 1, 0, -32, -14], [-32, 0, 64, -64, -64],
                 [-32, -32, -64, 64, 0], [-4, -14, -64, 0, 4]],
    },
    36: {
        "forms": ["3*XI(36, 2) - R(XI(9, 1), 2)", "TQ([10, 1], [5, 2])", XI_36_3],
        "leading": [
            _sym(0, [(1, -3, -1), (0, 5)])
            + _desc(1, 12, [1, 3]) + _desc(2, 18, [1, -3, 9], {18: -36, 17: -1})
            + _desc(3, 20, [6, -3]) + _desc(4, 24, [4, 0, -15])
            + _desc(5, 27, [3, -9, 3], {27: -9}) + _desc(6, 29, [3, 6])
            + _desc(7, 32, [3, 0, -25, 9], {32: -16}) + _desc(8, 33, [-3, 33]),
            _sym(0, [(2, 1, -4), (1, -1, -1), (0, 1)])
            + _desc(1, 12, [-1, 1, -1]) + _desc(2, 17, [-1, 1, -1], {17: -1})
            + _desc(3, 19, [-1, 2, -3]) + _desc(4, 21, [-1, 2, -4])
            + _desc(5, 27, [1, -1, 1], {27: -9}) + _desc(6, 29, [1, -2, 3])
            + _desc(7, 32, [1, 0, -1, 3], {32: -16}) + _desc(8, 34, [1, -1, 1, 0, -3], {34: -4}),
            [(-1, 0, 1, -144), (0, 0, 24)]
            + _desc(1, 12, [24, 72]) + _desc(2, 18, [4, 0, 144, 672], {18: -36})
            + _desc(3, 20, [144, 1008]) + _desc(4, 24, [24, 288])
            + _desc(5, 27, [8, 216, 3096], {27: -9}) + _desc(6, 29, [72, 1584, 15720])
            + _desc(7, 32, [9, 288, 5304], {32: -16}) + _desc(8, 33, [672, 12096]),
        ],
        "complete": [[0], [0], [-1, 0]],
        "P0": [(1, 2, 0), (0, -1, 0), (-1, 0, 1), (2, 18, 1), (5, 27, 1), (7, 32, 1)],
        "P0_classes": [(4, 2), (1, 1), (144, 0), (36, 18), (9, 27), (16, 32)],
        "R": [(1, 1), (1, 17), (4, 2), (4, 34), (9, 27), (16, 32), (36, 18), (144, 0)],
        "mul": [[-3, 0, 0], [-3, 0, 0], [0, 1, 0], [0, 1, 0], [4, 1, 12], [3, 1, 9],
                [1, 0, 4], [0, 0, 1]],
        "gram": [[4, -2, -72, -36, -18, -8], [-2, 1, 0, -18, -27, -32],
                 [-72, 0, 144, -72, -288, -432], [-36, -18, -72, 36, -18, -72],
                 [-18, -27, -288, -18, 9, 0], [-8, -32, -432, -72, 0, 16]],
    },
}

# rank of RJ_t as bracketed in the basis theorem
RANKS = {1: 2, 2: 3, 3: 3, 4: 3, 8: 3, 9: 3, 12: 4, 16: 2, 36: 3}


# -- rank-3 Cartan matrices ------------------------------------------------

def _circulant(row):
    k = len(row)
    return [[row[(j - i) % k] for j in range(k)] for i in range(k)]


def _alternating(r1, r2):
    """Rows r1, r2, then each pair shifted right by two."""
    k = len(r1)
    out = []
    for i in range(k // 2):
        s = 2 * i
        out.append([r1[(j - s) % k] for j in range(k)])
        out.append([r2[(j - s) % k] for j in range(k)])
    return out


# The 16 symmetric matrices with their printed angle lists, one angle per
# cyclically adjacent pair (1,2), (2,3), ..., (k,1).
RANK3_CARTAN = {
    "A1,0": ([[2, 0, -1], [0, 2, -2], [-1, -2, 2]], ["pi/2", "0", "pi/3"]),
    "A1,I": ([[2, -2, -1], [-2, 2, -1], [-1, -1, 2]], ["0", "pi/3", "pi/3"]),
    "A1,II": ([[2, -2, -2], [-2, 2, -2], [-2, -2, 2]], ["0", "0", "0"]),
    "A1,III": ([[2, -2, -6, -6, -2], [-2, 2, 0, -6, -7], [-6, 0, 2, -2, -6],
                [-6, -6, -2, 2, 0], [-2, -7, -6, 0, 2]], ["0", "pi/2", "0", "pi/2", "0"]),
    "A2,0": ([[2, -2, -2], [-2, 2, 0], [-2, 0, 2]], ["0", "pi/2", "0"]),
    "A2,I": ([[2, -2, -4, 0], [-2, 2, 0, -4], [-4, 0, 2, -2], [0, -4, -2, 2]],
             ["0", "pi/2", "0", "pi/2"]),
    "A2,II": ([[2, -2, -6, -2], [-2, 2, -2, -6], [-6, -2, 2, -2], [-2, -6, -2, 2]],
              ["0"] * 4),
    "A2,III": (_alternating([2, -2, -8, -16, -18, -14, -8, 0],
                            [-2, 2, 0, -8, -14, -18, -16, -8]), ["0", "pi/2"] * 4),
    "A3,0": ([[2, -2, -2], [-2, 2, -1], [-2, -1, 2]], ["0", "pi/3", "0"]),
    "A3,I": ([[2, -2, -5, -1], [-2, 2, -1, -5], [-5, -1, 2, -2], [-1, -5, -2, 2]],
             ["0", "pi/3", "0", "pi/3"]),
    "A3,II": (_circulant([2, -2, -10, -14, -10, -2]), ["0"] * 6),
    "A3,III": (_alternating([2, -2, -11, -25, -37, -47, -50, -46, -37, -23, -11, -1],
                            [-2, 2, -1, -11, -23, -37, -46, -50, -47, -37, -25, -11]),
               ["0", "pi/3"] * 6),
    "B1": ([[2, 0, -3, -1], [0, 2, -1, -3], [-3, -1, 2, 0], [-1, -3, 0, 2]],
           ["pi/2", "pi/3", "pi/2", "pi/3"]),
    "B2": ([[2, -1, -4, -1], [-1, 2, -1, -4], [-4, -1, 2, -1], [-1, -4, -1, 2]], ["pi/3"] * 4),
    "B3": (_circulant([2, 0, -4, -6, -4, 0]), ["pi/2"] * 6),
    "B4": (_circulant([2, -1, -7, -10, -7, -1]), ["pi/3"] * 6),
}


# -- Table 2: the 29 algebras ------------------------------------------------
# Roots are (n, l, m).  "orbit" = (generator indices into P0, seed roots) for
# the chambers printed as [s_i, s_j](...); "cartan" is a RANK3_CARTAN name or
# an inline matrix; "scale" is the printed Gram-unit factor c with
# A = c * 2t (a, a') for the D_infinity chambers.

def _row(t, combo, weight, rho, P=None, orbit=None, odd=(), cartan=None, angles=None,
         infinite=False):
    return {"t": t, "combo": combo, "weight": weight, "rho": rho, "P": P, "orbit": orbit,
            "odd": list(odd), "cartan": cartan, "angles": angles, "infinite": infinite}


_A1, _A2, _A3 = (1, 2, 0), (0, -1, 0), (-1, 0, 1)
_2A2 = (0, -2, 0)

TABLE2 = [
    _row(1, (1, 0), "5", ("1/2", "1/2", "1/2"), [(0, -1, 0), (1, 1, 0), (0, 1, 1)],
         orbit=([1, 3], [_A2]), cartan="A1,II"),
    _row(1, (0, 1), "30", ("5/2", "1/2", "3/2"), [_A1, _A2, _A3], odd=[_A2],
         cartan=[[2, -1, -1], [-4, 2, 0], [-1, 0, 2]]),
    _row(1, (1, 1), "35", ("3", "1", "2"), [_A1, _2A2, _A3],
         cartan=[[2, -2, -1], [-2, 2, 0], [-1, 0, 2]]),

    _row(2, (1, 0, 0), "2", ("1/4", "1/2", "1/4"), [(0, -1, 0), (1, 1, 0), (1, 3, 1), (0, 1, 1)],
         orbit=([1, 3], [_A2]), cartan="A2,II"),
    _row(2, (0, 1, 0), "9", ("3/4", "1/2", "3/4"), [_A1, _A2, (0, 2, 1)], orbit=([3], [_A1, _A2]),
         odd=[_A2], cartan=[[2, -1, 0], [-4, 2, -4], [0, -1, 2]], angles=["0", "0", "pi/2"]),
    _row(2, (1, 1, 0), "11", ("1", "1", "1"), [_A1, _2A2, (0, 2, 1)], orbit=([3], [_A1, _2A2]),
         cartan=[[2, -2, 0], [-2, 2, -2], [0, -2, 2]]),
    _row(2, (0, 0, 1), "12", ("1", "0", "0"), orbit=([1, 2], [_A3]), cartan="scaled",
         infinite=True),
    _row(2, (1, 0, 1), "14", ("5/4", "1/2", "1/4"), [_A2, _A3, (1, 4, 1), (1, 1, 0)],
         orbit=([1], [_A2, _A3]),
         cartan=[[2, 0, -8, -2], [0, 2, 0, -1], [-1, 0, 2, 0], [-2, -8, 0, 2]],
         angles=["pi/2", "pi/2", "pi/2", "0"]),
    _row(2, (0, 1, 1), "21", ("7/4", "1/2", "3/4"), [_A1, _A2, _A3], odd=[_A2],
         cartan=[[2, -1, -2], [-4, 2, 0], [-1, 0, 2]], angles=["0", "pi/2", "pi/4"]),
    _row(2, (1, 1, 1), "23", ("2", "1", "1"), [_A1, _2A2, _A3],
         cartan=[[2, -2, -2], [-2, 2, 0], [-1, 0, 2]]),

    _row(3, (1, 0, 0), "1", ("1/6", "1/2", "1/6"),
         [(0, -1, 0), (1, 1, 0), (2, 5, 1), (2, 7, 2), (1, 5, 2), (0, 1, 1)],
         orbit=([1, 3], [_A2]), cartan="A3,II"),
    _row(3, (0, 1, 0), "6", ("1/2", "1/2", "1/2"), [_A1, _A2, (0, 2, 1)], orbit=([3], [_A1, _A2]),
         odd=[_A2], cartan=[[2, -1, -1], [-4, 2, -4], [-1, -1, 2]]),
    _row(3, (1, 1, 0), "7", ("2/3", "1", "2/3"), [_A1, _2A2, (0, 2, 1)], orbit=([3], [_A1, _2A2]),
         cartan=[[2, -2, -1], [-2, 2, -2], [-1, -2, 2]]),
    _row(3, (0, 0, 1), "12", ("1", "0", "0"), orbit=([1, 2], [_A3]), cartan="scaled",
         infinite=True),
    _row(3, (1, 0, 1), "13", ("7/6", "1/2", "1/6"), [_A2, _A3, (2, 6, 1), (1, 1, 0)],
         orbit=([1], [_A2, _A3]),
         cartan=[[2, 0, -12, -2], [0, 2, -1, -1], [-1, -1, 2, 0], [-2, -12, 0, 2]],
         angles=["0", "pi/2", "pi/3", "pi/2"]),
    _row(3, (0, 1, 1), "18", ("3/2", "1/2", "1/2"), [_A1, _A2, _A3], odd=[_A2],
         cartan=[[2, -1, -3], [-4, 2, 0], [-1, 0, 2]], angles=["0", "pi/2", "pi/6"]),
    _row(3, (1, 1, 1), "19", ("5/3", "1", "2/3"), [_A1, _2A2, _A3],
         cartan=[[2, -2, -3], [-2, 2, 0], [-1, 0, 2]]),

    _row(4, (1, 0, 0), "1/2", ("1/8", "1/2", "1/8"), orbit=([1, 3], [_A2]), cartan="scaled",
         infinite=True),
    _row(4, (0, 1, 0), "9/2", ("3/8", "1/2", "3/8"), [_A1, _A2, (0, 2, 1)],
         orbit=([3], [_A1, _A2]), odd=[_A2],
         cartan=[[2, -1, -2], [-4, 2, -4], [-2, -1, 2]], angles=["0", "0", "0"]),
    _row(4, (1, 1, 0), "5", ("1/2", "1", "1/2"), [_A1, _2A2, (0, 2, 1)], orbit=([3], [_A1, _2A2]),
         cartan="A1,II"),
    _row(4, (0, 0, 1), "12", ("1", "0", "0"), orbit=([1, 2], [_A3]), cartan="scaled",
         infinite=True),
    _row(4, (1, 0, 1), "25/2", ("9/8", "1/2", "1/8"), [_A2, _A3, (3, 8, 1), (1, 1, 0)],
         orbit=([1], [_A2, _A3]),
         cartan=[[2, 0, -16, -2], [0, 2, -2, -1], [-1, -2, 2, 0], [-2, -16, 0, 2]],
         angles=["pi/2", "0", "pi/2", "0"]),
    _row(4, (0, 1, 1), "33/2", ("11/8", "1/2", "3/8"), [_A1, _A2, _A3], odd=[_A2],
         cartan=[[2, -1, -4], [-4, 2, 0], [-1, 0, 2]], angles=["0", "pi/2", "0"]),
    _row(4, (1, 1, 1), "17", ("3/2", "1", "1/2"), [_A1, _2A2, _A3],
         cartan=[[2, -2, -4], [-2, 2, 0], [-1, 0, 2]]),

    _row(8, (0, 1, 0), "2", ("1/4", "1", "1/4"), [_A1, _2A2, (0, 2, 1), (1, 6, 1)],
         orbit=([3], [_A1, _2A2, (1, 6, 1)]), cartan="A2,II"),
    _row(9, (0, 1, 0), "2", ("1/6", "1/2", "1/6"), [_A1, _A2, (0, 2, 1), (1, 9, 2), (2, 9, 1)],
         orbit=([3], [_A1, _A2, (2, 9, 1)]), odd=[_A2],
         cartan=[[2, -1, -7, -9, 0], [-4, 2, -4, -18, -18], [-7, -1, 2, 0, -9],
                 [-4, -2, 0, 2, -2], [0, -2, -4, -2, 2]],
         angles=["0", "0", "pi/2", "0", "pi/2"]),
    _row(12, (0, 1, 1, 0), "1", ("1/6", "1", "1/6"),
         [_A1, _2A2, (0, 2, 1), (1, 10, 2), (2, 14, 2), (2, 10, 1)],
         orbit=([3, 4], [_A1, _2A2]), cartan="A3,II"),
    _row(16, (1, 0), "1/2", ("1/8", "1", "1/8"), orbit=([3, 4], [_A1, _2A2, (3, 14, 1)]),
         cartan="scaled", infinite=True),
    _row(36, (0, 1, 0), "1/2", ("1/24", "1/2", "1/24"),
         orbit=([3, 4], [_A1, _A2, (5, 27, 1), (7, 32, 1)]), odd=[_A2],
         cartan="scaled", infinite=True),
]

# Printed D_infinity Cartan matrices as c * 2t (a, a'); None means the
# standard 2 (a, a') / (a, a).
D_INF_SCALE = {
    (2, (0, 0, 1)): "1/4",
    (3, (0, 0, 1)): "1/6",
    (4, (1, 0, 0)): "2",
    (4, (0, 0, 1)): "1/8",
    (16, (1, 0)): "1/2",
    (36, (0, 1, 0)): None,
}
