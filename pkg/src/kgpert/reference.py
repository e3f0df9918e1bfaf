"""Pinned benchmark values for the bundled Hulthen tables.

All entries are for a = 1, b = 1 couplings (used singly or together) in
units hbar = m = c = 1.  Table one: partial sums through E_5 at l = 1,
n = 1 over a screening grid, with percentage errors against the shooting
solver.  Table two: partial-sum sequences k = 0..10 at lam = 0.05 for
l = 1, n in {1, 2}, plus the converged eigensolver energies.

The CLI table commands regenerate these numbers and self-grade against
them; the acceptance suite asserts the deviations.
"""

LAMBDA_GRID = tuple(round(0.05 + 0.01 * i, 2) for i in range(11))

# columns: (family, n) -> coupling strengths (a, b); l = 1 throughout
FAMILIES = {"vector": (1.0, 0.0), "scalar": (0.0, 1.0), "mixed": (1.0, 1.0)}

TABLE2_L = 1
TABLE2_LAMBDA = 0.05
TABLE2_ORDER = 10

# (family, n) -> partial sums S_0..S_10
TABLE2_PARTIAL_SUMS = {
    ("vector", 1): (
        0.9341723590, 0.9591723590, 0.9570741392, 0.9570741392, 0.9570686998,
        0.9570686998, 0.9570686381, 0.9570686381, 0.9570686368, 0.9570686368,
        0.9570686367,
    ),
    ("scalar", 1): (
        0.9530618622, 0.9768884088, 0.9738581555, 0.9739339118, 0.9739202644,
        0.9739211933, 0.9739209078, 0.9739209397, 0.9739209276, 0.9739209295,
        0.9739209288,
    ),
    ("mixed", 1): (
        0.8000000000, 0.8450000000, 0.8423958333, 0.8424609375, 0.8424540955,
        0.8424545273, 0.8424544790, 0.8424544833, 0.8424544828, 0.8424544828,
        0.8424544828,
    ),
    ("vector", 2): (
        0.9638612635, 0.9888612635, 0.9848180151, 0.9848180151, 0.9847983143,
        0.9847983143, 0.9847977509, 0.9847977509, 0.9847977150, 0.9847977150,
        0.9847977119,
    ),
    ("scalar", 2): (
        0.9726183555, 0.9969338144, 0.9915208448, 0.9916561690, 0.9916167626,
        0.9916195489, 0.9916177074, 0.9916179261, 0.9916177253, 0.9916177586,
        0.9916177282,
    ),
    ("mixed", 2): (
        0.8823529412, 0.9294117647, 0.9246200980, 0.9247398897, 0.9247202876,
        0.9247216080, 0.9247213732, 0.9247213972, 0.9247213921, 0.9247213928,
        0.9247213926,
    ),
}

# (family, n) -> converged shooting-method eigenvalue
TABLE2_NUMEROV = {
    ("vector", 1): 0.9570686367,
    ("scalar", 1): 0.9739209289,
    ("mixed", 1): 0.8424544828,
    ("vector", 2): 0.9847977115,
    ("scalar", 2): 0.9916177295,
    ("mixed", 2): 0.9247213926,
}

TABLE1_N = 1
TABLE1_L = 1

# rows: lambda -> (E_V, eps_V, E_W, eps_W, E_VW, eps_VW); E columns are S_5,
# eps columns are percentage errors against the eigensolver
TABLE1_ROWS = {
    0.05: (0.95706870, 0.00001, 0.97392119, 0.00003, 0.84245453, 0.00001),
    0.06: (0.96113964, 0.00002, 0.97739507, 0.00008, 0.85034939, 0.00002),
    0.07: (0.96503895, 0.00005, 0.98064017, 0.00020, 0.85805052, 0.00004),
    0.08: (0.96876527, 0.00011, 0.98365749, 0.00045, 0.86555969, 0.00008),
    0.09: (0.97231703, 0.00023, 0.98644772, 0.00091, 0.87287852, 0.00016),
    0.10: (0.97569245, 0.00044, 0.98901136, 0.00171, 0.88000851, 0.00030),
    0.11: (0.97888956, 0.00080, 0.99134866, 0.00307, 0.88695104, 0.00052),
    0.12: (0.98190615, 0.00138, 0.99345974, 0.00527, 0.89370738, 0.00086),
    0.13: (0.98473983, 0.00229, 0.99534457, 0.00873, 0.90027874, 0.00137),
    0.14: (0.98738798, 0.00369, 0.99700303, 0.01414, 0.90666626, 0.00210),
    0.15: (0.98984779, 0.00577, 0.99843492, 0.02255, 0.91287103, 0.00312),
}
