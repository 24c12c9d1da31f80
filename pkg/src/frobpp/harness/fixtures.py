"""Fixed parameter samples for the cross-validation suites.

Changing any list here changes what ``crossval`` checks; bump
``FIXTURE_VERSION`` when doing so.
"""

FIXTURE_VERSION = 1

FERMAT_BASES = (2, 3, 5, 7, 10)

# (P, Q) for x^2 - P x + Q; every discriminant is nonzero
QUADRATIC_PAIRS = (
    (1, -1), (1, 2), (1, 3), (2, -1), (2, 3),
    (3, 1), (3, -1), (3, 2), (3, 5), (4, 1),
    (4, -1), (5, 1), (5, -1), (5, 3), (-5, 5),
    (6, 7), (7, -3), (1185, 56437), (2, 5), (3, -5),
)

LUCAS_PAIRS = QUADRATIC_PAIRS[:10]

LEHMER_PAIRS = ((1, -1), (3, 1), (5, 3), (7, -3))

EXTRA_STRONG_BASES = (3, 4, 5, 7)

# polynomials whose Frobenius pseudoprimes are checked against base f(0)
FERMAT_F0_POLYS = (
    "x - 2",
    "x - 3",
    "x^2 - x - 1",
    "x^2 + 5x + 5",
    "x^2 - 3x - 3",
    "x^3 - x - 1",
    "x^3 - 2x^2 - x + 3",
)

PRODUCT_POLYS = ("x - 2", "x - 3", "x - 5", "x^2 - x - 1", "x^2 + 1")

SPLIT_QUADRATIC_ROOTS = ((2, 3), (2, 5), (3, 5), (2, 7), (3, 4), (5, 7))

# (r, s) for x^3 - r x^2 + s x - 1; (0, -1) is Perrin's sequence
PERRIN_PARAMS = ((0, -1), (1, 0), (1, -1), (-1, -2), (2, -1))

SZEKERES_POLYS = (
    "x - 2",
    "x^2 - x - 1",
    "x^2 + 5x + 5",
    "x^2 - 1185x + 56437",
    "x^3 - x - 1",
    "x^3 + x^2 - 2x - 1",
    "x^4 + 12x + 1",
    "(x - 1341)(x - 513)(x - 545)",
)

CARMICHAELS = (561, 1105, 1729)

# root sets for split polynomials; the first five admissible for each n are used
SPLIT_ROOT_SETS = (
    (2, 4), (2, 5), (4, 5), (2, 7), (4, 7), (5, 7), (2, 4, 5), (2, 5, 7),
    (7, 10), (4, 9), (2, 9), (8, 9), (2, 4, 8), (10, 14),
)

# Carmichael numbers for the quadratic-field check, with a D for which
# every prime factor splits in Q(sqrt D)
CARMICHAEL_FIELDS = (
    (561, -2),   # 3, 11, 17 all have (-2|p) = 1
    (1105, -1),  # 5, 13, 17 are 1 mod 4
    (1729, -3),  # 7, 13, 19 are 1 mod 3
    (2465, -1),  # 5, 17, 29
    (2821, -3),  # 7, 13, 31
    (8911, -3),  # 7, 19, 67
    (10585, -1),  # 5, 29, 73
)

DOCUMENTED_NON_EXAMPLES = {
    # strong Frobenius pseudoprime that is not a strong Lucas pseudoprime;
    # its discriminant has Jacobi symbol +1
    "strong-lucas": (294409, (1185, 56437)),
}
