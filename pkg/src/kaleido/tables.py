"""Known witnesses and exception lists for small orders.

Every entry here is checkable: each x or block below must survive the
full initial-block predicate, and the test suite re-verifies all of them
from scratch. Exception lists enumerate orders where the named
one-parameter form has no witness at all; those are re-established by
exhaustive sweeps over the parameter.
"""

from __future__ import annotations

# Smallest x for which (0, 1, 2, x, x+1, x^2+x, 2x) is an initial block
# over the prime field of that order. Covers every prime = 1 (mod 6)
# from 37 through 577 that has one.
FANO_AFFINE_PRIMES = {
    37: 13,
    67: 61,
    73: 35,
    97: 5,
    103: 18,
    109: 26,
    139: 47,
    151: 12,
    157: 84,
    163: 55,
    181: 61,
    193: 78,
    223: 143,
    229: 37,
    241: 20,
    271: 89,
    277: 47,
    283: 7,
    307: 23,
    313: 92,
    331: 48,
    349: 55,
    367: 34,
    373: 122,
    397: 19,
    409: 137,
    433: 24,
    439: 174,
    457: 147,
    487: 111,
    499: 87,
    523: 133,
    541: 10,
    571: 3,
    577: 80,
}

# Primes = 1 (mod 6) up to 577 where no x makes the affine form work.
FANO_AFFINE_EXCEPTIONS = (13, 19, 31, 43, 61, 79, 127, 199)

# Hand-found seven-point initial blocks for the affine-form exceptions
# that still admit some block (all but 13 and 19).
FANO_ALT_BLOCKS = {
    31: (0, 1, 2, 12, 13, 27, 24),
    43: (0, 1, 2, 7, 8, 37, 38),
    61: (0, 1, 2, 5, 6, 41, 10),
    79: (0, 1, 2, 24, 25, 11, 48),
    127: (0, 1, 2, 12, 13, 87, 24),
    199: (0, 1, 2, 4, 5, 71, 8),
}

# Power-form witnesses (1, x, ..., x^6) over squares of primes
# p = 5 (mod 12). The field is built on t^2 - 3 for these p, and x is
# given by its coefficient pair (c0, c1) meaning c0 + c1*t.
FANO_SQUARE_T2M3 = {
    5: (4, 1),
    17: (6, 3),
    29: (1, 2),
    41: (3, 15),
    53: (1, 19),
    89: (1, 15),
    101: (1, 43),
    113: (1, 39),
    137: (1, 63),
    149: (1, 17),
    173: (1, 34),
    197: (2, 18),
    233: (1, 99),
    257: (1, 33),
    269: (1, 65),
    281: (1, 7),
    293: (3, 9),
    317: (1, 27),
    353: (1, 9),
    389: (1, 11),
    401: (1, 40),
    449: (1, 8),
    461: (1, 8),
    509: (1, 103),
    521: (1, 82),
    557: (1, 7),
    569: (1, 116),
}

# Same power-form witnesses over t^2 + 1 for primes p = 11 (mod 12).
FANO_SQUARE_T2P1 = {
    11: (3, 4),
    23: (1, 11),
    47: (2, 12),
    59: (2, 15),
    71: (2, 32),
    83: (2, 3),
    107: (2, 51),
    131: (1, 22),
    167: (3, 9),
    179: (1, 8),
    191: (1, 23),
    227: (1, 91),
    239: (1, 101),
    251: (1, 42),
    263: (1, 56),
    311: (2, 41),
    347: (1, 16),
    359: (1, 157),
    383: (1, 122),
    419: (1, 30),
    431: (1, 15),
    443: (1, 122),
    467: (1, 31),
    479: (1, 103),
    491: (1, 126),
    503: (1, 50),
    563: (1, 73),
}

# Order 169: affine form over t^2 - 2 with x = 6 + 2t.
FANO_13_SQUARE = {"modulus": (-2, 0, 1), "x": (6, 2)}

# Order 2197: power form (1, x, ..., x^6) over t^3 - 2 with
# x = 10 + 7t + 11t^2.
FANO_13_CUBE = {"modulus": (-2, 0, 0, 1), "x": (10, 7, 11)}

# Smallest x for which (0, 1, x, x^2, ..., x^7) is a nine-point initial
# block over the prime field of that order.
HESSE_PRIME_X = {
    97: 14,
    103: 36,
    139: 61,
    163: 143,
    181: 66,
    223: 187,
    229: 184,
    277: 97,
}

# Primes = 1 (mod 6) up to 1000 where the power form has no witness.
HESSE_EXCEPTIONAL_PRIMES = (
    13, 31, 37, 43, 61, 67, 73, 79, 109, 127, 151, 157, 193, 199,
    211, 241, 271, 283, 337, 349, 367, 463, 733, 751, 811, 937,
)

# Hand-found nine-point initial blocks for the smallest power-form
# exceptions beyond 13.
HESSE_ALT_BLOCKS = {
    31: (12, 0, 1, 3, 6, 13, 8, 28, 11),
    37: (24, 0, 1, 7, 3, 35, 29, 25, 17),
    43: (13, 0, 1, 3, 7, 8, 22, 17, 14),
    61: (50, 0, 1, 6, 5, 15, 10, 13, 14),
    67: (26, 0, 1, 6, 7, 18, 13, 12, 11),
    73: (3, 0, 1, 4, 6, 29, 27, 16, 17),
    79: (16, 0, 1, 4, 20, 12, 25, 7, 17),
}

# Nine-point initial blocks over small prime squares. Moduli are listed
# low coefficient first; block entries are coefficient pairs.
HESSE_SQUARE_BLOCKS = {
    5: {
        "modulus": (-3, 0, 1),
        "block": (
            (1, 3), (0, 0), (1, 0), (2, 0), (2, 1),
            (0, 1), (0, 2), (4, 3), (1, 4),
        ),
    },
    11: {
        "modulus": (1, 0, 1),
        "block": (
            (0, 1), (0, 0), (1, 0), (2, 0), (3, 1),
            (4, 6), (4, 10), (0, 4), (1, 8),
        ),
    },
    13: {
        "modulus": (-2, 0, 1),
        "block": (
            (2, 12), (0, 0), (1, 0), (2, 0), (3, 1),
            (4, 1), (2, 8), (9, 3), (3, 4),
        ),
    },
    17: {
        "modulus": (-3, 0, 1),
        "block": (
            (5, 3), (0, 0), (1, 0), (2, 0), (3, 1),
            (4, 2), (1, 1), (0, 2), (1, 3),
        ),
    },
    23: {
        "modulus": (1, 0, 1),
        "block": (
            (0, 1), (0, 0), (1, 0), (2, 0), (2, 5),
            (4, 14), (3, 7), (2, 7), (9, 21),
        ),
    },
    29: {
        "modulus": (-3, 0, 1),
        "block": (
            (0, 4), (0, 0), (1, 0), (2, 0), (2, 1),
            (4, 2), (4, 3), (3, 1), (1, 4),
        ),
    },
}

# Primes up to 1000 where 2 is a non-cube while 6 and 20 are both
# cubes, making (0, 1, 2, 3, 4, 5, 6) an initial block.
CONSECUTIVE_BLOCK_PRIMES_1000 = (7, 541, 571, 877, 937)
