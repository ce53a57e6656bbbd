"""Two-bridge identities K[terms] = K(P/Q) used as golden data.

Each entry: name, free variables, terms(env), (P(env), Q(env)).
"""

GOLDEN = [
    ("C.1", ("g", "e"), lambda g, e: [g, 1, e], lambda g, e: (e * g + e + g, g + 1)),
    ("D.1.1", ("e", "g"), lambda e, g: [e, 2, g], lambda e, g: (2 * e * g + g + e, 2 * e + 1)),
    ("D.1.3", ("e", "g"), lambda e, g: [e, -2, g], lambda e, g: (g + e - 2 * e * g, 1 - 2 * e)),
    (
        "E.1.1",
        ("e", "d", "g"),
        lambda e, d, g: [e, -1 - d, g],
        lambda e, d, g: (-g * e - g * d * e + g + e, 1 - e - d * e),
    ),
    (
        "E.2.1",
        ("d", "b", "g"),
        lambda d, b, g: [d, 1, b, 1, g],
        lambda d, b, g: (g * b * d + g * b + 2 * d * g + b * d + g + b + d, b * d + b + 2 * d + 1),
    ),
    (
        "E.2.2",
        ("d", "b", "g"),
        lambda d, b, g: [d, 1, b, -1, g],
        lambda d, b, g: (-g * b * d - g * b + g + b * d + b + d, -b * d + b + 1),
    ),
    ("3A", ("b", "g"), lambda b, g: [-b, g + 2], lambda b, g: (1 - b * g - 2 * b, b)),
    ("3B", ("b", "g"), lambda b, g: [2 - b, g], lambda b, g: (2 * g - b * g + 1, 2 - b)),
    ("3C", ("g", "b"), lambda g, b: [g + 2, -2, b], lambda g, b: (2 * g * b + 3 * b - g - 2, 2 * g + 3)),
    ("3D", ("g", "b"), lambda g, b: [g, 2, b - 2], lambda g, b: (2 * g * b + b - 3 * g - 2, 2 * g + 1)),
    (
        "3E",
        ("a", "e", "b"),
        lambda a, e, b: [a, -e, 2, -1, b],
        lambda a, e, b: (a * b * e - a * b - 2 * a * e + a - b + 2, a * e - a - 1),
    ),
    (
        "3F",
        ("a", "e", "g"),
        lambda a, e, g: [a, -e, -2, 1, g],
        lambda a, e, g: (e * a * g + a * g - g + 2 * e * a - 2 + a, e * a + a - 1),
    ),
]
