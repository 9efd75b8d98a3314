"""Closed-form polynomials used as fixed references (derived symbolically, see docs/derivations.md)."""


def pt_closed_forms(p):
    j, L, B, g = p.j, p.L, p.B, p.qA2
    s = B + 4 * j
    forms = {
        1: lambda x: x,
        2: lambda x: x * x - s * x - j * (2 * L + 3) * g,
        3: lambda x: x**3
        - (3 * B + 12 * j - 2) * x**2
        + (2 * s * (s - 1) + (2 * L + 5 - j * (6 * L + 13)) * g) * x
        + 2 * j * (2 * L + 3) * (s - 1) * g,
    }
    return forms


def sextic_closed_forms(p):
    j, L, b, g = p.j, p.L, p.b, p.qa2
    return {
        1: lambda e: e,
        2: lambda e: e * e - b * e - j * (2 * L + 3) * g,
        3: lambda e: e**3 - 3 * b * e**2 + (2 * b * b + (2 * L + 5 - j * (6 * L + 13)) * g) * e + 2 * j * (2 * L + 3) * b * g,
        4: lambda e: e**4
        - 6 * b * e**3
        + (11 * b * b + (8 * L + 26 - 12 * L * j - 34 * j) * g) * e**2
        + (-6 * b**3 + (28 * L * j - 12 * L + 66 * j - 36) * b * g) * e
        + 3 * j * (j - 1) * (4 * L * L + 20 * L + 21) * g * g
        - 6 * j * (2 * L + 3) * b * b * g,
    }


def sextic_table(p):
    """The critical row P_{2j+1} for 2j = 0..3."""
    L, b, g = p.L, p.b, p.qa2
    rows = {
        0: lambda e: e,
        1: lambda e: e * e - b * e - 0.5 * (3 + 2 * L) * g,
        2: lambda e: e**3 - 3 * b * e**2 + 2 * (b * b - 2 * (L + 2) * g) * e + 2 * b * (3 + 2 * L) * g,
        3: lambda e: e**4
        - 6 * b * e**3
        + (11 * b * b - 5 * (2 * L + 5) * g) * e**2
        + 3 * b * (-2 * b * b + (10 * L + 21) * g) * e
        + 9 * (-b * b * (2 * L + 3) * g + 0.25 * (4 * L * (L + 5) + 21) * g * g),
    }
    return rows[p.twoj]


def ptanh_closed_forms(p):
    j, b, g, l = p.j, p.b, p.qa2, p.ell
    return {
        1: lambda e: e - 2 * b * j,
        2: lambda e: (e + 2 * b * (1 - j)) * (e - 2 * b * j) - 8 * g * l * j,
    }


def ptanh_table(p):
    b, g, l = p.b, p.qa2, p.ell
    w = b * b + 4 * g * l
    rows = {
        0: lambda e: e,
        1: lambda e: e * e - w,
        2: lambda e: e**3 - 4 * w * e - 16 * g * g,
        3: lambda e: e**4 - 10 * w * e**2 - 96 * g * g * e + 9 * w * w,
    }
    return rows[p.twoj]
