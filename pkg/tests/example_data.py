"""Shared golden data for the worked knot/link/census examples.

Relator strings and the published simplified ideals, written with
x = t{1}, y = t{2}, z = t{1,2}.
"""

from charvar.polynomials import TracePolynomial, tvar

X, Y, Z = tvar(1), tvar(2), tvar(1, 2)

# figure-eight knot complement group
FIG8_RELATOR = "aBAbaBabAB"

# Whitehead link complement group
WHITEHEAD_RELATOR = "abaBABabABAbabAB"

# Weeks manifold, as printed by SnapPy's fundamental_group()
WEEKS_SNAPPY_TEXT = """\
Generators:
   a,b
Relators:
   aabbaaBaB
   aabbAbAbb
"""


def fig8_component_ideal() -> tuple[TracePolynomial, ...]:
    """The two component equations and x = y, as published."""
    return (Y * Y - Z - 2, Y * Y * Z - 2 * Y * Y - Z * Z + Z + 1, X - Y)


def fig8_product_ideal() -> tuple[TracePolynomial, ...]:
    """Product form: the actual set-theoretic cut-out is the union of the
    two components inside x = y."""
    p1, p2, p3 = fig8_component_ideal()
    return (p1 * p2, p3)


def whitehead_reducible_factor() -> TracePolynomial:
    return X * X + Y * Y + Z * Z - X * Y * Z - 4


def whitehead_canonical_factor() -> TracePolynomial:
    return -X * Y - 2 * Z + X * X * Z + Y * Y * Z - X * Y * Z * Z + Z ** 3


def whitehead_product() -> TracePolynomial:
    return whitehead_reducible_factor() * whitehead_canonical_factor()


def weeks_printed_ideal() -> tuple[TracePolynomial, ...]:
    """The six published relations for the Weeks manifold character ring."""
    g1 = Z ** 6 - 3 * Z ** 5 + 2 * Z ** 4 + 4 * Z ** 3 - 12 * Z ** 2 + 9 * Z - 2
    g2 = (-Z ** 5 + 3 * Z ** 4 + Y * Z ** 3 - Z ** 3 - Y * Z ** 2 - 6 * Z ** 2
          - 3 * Y * Z + 10 * Z + 2 * Y - 4)
    g3 = (Z ** 5 - 3 * Z ** 4 + 2 * Z ** 3 + 5 * Z ** 2 - 13 * Z
          + Y ** 3 - Y ** 2 - 3 * Y + 8)
    g4 = X * Z ** 2 - Y * Z ** 2 + X * Z - Y * Z - X + Y
    g5 = (-2 * Z ** 5 + 5 * Z ** 4 - Z ** 3 - 9 * Z ** 2 - Y ** 2 * Z - Y * Z
          + 19 * Z + X * Y ** 2 - X + X * Y - 8)
    g6 = Z ** 5 - 2 * Z ** 4 + 4 * Z ** 2 - X * Y * Z - 8 * Z + X ** 2 + Y ** 2
    return (g1, g2, g3, g4, g5, g6)
