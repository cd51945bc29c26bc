"""Reference fidelity expressions for the four schemes.

Two independent families of expressions live here:

* ``closed_form(name, family)`` -- factored products of correctable-class
  probability sums (e.g. d=18 symmetric: (1-2p^2-p^3)^2).  These are the
  cross-oracle the trace engine must reproduce term-for-term.

* ``expansion(name, family)`` -- the fully expanded forms, transcribed
  coefficient by coefficient as independent data.  The five-qubit symmetric
  p^8 coefficient is -175 here; the +175 sign that circulates in one
  transcription fails both cross-checks (asymmetric at kappa=1 and the
  factored product) and is flagged by the verify command.

Agreement between the two families, and between them and the trace engine,
is asserted by the test suite.
"""

from __future__ import annotations

from .exactpoly import KAPPA, MU, ONE, P, RationalPolynomial, poly_sum


def _p_poly(coeffs: dict[int, int]) -> RationalPolynomial:
    return RationalPolynomial.from_terms({(e, 0, 0): c for e, c in coeffs.items()})


def _kappa_rows(rows: dict[int, dict[int, int]]) -> RationalPolynomial:
    return poly_sum([KAPPA**k * _p_poly(row) for k, row in rows.items()])


# --------------------------------------------------------------- d=18 / d=50

D18_SYMMETRIC = _p_poly({0: 1, 2: -4, 3: -2, 4: 4, 5: 4, 6: 1})

D18_ASYMMETRIC = _kappa_rows(
    {
        0: {0: 1, 2: -2, 3: -1},
        2: {2: -2, 4: 4, 5: 2},
        3: {3: -1, 5: 2, 6: 1},
    }
)

D18_CORRELATED = D18_SYMMETRIC + MU * _p_poly({2: 2, 3: 1, 4: -4, 5: -4, 6: -1})

D50_SYMMETRIC = _p_poly({0: 1, 3: -4, 4: -4, 5: -2, 6: 4, 7: 8, 8: 8, 9: 4, 10: 1})

D50_ASYMMETRIC = _kappa_rows(
    {
        0: {0: 1, 3: -2, 4: -2, 5: -1},
        3: {3: -2, 6: 4, 7: 4, 8: 2},
        4: {4: -2, 7: 4, 8: 4, 9: 2},
        5: {5: -1, 8: 2, 9: 2, 10: 1},
    }
)

# ----------------------------------------------------------------- five-qubit

FIVE_SYMMETRIC = _p_poly(
    {0: 1, 2: -40, 3: 200, 4: -490, 5: 728, 6: -700, 7: 440, 8: -175, 9: 40, 10: -4}
)

FIVE_ASYMMETRIC = _kappa_rows(
    {
        0: {0: 1, 2: -10, 3: 20, 4: -15, 5: 4},
        1: {2: -20, 3: 80, 4: -120, 5: 80, 6: -20},
        2: {2: -10, 3: 80, 4: -220, 5: 280, 6: -170, 7: 40},
        3: {3: 20, 4: -120, 5: 280, 6: -320, 7: 180, 8: -40},
        4: {4: -15, 5: 80, 6: -170, 7: 180, 8: -95, 9: 20},
        5: {5: 4, 6: -20, 7: 40, 8: -40, 9: 20, 10: -4},
    }
)

# ---------------------------------------------------------------- seven-qubit

SEVEN_SYMMETRIC = _p_poly(
    {
        0: 1, 2: -42, 3: 140, 4: 231, 5: -2772, 6: 9240, 7: -18216,
        8: 24255, 9: -22792, 10: 15246, 11: -7140, 12: 2233, 13: -420, 14: 36,
    }
)

SEVEN_ASYMMETRIC = _kappa_rows(
    {
        0: {0: 1, 2: -21, 3: 70, 4: -105, 5: 84, 6: -35, 7: 6},
        1: {2: -21, 3: 126, 4: -315, 5: 420, 6: -315, 7: 126, 8: -21},
        2: {3: -21, 4: 126, 5: -315, 6: 420, 7: -315, 8: 126, 9: -21},
        3: {3: -35, 4: 420, 5: -1785, 6: 3850, 7: -4725, 8: 3360, 9: -1295, 10: 210},
        4: {4: 105, 5: -1050, 6: 4095, 7: -8400, 8: 9975, 9: -6930, 10: 2625, 11: -420},
        5: {5: -126, 6: 1155, 7: -4284, 8: 8505, 9: -9870, 10: 6741, 11: -2520, 12: 399},
        6: {6: 70, 7: -609, 8: 2184, 9: -4235, 10: 4830, 11: -3255, 12: 1204, 13: -189},
        7: {7: -15, 8: 126, 9: -441, 10: 840, 11: -945, 12: 630, 13: -231, 14: 36},
    }
)

EXPANSIONS = {
    ("d18", "symmetric"): D18_SYMMETRIC,
    ("d18", "asymmetric"): D18_ASYMMETRIC,
    ("d18", "correlated"): D18_CORRELATED,
    ("d50", "symmetric"): D50_SYMMETRIC,
    ("d50", "asymmetric"): D50_ASYMMETRIC,
    ("five", "symmetric"): FIVE_SYMMETRIC,
    ("five", "asymmetric"): FIVE_ASYMMETRIC,
    ("seven", "symmetric"): SEVEN_SYMMETRIC,
    ("seven", "asymmetric"): SEVEN_ASYMMETRIC,
}


def expansion(name: str, family: str) -> RationalPolynomial:
    return EXPANSIONS[(name, family)]


def closed_form(name: str, family: str) -> RationalPolynomial:
    """Factored correctable-probability sums (product-decoder set for seven)."""
    q = KAPPA * P if family == "asymmetric" else P
    if name == "d18":
        x_sum = 1 - 2 * q**2 - q**3
        z_sum = 1 - 2 * P**2 - P**3
        if family == "correlated":
            return (ONE - MU) * z_sum * z_sum + MU * z_sum
        return x_sum * z_sum
    if name == "d50":
        x_sum = 1 - 2 * q**3 - 2 * q**4 - q**5
        z_sum = 1 - 2 * P**3 - 2 * P**4 - P**5
        if family == "correlated":
            return (ONE - MU) * z_sum * z_sum + MU * z_sum
        return x_sum * z_sum
    if family == "correlated":
        raise ValueError("correlated weights are defined for qudit codes only")
    if name == "five":
        pi_i = (1 - q) * (1 - P)
        pi_x = q * (1 - P)
        pi_z = (1 - q) * P
        pi_y = q * P
        return pi_i**4 * (pi_i + 5 * pi_x + 5 * pi_y + 5 * pi_z)
    if name == "seven":
        return (1 - q) ** 6 * (1 + 6 * q) * (1 - P) ** 6 * (1 + 6 * P)
    raise ValueError(f"unknown code {name!r}")
