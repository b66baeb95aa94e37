"""Reference data for the Poincare series of the qubit-qutrit
local-unitary invariant algebra.

Every golden value consumed by the verification pipeline lives in this
one file so it can be audited in a single place.  Nothing here is
computed; the engine in :mod:`luinv.molien` recomputes the series from
scratch and :func:`luinv.molien.verify_theorem` compares the two.

The series P(t) = sum_d dim(invariants of degree d) t^d is a rational
function N(t)/D(t).  N is palindromic of degree 70, so only the
coefficients through t^35 are tabulated; the mirror rule c[70-k] = c[k]
completes the rest, and a few independently tabulated high-degree terms
serve as a transcription check.  Multiplying both N and D by
(1 - t + t^2)(1 + t^3) yields an equivalent form whose numerator has
nonnegative coefficients (palindromic of degree 75, tabulated through
t^37 and mirrored) and whose denominator factors as a product of
(1 - t^e) terms; the factor exponents, with multiplicity, give the
expected degrees of a homogeneous system of parameters.
"""

from __future__ import annotations

from luinv.exact import UniPoly, poly_from_factored

# --- reduced form: N / D ------------------------------------------------

NUMERATOR_DEGREE = 70

# Coefficients of t^0 .. t^35 of N.
NUMERATOR_LOW_COEFFS = (
    1, 1, 0, -2, 2, 13, 50, 102, 216, 422,
    874, 1691, 3305, 6037, 10779, 18312, 30318, 48209, 74858, 112294,
    164391, 233394, 323332, 435113, 571671, 730844, 912641, 1110648,
    1321048, 1532768, 1739258, 1926469, 2087251, 2208470, 2286037,
    2311126,
)

# Independently tabulated terms above t^35 (checked against the mirror).
NUMERATOR_TAIL_CHECK = {36: 2286037, 66: 2, 67: -2, 69: 1, 70: 1}

# D = (1 + t) * prod (1 - t^e)^m over the pairs below; degree 105.
DENOMINATOR_FACTORS = ((2, 3), (3, 6), (4, 5), (5, 4), (6, 3), (7, 2), (8, 1))
DENOMINATOR_TIMES_ONE_PLUS_T = True

# --- nonnegative form: N* / D* (both sides times (1-t+t^2)(1+t^3)) ------

NONNEG_NUMERATOR_DEGREE = 75

# Coefficients of t^0 .. t^37 of N*.
NONNEG_NUMERATOR_LOW_COEFFS = (
    1, 0, 0, 0, 4, 9, 38, 69, 173, 347,
    733, 1403, 2796, 5091, 9286, 16058, 27208, 44250, 70537, 108430,
    163158, 238264, 339974, 472130, 641187, 848615, 1098643, 1388741,
    1717327, 2075836, 2456389, 2843020, 3222408, 3575226, 3884797,
    4133599, 4308636, 4398377,
)

NONNEG_NUMERATOR_TAIL_CHECK = {38: 4398377, 69: 38, 70: 9, 71: 4, 75: 1}

# D* = prod (1 - t^e)^m; degree 110.
NONNEG_DENOMINATOR_FACTORS = ((2, 3), (3, 4), (4, 5), (5, 4), (6, 5), (7, 2), (8, 1))

# --- series prefix used for direct spot checks --------------------------

# dim of the invariant space at degrees 0 .. 19.
TAYLOR_COEFFS = (
    1, 0, 3, 4, 15, 25, 90, 170, 489, 1059,
    2600, 5641, 12872, 27099, 57990, 118254, 240187, 472273, 919432,
    1745295,
)

# Expected degrees of a homogeneous system of parameters, read off the
# exponents of D*'s factors: 24 values in total.
HSOP_DEGREE_COUNTS = {2: 3, 3: 4, 4: 5, 5: 4, 6: 5, 7: 2, 8: 1}


class ReferenceDataError(ValueError):
    """Tabulated data fails its own internal consistency checks."""


def _mirror_complete(low_coeffs, degree, tail_check) -> UniPoly:
    coeffs = [0] * (degree + 1)
    for k, c in enumerate(low_coeffs):
        coeffs[k] = c
        coeffs[degree - k] = c
    for k, c in tail_check.items():
        if coeffs[k] != c:
            raise ReferenceDataError(
                f"tabulated coefficient {c} at degree {k} disagrees with "
                f"mirrored value {coeffs[k]}"
            )
    return UniPoly(coeffs)


def numerator_poly() -> UniPoly:
    """N(t): palindromic numerator of the series, completed by mirroring."""
    return _mirror_complete(
        NUMERATOR_LOW_COEFFS, NUMERATOR_DEGREE, NUMERATOR_TAIL_CHECK
    )


def denominator_poly() -> UniPoly:
    """D(t), expanded from its factored form (degree 105)."""
    return poly_from_factored(
        DENOMINATOR_FACTORS, times_one_plus_t=DENOMINATOR_TIMES_ONE_PLUS_T
    )


def nonneg_numerator_poly() -> UniPoly:
    """N*(t): the nonnegative palindromic numerator (degree 75)."""
    return _mirror_complete(
        NONNEG_NUMERATOR_LOW_COEFFS,
        NONNEG_NUMERATOR_DEGREE,
        NONNEG_NUMERATOR_TAIL_CHECK,
    )


def nonneg_denominator_poly() -> UniPoly:
    """D*(t), expanded from its factored form (degree 110)."""
    return poly_from_factored(NONNEG_DENOMINATOR_FACTORS)


def hsop_degrees() -> tuple[int, ...]:
    """Sorted degree multiset of a homogeneous system of parameters."""
    return tuple(
        e for e, count in sorted(HSOP_DEGREE_COUNTS.items()) for _ in range(count)
    )
