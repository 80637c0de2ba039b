"""Exact q-expansions of extremal quasimodular forms.

Coefficients come back from the extension as strings and are converted to
``fractions.Fraction`` here.
"""

from fractions import Fraction

from . import _core
from ._core import (
    CertificateFailure,
    NonexistentForm,
    PreconditionViolation,
    UnknownIdentifier,
    UnsupportedClass,
    candidate_weights,
    form_exists,
    formula_ids,
    integrality_sweep,
    screen,
    vanishing_order,
    verify_divisor_identity,
    verify_e_sets,
)

__version__ = _core.__version__


def _fractions(values):
    return [Fraction(v) for v in values]


def sigma(k, n):
    return int(_core.sigma(k, n))


def tau(n):
    return int(_core.tau(n))


def eisenstein(weight, order=64):
    return _fractions(_core.eisenstein(weight, order))


def extremal_expansion(depth, weight, terms=64):
    """Return (lambda, [a(0), a(1), ...]) with a(0) = 1."""
    exponent, coeffs = _core.extremal_expansion(depth, weight, terms)
    return exponent, _fractions(coeffs)


def frobenius(depth, weight, terms=64):
    exponent, coeffs = _core.frobenius(depth, weight, terms)
    return exponent, _fractions(coeffs)


def matrix(depth, weight, n):
    return [_fractions(row) for row in _core.matrix(depth, weight, n)]


def indicial_polynomial(depth, weight):
    return _fractions(_core.indicial_polynomial(depth, weight))


def coeff_formula(formula_id, k):
    return Fraction(_core.coeff_formula(formula_id, k))


def divisor_form(form_id, order=64):
    return _fractions(_core.divisor_form(form_id, order))
