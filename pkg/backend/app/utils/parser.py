"""Polynomial text grammar: integer/rational coefficients, `^` powers, `*` products.

Negative powers are allowed on multiplicative coordinates, so `t^-1` and
`1/t` both parse to a Laurent monomial.
"""
import re
from tokenize import TokenError

from sympy import Poly, Symbol, fraction, together
from sympy.parsing.sympy_parser import parse_expr, standard_transformations
from sympy.polys.polyerrors import BasePolynomialError

from ..errors import ScenarioError, UnknownIdentifierError
from ..models.cell import RegularFunction

ALLOWED = re.compile(r"^[A-Za-z0-9_\s+\-*/^().]*$")
IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
POWER = re.compile(r"(?:\^|\*\*)\s*(\(\s*-?\s*\d+\s*\)|-?\s*\d+)?(\s*(?:\^|\*\*))?")
MAX_EXPONENT = 512


def _expression(text, names, line=0, column=0):
    if not text.strip():
        raise ScenarioError("empty polynomial", line, column)
    if not ALLOWED.match(text):
        raise ScenarioError(f"unexpected character in {text!r}", line, column)
    local = {}
    for match in IDENTIFIER.finditer(text):
        name = match.group(0)
        if name not in names:
            raise UnknownIdentifierError(f"unknown variable {name!r}", line,
                                         column + match.start())
        local[name] = Symbol(name)
    for match in POWER.finditer(text):
        exponent, stacked = match.groups()
        if exponent is None or stacked:
            raise ScenarioError(f"exponents must be integer literals in {text!r}", line,
                                column + match.start())
        if abs(int(re.sub(r"[()\s]", "", exponent))) > MAX_EXPONENT:
            raise ScenarioError(f"exponent {exponent.strip()} exceeds {MAX_EXPONENT}", line,
                                column + match.start())
    try:
        return parse_expr(text.replace('^', '**'), local_dict=local,
                          transformations=standard_transformations, evaluate=True)
    except (SyntaxError, TypeError, ValueError, TokenError) as exc:
        raise ScenarioError(f"cannot parse {text!r}: {exc}", line, column) from exc


def _to_ring(expr, cell, line, column):
    try:
        return _polynomial(expr, cell)
    except (BasePolynomialError, TypeError, ValueError, AttributeError, ZeroDivisionError) as exc:
        raise ScenarioError(f"not a polynomial on {cell}: {expr}", line, column) from exc


def _polynomial(expr, cell):
    symbols = [Symbol(name) for name in cell.variables]
    ring = cell.ring()
    field = cell.field
    if not symbols:
        value = expr.as_numer_denom()
        return ring.ground_new(field.scalar(int(value[0]), int(value[1])))
    poly = Poly(expr, *symbols, domain='QQ')
    terms = {}
    for monom, coeff in poly.terms():
        scalar = field.scalar(int(coeff.p), int(coeff.q))
        if scalar:
            terms[monom] = scalar
    return ring.from_dict(terms) if terms else ring.zero


def parse_function(text, cell, line=0, column=0):
    """
    Parse a regular function on ``cell``

    Returns:
        RegularFunction

    Raises:
        ScenarioError: syntax errors, or a denominator that is not a unit
    """
    expr = _expression(text, set(cell.variables), line, column)
    numerator, denominator = fraction(together(expr))
    top = _to_ring(numerator, cell, line, column)
    bottom = _to_ring(denominator, cell, line, column)
    if not bottom:
        raise ScenarioError(f"division by zero in {text!r}", line, column)
    function = RegularFunction.from_polynomial(cell, top)
    unit = RegularFunction.from_polynomial(cell, bottom)
    if not unit.is_unit:
        raise ScenarioError(f"denominator of {text!r} is not a unit on {cell}", line, column)
    return function * unit.inverse()


def parse_polynomial(text, cell, line=0, column=0):
    """Parse a polynomial (Laurent denominators are cleared) in the ring of ``cell``."""
    return parse_function(text, cell, line, column).cleared()


def parse_fraction(text, cell, line=0, column=0):
    """Parse `(f) / (g)` or `f` into a (numerator, denominator) pair of polynomials."""
    expr = _expression(text, set(cell.variables), line, column)
    numerator, denominator = fraction(together(expr))
    top = _to_ring(numerator, cell, line, column)
    bottom = _to_ring(denominator, cell, line, column)
    if not top or not bottom:
        raise ScenarioError(f"divisor parts of {text!r} must be nonzero", line, column)
    return top, bottom
