from dataclasses import dataclass

from ..utils.rings import format_polynomial, transfer
from .cell import RegularFunction


@dataclass(frozen=True)
class CartierDivisor:
    """
    The divisor of a global fraction f₊/f₋ on a cell.

    Both parts are polynomials in the cell ring; unit denominators of
    Laurent functions are dropped since units have no divisor.
    """
    ambient: object
    numerator: object
    denominator: object

    def __post_init__(self):
        if not self.numerator or not self.denominator:
            raise ValueError("divisor parts must be nonzero")

    @classmethod
    def of(cls, ambient, numerator, denominator=None):
        ring = ambient.ring()
        numerator = transfer(_cleared(numerator), ring)
        denominator = ring.one if denominator is None else transfer(_cleared(denominator), ring)
        return cls(ambient, numerator, denominator)

    def __add__(self, other):
        if other.ambient != self.ambient:
            raise ValueError("divisors on different cells")
        return CartierDivisor(self.ambient, self.numerator * other.numerator,
                              self.denominator * other.denominator)

    def __neg__(self):
        return CartierDivisor(self.ambient, self.denominator, self.numerator)

    def __sub__(self, other):
        return self + (-other)

    def render(self):
        top = format_polynomial(self.numerator)
        if self.denominator == self.denominator.ring.one:
            return f"D({top})"
        return f"D(({top})/({format_polynomial(self.denominator)}))"

    def __str__(self):
        return self.render()


@dataclass(frozen=True)
class GnDivisor:
    """g_n = (f1^(n+1) - 1)/(f1^(n+1) - f2) on a cell with multiplicative f1, f2."""
    n: int
    f1: str
    f2: str
    divisor: CartierDivisor

    @property
    def ambient(self):
        return self.divisor.ambient


def _cleared(function):
    """Polynomials pass through; regular functions give their numerator."""
    return function.numerator if isinstance(function, RegularFunction) else function
