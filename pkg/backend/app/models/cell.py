from dataclasses import dataclass
from functools import cached_property

from ..errors import InvalidMorphismError
from ..utils.rings import format_polynomial, polynomial_ring, ring_names
from .ideal import Ideal

MULTIPLICATIVE = 'Gm'
ADDITIVE = 'A1'


@dataclass(frozen=True)
class Coordinate:
    name: str
    multiplicative: bool = False

    @property
    def kind(self):
        return MULTIPLICATIVE if self.multiplicative else ADDITIVE

    def __str__(self):
        return f"{self.kind}({self.name})"


@dataclass(frozen=True)
class Cell:
    """
    A product of G_m and A^1 lines over a field.

    The coordinate ring is k[variables] with the multiplicative coordinates
    inverted. The empty cell is the point.
    """
    coordinates: tuple
    field: object

    def __post_init__(self):
        names = [c.name for c in self.coordinates]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate coordinate names in {names}")

    @classmethod
    def of(cls, field_spec, *specs):
        """Build from (name, kind) pairs, kind being 'Gm' or 'A1'."""
        return cls(tuple(Coordinate(name, kind == MULTIPLICATIVE) for name, kind in specs),
                   field_spec)

    @classmethod
    def point(cls, field_spec):
        return cls((), field_spec)

    @cached_property
    def variables(self):
        return tuple(c.name for c in self.coordinates)

    @cached_property
    def units(self):
        return tuple(c.name for c in self.coordinates if c.multiplicative)

    @property
    def dimension(self):
        return len(self.coordinates)

    @property
    def is_point(self):
        return not self.coordinates

    def ring(self):
        return polynomial_ring(self.field.domain, self.variables)

    def coordinate(self, name):
        for c in self.coordinates:
            if c.name == name:
                return c
        raise KeyError(name)

    def index(self, name):
        return self.variables.index(name)

    def subcell(self, names):
        return Cell(tuple(self.coordinate(name) for name in names), self.field)

    def renamed(self, mapping):
        return Cell(tuple(Coordinate(mapping.get(c.name, c.name), c.multiplicative)
                          for c in self.coordinates), self.field)

    def ideal(self, generators=()):
        return Ideal(self.field, self.variables, generators, self.units)

    def gen(self, name):
        return RegularFunction.from_polynomial(self, self.ring().gens[self.index(name)])

    def constant(self, value):
        return RegularFunction.from_polynomial(self, self.ring().ground_new(value))

    def function(self, poly):
        return RegularFunction.from_polynomial(self, poly)

    def describe(self):
        if self.is_point:
            return 'pt'
        return ' * '.join(str(c) for c in self.coordinates)

    def __str__(self):
        return self.describe()


@dataclass(frozen=True)
class RegularFunction:
    """
    numerator / (monomial in multiplicative coordinates), kept in lowest terms.

    ``shift`` holds the exponent of each coordinate in the denominator; it is
    zero on additive coordinates.
    """
    cell: Cell
    numerator: object
    shift: tuple

    @classmethod
    def make(cls, cell, numerator, shift=None):
        ring = cell.ring()
        if numerator.ring != ring:
            raise ValueError("numerator lives in another ring")
        shift = list(shift) if shift is not None else [0] * cell.dimension
        if not numerator:
            return cls(cell, numerator, tuple(0 for _ in shift))
        for i, name in enumerate(cell.variables):
            if shift[i] and not cell.coordinate(name).multiplicative:
                raise InvalidMorphismError(f"cannot invert additive coordinate {name}")
            common = min(min(m[i] for m in numerator.itermonoms()), shift[i])
            if common > 0:
                numerator = numerator.exquo(ring.gens[i] ** common)
                shift[i] -= common
        return cls(cell, numerator, tuple(shift))

    @classmethod
    def from_polynomial(cls, cell, poly):
        return cls.make(cell, poly)

    @property
    def ring(self):
        return self.cell.ring()

    def denominator(self):
        monomial = self.ring.one
        for generator, exponent in zip(self.ring.gens, self.shift):
            monomial *= generator ** exponent
        return monomial

    @property
    def is_zero(self):
        return not self.numerator

    @property
    def is_polynomial(self):
        return not any(self.shift)

    @property
    def is_constant(self):
        return self.numerator.is_ground and self.is_polynomial

    @property
    def is_unit(self):
        """Units of a cell ring: a nonzero scalar times a monomial in multiplicative coordinates."""
        if len(self.numerator) != 1:
            return False
        (monom,) = self.numerator.itermonoms()
        return all(not e or self.cell.coordinates[i].multiplicative
                   for i, e in enumerate(monom))

    def _align(self, other):
        if isinstance(other, RegularFunction):
            if other.cell != self.cell:
                raise ValueError("functions live on different cells")
            return other
        return self.cell.constant(other)

    def __add__(self, other):
        other = self._align(other)
        shift = tuple(max(a, b) for a, b in zip(self.shift, other.shift))
        ring = self.ring
        lhs = self.numerator * _monomial(ring, [s - a for s, a in zip(shift, self.shift)])
        rhs = other.numerator * _monomial(ring, [s - b for s, b in zip(shift, other.shift)])
        return RegularFunction.make(self.cell, lhs + rhs, shift)

    __radd__ = __add__

    def __neg__(self):
        return RegularFunction(self.cell, -self.numerator, self.shift)

    def __sub__(self, other):
        return self + (-self._align(other))

    def __rsub__(self, other):
        return self._align(other) - self

    def __mul__(self, other):
        other = self._align(other)
        shift = tuple(a + b for a, b in zip(self.shift, other.shift))
        return RegularFunction.make(self.cell, self.numerator * other.numerator, shift)

    __rmul__ = __mul__

    def inverse(self):
        if not self.is_unit:
            raise InvalidMorphismError(f"{self} is not a unit")
        ((monom, coeff),) = self.numerator.items()
        numerator = self.ring.ground_new(self.ring.domain.revert(coeff)) * _monomial(self.ring, self.shift)
        return RegularFunction.make(self.cell, numerator, monom)

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.cell.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def cleared(self):
        """The numerator: this function times a unit, as a polynomial."""
        return self.numerator

    def render(self):
        if self.is_polynomial:
            return format_polynomial(self.numerator)
        names = ring_names(self.ring)
        body = format_polynomial(self.numerator)
        denominator = '*'.join(
            name if e == 1 else f"{name}^{e}" for name, e in zip(names, self.shift) if e)
        return f"({body})/{denominator}"

    def __str__(self):
        return self.render()


def _monomial(ring, exponents):
    result = ring.one
    for generator, exponent in zip(ring.gens, exponents):
        if exponent:
            result *= generator ** exponent
    return result


@dataclass(frozen=True)
class CellMorphism:
    """source -> target, given by the image of every target coordinate."""
    source: Cell
    target: Cell
    images: tuple

    def __post_init__(self):
        if len(self.images) != self.target.dimension:
            raise InvalidMorphismError("one image per target coordinate is required")
        for coordinate, image in zip(self.target.coordinates, self.images):
            if image.cell != self.source:
                raise InvalidMorphismError(f"image of {coordinate.name} is not a function on the source")
            if coordinate.multiplicative and not image.is_unit:
                raise InvalidMorphismError(
                    f"multiplicative coordinate {coordinate.name} must map to a unit, got {image}")

    @classmethod
    def from_mapping(cls, source, target, mapping):
        return cls(source, target, tuple(mapping[name] for name in target.variables))

    def image_of(self, name):
        return self.images[self.target.index(name)]

    def as_mapping(self):
        return dict(zip(self.target.variables, self.images))

    @property
    def is_coordinate_map(self):
        """Every target coordinate goes to a distinct source coordinate of the same kind."""
        seen = set()
        for coordinate, image in zip(self.target.coordinates, self.images):
            source_name = _as_coordinate(image)
            if source_name is None or source_name in seen:
                return False
            if self.source.coordinate(source_name).multiplicative != coordinate.multiplicative:
                return False
            seen.add(source_name)
        return True

    def coordinate_images(self):
        return tuple(_as_coordinate(image) for image in self.images)

    def describe(self):
        body = '; '.join(f"{name} = {image}" for name, image in zip(self.target.variables, self.images))
        return f"{self.source} -> {self.target} {{ {body} }}"


def _as_coordinate(function):
    if not function.is_polynomial or len(function.numerator) != 1:
        return None
    ((monom, coeff),) = function.numerator.items()
    if coeff != function.ring.domain.one or sum(monom) != 1:
        return None
    return function.cell.variables[monom.index(1)]
