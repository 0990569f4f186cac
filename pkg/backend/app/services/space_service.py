import logging

from ..errors import InvalidMorphismError
from ..models.cell import Cell, CellMorphism, Coordinate, RegularFunction
from ..utils.rings import transfer

logger = logging.getLogger(__name__)


def fresh_name(name, taken):
    """``name``, or ``name_1``, ``name_2``, ... when it is already taken."""
    if name not in taken:
        return name
    index = 1
    while f"{name}_{index}" in taken:
        index += 1
    return f"{name}_{index}"


class SpaceService:
    """Cells, their products and morphisms."""

    @staticmethod
    def product(a, b):
        """
        Product cell a × b

        Coordinates of ``b`` that clash with names of ``a`` are renamed with a
        numeric suffix.

        Returns:
            tuple: (product Cell, renaming applied to b's coordinates)
        """
        if a.field != b.field:
            raise ValueError("cells over different fields")
        taken = set(a.variables)
        renaming = {}
        coordinates = list(a.coordinates)
        for c in b.coordinates:
            name = fresh_name(c.name, taken | (set(b.variables) - {c.name}))
            taken.add(name)
            renaming[c.name] = name
            coordinates.append(Coordinate(name, c.multiplicative))
        return Cell(tuple(coordinates), a.field), renaming

    @staticmethod
    def identity(cell):
        return CellMorphism(cell, cell, tuple(cell.gen(name) for name in cell.variables))

    @staticmethod
    def projection(source, target, names=None):
        """
        Coordinate projection source -> target

        Args:
            source: Cell
            target: Cell
            names: source coordinate sent to each target coordinate
                (defaults to the target's own names)
        """
        names = target.variables if names is None else tuple(names)
        return CellMorphism(source, target, tuple(source.gen(name) for name in names))

    @staticmethod
    def point(cell, values):
        """The k-point pt -> cell with the given coordinate values."""
        pt = Cell.point(cell.field)
        images = []
        for coordinate, value in zip(cell.coordinates, values):
            scalar = cell.field.scalar(*value) if isinstance(value, tuple) else cell.field.scalar(value)
            if coordinate.multiplicative and not scalar:
                raise InvalidMorphismError(f"{coordinate.name} must be nonzero at a point")
            images.append(pt.constant(scalar))
        if len(images) != cell.dimension:
            raise InvalidMorphismError("one value per coordinate is required")
        return CellMorphism(pt, cell, tuple(images))

    @staticmethod
    def pullback_function(m, f):
        """
        f ∘ m for a regular function f on the target of m

        Args:
            m: CellMorphism
            f: RegularFunction on m.target

        Returns:
            RegularFunction on m.source
        """
        if f.cell != m.target:
            raise ValueError("function does not live on the target of the morphism")
        source = m.source
        result = source.constant(0)
        for monom, coeff in f.numerator.items():
            term = source.constant(coeff)
            for image, exponent, shift in zip(m.images, monom, f.shift):
                power = exponent - shift
                if power:
                    term = term * image ** power
            result = result + term
        return result

    @staticmethod
    def compose_morphisms(g, f):
        """
        g ∘ f

        Args:
            g: CellMorphism Y -> Z
            f: CellMorphism X -> Y

        Returns:
            CellMorphism X -> Z; unit constraints are re-checked on construction
        """
        if f.target != g.source:
            raise InvalidMorphismError(
                "cannot compose", source=g.source.describe(), target=f.target.describe())
        images = tuple(SpaceService.pullback_function(f, image) for image in g.images)
        return CellMorphism(f.source, g.target, images)

    @staticmethod
    def pullback_polynomial(m, poly):
        """Pull back a polynomial in the target ring and clear unit denominators."""
        f = RegularFunction.from_polynomial(m.target, transfer(poly, m.target.ring()))
        return SpaceService.pullback_function(m, f).cleared()

    @staticmethod
    def graph_generators(m, product, target_names):
        """
        Generators d·y − a of the graph of m inside ``product``

        Args:
            m: CellMorphism X -> Y
            product: Cell containing X's coordinates and the renamed Y coordinates
            target_names: name in ``product`` of each target coordinate of m
        """
        ring = product.ring()
        generators = []
        for name, image in zip(target_names, m.images):
            numerator = transfer(image.numerator, ring)
            denominator = transfer(image.denominator(), ring)
            generators.append(denominator * ring.gens[product.index(name)] - numerator)
        return generators

    @staticmethod
    def extend_function(function, cell):
        """Read a function on a subcell of ``cell`` (same coordinate names) on all of ``cell``."""
        shift = [0] * cell.dimension
        for name, exponent in zip(function.cell.variables, function.shift):
            shift[cell.index(name)] = exponent
        return RegularFunction.make(cell, transfer(function.numerator, cell.ring()), shift)
