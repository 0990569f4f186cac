from dataclasses import dataclass
from functools import cached_property

from ..utils.rings import polynomial_ring, rename
from .cell import Cell
from .ideal import Ideal


@dataclass(frozen=True, eq=False)
class Correspondence:
    """
    A finite correspondence source -> target.

    The cycle lives on source × target over the source. Its ambient lists the
    source coordinates first and then the target coordinates, renamed when a
    name clashes with a source coordinate.
    """
    source: Cell
    target: Cell
    cycle: object

    def __post_init__(self):
        ambient = self.cycle.ambient
        if ambient.dimension != self.source.dimension + self.target.dimension:
            raise ValueError("cycle ambient is not source × target")
        if self.cycle.relative_dimension != 0:
            raise ValueError("correspondences are relative 0-cycles")

    @property
    def ambient(self):
        return self.cycle.ambient

    @property
    def source_names(self):
        return self.ambient.variables[:self.source.dimension]

    @property
    def target_names(self):
        return self.ambient.variables[self.source.dimension:]

    @property
    def degree(self):
        return sum(m * c.residue_degree for c, m in self.cycle.terms)

    @property
    def is_zero(self):
        return self.cycle.is_zero

    @cached_property
    def shape(self):
        return (tuple(c.multiplicative for c in self.source.coordinates),
                tuple(c.multiplicative for c in self.target.coordinates))

    @cached_property
    def positional(self):
        """Canonical form with coordinates renamed x0, x1, ..., y0, y1, ..."""
        names = tuple(f"x{i}" for i in range(self.source.dimension)) + \
            tuple(f"y{j}" for j in range(self.target.dimension))
        mapping = dict(zip(self.ambient.variables, names))
        ring = polynomial_ring(self.ambient.field.domain, names)
        units = tuple(mapping[v] for v in self.ambient.units)
        forms = []
        for component, multiplicity in self.cycle.terms:
            ideal = Ideal(self.ambient.field, names,
                          [rename(g, mapping, ring) for g in component.ideal.generators], units)
            forms.append((ideal.canonical(), multiplicity))
        return tuple(sorted(forms))

    def aligned(self, other):
        """``other``'s cycle read in this correspondence's ambient."""
        if other.shape != self.shape:
            raise ValueError("correspondences between different cells")
        if other.ambient == self.ambient:
            return other.cycle
        mapping = dict(zip(other.ambient.variables, self.ambient.variables))
        return other.cycle.relabeled(self.ambient, mapping)

    def with_cycle(self, cycle):
        return Correspondence(self.source, self.target, cycle)

    def __add__(self, other):
        return self.with_cycle(self.cycle + self.aligned(other))

    def __neg__(self):
        return self.with_cycle(-self.cycle)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        return self.with_cycle(self.cycle * scalar)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Correspondence):
            return NotImplemented
        return self.shape == other.shape and self.positional == other.positional

    def __hash__(self):
        return hash((self.shape, self.positional))

    def to_dict(self):
        return {
            'source': self.source.describe(),
            'target': self.target.describe(),
            'degree': self.degree,
            'cycle': self.cycle.to_dict(),
        }

    def render(self):
        return self.cycle.render()

    def __str__(self):
        return self.render()
