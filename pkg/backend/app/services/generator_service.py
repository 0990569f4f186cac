import logging
import random

from ..models.cell import Cell, CellMorphism
from .correspondence_service import CorrespondenceService

logger = logging.getLogger(__name__)

EXPONENTS = (-2, -1, 1, 2, 3)
COVER_EXPONENTS = (2, 2, 3)
SCALARS = (1, 2, 3)
MULTIPLES = (-1, 2)
TENSOR_RATE = 0.15
ADDITIVE_RATE = 0.25


class GeneratorService:
    """
    Seeded random correspondences and morphisms for the property suites.

    Correspondences go G_m(t) -> G_m(u): graphs of c·t^e, transposes of the
    finite covers t = c·u^e, integer multiples and sums of those, and now and
    then tensor products of two of them.
    """

    def __init__(self, field, seed=0):
        self.field = field
        self.rng = random.Random(seed)
        self.source = Cell.of(field, ('t', 'Gm'))
        self.target = Cell.of(field, ('u', 'Gm'))

    def _scalar(self):
        return self.field.scalar(self.rng.choice(SCALARS))

    @staticmethod
    def power_map(source, target, scalar, exponent):
        """source -> target, the single coordinate going to scalar·x^exponent."""
        (name,) = source.variables
        image = source.constant(scalar) * source.gen(name) ** exponent
        return CellMorphism(source, target, (image,))

    def graph(self):
        exponent = self.rng.choice(EXPONENTS)
        m = self.power_map(self.source, self.target, self._scalar(), exponent)
        return CorrespondenceService.graph(m)

    def transpose(self):
        exponent = self.rng.choice(COVER_EXPONENTS)
        cover = self.power_map(self.target, self.source, self._scalar(), exponent)
        return CorrespondenceService.transpose(cover)

    def basic(self):
        return self.transpose() if self.rng.random() < 0.3 else self.graph()

    def element(self):
        roll = self.rng.random()
        if roll < 0.15:
            return self.rng.choice(MULTIPLES) * self.basic()
        if roll < 0.3:
            return self.basic() + self.basic()
        return self.basic()

    def tensor(self):
        return CorrespondenceService.tensor(self.graph(), self.basic())

    def triple(self):
        """Three composable correspondences f, g, h."""
        if self.rng.random() < TENSOR_RATE:
            return self.tensor(), self.tensor(), self.tensor()
        return self.element(), self.element(), self.element()

    def morphism_pair(self):
        """Composable morphisms f: X -> Y, g: Y -> Z between one-dimensional cells."""
        if self.rng.random() < ADDITIVE_RATE:
            x, y, z = (Cell.of(self.field, (name, 'A1')) for name in ('x', 'y', 'z'))
            return self._additive(x, y), self._additive(y, z)
        x, y, z = (Cell.of(self.field, (name, 'Gm')) for name in ('t', 'u', 'v'))
        f = self.power_map(x, y, self._scalar(), self.rng.choice(EXPONENTS))
        g = self.power_map(y, z, self._scalar(), self.rng.choice(EXPONENTS))
        return f, g

    def _additive(self, source, target):
        (name,) = source.variables
        image = source.gen(name) ** self.rng.randint(1, 3) + self.rng.randint(0, 3)
        return CellMorphism(source, target, (image,))

    def cover(self):
        """G_m(t) × G_m(u) -> G_m(t) × G_m(v), (t, u) -> (t, c·u^e), identical on the base."""
        ambient = Cell.of(self.field, ('t', 'Gm'), ('u', 'Gm'))
        target = Cell.of(self.field, ('t', 'Gm'), ('v', 'Gm'))
        t, u = ambient.variables
        image = ambient.constant(self._scalar()) * ambient.gen(u) ** self.rng.choice(COVER_EXPONENTS)
        return CellMorphism(ambient, target, (ambient.gen(t), image))
