import logging

from ..errors import InvalidMorphismError, NotFlatError
from ..models.cell import Cell, CellMorphism
from ..models.correspondence import Correspondence
from ..models.cycle import Cycle
from ..models.results import VerificationReport
from ..utils.rings import rename, transfer
from .algebra_service import AlgebraService
from .cycle_service import CycleService
from .space_service import SpaceService

logger = logging.getLogger(__name__)


class CorrespondenceService:
    """The category of finite correspondences between cells."""

    @staticmethod
    def ambient_for(source, target):
        """source × target, with the names the target coordinates get in it."""
        ambient, renaming = SpaceService.product(source, target)
        return ambient, tuple(renaming[v] for v in target.variables)

    @staticmethod
    def graph(m):
        """
        Graph of a morphism as a correspondence

        Args:
            m: CellMorphism X -> Y

        Returns:
            Correspondence: one component (d·y − a for each target coordinate), multiplicity 1
        """
        ambient, names = CorrespondenceService.ambient_for(m.source, m.target)
        generators = SpaceService.graph_generators(m, ambient, names)
        prime = AlgebraService.saturate_units(ambient.ideal(generators))
        component = CycleService.make_component(prime, ambient, m.source.variables, 0, 1)
        return Correspondence(m.source, m.target, CycleService.from_component(component))

    @staticmethod
    def identity(cell):
        return CorrespondenceService.graph(SpaceService.identity(cell))

    @staticmethod
    def zero(source, target):
        ambient, _ = CorrespondenceService.ambient_for(source, target)
        return Correspondence(source, target, Cycle.zero(ambient, source.variables))

    @staticmethod
    def from_components(source, target, components):
        """
        Correspondence from explicit components

        Args:
            source: Cell
            target: Cell
            components: list of (generators, multiplicity); generators are
                polynomials in the ring of source × target

        Raises:
            NotPrimeError, NotDominantError, NotFiniteError
        """
        ambient, _ = CorrespondenceService.ambient_for(source, target)
        pairs = []
        for generators, multiplicity in components:
            component = CycleService.validate_component(
                ambient.ideal(generators), ambient, source.variables, expect_finite=True)
            pairs.append((component, multiplicity))
        return Correspondence(source, target, Cycle.build(ambient, source.variables, 0, pairs))

    @staticmethod
    def transpose(m):
        """
        The graph of m: X -> Y read as a correspondence Y -> X

        Raises:
            NotFiniteError: m is not finite, so its transpose is no correspondence
        """
        ambient, renaming = SpaceService.product(m.target, m.source)
        ring = ambient.ring()
        generators = []
        for name, image in zip(m.target.variables, m.images):
            numerator = rename(image.numerator, renaming, ring)
            denominator = rename(image.denominator(), renaming, ring)
            generators.append(denominator * ring.gens[ambient.index(name)] - numerator)
        component = CycleService.validate_component(
            ambient.ideal(generators), ambient, m.target.variables, expect_finite=True)
        return Correspondence(m.target, m.source, CycleService.from_component(component))

    @staticmethod
    def cor_operator(w, z):
        """
        Cor(W, Z) = Σ n_i · cycl(e_i)(W), e_i: Z_i -> X

        Args:
            w: Cycle on X' over X (relative dimension 0, flat components)
            z: Cycle on X over S

        Returns:
            Cycle on X' over S of relative dimension r(Z)

        Raises:
            NotFlatError
        """
        if set(w.base) != set(z.ambient.variables):
            raise InvalidMorphismError("the base of W is not the ambient of Z",
                                       base=",".join(w.base), ambient=z.ambient.describe())
        relative_dimension = w.relative_dimension + z.relative_dimension
        ambient = w.ambient
        ring = ambient.ring()
        result = Cycle.zero(ambient, z.base, relative_dimension)
        for left, m in w.terms:
            if left.flatness is None:
                raise NotFlatError("component of W is not certified flat", ideal=left.ideal)
            for right, n in z.terms:
                generators = [transfer(g, ring) for g in left.ideal.generators + right.ideal.generators]
                result = result + m * n * CycleService.cycl_of_ideal(
                    ambient.ideal(generators), ambient, z.base, relative_dimension)
        return result

    @staticmethod
    def compose(g, f):
        """
        g ∘ f = (p_XZ)_* Cor(cycl(p_Y)(g), f)

        Args:
            g: Correspondence Y -> Z
            f: Correspondence X -> Y

        Returns:
            Correspondence X -> Z
        """
        if _shape(f.target) != _shape(g.source):
            raise InvalidMorphismError("cannot compose", source=g.source.describe(),
                                       target=f.target.describe())
        xy = f.ambient
        projection = CellMorphism(xy, g.source, tuple(xy.gen(name) for name in f.target_names))
        pulled = CycleService.base_change(g.cycle, projection)
        combined = CorrespondenceService.cor_operator(pulled, f.cycle)

        xyz = pulled.ambient
        z_names = xyz.variables[xy.dimension:]
        ambient, _ = CorrespondenceService.ambient_for(f.source, g.target)
        images = tuple(xyz.gen(name) for name in f.source.variables + z_names)
        push = CellMorphism(xyz, ambient, images)
        cycle = CycleService.push_forward(combined, push, f.source.variables)
        logger.debug("composed %s after %s: %d components", g.target, f.source, len(cycle.terms))
        return Correspondence(f.source, g.target, cycle)

    @staticmethod
    def tensor(a, b):
        """
        a ⊗ b: XX' -> YY', the external product with coordinates in (XX')(YY') order
        """
        product, renaming = SpaceService.product(a.ambient, b.ambient)
        external = CycleService.external_product(a.cycle, b.cycle)
        sources = a.ambient.coordinates[:a.source.dimension] + tuple(
            product.coordinate(renaming[v]) for v in b.source_names)
        targets = a.ambient.coordinates[a.source.dimension:] + tuple(
            product.coordinate(renaming[v]) for v in b.target_names)
        ambient = Cell(sources + targets, product.field)
        target, _ = SpaceService.product(a.target, b.target)
        return Correspondence(Cell(sources, product.field), target,
                              CycleService.reorder(external, ambient))

    @staticmethod
    def verify_associativity(f, g, h):
        """(h ∘ g) ∘ f against h ∘ (g ∘ f), each side computed from scratch."""
        compose = CorrespondenceService.compose
        lhs = compose(compose(h, g), f)
        rhs = compose(h, compose(g, f))
        return VerificationReport.compare('associativity', lhs, rhs)

    @staticmethod
    def verify_graph_functor(f, g):
        """Γ_{g∘f} against Γ_g ∘ Γ_f for morphisms f: X -> Y, g: Y -> Z."""
        lhs = CorrespondenceService.graph(SpaceService.compose_morphisms(g, f))
        rhs = CorrespondenceService.compose(CorrespondenceService.graph(g),
                                            CorrespondenceService.graph(f))
        return VerificationReport.compare('functor', lhs, rhs)

    @staticmethod
    def verify_identity_laws(f):
        compose = CorrespondenceService.compose
        left = compose(CorrespondenceService.identity(f.target), f)
        right = compose(f, CorrespondenceService.identity(f.source))
        return VerificationReport('identity', left == f and right == f,
                                  left.render(), right.render(), {'f': f.render()})

    @staticmethod
    def verify_missing(p, y, z):
        """
        p_* Cor(Y, Z) against Cor(p_* Y, Z)

        Args:
            p: CellMorphism from the ambient of Y, identical on the base coordinates
            y: Cycle on X' over X (relative dimension 0)
            z: Cycle on X over S
        """
        lhs = CycleService.push_forward(CorrespondenceService.cor_operator(y, z), p, z.base)
        pushed = CycleService.push_forward(y, p, y.base)
        rhs = CorrespondenceService.cor_operator(pushed, z)
        return VerificationReport.compare('missing', lhs, rhs)


def _shape(cell):
    return cell.field, tuple(c.multiplicative for c in cell.coordinates)
