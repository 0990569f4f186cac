import pytest

from app.errors import InvalidMorphismError, NotDominantError, NotPrimeError
from app.models.cell import Cell
from app.services.correspondence_service import CorrespondenceService
from app.services.generator_service import GeneratorService


def _power(source, target, exponent, scalar=1):
    return GeneratorService.power_map(source, target, source.field.scalar(scalar), exponent)


@pytest.fixture
def gm_v(field):
    return Cell.of(field, ('v', 'Gm'))


class TestConstructions:
    def test_graph_has_degree_one(self, gm_t, gm_u):
        graph = CorrespondenceService.graph(_power(gm_t, gm_u, 2))
        assert graph.degree == 1
        assert graph.cycle.components[0].finite

    def test_transpose_of_a_cover(self, gm_t, gm_u):
        transpose = CorrespondenceService.transpose(_power(gm_t, gm_u, 2))
        assert transpose.source == gm_u
        assert transpose.target == gm_t
        assert transpose.degree == 2

    def test_identity_on_a_self_product(self, gm_t):
        identity = CorrespondenceService.identity(gm_t)
        assert identity.ambient.variables == ('t', 't_1')
        assert identity == CorrespondenceService.graph(_power(gm_t, gm_t, 1))

    def test_arithmetic(self, gm_t, gm_u):
        graph = CorrespondenceService.graph(_power(gm_t, gm_u, 3))
        assert (graph - graph).is_zero
        assert (2 * graph).degree == 2
        assert graph + graph == 2 * graph

    def test_explicit_components(self, gm_t, gm_u):
        ambient, names = CorrespondenceService.ambient_for(gm_t, gm_u)
        t, u = ambient.ring().gens
        explicit = CorrespondenceService.from_components(gm_t, gm_u, [([u - t ** 2], 1)])
        assert names == ('u',)
        assert explicit == CorrespondenceService.graph(_power(gm_t, gm_u, 2))

    def test_reducible_component_is_rejected(self, gm_t, gm_u):
        ambient, _ = CorrespondenceService.ambient_for(gm_t, gm_u)
        t, u = ambient.ring().gens
        with pytest.raises(NotPrimeError):
            CorrespondenceService.from_components(gm_t, gm_u, [([u ** 2 - t ** 2], 1)])

    def test_vertical_component_is_rejected(self, gm_t, gm_u):
        ambient, _ = CorrespondenceService.ambient_for(gm_t, gm_u)
        t, u = ambient.ring().gens
        with pytest.raises(NotDominantError):
            CorrespondenceService.from_components(gm_t, gm_u, [([t - 1, u - 1], 1)])


class TestComposition:
    def test_graphs_compose_to_the_graph_of_the_composite(self, gm_t, gm_u, gm_v):
        f = CorrespondenceService.graph(_power(gm_t, gm_u, 2))
        g = CorrespondenceService.graph(_power(gm_u, gm_v, 3))
        assert CorrespondenceService.compose(g, f) == \
            CorrespondenceService.graph(_power(gm_t, gm_v, 6))

    def test_transpose_after_graph_splits(self, gm_t, gm_u):
        square = _power(gm_t, gm_u, 2)
        composite = CorrespondenceService.compose(CorrespondenceService.transpose(square),
                                                  CorrespondenceService.graph(square))
        expected = CorrespondenceService.identity(gm_t) + \
            CorrespondenceService.graph(_power(gm_t, gm_t, 1, scalar=-1))
        assert composite == expected
        assert composite.degree == 2

    def test_graph_after_transpose_multiplies_degree(self, gm_t, gm_u):
        square = _power(gm_t, gm_u, 2)
        composite = CorrespondenceService.compose(CorrespondenceService.graph(square),
                                                  CorrespondenceService.transpose(square))
        assert composite == 2 * CorrespondenceService.identity(gm_u)

    def test_mismatched_cells_do_not_compose(self, field, gm_t):
        line = Cell.of(field, ('x', 'A1'))
        with pytest.raises(InvalidMorphismError):
            CorrespondenceService.compose(CorrespondenceService.identity(gm_t),
                                          CorrespondenceService.identity(line))

    def test_identity_laws(self, gm_t, gm_u):
        report = CorrespondenceService.verify_identity_laws(
            CorrespondenceService.transpose(_power(gm_t, gm_u, 3)))
        assert report.passed, report.to_dict()

    def test_associativity(self, gm_t, gm_u):
        f = CorrespondenceService.graph(_power(gm_t, gm_u, -1))
        g = CorrespondenceService.transpose(_power(gm_t, gm_u, 2))
        h = CorrespondenceService.graph(_power(gm_u, gm_t, 2, scalar=3))
        report = CorrespondenceService.verify_associativity(f, CorrespondenceService.graph(
            _power(gm_u, gm_t, 1)), h)
        assert report.passed, report.to_dict()
        assert CorrespondenceService.verify_associativity(f, g, f).passed

    def test_graph_functor(self, gm_t, gm_u, gm_v):
        report = CorrespondenceService.verify_graph_functor(
            _power(gm_t, gm_u, 2, scalar=2), _power(gm_u, gm_v, -1))
        assert report.passed, report.to_dict()


class TestTensor:
    def test_tensor_of_graphs(self, gm_t, gm_u):
        a = CorrespondenceService.graph(_power(gm_t, gm_u, 2))
        b = CorrespondenceService.transpose(_power(gm_t, gm_u, 3))
        product = CorrespondenceService.tensor(a, b)
        assert product.source.dimension == 2
        assert product.target.dimension == 2
        assert product.degree == 3

    def test_identity_tensor_identity(self, gm_t, gm_u):
        product = CorrespondenceService.tensor(CorrespondenceService.identity(gm_t),
                                               CorrespondenceService.identity(gm_u))
        assert product.ambient.variables[:2] == ('t', 'u')
        assert product.degree == 1
