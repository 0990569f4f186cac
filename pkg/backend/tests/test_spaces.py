import pytest

from app.errors import InvalidMorphismError, ScenarioError, UnknownIdentifierError
from app.models.cell import Cell, CellMorphism
from app.services.space_service import SpaceService, fresh_name
from app.utils.parser import parse_fraction, parse_function, parse_polynomial


def test_fresh_names():
    assert fresh_name('t', set()) == 't'
    assert fresh_name('t', {'t', 't_1'}) == 't_2'


def test_product_renames_clashing_coordinates(gm_t):
    product, renaming = SpaceService.product(gm_t, gm_t)
    assert product.variables == ('t', 't_1')
    assert renaming == {'t': 't_1'}
    assert product.units == ('t', 't_1')


def test_multiplicative_coordinates_need_unit_images(gm_t, gm_u):
    with pytest.raises(InvalidMorphismError):
        CellMorphism(gm_t, gm_u, (gm_t.gen('t') + 1,))


def test_additive_coordinates_cannot_be_inverted(field):
    line = Cell.of(field, ('x', 'A1'))
    with pytest.raises(InvalidMorphismError):
        line.gen('x').inverse()


def test_laurent_arithmetic(gm_t):
    t = gm_t.gen('t')
    assert t * t ** -1 == gm_t.constant(1)
    assert (t ** -2).shift == (2,)
    assert (t ** -2 + t).render() == '(t^3 + 1)/t^2'


def test_composition_of_power_maps(field):
    x, y, z = (Cell.of(field, (name, 'Gm')) for name in ('t', 'u', 'v'))
    f = CellMorphism(x, y, (x.gen('t') ** 2,))
    g = CellMorphism(y, z, (y.gen('u') ** -3,))
    composite = SpaceService.compose_morphisms(g, f)
    assert composite.images == (x.gen('t') ** -6,)


def test_point_and_identity(field):
    plane = Cell.of(field, ('s', 'Gm'), ('x', 'A1'))
    point = SpaceService.point(plane, (2, 0))
    assert point.source.is_point
    assert SpaceService.identity(plane).is_coordinate_map
    with pytest.raises(InvalidMorphismError):
        SpaceService.point(plane, (0, 1))


def test_graph_generators_clear_denominators(gm_t, gm_u):
    product, _ = SpaceService.product(gm_t, gm_u)
    m = CellMorphism(gm_t, gm_u, (gm_t.gen('t') ** -1,))
    (generator,) = SpaceService.graph_generators(m, product, ('u',))
    t, u = product.ring().gens
    assert generator == t * u - 1


class TestParser:
    def test_laurent_text(self, gm_t):
        function = parse_function('t^-1 + 2', gm_t)
        assert function == gm_t.gen('t') ** -1 + 2

    def test_rational_coefficients(self, field_q):
        cell = Cell.of(field_q, ('t', 'Gm'), ('y', 'A1'))
        t, y = cell.ring().gens
        assert parse_polynomial('2/3*t^2*y - 1', cell) == field_q.domain(2, 3) * t ** 2 * y - 1

    def test_unknown_variable_has_a_column(self, gm_t):
        with pytest.raises(UnknownIdentifierError) as info:
            parse_function('t + uu', gm_t, line=3, column=10)
        assert info.value.line == 3
        assert info.value.column == 14

    def test_non_unit_denominator(self, gm_t):
        with pytest.raises(ScenarioError):
            parse_function('1/(t - 1)', gm_t)

    @pytest.mark.parametrize('text, column', [
        ('t + t^(1/2)', 5),
        ('9^9^9^9*t', 1),
        ('t**1000 - 1', 1),
    ])
    def test_exponents_are_checked_before_evaluation(self, gm_t, text, column):
        with pytest.raises(ScenarioError) as info:
            parse_function(text, gm_t, line=2, column=0)
        assert (info.value.line, info.value.column) == (2, column)

    def test_denominator_zero_in_the_field(self, field_f7):
        with pytest.raises(ScenarioError):
            parse_polynomial('t/7', Cell.of(field_f7, ('t', 'Gm')))

    def test_fraction(self, gm_t):
        top, bottom = parse_fraction('(t^2 - 1)/(t - 3)', gm_t)
        t, = gm_t.ring().gens
        assert (top, bottom) == (t ** 2 - 1, t - 3)
