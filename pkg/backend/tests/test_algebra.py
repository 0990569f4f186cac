import pytest

from app.models.ideal import LEX, Ideal
from app.services.algebra_service import INFINITE, AlgebraService
from app.utils.rings import format_polynomial, polynomial_ring


def _gens(field, names):
    return polynomial_ring(field.domain, names).gens


def _rendered(basis):
    return [format_polynomial(g) for g in basis]


class TestGroebner:
    def test_redundant_generator_is_reduced_away(self, field_q):
        x, = _gens(field_q, ('x',))
        ideal = Ideal(field_q, ('x',), [x ** 2 - 1, x - 1])
        assert _rendered(AlgebraService.groebner(ideal, LEX)) == ['x - 1']

    def test_reduced_basis_is_kept(self, field_q):
        x, y = _gens(field_q, ('x', 'y'))
        ideal = Ideal(field_q, ('x', 'y'), [x * y - 1])
        assert _rendered(AlgebraService.groebner(ideal, LEX)) == ['x*y - 1']

    def test_lex_basis_by_substitution(self, field_q):
        y, x = _gens(field_q, ('y', 'x'))
        ideal = Ideal(field_q, ('y', 'x'), [y - x ** 2, x * y - 1])
        assert _rendered(AlgebraService.groebner(ideal, LEX)) == ['y - x^2', 'x^3 - 1']

    def test_recomputation_is_identical(self, field):
        x, y = _gens(field, ('x', 'y'))
        first = Ideal(field, ('x', 'y'), [x ** 3 - y, x * y - 2])
        second = Ideal(field, ('x', 'y'), [x * y - 2, x ** 3 - y])
        assert first.canonical() == second.canonical()
        assert AlgebraService.groebner(first) == AlgebraService.groebner(first)


class TestEliminate:
    def test_dominant_projection_gives_zero(self, field):
        t, u = _gens(field, ('t', 'u'))
        ideal = Ideal(field, ('t', 'u'), [u - t ** 2])
        assert AlgebraService.eliminate(ideal, {'u'}).is_zero

    def test_resultant_in_t(self, field_q):
        t, u = _gens(field_q, ('t', 'u'))
        ideal = Ideal(field_q, ('t', 'u'), [u - t ** 2, t ** 3 - 1])
        eliminated = AlgebraService.eliminate(ideal, {'u'})
        assert eliminated.variables == ('u',)
        assert _rendered(eliminated.groebner()) == ['u^3 - 1']

    def test_point(self, field):
        t, u = _gens(field, ('t', 'u'))
        ideal = Ideal(field, ('t', 'u'), [t - 1, u - 1])
        assert _rendered(AlgebraService.eliminate(ideal, {'u'}).groebner()) == ['u - 1']


class TestSaturate:
    def test_strips_the_factor(self, field):
        t, y = _gens(field, ('t', 'y'))
        saturated = AlgebraService.saturate(Ideal(field, ('t', 'y'), [t * y]), t)
        assert saturated == Ideal(field, ('t', 'y'), [y])

    def test_unit_variables(self, field):
        t, = _gens(field, ('t',))
        ideal = Ideal(field, ('t',), [t ** 2 * (t - 1)], units=('t',))
        assert AlgebraService.saturate_units(ideal) == Ideal(field, ('t',), [t - 1])

    def test_coprime_factor_changes_nothing(self, field):
        x, y = _gens(field, ('x', 'y'))
        ideal = Ideal(field, ('x', 'y'), [x])
        assert AlgebraService.saturate(ideal, y) == ideal

    def test_idempotent(self, field_q):
        x, y = _gens(field_q, ('x', 'y'))
        ideal = Ideal(field_q, ('x', 'y'), [x ** 2 * y, x * y ** 3 - x])
        once = AlgebraService.saturate(ideal, x)
        assert AlgebraService.saturate(once, x) == once


class TestDimensions:
    def test_quadratic_over_function_field(self, field_q):
        t, y = _gens(field_q, ('t', 'y'))
        ideal = Ideal(field_q, ('t', 'y'), [y ** 2 - t])
        assert AlgebraService.quotient_dimension(ideal, ('t',)) == 2

    def test_rational_point(self, field_q):
        y, = _gens(field_q, ('y',))
        assert AlgebraService.quotient_dimension(Ideal(field_q, ('y',), [y - 1])) == 1

    def test_fat_point(self, field_q):
        x, y = _gens(field_q, ('x', 'y'))
        ideal = Ideal(field_q, ('x', 'y'), [x * y, x - y])
        assert AlgebraService.quotient_dimension(ideal) == 2

    def test_curve_is_infinite(self, field_q):
        x, y = _gens(field_q, ('x', 'y'))
        ideal = Ideal(field_q, ('x', 'y'), [x * y])
        assert AlgebraService.quotient_dimension(ideal) == INFINITE
        assert AlgebraService.dimension(ideal) == 1

    @pytest.mark.parametrize('parameters, expected', [((), 1), (('x',), 0), (('y',), 0)])
    def test_fiber_dimension(self, field_q, parameters, expected):
        x, y = _gens(field_q, ('x', 'y'))
        ideal = Ideal(field_q, ('x', 'y'), [x * y - 1])
        assert AlgebraService.fiber_dimension(ideal, parameters) == expected

    def test_minimal_polynomial(self, field_q):
        t, y = _gens(field_q, ('t', 'y'))
        ideal = Ideal(field_q, ('t', 'y'), [y ** 2 - t])
        relation = AlgebraService.minimal_polynomial(ideal, 'y', ('t',))
        assert format_polynomial(relation) == 'y^2 - t'

    def test_contract_drops_vertical_components(self, field_q):
        t, y = _gens(field_q, ('t', 'y'))
        ideal = Ideal(field_q, ('t', 'y'), [t * (y - 1)])
        assert AlgebraService.contract(ideal, ('t',)) == Ideal(field_q, ('t', 'y'), [y - 1])
