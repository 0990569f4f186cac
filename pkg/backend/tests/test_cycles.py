import pytest

from app.errors import NotDominantError, NotFiniteError, NotPrimeError
from app.models.cell import Cell, CellMorphism
from app.services.cycle_service import FREE_BASIS, CycleService
from app.services.space_service import SpaceService


@pytest.fixture
def surface(field):
    return Cell.of(field, ('t', 'Gm'), ('u', 'Gm'))


def _cycle(ambient, generators, base=(), r=0):
    return CycleService.cycl_of_ideal(ambient.ideal(generators), ambient, base, r)


class TestComponents:
    def test_graph_component(self, surface):
        t, u = surface.ring().gens
        component = CycleService.validate_component(
            surface.ideal([u - t ** 2]), surface, ('t',), expect_finite=True)
        assert component.finite
        assert component.residue_degree == 1
        assert component.flatness is not None

    def test_cover_has_residue_degree_two(self, surface):
        t, u = surface.ring().gens
        component = CycleService.validate_component(surface.ideal([u ** 2 - t]), surface, ('t',))
        assert component.residue_degree == 2

    def test_reducible_is_rejected(self, surface):
        t, u = surface.ring().gens
        with pytest.raises(NotPrimeError):
            CycleService.validate_component(surface.ideal([u ** 2 - t ** 2]), surface, ('t',))

    def test_vertical_is_not_dominant(self, surface):
        t, u = surface.ring().gens
        with pytest.raises(NotDominantError):
            CycleService.validate_component(surface.ideal([t - 1]), surface, ('t',), relative_dimension=1)

    def test_hyperbola_over_the_line_is_not_finite(self, field):
        plane = Cell.of(field, ('x', 'A1'), ('y', 'A1'))
        x, y = plane.ring().gens
        with pytest.raises(NotFiniteError):
            CycleService.validate_component(plane.ideal([x * y - 1]), plane, ('x',), expect_finite=True)

    def test_free_over_a_plane(self, field):
        space = Cell.of(field, ('a', 'A1'), ('b', 'A1'), ('u', 'A1'))
        a, b, u = space.ring().gens
        component = CycleService.validate_component(space.ideal([u - a * b]), space, ('a', 'b'))
        assert component.finite
        assert CycleService.is_flat(component) == FREE_BASIS

    def test_jumping_fiber_over_a_plane_is_refused(self, field):
        space = Cell.of(field, ('a', 'A1'), ('b', 'A1'), ('u', 'A1'))
        a, b, u = space.ring().gens
        component = CycleService.validate_component(space.ideal([a * u - b]), space, ('a', 'b'))
        assert not component.finite
        assert CycleService.is_flat(component) is None


class TestCycl:
    def test_lengths_of_a_fat_point(self, field):
        plane = Cell.of(field, ('x', 'A1'), ('y', 'A1'))
        x, y = plane.ring().gens
        cycle = _cycle(plane, [x * y, x - y])
        assert cycle == 2 * CycleService.point_cycle(plane, (0, 0))

    def test_reducible_curve(self, field):
        plane = Cell.of(field, ('x', 'A1'), ('y', 'A1'))
        x, y = plane.ring().gens
        cycle = _cycle(plane, [x ** 2 * y], r=1)
        assert cycle == 2 * _cycle(plane, [x], r=1) + _cycle(plane, [y], r=1)

    def test_double_section(self, field):
        cell = Cell.of(field, ('t', 'Gm'), ('y', 'A1'))
        t, y = cell.ring().gens
        cycle = _cycle(cell, [y ** 2], base=('t',))
        assert cycle == 2 * _cycle(cell, [y], base=('t',))
        assert CycleService.degree_over_base(cycle) == 2

    def test_coordinate_cross(self, field):
        plane = Cell.of(field, ('x', 'A1'), ('y', 'A1'))
        x, y = plane.ring().gens
        assert _cycle(plane, [x * y], r=1) == _cycle(plane, [x], r=1) + _cycle(plane, [y], r=1)

    def test_relative_components(self, surface):
        t, u = surface.ring().gens
        cycle = _cycle(surface, [(u - t) ** 2 * (u + t)], base=('t',))
        assert sorted(m for _, m in cycle.terms) == [1, 2]
        assert CycleService.degree_over_base(cycle) == 3

    def test_arithmetic(self, surface):
        t, u = surface.ring().gens
        z = _cycle(surface, [u - t ** 2], base=('t',))
        assert (z - z).is_zero
        assert z + z == 2 * z
        assert (3 * z).multiplicity(z.components[0]) == 3


class TestMaps:
    def test_push_forward_of_a_point(self, field):
        source, target = Cell.of(field, ('t', 'Gm')), Cell.of(field, ('u', 'Gm'))
        square = CellMorphism(source, target, (source.gen('t') ** 2,))
        pushed = CycleService.push_forward(CycleService.point_cycle(source, (2,)), square)
        assert pushed == CycleService.point_cycle(target, (4,))

    def test_push_forward_keeps_degree(self, surface, field):
        t, u = surface.ring().gens
        z = _cycle(surface, [u - t ** 3], base=('t',))
        target = Cell.of(field, ('t', 'Gm'), ('v', 'Gm'))
        p = CellMorphism(surface, target, (surface.gen('t'), surface.gen('u') ** 2))
        pushed = CycleService.push_forward(z, p, ('t',))
        assert CycleService.degree_over_base(pushed) == CycleService.degree_over_base(z) == 1

    def test_base_change_to_a_point(self, field):
        ambient = Cell.of(field, ('s', 'Gm'), ('t', 'Gm'), ('u', 'Gm'))
        s, t, u = ambient.ring().gens
        family = _cycle(ambient, [u - s * t], base=('s',), r=1)
        point = SpaceService.point(ambient.subcell(('s',)), (2,))
        fiber = CycleService.base_change(family, point)
        assert fiber.ambient.variables == ('t', 'u')
        t2, u2 = fiber.ambient.ring().gens
        assert fiber == _cycle(fiber.ambient, [u2 - 2 * t2], r=1)

    def test_rebase_to_the_point(self, surface):
        t, u = surface.ring().gens
        z = _cycle(surface, [u - t ** 2], base=('t',))
        rebased = CycleService.rebase(z, ())
        assert rebased.relative_dimension == 1
        assert rebased.base == ()

    def test_push_of_a_rebased_graph(self, surface, field):
        t, u = surface.ring().gens
        z = CycleService.rebase(_cycle(surface, [u - t ** 2], base=('t',)), ())
        target = Cell.of(field, ('u', 'Gm'))
        pushed = CycleService.push_forward(z, CellMorphism(surface, target, (surface.gen('u'),)), ())
        assert pushed.relative_dimension == 1
        assert [(m, c.ideal.is_zero) for c, m in pushed.terms] == [(2, True)]

    def test_external_product(self, field):
        left, right = Cell.of(field, ('x', 'A1')), Cell.of(field, ('y', 'A1'))
        product = CycleService.external_product(CycleService.point_cycle(left, (1,)),
                                                CycleService.point_cycle(right, (2,)))
        assert product == CycleService.point_cycle(product.ambient, (1, 2))
