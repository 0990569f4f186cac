import pytest

from app.errors import (ImproperIntersectionError, InvalidMorphismError, NegativeIndexError,
                        NotFiniteError)
from app.models.cell import Cell
from app.services.cancellation_service import CancellationService
from app.services.correspondence_service import CorrespondenceService
from app.services.generator_service import GeneratorService


def _graph(source, target, exponent):
    return CorrespondenceService.graph(
        GeneratorService.power_map(source, target, source.field.scalar(1), exponent))


@pytest.fixture
def squaring(gm_t, gm_u):
    return _graph(gm_t, gm_u, 2)


class TestRho:
    def test_negative_index(self, squaring):
        with pytest.raises(NegativeIndexError):
            CancellationService.gn(-1, squaring.ambient, 't', 'u')

    def test_newton_bound(self, squaring):
        assert CancellationService.newton_bound(squaring) == 2

    def test_newton_bound_of_a_cube(self, gm_t, gm_u):
        assert CancellationService.newton_bound(_graph(gm_t, gm_u, 3)) == 3

    def test_rho_at_the_bound(self, squaring):
        result = CancellationService.rho(squaring, 2)
        assert result.degree == 2
        assert result.evidence.valid
        assert result.correspondence.source.is_point
        assert result.correspondence.target.is_point

    def test_rho_below_the_bound(self, squaring):
        low = CancellationService.rho(squaring, 0)
        assert low.degree == 0
        assert low.evidence.boundary is False
        assert not low.evidence.valid

    def test_improper_index(self, squaring):
        with pytest.raises(ImproperIntersectionError):
            CancellationService.rho(squaring, 1)
        evidence = CancellationService.rho_valid(squaring, 1)
        assert not evidence.proper

    def test_search_starts_at_the_bound(self, squaring):
        assert CancellationService.search(squaring) == 2
        assert CancellationService.rho(squaring).n == 2

    def test_arbitrary_divisor(self, squaring):
        divisor = CancellationService.gn(2, squaring.ambient, 't', 'u').divisor
        assert CancellationService.rho_for(squaring, divisor) == \
            CancellationService.rho(squaring, 2).correspondence

    def test_needs_multiplicative_frames(self, field):
        line = Cell.of(field, ('x', 'A1'))
        with pytest.raises(InvalidMorphismError):
            CancellationService.rho(CorrespondenceService.identity(line), 2)


class TestClasses:
    @pytest.mark.parametrize('exponent', [1, 2, 3, -1])
    def test_power_maps(self, gm_t, gm_u, exponent):
        assert CancellationService.motivic_class(_graph(gm_t, gm_u, exponent)) == exponent

    def test_transpose_of_squaring(self, gm_t, gm_u):
        cover = GeneratorService.power_map(gm_u, gm_t, gm_t.field.scalar(1), 2)
        assert CancellationService.motivic_class(CorrespondenceService.transpose(cover)) == 1

    def test_additive(self, gm_t, gm_u):
        z = _graph(gm_t, gm_u, 2) + _graph(gm_t, gm_u, 3)
        assert CancellationService.motivic_class(z) == 5


class TestStructure:
    def test_unit_vanishes(self, field_q):
        assert CancellationService.verify_unit(Cell.point(field_q), 0).passed

    def test_identity_of_the_point(self, field_q):
        report = CancellationService.verify_str(CorrespondenceService.identity(Cell.point(field_q)), 1)
        assert report.passed, report.to_dict()

    @pytest.mark.slow
    def test_graph_on_a_line(self, field_q):
        w = _graph(Cell.of(field_q, ('x', 'Gm')), Cell.of(field_q, ('y', 'Gm')), 2)
        report = CancellationService.verify_str(w, 2)
        assert report.passed, report.to_dict()


@pytest.mark.slow
class TestHomotopy:
    def test_too_far_apart(self, squaring):
        with pytest.raises(NotFiniteError):
            CancellationService.homotopy(squaring, 0, 2)

    def test_endpoints(self, squaring):
        h = CancellationService.homotopy(squaring, 2, 3)
        assert h.endpoints_match
        assert h.at_zero.degree == h.at_one.degree == 2
        assert h.correspondence.source.variables == ('t_1',)
