import pytest

from app.models.field import FieldSpec
from app.services.factor_service import FactorService
from app.utils.rings import format_polynomial, polynomial_ring


def _product(lc, factors, ring):
    result = ring.ground_new(lc)
    for factor, multiplicity in factors:
        result *= factor ** multiplicity
    return result


def test_difference_of_squares_over_q(field_q):
    x, = polynomial_ring(field_q.domain, ('x',)).gens
    factors = FactorService.univariate_factor(x ** 2 - 1, 'x')
    assert sorted(format_polynomial(f) for f, _ in factors) == ['x + 1', 'x - 1']
    assert all(m == 1 for _, m in factors)


def test_sum_of_squares_splits_over_f5():
    field = FieldSpec.prime(5)
    ring = polynomial_ring(field.domain, ('x',))
    x, = ring.gens
    factors = FactorService.univariate_factor(x ** 2 + 1, 'x')
    assert len(factors) == 2
    assert all(f.degree() == 1 and f.LC == field.domain.one for f, _ in factors)
    assert _product(field.domain.one, factors, ring) == x ** 2 + 1


def test_no_square_root_of_t(field_q):
    y, t = polynomial_ring(field_q.domain, ('y', 't')).gens
    factors = FactorService.univariate_factor(y ** 2 - t, 'y')
    assert [(format_polynomial(f), m) for f, m in factors] == [('y^2 - t', 1)]


def test_multiplicities_are_kept(field):
    ring = polynomial_ring(field.domain, ('x',))
    x, = ring.gens
    _, factors = FactorService.factor((x - 1) ** 3 * (x + 2))
    assert sorted(m for _, m in factors) == [1, 3]


@pytest.mark.parametrize('name', ['Q', 'F7'])
def test_bivariate_factorization_reassembles(name):
    field = FieldSpec.from_name(name)
    ring = polynomial_ring(field.domain, ('x', 'y'))
    x, y = ring.gens
    poly = 3 * (x - y) ** 2 * (x * y + 1) * (x + y ** 2 + 2)
    lc, factors = FactorService.factor(poly)
    assert len(factors) == 3
    assert _product(lc, factors, ring) == poly


def test_squarefree_part(field_q):
    x, = polynomial_ring(field_q.domain, ('x',)).gens
    assert FactorService.squarefree_part((x - 1) ** 2 * (x + 1), 'x') == (x - 1) * (x + 1)


def test_content_in_the_parameters_is_split_off():
    field = FieldSpec.prime(5)
    ring = polynomial_ring(field.domain, ('x', 't'))
    x, t = ring.gens
    poly = t * (t + 1) * (x ** 2 - t)
    lc, factors = FactorService.factor(poly, 'x')
    assert sorted(format_polynomial(f) for f, _ in factors) == ['t', 't + 1', 'x^2 - t']
    assert _product(lc, factors, ring) == poly
    assert [format_polynomial(f) for f, _ in FactorService.univariate_factor(poly, 'x')] == ['x^2 - t']


def test_eisenstein_polynomial_stays_whole_over_f7():
    field = FieldSpec.prime(7)
    ring = polynomial_ring(field.domain, ('x', 't'))
    x, t = ring.gens
    poly = x ** 12 + t * x + t
    assert FactorService.univariate_factor(poly, 'x') == [(poly, 1)]


def test_repeated_factor_over_f7():
    field = FieldSpec.prime(7)
    ring = polynomial_ring(field.domain, ('x', 't'))
    x, t = ring.gens
    poly = (x - t) ** 3 * (x ** 2 + t)
    lc, factors = FactorService.factor(poly, 'x')
    assert sorted(m for _, m in factors) == [1, 3]
    assert _product(lc, factors, ring) == poly
