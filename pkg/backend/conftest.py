import pytest

from app import create_app
from app.models.cell import Cell
from app.models.field import FieldSpec


@pytest.fixture
def app():
    return create_app('testing')


@pytest.fixture
def field_q():
    return FieldSpec.rational()


@pytest.fixture
def field_f7():
    return FieldSpec.prime(7)


@pytest.fixture(params=['Q', 'F7'])
def field(request):
    return FieldSpec.from_name(request.param)


@pytest.fixture
def gm_t(field):
    return Cell.of(field, ('t', 'Gm'))


@pytest.fixture
def gm_u(field):
    return Cell.of(field, ('u', 'Gm'))


@pytest.fixture
def plane(field_q):
    return Cell.of(field_q, ('x', 'A1'), ('y', 'A1'))
