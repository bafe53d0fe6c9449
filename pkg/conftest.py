import pytest

from apps.buyer.solver import solve_buyer
from apps.core.models import MonteCarloParams, Numerics
from apps.dynamics.presets import affine_closed_form
from apps.seller.solver import solve_seller


@pytest.fixture(scope='session')
def example():
    return affine_closed_form()


@pytest.fixture(scope='session')
def model(example):
    return example.model


@pytest.fixture(scope='session')
def util(example):
    return example.utility


@pytest.fixture(scope='session')
def numerics():
    return Numerics()


@pytest.fixture(scope='session')
def seller(model, util, numerics):
    return solve_seller(model, util, numerics)


@pytest.fixture(scope='session')
def buyer(model, util, seller, numerics):
    return solve_buyer(model, util, seller, numerics)


@pytest.fixture
def quick_mc():
    return MonteCarloParams(n_paths=2000, dt=2e-3, t_max=60.0, seed=7)
