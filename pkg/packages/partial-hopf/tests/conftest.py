import logging

import pytest
from hypothesis import HealthCheck, settings

from partial_hopf import catalog, config
from partial_hopf.crossed_product import extract_basis, product_table

settings.register_profile(
    "partial-hopf",
    deadline=None,
    max_examples=25,
    suppress_health_check=[HealthCheck.function_scoped_fixture, HealthCheck.too_slow],
)
settings.load_profile("partial-hopf")


@pytest.fixture(autouse=True)
def clean_config(monkeypatch):
    monkeypatch.delenv(config.ENV_DEBUG, raising=False)
    monkeypatch.delenv(config.ENV_WORKERS, raising=False)
    config.reset()
    yield
    config.reset()
    logger = logging.getLogger("partial_hopf")
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    logger.setLevel(logging.NOTSET)


@pytest.fixture(scope="session")
def h4():
    return catalog.load("h4").payload


@pytest.fixture(scope="session")
def hss():
    return catalog.load("hss").payload


@pytest.fixture(scope="session")
def hss_action():
    return catalog.load("action_hss").payload


@pytest.fixture(scope="session")
def hs_action():
    return catalog.load("action_hs").payload


@pytest.fixture(scope="session")
def h00_action():
    return catalog.load("action_h00").payload


@pytest.fixture(scope="session")
def hss_basis(hss_action):
    return extract_basis(hss_action)


@pytest.fixture(scope="session")
def hss_table(hss_action, hss_basis):
    return product_table(hss_action, hss_basis)
