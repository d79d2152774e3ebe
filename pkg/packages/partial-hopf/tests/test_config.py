import logging

import pytest

from partial_hopf import config
from partial_hopf.pool import parallel_map


def test_debug_from_environment(monkeypatch):
    assert not config.DEBUG()
    monkeypatch.setenv(config.ENV_DEBUG, "True")
    assert config.DEBUG()
    config.override(debug=False)
    assert not config.DEBUG()


def test_workers_from_environment(monkeypatch):
    assert config.max_workers() == 1
    monkeypatch.setenv(config.ENV_WORKERS, "3")
    assert config.max_workers() == 3
    config.override(workers=2)
    assert config.max_workers() == 2


@pytest.mark.parametrize("raw", ["many", "0", "-2"])
def test_bad_worker_counts_fall_back(monkeypatch, caplog, raw):
    monkeypatch.setenv(config.ENV_WORKERS, raw)
    with caplog.at_level(logging.WARNING, logger="partial_hopf"):
        assert config.max_workers() == 1
    assert config.ENV_WORKERS in caplog.text


def test_override_rejects_zero_workers():
    with pytest.raises(ValueError):
        config.override(workers=0)


def test_configure_logging_keeps_one_handler():
    config.configure_logging()
    config.configure_logging()
    logger = logging.getLogger("partial_hopf")
    assert sum(getattr(h, "_partial_hopf", False) for h in logger.handlers) == 1
    assert logger.level == logging.WARNING


def test_parallel_map_keeps_input_order():
    config.override(workers=4)
    assert parallel_map(lambda value: value * value, range(50)) == [value * value for value in range(50)]
    assert parallel_map(str, []) == []
