import pytest

from primover import core_arith


@pytest.fixture(autouse=True)
def restore_runtime_config():
    saved = dict(core_arith._config)
    yield
    core_arith._config.update(saved)
