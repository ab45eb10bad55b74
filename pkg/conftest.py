import json

import pytest
from loguru import logger

from src.config import Settings
from src.parameters import Base, CuspidalDatum, Duality


@pytest.fixture
def tau1():
    return CuspidalDatum(id='tau1', a=1, duality=Duality.ORTHOGONAL)


@pytest.fixture
def tau2():
    return CuspidalDatum(id='tau2', a=2, duality=Duality.SYMPLECTIC, central_nonvanishing=True)


@pytest.fixture
def tau3():
    return CuspidalDatum(id='tau3', a=2, duality=Duality.ORTHOGONAL)


@pytest.fixture
def tau_e():
    """A conjugate self-dual datum over the quadratic extension."""
    return CuspidalDatum(id='tauE', a=2, base=Base.QUADRATIC_EXT, eta=-1)


@pytest.fixture
def small_settings():
    """Default pool with bounds small enough for quick sweeps."""
    settings = Settings()
    settings.bounds.update({
        'partition_total': 10, 'grading_total': 12, 'max_N': 6, 'case_a': 4, 'case_b': 3,
        'case_c': 4, 'jordan_N': 8, 'bv_ab': 16, 'beta_b': 12, 'poles_b': 6, 'sign_ab': 12,
        'unitary_mv': 12,
    })
    return settings


@pytest.fixture
def write_json(tmp_path):
    def _write(name, payload):
        path = tmp_path / name
        path.write_text(json.dumps(payload))
        return str(path)
    return _write


@pytest.fixture
def log_records():
    """Loguru records emitted during the test, at every level."""
    records = []
    handler_id = logger.add(lambda message: records.append(message.record), level="DEBUG")
    yield records
    logger.remove(handler_id)
