import warnings

import pytest


@pytest.fixture(scope="session")
def client():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

        from marklab.service.app import app

        c = TestClient(app)
    yield c
    c.close()
