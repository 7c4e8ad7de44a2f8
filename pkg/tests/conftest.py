"""
Pytest configuration shared by all test packages.

Figures are rendered off-screen, and hypothesis runs without deadlines
because exact rational arithmetic makes example timings uneven.
"""
import json

import matplotlib
import pytest
from hypothesis import HealthCheck, settings

matplotlib.use('Agg')

settings.register_profile(
    'upcross',
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile('upcross')


@pytest.fixture
def write_instance(tmp_path):
    """Write a JSON document to a temporary instance file and return its path"""
    def write(data, name='instance.json'):
        path = tmp_path / name
        path.write_text(json.dumps(data) if not isinstance(data, str) else data)
        return str(path)

    return write
