import pytest

from hfock import golden


@pytest.fixture(scope="session")
def gold():
    """Golden values (pre-computed at 50 digits, see tools/) as floats."""
    return {name: float(entry["value"]) for name, entry in golden.load().items()}
