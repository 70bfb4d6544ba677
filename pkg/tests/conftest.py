import pytest

from pathlib import Path

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA


@pytest.fixture(scope="session")
def snapshot_dir() -> Path:
    return DATA / "snapshots"
