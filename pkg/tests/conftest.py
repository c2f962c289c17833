import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from digspec import reldig


@pytest.fixture(scope="session")
def petersen():
    return reldig.kneser(5, 2)
