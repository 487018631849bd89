import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ringtasep import chain, mlq


@pytest.fixture(scope="session")
def symbolic_n3():
    return chain.symbolic_stationary(3)


@pytest.fixture(scope="session")
def symbolic_n4():
    return chain.symbolic_stationary(4)


@pytest.fixture(scope="session")
def mlq_n4():
    return mlq.all_psi_via_mlq(4)


@pytest.fixture(scope="session")
def mlq_n5():
    return mlq.all_psi_via_mlq(5)
