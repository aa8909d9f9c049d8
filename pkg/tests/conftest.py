import pytest

from liarlab.services.presburger.system import PresburgerSystem, presburger_logic
from liarlab.services.quineland.system import QuinelandSystem, quineland_logic


@pytest.fixture(scope="session")
def pres():
    return PresburgerSystem(ledger_cap=50_000, qe_node_cap=0)


@pytest.fixture(scope="session")
def pres_logic(pres):
    return presburger_logic(pres)


@pytest.fixture(scope="session")
def quine():
    return QuinelandSystem()


@pytest.fixture(scope="session")
def quine_logic(quine):
    return quineland_logic(quine)
