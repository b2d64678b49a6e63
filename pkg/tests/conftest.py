import pytest

from cis.chevalley.cores import build_model
from cis.parabolic.cores import case_from_label
from cis.rootsys.cores import AlgebraType


def pytest_addoption(parser):
    parser.addoption(
        "--run-slow",
        action="store_true",
        help="Also run E7/E8 cases, exhaustive axiom checks and full certificates",
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: heavy exact computation, needs --run-slow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-slow"):
        return

    skip_slow = pytest.mark.skip(reason="heavy exact computation, pass --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(scope="session")
def model_of():
    """Structure-constant model for a Cartan type label such as ``"A2"``."""

    def make(label: str):
        return build_model(AlgebraType.parse(label))

    return make


@pytest.fixture(scope="session")
def case_of():
    """Quasi-Heisenberg case for a label such as ``"B5(3)"``."""
    return case_from_label
