import os

import pytest

from hrcontracts.alphabet import Alphabet, PortDecl
from hrcontracts.dsl import Model, parse_file

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
SPECS = os.path.join(ROOT, "specs")


def bools(*names, length=1):
    return Alphabet(tuple(PortDecl(n) for n in names), length)


def spec_path(name):
    return os.path.join(SPECS, name)


@pytest.fixture(scope="session")
def example():
    return Model(parse_file(spec_path("running_example.hrc")))


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for k in sorted(results):
            terminalreporter.write_line(results[k])
