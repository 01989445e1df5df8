import sys

import pytest

from grassmann_semi.scalars import BOOLEANS, INTEGERS, MAXPLUS, NATURALS, RATIONALS

import oracles

ALL_DOMAINS = [INTEGERS, RATIONALS, NATURALS, BOOLEANS, MAXPLUS]


def semiring_of(domain):
    return oracles.Semiring(domain.add, domain.mul, domain.zero, domain.one)


@pytest.fixture(params=ALL_DOMAINS, ids=lambda d: d.name)
def domain(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULT_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
