from itertools import product

import numpy as np
import pytest

from hamroc.coding import make_rng


def all_patterns(N):
    return np.array(list(product((-1, 1), repeat=N)), dtype=np.int64)


@pytest.fixture
def rng():
    return make_rng(12345)


_CRITERIA = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line; printed in the terminal summary."""
    record = {"name": request.node.name, "ok": False, "detail": ""}
    _CRITERIA.append(record)
    yield record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for rec in _CRITERIA:
        status = "PASS" if rec["ok"] else "FAIL"
        terminalreporter.write_line(f"{status}  {rec['name']}  {rec['detail']}")
