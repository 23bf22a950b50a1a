import numpy as np
import pytest

from quditcode.channels import ChannelKind

KINDS = [ChannelKind.CONVENTIONAL, ChannelKind.WEYL]

# (criterion id, description, passed, detail) rows collected by test_acceptance
ACCEPTANCE_ROWS: list[tuple[str, str, bool, str]] = []


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(params=KINDS, ids=lambda k: k.value)
def kind(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_ROWS:
        return
    terminalreporter.section("acceptance criteria")
    for cid, desc, ok, detail in sorted(ACCEPTANCE_ROWS, key=lambda r: (int(r[0].rstrip("ab")), r[0])):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {cid:>3}  {desc}  ({detail})")
