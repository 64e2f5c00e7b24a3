import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hugheslab import kernels  # noqa: E402
from hugheslab.catalog import builtin_group  # noqa: E402


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # compile the JIT kernels once so timing checks measure computation only
    G = builtin_group("S3")
    tab = G.table()
    tab.mul, tab.orders
    kernels.closure_mask(tab.mul, [1])
    kernels.commutator_mask(tab.mul, tab.inv, [1], [2])
    kernels.pair_power_defects(tab.mul, tab.inv, tab.power_map(2))


@pytest.fixture(params=kernels.available_backends())
def backend(request):
    prev = kernels.set_backend(request.param)
    yield request.param
    kernels.set_backend(prev)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(mod.RESULTS.items()):
        terminalreporter.write_line(line)
