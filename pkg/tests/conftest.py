import math

import hypothesis
import numpy as np
import pytest
from mpmath import mp, mpf, power

hypothesis.settings.register_profile("default", max_examples=100, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.register_profile("thorough", max_examples=1000, deadline=None)
hypothesis.settings.load_profile("default")

np.seterr(all="raise")

# grid used throughout the error-analysis checks
GRID_N = (100, 1000, 10000)
GRID_ALPHAS = [a for a in (round(0.1 + 0.01 * j, 12) for j in range(191))
               if not 0.95 < a < 1.05]


def ulps(a: float, b: float) -> float:
    """Distance between a and b in units of the last place of the larger one."""
    if a == b:
        return 0.0
    return abs(a - b) / math.ulp(max(abs(a), abs(b)))


def mp_partial_sum(n: int, alpha: float, dps: int = 40) -> float:
    """Reference S(n, alpha) by plain summation in extended precision."""
    with mp.workdps(dps):
        a = mpf(alpha)
        total = mpf(0)
        for i in range(1, n + 1):
            total += power(i, -a)
        return float(total)


_ACCEPTANCE_KEY = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_ACCEPTANCE_KEY] = []


@pytest.fixture
def acceptance_report(request):
    """Collects one 'PASS/FAIL criterion' line per acceptance check."""
    lines = request.config.stash[_ACCEPTANCE_KEY]

    def report(label: str, ok: bool, detail: str = ""):
        line = f"[{'PASS' if ok else 'FAIL'}] {label}" + (f" -- {detail}" if detail else "")
        lines.append(line)
        print(line)
        return ok

    return report


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
