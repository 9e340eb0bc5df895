import sys
from fractions import Fraction

import pytest


def brute_range(k):
    """Admissible pairs by exhaustive search with exact fractions (independent of lattice.py)."""
    pairs = []
    for a in range(0, k + 2):
        for e in range(0, k + 2):
            if (a, e) == (k, 0):
                pairs.append((a, e))
            elif a <= k and Fraction(a) > Fraction(k, 2) and e > 0 and Fraction(k - a, 2 * a - k) >= e:
                pairs.append((a, e))
    return sorted(pairs)


def dim_via_extensions(g, k, a, e):
    """dim M(a,e) as 2*delta + g + N - 1, N the dimension of the space of extensions."""
    d = (k - a) - e * (2 * a - k)
    n = (2 * a - k + 1) * (2 * e + g) + d
    return 2 * d + g + n - 1


@pytest.fixture(scope="session")
def grid():
    return [(g, k) for g in range(2, 21) for k in range(1, 101)]


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.RESULTS:
        terminalreporter.write_line(line)
