import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from lowdiam import constructions as cons  # noqa: E402


@pytest.fixture
def petersen():
    return cons.gen_petersen()


@pytest.fixture
def k4():
    return cons.gen_complete(4)


def regular_small_graphs():
    """Undirected regular graphs with n <= 10 used across oracle tests."""
    out = [(f"C_{n}", cons.gen_cycle(n)) for n in range(3, 11)]
    out += [(f"K_{m}", cons.gen_complete(m)) for m in range(3, 11)]
    out += [(f"K_{d},{d}", cons.gen_complete_bipartite(d)) for d in range(2, 6)]
    out += [("petersen", cons.gen_petersen()), ("two_cliques_6", cons.gen_two_cliques_bridged(6)),
            ("two_cliques_8", cons.gen_two_cliques_bridged(8)), ("two_cliques_10", cons.gen_two_cliques_bridged(10))]
    return out


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number][1])
    passed = sum(ok for ok, _ in results.values())
    terminalreporter.write_line(f"{passed}/{len(results)} criteria passed")
