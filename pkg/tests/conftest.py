import numpy as np
import pytest

from bergeham import new_hypergraph
from bergeham.harness import potential_edges

H4_TEXT = "5 3\n1 2 5\n1 3 5\n1 4 5\n2 3 4\n"


@pytest.fixture
def h4():
    return new_hypergraph(5, 3, [(1, 2, 5), (1, 3, 5), (1, 4, 5), (2, 3, 4)])


def random_hypergraph(rng: np.random.Generator, n: int, r: int, p: float):
    pot = potential_edges(n, r)
    keep = rng.random(len(pot)) < p
    return new_hypergraph(n, r, [e for e, k in zip(pot, keep) if k])


ACCEPTANCE: dict[int, tuple[bool, float, float, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, elapsed, limit, detail = ACCEPTANCE[k]
        terminalreporter.write_line(
            f"criterion {k}: {'PASS' if ok else 'FAIL'}  ({elapsed:.2f}s, limit {limit:g}s)  {detail}"
        )
