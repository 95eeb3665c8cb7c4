"""Shared oracles.  They avoid the package's own permutation code on purpose."""

import pytest
from sympy.combinatorics import Permutation


def sym(img):
    """0-based image tuple -> sympy Permutation."""
    return Permutation(list(img))


def oracle_cycle_type(img):
    """Cycle lengths (fixed points included), descending, via sympy."""
    p = sym(img)
    out = []
    for length, count in p.cycle_structure.items():
        out += [length] * count
    return tuple(sorted(out, reverse=True))


def oracle_face(black, white):
    # face = white^-1 o black^-1, computed by sympy (which composes left to right)
    return tuple((~sym(black) * ~sym(white)).array_form)


def oracle_genus(black, white):
    E = len(black)
    c = sum(len(oracle_cycle_type(p)) for p in (black, white, oracle_face(black, white)))
    chi = c - E
    assert chi % 2 == 0
    return (2 - chi) // 2


def oracle_connected(black, white):
    n = len(black)
    seen, todo = {0}, [0]
    while todo:
        x = todo.pop()
        for y in (black[x], white[x]):
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return len(seen) == n


@pytest.fixture
def three_star():
    from lame_dessins import new_dessin
    return new_dessin(3, [1, 2, 3], [[1, 2, 3]])


# -- acceptance report ---------------------------------------------------------

ACCEPTANCE_LINES = []


@pytest.fixture
def report():
    def record(number, ok, detail):
        ACCEPTANCE_LINES.append(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
        return ok
    return record


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running experiment (deselect with -m 'not slow')")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
