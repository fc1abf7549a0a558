import pytest

from heckemac import Lattice, build_root_system, generic_context

# (type, rank, lattice) triples forming the standard grid
DATUMS = [
    ("A", 1, "P"), ("A", 1, "Q"), ("A", 2, "P"), ("A", 2, "Q"),
    ("B", 2, "P"), ("C", 2, "Q"), ("G", 2, "P"), ("BC", 1, "Q"), ("BC", 2, "Q"),
]


def datum(t, n, lat):
    R = build_root_system(t, n)
    return R, Lattice.from_selector(R, lat)


def ids(d):
    return f"{d[0]}{d[1]}{d[2]}"


@pytest.fixture(params=DATUMS, ids=ids)
def rl(request):
    return datum(*request.param)


@pytest.fixture
def ctx(rl):
    R, L = rl
    return generic_context(R, L)


# criterion number -> summary line, filled by test_acceptance
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in range(1, 11):
        terminalreporter.write_line(ACCEPTANCE.get(k, f"criterion {k:>2} FAIL  not run"))
