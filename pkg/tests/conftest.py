import pytest

from freeqg.exact import ExactMatrix, random_invertible


@pytest.fixture
def eye2():
    return ExactMatrix.identity(2)


@pytest.fixture
def twisted():
    # F with F conj(F) = -1, the SU(2) case
    return ExactMatrix([[0, 1], [-1, 0]])


@pytest.fixture(params=[(2, 1), (2, 2), (3, 1)], ids=lambda p: f"n{p[0]}-seed{p[1]}")
def random_F(request):
    n, seed = request.param
    return random_invertible(n, seed)


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def report():
    def record(number, ok, detail):
        line = f"{'PASS' if ok else 'FAIL'} criterion {number:>2}: {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
