import pytest

# Published per-run totals (seconds) for 100,000 queries, VARCHAR(8) vs INT.
PUBLISHED_VARCHAR_RUNS = [
    23.735124826431, 24.585271120071, 23.454295873642, 24.026872873306,
    23.368565320969, 23.883385658264, 23.488732099533, 24.059506416321,
    23.642956495285, 23.850153207779, 23.538511991501, 23.894111633301,
    23.469617605209, 23.740539550781, 24.282388448715,
]
PUBLISHED_INT_RUNS = [
    23.480888843536, 24.313096523285, 23.258988857269, 23.827021121979,
    23.145508527756, 23.567368268967, 23.276761293411, 23.790077209473,
    23.390990972519, 23.539158582687, 23.300233840942, 23.704314231873,
    23.224228143692, 23.503800630569, 23.967983245850,
]
TOTAL_VARCHAR = 357.020033121108
TOTAL_INT = 353.290420293808


@pytest.fixture
def published_runs():
    return PUBLISHED_VARCHAR_RUNS, PUBLISHED_INT_RUNS


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
