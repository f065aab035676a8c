import pytest
from hypothesis import settings

from nilkahler.reproduce import criterion_verdicts, run_all

settings.register_profile("fast", max_examples=40, deadline=None)
settings.load_profile("fast")

_RESULTS = {}


def claim_results():
    """One full verification run per session, shared by the acceptance tests and the CLI tests."""
    if "run" not in _RESULTS:
        _RESULTS["run"] = run_all(seed=0, samples=5)
    return _RESULTS["run"]


@pytest.fixture(scope="session")
def results():
    return claim_results()


def pytest_terminal_summary(terminalreporter):
    if "run" not in _RESULTS:
        return
    res = _RESULTS["run"]
    verdicts = criterion_verdicts(res)
    terminalreporter.section("acceptance criteria")
    for crit in sorted(verdicts):
        claims = [r for r in res if r.criterion == crit]
        failing = [r.claim for r in claims if not r.passed]
        line = f"criterion {crit:2d}: {'PASS' if verdicts[crit] else 'FAIL'}"
        if failing:
            line += f"  (failing claims: {', '.join(failing)})"
        terminalreporter.write_line(line)
