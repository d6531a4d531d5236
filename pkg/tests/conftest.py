import pytest

# filled in by test_acceptance.py, printed at the end of the run
ACCEPTANCE: dict[int, tuple[str, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        status, detail = ACCEPTANCE[n]
        tr.write_line(f"criterion {n}: {status}  {detail}")


@pytest.fixture
def acceptance_record():
    def record(n: int, ok: bool, detail: str):
        ACCEPTANCE[n] = ("PASS" if ok else "FAIL", detail)
        print(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
    return record
