from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=200)
settings.load_profile("default")

# criterion number -> (passed, summary); filled in by test_acceptance
CRITERIA: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        ok, summary = CRITERIA[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {summary}")
