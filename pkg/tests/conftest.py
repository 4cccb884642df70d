"""Shared pytest plumbing: the acceptance-criteria result registry.

The acceptance tests record one entry per criterion; after the run the
terminal summary prints one pass/fail line for each, including the measured
time against its pinned bound.
"""

ACCEPTANCE_RESULTS: dict[int, tuple[str, bool, str]] = {}


def record_acceptance(number: int, label: str, ok: bool, detail: str) -> None:
    ACCEPTANCE_RESULTS[number] = (label, bool(ok), detail)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        label, ok, detail = ACCEPTANCE_RESULTS[number]
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(
            f"ACCEPTANCE {number:>2} {verdict} {label} ({detail})"
        )
