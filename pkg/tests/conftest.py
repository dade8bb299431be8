from __future__ import annotations


def pytest_terminal_summary(terminalreporter) -> None:
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
