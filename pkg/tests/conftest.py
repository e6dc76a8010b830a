def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Echo the acceptance-criteria lines after the test run."""
    try:
        from test_acceptance import CRITERION_LINES
    except ImportError:
        return
    if CRITERION_LINES:
        terminalreporter.section("acceptance criteria")
        for line in CRITERION_LINES:
            terminalreporter.write_line(line)
