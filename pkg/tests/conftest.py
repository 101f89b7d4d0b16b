def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Print one PASS/FAIL line per acceptance criterion after the run."""
    lines = []
    for outcome, label in (("passed", "PASS"), ("failed", "FAIL"), ("error", "FAIL")):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance" in nodeid and getattr(rep, "when", "call") == "call":
                lines.append((nodeid.rsplit("::", 1)[-1], label))
    if not lines:
        return
    lines.sort()
    terminalreporter.write_sep("-", "acceptance criteria")
    for name, label in lines:
        terminalreporter.write_line(f"{label}  {name}")
