def pytest_terminal_summary(terminalreporter):
    rows = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            props = dict(getattr(rep, "user_properties", ()))
            if "criterion" in props and rep.when == "call":
                rows.append((props["criterion"], outcome, props.get("seconds")))
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, secs in sorted(rows, key=lambda r: int(r[0].split(".")[0])):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        timing = f" ({secs:.2f} s)" if secs is not None else ""
        terminalreporter.write_line(f"{verdict}  criterion {name}{timing}")
