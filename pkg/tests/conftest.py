"""Print one PASS/FAIL line per acceptance criterion at the end of the run."""

import re

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)$")


def pytest_terminal_summary(terminalreporter):
    results = {}
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            m = _CRITERION.search(getattr(rep, "nodeid", ""))
            if not m or rep.when not in ("call", "setup"):
                continue
            key = int(m.group(1))
            ok = status == "passed"
            results[key] = (results.get(key, (True, ""))[0] and ok, m.group(2).replace("_", " "))
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(results):
        ok, name = results[key]
        terminalreporter.write_line(f"criterion {key:2d}: {'PASS' if ok else 'FAIL'}  {name}")
