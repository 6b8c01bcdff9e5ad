import re

from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

# -- per-criterion summary for the acceptance module -------------------------------

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")


def pytest_terminal_summary(terminalreporter):
    rows = {}
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            m = _CRITERION.search(getattr(rep, "nodeid", ""))
            if m and (rep.when == "call" or outcome == "error"):
                rows[int(m.group(1))] = (m.group(2), "PASS" if outcome == "passed" else "FAIL", rep.duration)
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(rows):
        name, status, secs = rows[n]
        terminalreporter.write_line(f"criterion {n:2d} {status}  {name.replace('_', ' ')}  ({secs:.2f} s)")
