import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_CRITERIA = {}


def pytest_runtest_logreport(report):
    props = dict(report.user_properties)
    if "criterion" not in props:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _CRITERIA[props["criterion"]] = (report.outcome, report.duration, props.get("label", ""),
                                         props.get("note", ""))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_CRITERIA, key=int):
        outcome, duration, label, note = _CRITERIA[key]
        status = "PASS" if outcome == "passed" else "FAIL"
        line = f"criterion {key}: {status}  ({duration:.2f} s)  {label}"
        if note:
            line += f"  [{note}]"
        terminalreporter.write_line(line)
