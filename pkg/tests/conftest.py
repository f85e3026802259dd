import re

_CRITERION_RE = re.compile(r"test_criterion_(\d+)_?(\w*)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion at the end of every run."""
    found = {}
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance" not in nodeid:
                continue
            m = _CRITERION_RE.search(nodeid)
            if not m:
                continue
            num = int(m.group(1))
            label = m.group(2).replace("_", " ")
            found[num] = (status, label)
    if not found:
        return
    tw = terminalreporter
    tw.write_sep("=", "acceptance criteria")
    for num in sorted(found):
        status, label = found[num]
        word = "PASS" if status == "passed" else "FAIL"
        tw.write_line("criterion %2d: %s  (%s)" % (num, word, label))
