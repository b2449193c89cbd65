from collections import defaultdict

# acceptance criteria, in report order
CRITERIA = {
    "dataset-stats": "real-network statistics match reference values",
    "real-destruction": "real-network destruction thresholds",
    "synthetic-thresholds": "seed-averaged synthetic destruction thresholds",
    "synthetic-ordering": "seed-averaged strategy efficiency ordering",
    "oracle-equivalence": "centralities and removal sets match brute-force oracles",
    "trace-invariants": "randomized trace invariants and byte-stable CSV",
}

_owner = {}
_checks = defaultdict(dict)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion a test belongs to")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark:
            _owner[item.nodeid] = mark.args[0]


def _reason(report):
    crash = getattr(report.longrepr, "reprcrash", None)
    text = crash.message if crash else str(report.longrepr)
    return text.splitlines()[0] if text else ""


def pytest_runtest_logreport(report):
    crit = _owner.get(report.nodeid)
    if crit is None:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or report.outcome != "passed":
        if report.outcome == "passed":
            _checks[crit].setdefault(name, ("PASS", ""))
        else:
            _checks[crit][name] = ("FAIL", _reason(report))


def pytest_terminal_summary(terminalreporter):
    if not _checks:
        return
    tr = terminalreporter
    tr.write_sep("=", "acceptance criteria")
    for crit, title in CRITERIA.items():
        checks = _checks.get(crit)
        if not checks:
            tr.write_line(f"FAIL {crit}: {title} (not run)")
            continue
        ok = all(status == "PASS" for status, _ in checks.values())
        tr.write_line(f"{'PASS' if ok else 'FAIL'} {crit}: {title}")
        for name, (status, reason) in checks.items():
            tr.write_line(f"    {status} {name}" + (f"  {reason}" if reason else ""))
