import pathlib

import pytest

from ncgb.envelope import build_envelope

DATA = pathlib.Path(__file__).parent / "data"
GOLDEN = pathlib.Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def env2():
    A = build_envelope(2)
    A.fill_table()
    return A


@pytest.fixture(scope="session")
def env3():
    A = build_envelope(3)
    A.fill_table()
    return A


@pytest.fixture(scope="session")
def envs(env2, env3):
    return {2: env2, 3: env3}


# one summary line per acceptance criterion; parametrized cases are folded in
_ACCEPTANCE: dict = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or report.outcome != "passed":
        name = report.nodeid.split("::")[-1].split("[")[0]
        case = report.nodeid.split("[")[1].rstrip("]") if "[" in report.nodeid else ""
        slot = _ACCEPTANCE.setdefault(name, {"ok": True, "failed": []})
        if report.outcome != "passed":
            slot["ok"] = False
            slot["failed"].append(case or "-")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE, key=lambda s: int(s.split("_")[2])):
        parts = name.split("_")
        slot = _ACCEPTANCE[name]
        line = f"criterion {parts[2]}: {'PASS' if slot['ok'] else 'FAIL'}  {' '.join(parts[3:])}"
        if slot["failed"]:
            line += f" (failing cases: {', '.join(slot['failed'])})"
        terminalreporter.write_line(line)
