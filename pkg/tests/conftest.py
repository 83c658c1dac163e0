from __future__ import annotations

from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

CRITERIA = {
    "test_criterion_1_s10": "1 S10 reproduction",
    "test_criterion_2_a5_powers": "2 A5 reproduction and tensor powers",
    "test_criterion_3_a7": "3 A7 projective-degree diagnostic",
    "test_criterion_4_tame_sweep": "4 tame sweep |D| <= 2^12",
    "test_criterion_5_brauer_trees": "5 Brauer-tree properties e <= 8, m <= 6",
    "test_criterion_6_spectral_soundness": "6 spectral enclosure soundness",
    "test_criterion_7_oracle_equivalence": "7 oracle equivalence on 1000 matrices",
    "test_criterion_8_implication": "8 trace-implies-local implication",
}

_outcomes: dict[str, tuple[str, float]] = {}


def pytest_runtest_logreport(report):
    name = report.nodeid.rsplit("::", 1)[-1]
    if name not in CRITERIA:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _outcomes[name] = (report.outcome, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for name, label in CRITERIA.items():
        if name in _outcomes:
            outcome, secs = _outcomes[name]
            status = "PASS" if outcome == "passed" else "FAIL"
            terminalreporter.write_line(f"criterion {label}: {status} ({secs:.2f}s)")
