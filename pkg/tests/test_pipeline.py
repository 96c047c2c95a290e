import json
from dataclasses import replace
from threading import Event

import pytest
from openpyxl import load_workbook

from asm_hyperdet.config import deep_merge, load_config
from asm_hyperdet.hyper.hyperdet_solver import PhiConvention
from asm_hyperdet.pipeline import SuiteCancelled, grid_points, run_verification_suite, select_identities
from asm_hyperdet.reporter.console_reporter import export_calculation_log, render_reports, reports_to_json
from asm_hyperdet.reporter.excel_reporter import export_reports_to_excel
from asm_hyperdet.utils.errors import ConfigError


def test_defaults_load_without_overrides():
    config = load_config(environ={})

    assert config.budget_terms == 10**7
    assert config.verify.max_ks == 6
    assert config.verify.max_s == 3
    assert config.verify.max_m == 2
    assert config.output == "text"


def test_environment_then_flags():
    environ = {"HYPERDET_BUDGET": "500", "HYPERDET_CACHE_DIR": "/tmp/elsewhere"}

    assert load_config(environ=environ).budget_terms == 500
    assert str(load_config(environ=environ).cache_dir) == "/tmp/elsewhere"
    assert load_config({"budget_terms": 42, "cache_dir": None}, environ).budget_terms == 42
    assert str(load_config({"budget_terms": 42, "cache_dir": None}, environ).cache_dir) == "/tmp/elsewhere"


@pytest.mark.parametrize(
    "overrides, environ",
    [
        ({"budget_terms": 0}, {}),
        ({"output": "yaml"}, {}),
        ({}, {"HYPERDET_BUDGET": "lots"}),
    ],
)
def test_invalid_configuration(overrides, environ):
    with pytest.raises(ConfigError):
        load_config(overrides, environ)


def test_deep_merge_does_not_mutate():
    base = {"verify": {"grid": {"max_s": 3, "max_m": 2}}}

    merged = deep_merge(base, {"verify": {"grid": {"max_m": 1}}})

    assert merged["verify"]["grid"] == {"max_s": 3, "max_m": 1}
    assert base["verify"]["grid"]["max_m"] == 2


def test_grid_points():
    points = grid_points(6, 3, 2)

    assert len(points) == 22
    assert (1, 3, 2) in points
    assert (3, 3, 1) not in points
    assert all(k >= 1 and k * s <= 6 for k, s, _ in points)


def test_identity_selection():
    assert select_identities(["display_3x3", "asm_counts"]) == ["asm_counts", "display_3x3"]
    assert select_identities(["all"])[0] == "asm_counts"
    assert select_identities(None)[-1] == "matsumoto_limit"
    with pytest.raises(ValueError) as info:
        select_identities(["nonsense"])
    assert "[UNKNOWN_IDENTITY]" in str(info.value)


def test_suite_runs_selected_identities_in_order(config):
    steps = []

    artifacts = run_verification_suite(
        ["display_3x3", "asm_counts"], config, progress_callback=lambda step, fraction: steps.append((step, fraction))
    )

    assert [r.identity for r in artifacts.reports] == ["asm_counts", "display_3x3"]
    assert not artifacts.failed
    assert set(artifacts.trace["per_identity"]) == {"asm_counts", "display_3x3"}
    assert artifacts.trace["convention_resolution"] is None
    assert steps[0] == ("asm_counts", 0.0)
    assert steps[-1] == ("done", 1.0)


def test_suite_cancellation(config):
    cancel = Event()
    cancel.set()

    with pytest.raises(SuiteCancelled):
        run_verification_suite(["asm_counts"], config, cancel_event=cancel)


def test_resolution_is_unresolved_where_conventions_agree(config):
    artifacts = run_verification_suite(["phi_resolution"], config, points=[(1, 2, 1)])

    assert [r.identity for r in artifacts.reports] == ["phi_resolution"]
    assert artifacts.failed
    assert artifacts.trace["convention_resolution"]["winners"] == ["paper", "proof"]


def test_single_convention_resolves(config):
    artifacts = run_verification_suite(
        ["theorem_3_2", "phi_resolution", "matsumoto_limit"],
        config,
        points=[(1, 2, 1)],
        conventions=(PhiConvention.PROOF_CONSISTENT,),
    )

    assert [r.identity for r in artifacts.reports] == ["theorem_3_2", "phi_resolution", "matsumoto_limit"]
    assert not artifacts.failed
    assert artifacts.reports[-1].convention == "proof"


def test_reporters(config, tmp_path):
    artifacts = run_verification_suite(["asm_counts", "display_3x3"], config)

    text = render_reports(artifacts.reports, artifacts.trace)
    assert "asm_counts" in text
    assert "discrepancy-documented" in text

    payload = json.loads(reports_to_json(artifacts.reports))
    assert [item["status"] for item in payload] == ["pass", "discrepancy-documented"]

    trace_path = export_calculation_log(artifacts.trace, tmp_path / "trace.json")
    assert json.loads(trace_path.read_text(encoding="utf-8"))["identities"] == ["asm_counts", "display_3x3"]

    workbook_path = export_reports_to_excel(artifacts.reports, artifacts.trace, tmp_path / "reports.xlsx")
    workbook = load_workbook(workbook_path)
    assert workbook.sheetnames == ["Summary", "Reports", "Witnesses"]


def test_default_invariance_cases_include_three_by_two():
    assert (3, 2) in load_config(environ={}).verify.invariance_cases


def test_suite_resolves_the_convention_on_a_discriminating_point(config):
    artifacts = run_verification_suite(["theorem_3_2", "phi_resolution"], config, points=[(1, 2, 1), (1, 3, 2)])

    statuses = {(r.parameters["s"], r.convention): r.status for r in artifacts.reports if r.identity == "theorem_3_2"}
    assert artifacts.trace["convention_resolution"]["winners"] == ["proof"]
    assert statuses[(3, "paper")] == "discrepancy-documented"
    assert statuses[(3, "proof")] == "pass"
    assert not artifacts.failed


def test_suite_honours_the_degree_ceiling(config):
    artifacts = run_verification_suite(
        ["theorem_3_2", "dyson_oracle"], replace(config, degree_ceiling=3), points=[(2, 2, 1)]
    )

    assert artifacts.failed
    assert all(not r.passed for r in artifacts.reports)
    assert all(any("[DEGREE_CEILING]" in note for note in r.notes) for r in artifacts.reports)


def test_suite_honours_the_asm_ceiling(config):
    artifacts = run_verification_suite(["asm_counts"], replace(config, asm_ceiling=4))

    assert artifacts.failed
    assert any("[ASM_CEILING]" in note for note in artifacts.reports[0].notes)


def test_suite_honours_the_dyson_bounds(config):
    artifacts = run_verification_suite(["dyson_oracle"], replace(config, dyson_max_s=1), points=[(1, 2, 1)])

    assert artifacts.failed
    assert any("[DYSON_LIMIT]" in note for note in artifacts.reports[0].notes)


def test_q_equal_one_limit_follows_the_suite_reports(config):
    artifacts = run_verification_suite(
        ["theorem_3_2", "matsumoto_limit"], replace(config, degree_ceiling=3), points=[(2, 2, 1)],
        conventions=(PhiConvention.PROOF_CONSISTENT,),
    )

    limit = artifacts.reports[-1]
    assert limit.identity == "matsumoto_limit"
    assert limit.witness == {"theorem_3_2": "fail"}
