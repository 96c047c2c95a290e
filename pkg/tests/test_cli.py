import io
import json

import pytest

from asm_hyperdet.arith.laurent_poly import LaurentPoly, parse_laurent
from asm_hyperdet.arith.rational_function import LAMBDA_SYMBOL, RationalFunction
from asm_hyperdet.asm.alternating_sign import Asm
from asm_hyperdet.cli import EXIT_OK, EXIT_USAGE, build_parser, dispatch, load_grid
from asm_hyperdet.detlib.determinants import lambda_vandermonde
from asm_hyperdet.symfun.macdonald import clear_memory_cache
from asm_hyperdet.symfun.symmetric import SymFun, elementary
from asm_hyperdet.utils.errors import InputFormatError


def run(*argv, environ=None):
    out, err = io.StringIO(), io.StringIO()
    code = dispatch(list(argv), stdout=out, stderr=err, environ=environ or {})
    return code, out.getvalue(), err.getvalue()


def test_parser_lists_every_subcommand():
    help_text = build_parser().format_help()

    for command in ("asm", "det", "hyperdet", "macdonald", "dyson", "verify", "cache"):
        assert command in help_text


def test_asm_count():
    code, out, _ = run("asm", "count", "--n", "6")

    assert code == EXIT_OK
    assert out.strip() == "7436"


def test_asm_list_json_reads_back():
    code, out, _ = run("asm", "list", "--n", "3", "--json")

    matrices = [Asm.from_json(item) for item in json.loads(out)]
    assert code == EXIT_OK
    assert len(matrices) == 7


def test_asm_stats_text():
    code, out, _ = run("asm", "stats", "--n", "4")

    assert code == EXIT_OK
    assert "count: 42" in out


def test_det_symbolic_lambda(data_dir):
    code, out, _ = run("det", "--lambda", "sym", "--input", str(data_dir / "matrix.json"), "--json")

    payload = json.loads(out)
    names = payload["variables"]
    xs = LaurentPoly.generators(3, names)
    assert code == EXIT_OK
    assert names == ["x1", "x2", "x3"]
    assert parse_laurent(payload["value"], names, LAMBDA_SYMBOL) == lambda_vandermonde(
        xs, RationalFunction.gen(LAMBDA_SYMBOL)
    )


def test_hyperdet_modes_agree_at_lambda_one(data_dir):
    path = str(data_dir / "hyper.json")

    code_c, out_c, _ = run("hyperdet", "--mode", "cayley", "--input", path, "--json")
    code_l, out_l, _ = run(
        "hyperdet", "--mode", "lambda", "--lambda", "1", "--convention", "proof", "--input", path, "--json"
    )

    assert code_c == code_l == EXIT_OK
    assert json.loads(out_c)["value"] == json.loads(out_l)["value"]


def test_hyperdet_lambda_mode_needs_a_convention(data_dir):
    code, _, err = run("hyperdet", "--mode", "lambda", "--lambda", "sym", "--input", str(data_dir / "hyper.json"))

    assert code == EXIT_USAGE
    assert "[USAGE]" in err


def test_hyperdet_budget(data_dir):
    code, _, err = run("hyperdet", "--mode", "cayley", "--input", str(data_dir / "hyper.json"), "--budget", "1")

    assert code == EXIT_USAGE
    assert "[BUDGET_EXCEEDED]" in err


def test_macdonald_json_matches_the_elementary_function(cache_dir):
    code, out, _ = run("macdonald", "--partition", "1,1", "--m", "1", "--json", "--cache-dir", str(cache_dir))

    payload = json.loads(out)
    assert code == EXIT_OK
    assert payload == {"degree": 2, "basis": "p", "coefficients": {"[1,1]": "1/2", "[2]": "-1/2"}}
    assert SymFun.from_json(payload) == elementary(2)


def test_cache_lifecycle(cache_dir):
    cache_flag = ("--cache-dir", str(cache_dir))

    run("macdonald", "--partition", "2,1", "--m", "2", *cache_flag)
    code, out, _ = run("cache", "stat", "--json", *cache_flag)
    assert code == EXIT_OK
    assert [(row["m"], row["partition"]) for row in json.loads(out)] == [(2, "[2,1]")]

    code, out, _ = run("cache", "export", "--json", *cache_flag)
    assert list(json.loads(out)[0]["entries"]) == ["[2,1]"]

    code, out, _ = run("cache", "clear", "--json", *cache_flag)
    assert json.loads(out) == {"removed_files": 1}

    code, out, _ = run("cache", "stat", "--json", *cache_flag)
    assert json.loads(out) == []


def test_cache_dir_from_environment(cache_dir):
    run("macdonald", "--partition", "2", "--m", "1", environ={"HYPERDET_CACHE_DIR": str(cache_dir)})

    assert (cache_dir / "macdonald_P_m1_p.json").is_file()


def test_dyson_json(cache_dir):
    code, out, _ = run("dyson", "--k", "1", "--s", "2", "--m", "1", "--json")

    q = RationalFunction.gen()
    assert code == EXIT_OK
    assert SymFun.from_json(json.loads(out)) == elementary(2) * (1 + q)


def test_verify_single_identity_json(cache_dir):
    code, out, _ = run("verify", "display_3x3", "--json", "--cache-dir", str(cache_dir))

    reports = json.loads(out)
    assert code == EXIT_OK
    assert [r["status"] for r in reports] == ["discrepancy-documented"]


def test_verify_rectangular_point_with_artifacts(cache_dir, tmp_path):
    excel = tmp_path / "out.xlsx"
    trace = tmp_path / "trace.json"

    code, out, _ = run(
        "verify", "theorem_3_2", "--k", "1", "--s", "2", "--m", "1", "--cache-dir", str(cache_dir),
        "--excel", str(excel), "--trace", str(trace),
    )

    assert code == EXIT_OK
    assert "Artifacts saved:" in out
    assert excel.is_file()
    assert json.loads(trace.read_text(encoding="utf-8"))["grid"] == [[1, 2, 1]]


def test_verify_grid_file(cache_dir, tmp_path):
    grid = tmp_path / "grid.yml"
    grid.write_text("points:\n  - [1, 2, 1]\n  - {k: 2, s: 1, m: 1}\n", encoding="utf-8")

    code, out, _ = run("verify", "theorem_3_2", "--matrix", str(grid), "--json", "--cache-dir", str(cache_dir))

    assert code == EXIT_OK
    assert len(json.loads(out)) == 4


def test_verify_partial_point_is_a_usage_error():
    code, _, err = run("verify", "theorem_3_2", "--k", "1")

    assert code == EXIT_USAGE
    assert "[USAGE]" in err


def test_unknown_subcommand():
    code, _, err = run("frobnicate")

    assert code == EXIT_USAGE
    assert "[USAGE]" in err


def test_malformed_input_document(tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text("{not json", encoding="utf-8")

    code, _, err = run("det", "--lambda", "2", "--input", str(broken))

    assert code == EXIT_USAGE
    assert "[INPUT_FORMAT]" in err


def test_bad_lambda_value(data_dir):
    code, _, err = run("det", "--lambda", "x/y", "--input", str(data_dir / "matrix.json"))

    assert code == EXIT_USAGE
    assert "[INPUT_FORMAT]" in err


def test_load_grid_shipped_example(data_dir):
    points = load_grid(data_dir / "grid.yml")

    assert (1, 3, 2) in points
    assert (2, 2, 1) in points


def test_load_grid_rejects_bad_points(tmp_path):
    grid = tmp_path / "grid.yml"
    grid.write_text("points:\n  - [1, 2]\n", encoding="utf-8")

    with pytest.raises(InputFormatError):
        load_grid(grid)


def test_warm_cache_reproduces_the_cold_run(cache_dir):
    argv = ("verify", "theorem_3_2", "--k", "1", "--s", "2", "--m", "2", "--json", "--cache-dir", str(cache_dir))

    _, cold, _ = run(*argv)
    clear_memory_cache()
    assert any(cache_dir.iterdir())
    _, warm, _ = run(*argv)

    def strip(out):
        return [{key: value for key, value in item.items() if key != "runtime_s"} for item in json.loads(out)]

    assert strip(cold) == strip(warm)


def test_det_json_output_is_a_valid_input(data_dir, tmp_path):
    code, out, _ = run("det", "--lambda", "sym", "--input", str(data_dir / "matrix.json"), "--json")
    document = tmp_path / "again.json"
    document.write_text(out, encoding="utf-8")

    code_again, out_again, _ = run("det", "--lambda", "sym", "--input", str(document), "--json")

    assert code == code_again == EXIT_OK
    assert json.loads(out_again) == json.loads(out)


@pytest.mark.parametrize(
    "argv",
    [("--mode", "cayley"), ("--mode", "lambda", "--lambda", "sym", "--convention", "paper")],
)
def test_hyperdet_json_output_is_a_valid_input(argv, data_dir, tmp_path):
    code, out, _ = run("hyperdet", *argv, "--input", str(data_dir / "hyper.json"), "--json")
    document = tmp_path / "again.json"
    document.write_text(out, encoding="utf-8")

    code_again, out_again, _ = run("hyperdet", *argv, "--input", str(document), "--json")

    assert code == code_again == EXIT_OK
    assert json.loads(out_again)["value"] == json.loads(out)["value"]
    assert json.loads(out_again)["entries"] == json.loads(out)["entries"]
