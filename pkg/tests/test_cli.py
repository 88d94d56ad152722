import json
import random

import pytest
from click.testing import CliRunner

from segmax.cli import main

EX3 = "4,-5,6,-3,2,0,-4,5,-6,5"
EX7 = "(fork 1 (leaf 2) (fork 3 (leaf 1) (leaf 4)))"


@pytest.fixture()
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(main, list(args), catch_exceptions=False)


def test_mss_fixtures(runner):
    assert invoke(runner, "mss", "--algo", "linear", "--input", EX3).output.strip() == "6"
    assert invoke(runner, "mss", "--algo", "prefix", "--input", EX3).output.strip() == "5"
    assert invoke(runner, "mss", "--algo", "linear", "--input", "").output.strip() == "0"


def test_mss_json_roundtrip(runner):
    res = invoke(runner, "mss", "--algo", "spec", "--input", EX3, "--json")
    blob = json.loads(res.output)
    assert blob == {"algo": "spec", "value": 6, "n": 10}


def test_mss_cross_algorithm_agreement(runner):
    rng = random.Random(99)
    for _ in range(100):
        xs = ",".join(str(rng.randint(-50, 50)) for _ in range(rng.randint(0, 20)))
        outs = {
            invoke(runner, "mss", "--algo", algo, "--input", xs).output
            for algo in ("spec", "quadratic", "linear")
        }
        assert len(outs) == 1


def test_mss_input_from_file(runner, tmp_path):
    p = tmp_path / "xs.txt"
    p.write_text(EX3.replace(",", " "))
    res = invoke(runner, "mss", "--file", str(p))
    assert res.output.strip() == "6"


def test_mss_usage_errors(runner):
    assert invoke(runner, "mss").exit_code == 2  # neither input nor file
    assert invoke(runner, "mss", "--input", "1", "--file", "x").exit_code == 2
    assert invoke(runner, "mss", "--input", "1,foo").exit_code == 2


def test_mss_overflow_status(runner):
    big = str((1 << 62) + (1 << 61))
    res = invoke(runner, "mss", "--algo", "linear", "--input", f"{big},{big}")
    assert res.exit_code == 4


def test_tree_fixtures(runner):
    res = invoke(runner, "tree", "--shape", "htree", "--semiring", "max-plus",
                 "--input", EX7)
    assert res.output.strip() == "11" and res.exit_code == 0
    res = invoke(runner, "tree", "--input", "(leaf -7)")
    assert res.output.strip() == "0"


def test_tree_check_runs_both_routes(runner):
    res = invoke(runner, "tree", "--check", "--input", EX7, "--json")
    blob = json.loads(res.output)
    assert blob["scan"] == blob["brute"] == 11


def test_tree_distributivity_gate(runner):
    res = invoke(runner, "tree", "--semiring", "plus-times", "--monad", "set",
                 "--input", EX7)
    assert res.exit_code == 3
    res = invoke(runner, "tree", "--semiring", "plus-times", "--monad", "set",
                 "--force", "--input", EX7)
    assert res.exit_code == 0


def test_tree_parse_error_status(runner):
    assert invoke(runner, "tree", "--input", "(fork 1").exit_code == 2
    assert invoke(runner, "tree", "--shape", "list", "--input", "(leaf 2)").exit_code == 2


def test_prune_fixtures(runner):
    res = invoke(runner, "prune", "--count", "--input", EX7)
    assert res.output.strip() == "11"
    res = invoke(runner, "prune", "--input", "(leaf 2)")
    assert res.output.strip() == "<E, (leaf 2)>"
    res = invoke(runner, "prune", "--shape", "list", "--count",
                 "--input", "(cons 1 (cons 2 nil))")
    assert res.output.strip() == "4"


def test_prune_json(runner):
    res = invoke(runner, "prune", "--input", "(leaf 2)", "--json")
    blob = json.loads(res.output)
    assert blob == {"kind": "bag", "items": ["E", "(leaf 2)"]}


def test_laws_single_id_with_witness(runner):
    res = invoke(runner, "laws", "--id", "set-plus-nonidempotent", "--trials", "500")
    assert res.exit_code == 0
    assert "witness" in res.output


def test_laws_unknown_id(runner):
    assert invoke(runner, "laws", "--id", "nosuch").exit_code == 2


def test_laws_json_deterministic(runner):
    args = ["laws", "--seed", "42", "--trials", "30", "--json"]
    a = runner.invoke(main, args, catch_exceptions=False).output
    b = runner.invoke(main, args, catch_exceptions=False).output
    assert a == b
    blob = json.loads(a)
    assert all(r["ok"] for r in blob)


def test_laws_subset_exit_zero(runner):
    res = invoke(runner, "laws", "--id", "mss-chain", "--id", "horner-list",
                 "--trials", "40")
    assert res.exit_code == 0


def test_bench_single_row(runner):
    res = invoke(runner, "bench", "--sizes", "100", "--algos", "linear", "--json")
    rows = json.loads(res.output)
    assert len(rows) == 1 and rows[0]["algo"] == "linear" and rows[0]["n"] == 100


def test_bench_usage_errors(runner):
    assert invoke(runner, "bench", "--sizes", "800,400").exit_code == 2
    assert invoke(runner, "bench", "--sizes", "0").exit_code == 2
    assert invoke(runner, "bench", "--algos", "warp").exit_code == 2


def test_bench_budget_exceeded(runner):
    res = invoke(runner, "bench", "--sizes", "400,800", "--algos", "spec",
                 "--budget", "0.05")
    assert res.exit_code == 6


def test_bench_assert_ordering(runner):
    res = invoke(runner, "bench", "--sizes", "100,200", "--seed", "7", "--assert")
    assert res.exit_code == 0, res.output
    assert len(res.output.strip().splitlines()) == 6
