"""Command-line behavior: formats, determinism, exit codes."""

import json

import pytest

from comptri.cli import main


def run(capsys, *args):
    code = main(list(args))
    out, err = capsys.readouterr()
    return code, out, err


def test_transform_csv(capsys):
    code, out, err = run(capsys, "transform", "--preset", "ones", "--m", "2", "--N", "5")
    assert code == 0
    assert out == "1,3,9,27,81\n"


def test_transform_fib(capsys):
    code, out, _ = run(capsys, "transform", "--preset", "fib", "--m", "1", "--N", "5")
    assert code == 0
    assert out == "1,2,3,5,8\n"


def test_transform_depth_zero_echoes_seed(capsys):
    code, out, _ = run(capsys, "transform", "--preset", "two_three", "--m", "0", "--N", "6")
    assert code == 0
    assert out == "0,1,1,0,0,0\n"


def test_transform_json(capsys):
    code, out, _ = run(capsys, "transform", "--preset", "ones", "--m", "2", "--N", "4", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc == {"seed": "ones", "m": 2, "N": 4, "values": ["1", "3", "9", "27"]}


def test_transform_bfile(capsys):
    code, out, _ = run(capsys, "transform", "--preset", "fib", "--N", "4", "--format", "bfile")
    assert code == 0
    assert out == "1 1\n2 2\n3 3\n4 5\n"


def test_transform_custom_seed_defaults_length(capsys):
    code, out, _ = run(capsys, "transform", "--seed", "1,2,3")
    assert code == 0
    assert out == "1,3,8\n"


def test_triangle_csv(capsys):
    code, out, _ = run(capsys, "triangle", "--preset", "ones", "--m", "1", "--N", "3")
    assert code == 0
    assert out == "n,k,value\n1,1,1\n2,1,1\n2,2,1\n3,1,1\n3,2,2\n3,3,1\n"


def test_triangle_json(capsys):
    code, out, _ = run(capsys, "triangle", "--preset", "fib", "--m", "2", "--N", "4", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["seed"] == "fib"
    assert doc["m"] == 2 and doc["N"] == 4
    assert doc["rows"] == [["1"], ["2", "1"], ["3", "4", "1"], ["5", "10", "6", "1"]]


def test_triangle_bfile(capsys):
    code, out, _ = run(capsys, "triangle", "--preset", "ones", "--N", "3", "--format", "bfile")
    assert code == 0
    assert out == "1 1\n2 1\n3 1\n4 1\n5 2\n6 1\n"


def test_triangle_single_entry(capsys):
    code, out, _ = run(capsys, "triangle", "--preset", "natural", "--m", "1", "--N", "1")
    assert code == 0
    assert out == "n,k,value\n1,1,1\n"


def test_triangle_all_algorithms_agree(capsys):
    code_all, out_all, err = run(capsys, "triangle", "--preset", "odd", "--m", "3", "--N", "10", "--algo", "all")
    code_one, out_one, _ = run(capsys, "triangle", "--preset", "odd", "--m", "3", "--N", "10")
    assert code_all == 0 and err == ""
    assert out_all == out_one


def test_triangle_custom_seed(capsys):
    code, out, _ = run(capsys, "triangle", "--seed", "1,1", "--m", "1", "--N", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["seed"] == [1, 1]
    assert doc["rows"] == [["1"], ["1", "1"]]


def test_json_and_csv_carry_identical_values(capsys):
    _, csv_out, _ = run(capsys, "triangle", "--preset", "ge2", "--m", "2", "--N", "6")
    _, json_out, _ = run(capsys, "triangle", "--preset", "ge2", "--m", "2", "--N", "6", "--format", "json")
    from_csv = [line.split(",")[2] for line in csv_out.splitlines()[1:]]
    from_json = [v for row in json.loads(json_out)["rows"] for v in row]
    assert from_csv == from_json


def test_output_is_deterministic(capsys):
    first = run(capsys, "triangle", "--preset", "natural", "--m", "2", "--N", "8", "--format", "json")
    second = run(capsys, "triangle", "--preset", "natural", "--m", "2", "--N", "8", "--format", "json")
    assert first == second


def test_oracle_all_match(capsys):
    code, out, _ = run(capsys, "oracle", "--preset", "fib", "--m", "2", "--N", "6")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,k,engine,oracle,match"
    assert len(lines) == 1 + 21
    assert all(line.endswith(",ok") for line in lines[1:])


def test_oracle_ge2_starts_past_three(capsys):
    code, out, _ = run(capsys, "oracle", "--preset", "ge2", "--m", "1", "--N", "6")
    assert code == 0
    first = out.splitlines()[1]
    assert first.startswith("4,1,")


def test_oracle_rejects_custom(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["oracle", "--preset", "custom", "--seed", "1,1", "--N", "4"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_oracle_budget_exit(capsys):
    code, out, err = run(capsys, "oracle", "--preset", "fib", "--m", "1", "--N", "10", "--budget", "10")
    assert code == 3
    assert "budget" in err
    assert out.startswith("n,k,engine,oracle,match")


def test_usage_errors(capsys):
    for argv in (
        ["transform", "--m", "1"],
        ["transform", "--preset", "ones"],
        ["transform", "--preset", "custom"],
        ["transform", "--preset", "ones", "--seed", "1,2", "--N", "3"],
        ["transform", "--seed", "1,2,x"],
        ["transform", "--preset", "nope", "--N", "3"],
        ["triangle", "--preset", "ones", "--N", "80"],
        ["triangle", "--preset", "ones", "--N", "4", "--format", "xml"],
        ["verify", "--suite", "nonexistent"],
    ):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2
        capsys.readouterr()


def test_transform_negative_m(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["transform", "--preset", "ones", "--m", "-1", "--N", "3"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_triangle_depth_zero_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["triangle", "--preset", "ones", "--m", "0", "--N", "3"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_verify_single_suite(capsys):
    code, out, err = run(capsys, "verify", "--suite", "chebyshev", "--max", "8")
    assert code == 0
    assert out.splitlines()[0].startswith("chebyshev:")
    assert out.splitlines()[-1].startswith("PASS:")
    assert err == ""


def test_verify_all_suites_small(capsys):
    code, out, _ = run(capsys, "verify", "--max", "6")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 8
    assert lines[-1].startswith("PASS:")
