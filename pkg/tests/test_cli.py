import json

import pytest

from sl2sym.cli import build_parser, format_terms, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_act_rho1_lower(capsys):
    code, out, err = run_cli(
        capsys, "act", "--rep", "rho1", "--op", "lower", "--n", "3",
        "--expr", "s[2,1]",
    )
    assert code == 0 and not err
    assert out.strip() == "-2*s[2] - 4*s[1,1]"


def test_act_json_document(capsys):
    argv = [
        "act", "--rep", "rho1", "--op", "lower", "--n", "3",
        "--expr", "s[2,1]", "--json",
    ]
    code, out, _ = run_cli(capsys, *argv)
    assert code == 0
    doc = json.loads(out)
    assert doc["basis"] == "schur"
    assert doc["n"] == 3
    assert doc["terms"] == [
        {"coefficient": "-2", "partition": [2]},
        {"coefficient": "-4", "partition": [1, 1]},
    ]
    assert doc["metadata"]["command"] == "act"
    # byte stability across repeated invocations
    code2, out2, _ = run_cli(capsys, *argv)
    assert code2 == 0 and out2 == out


def test_act_tilde_and_kerov(capsys):
    code, out, _ = run_cli(
        capsys, "act", "--rep", "tilde", "--op", "cartan", "--n", "3", "--d", "6",
        "--expr", "y[]",
    )
    assert code == 0
    assert out.strip() == "-18*y[]"

    code, out, _ = run_cli(
        capsys, "act", "--rep", "kerov", "--op", "U", "--n", "1",
        "--z", "1/2", "--zprime", "-3", "--expr", "y[1]",
    )
    assert code == 0
    assert out.strip() == "3/2*y[2] - 1/2*y[1,1]"


def test_act_flag_validation(capsys):
    code, _, err = run_cli(
        capsys, "act", "--rep", "rho2", "--op", "lower", "--n", "2",
        "--expr", "s[1]",
    )
    assert code == 2 and "--d" in err

    code, _, err = run_cli(
        capsys, "act", "--rep", "rho1", "--op", "U", "--n", "2", "--expr", "s[1]",
    )
    assert code == 2 and "not valid" in err

    code, _, err = run_cli(
        capsys, "act", "--rep", "rho1", "--op", "lower", "--n", "2",
        "--expr", "s[1,2]",
    )
    assert code == 2 and "position" in err

    code, _, err = run_cli(
        capsys, "act", "--rep", "rho1", "--op", "lower", "--n", "2",
        "--expr", "e[3]",
    )
    assert code == 2 and "e[3]" in err


def test_unknown_flags_exit_2():
    with pytest.raises(SystemExit) as exc:
        build_parser().parse_args(["act", "--bogus"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        build_parser().parse_args(["decompose"])
    assert exc.value.code == 2


def test_decompose_finite(capsys):
    code, out, _ = run_cli(capsys, "decompose", "--n", "3", "--d", "2")
    assert code == 0
    assert out.strip() == "V[2] + V[6]"

    code, out, _ = run_cli(capsys, "decompose", "--n", "3", "--d", "2", "--json")
    doc = json.loads(out)
    assert doc["multiplicities"] == [[2, 1], [6, 1]]

    code, out, _ = run_cli(capsys, "decompose", "--n", "3", "--d", "6", "--json")
    doc = json.loads(out)
    assert doc["multiplicities"] == [
        [2, 1], [6, 2], [8, 1], [10, 1], [12, 1], [14, 1], [18, 1],
    ]


def test_decompose_graded(capsys):
    code, out, _ = run_cli(
        capsys, "decompose", "--n", "3", "--max-weight", "10", "--json"
    )
    assert code == 0
    doc = json.loads(out)
    assert [m for _, m in doc["multiplicities"]] == [1, 0, 1, 1, 1, 1, 2, 1, 2, 2, 2]

    code, _, err = run_cli(
        capsys, "decompose", "--n", "3", "--d", "2", "--max-weight", "4"
    )
    assert code == 2 and "exactly one" in err


def test_character(capsys):
    code, out, _ = run_cli(capsys, "character", "--n", "2", "--d", "2", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["exponents"] == [[-4, 1], [-2, 1], [0, 2], [2, 1], [4, 1]]


def test_kernel_commands(capsys):
    code, out, _ = run_cli(capsys, "kernel", "--rep", "rho2", "--n", "3", "--d", "6")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 8
    assert lines[0] == "weight -18: s[]"

    code, out, _ = run_cli(
        capsys, "kernel", "--rep", "rho1", "--n", "2", "--max-degree", "4", "--json"
    )
    doc = json.loads(out)
    assert [v["weight"] for v in doc["vectors"]] == [0, 4, 8]

    code, _, err = run_cli(capsys, "kernel", "--rep", "rho2", "--n", "2")
    assert code == 2 and "--d" in err


def test_verify_suite(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "identities")
    assert code == 0
    assert "PASS identities/odd power-sum identity (m=1..8)" in out
    assert "checks passed" in out


def test_format_terms():
    from fractions import Fraction

    items = [((2,), Fraction(-2)), ((1, 1), Fraction(-4))]
    assert format_terms(items, "s") == "-2*s[2] - 4*s[1,1]"
    assert format_terms([], "s") == "0"
    assert format_terms([((), Fraction(1, 2))], "y") == "1/2*y[]"
    assert format_terms([((1,), Fraction(1)), ((2,), Fraction(-1))], "s") == "s[1] - s[2]"
