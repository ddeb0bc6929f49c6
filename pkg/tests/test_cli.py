import json

import pytest

from latpath.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_uq(capsys):
    code, out, _ = run(capsys, "count", "--model", "uq", "--l", "3", "--n", "8")
    assert code == 0
    assert out.strip() == '{"l":3,"N":8,"counts":{"0":1,"2":28,"4":13,"6":7,"8":1}}'


def test_count_auxiliary(capsys):
    code, out, _ = run(capsys, "count", "--model", "auxiliary", "--l", "3", "--n", "8")
    assert code == 0 and json.loads(out)["counts"]["2"] == 27


def test_count_level_zero(capsys):
    _, out, _ = run(capsys, "count", "--model", "uq", "--l", "3", "--n", "0")
    assert json.loads(out)["counts"] == {"0": 1}


def test_count_big_integers_are_plain_decimal(capsys):
    _, out, _ = run(capsys, "count", "--model", "unrestricted", "--n", "70")
    assert '"0":112186277816662845432' in out


def test_count_all_levels_and_csv(capsys):
    _, out, _ = run(capsys, "count", "--l", "3", "--n", "2", "--all-levels")
    assert json.loads(out)["levels"] == {"0": {"0": 1}, "1": {"1": 1}, "2": {"0": 1, "2": 1}}
    _, out, _ = run(capsys, "count", "--l", "3", "--n", "2", "--format", "csv")
    assert out.splitlines() == ["l,model,N,M,count", "3,uq,2,0,1", "3,uq,2,2,1"]


def test_count_is_byte_stable(capsys):
    first = run(capsys, "count", "--model", "uq", "--l", "5", "--n", "30")[1]
    second = run(capsys, "count", "--model", "uq", "--l", "5", "--n", "30")[1]
    assert first == second


@pytest.mark.parametrize("argv, expected", [
    (["decompose", "--l", "3", "--n", "6", "--dims"],
     '{"mults":{"0":1,"2":9,"4":4,"6":1},"dim_check":"64","pow2":"64"}'),
    (["decompose", "--l", "5", "--n", "2"], '{"mults":{"0":1,"2":1}}'),
    (["decompose", "--l", "3", "--n", "1"], '{"mults":{"1":1}}'),
])
def test_decompose_examples(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.strip() == expected


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--model", "wall", "--n", "3", "--m", "1")
    data = json.loads(out)
    assert code == 0
    assert sorted(p["word"] for p in data["paths"]) == ["RLR", "RRL"]
    assert data["total"] == 2


def test_enumerate_guard(capsys, monkeypatch):
    code, _, err = run(capsys, "enumerate", "--n", "8", "--seed-guard", "4")
    assert code == 2 and "error" in err
    monkeypatch.setenv("LATPATH_ENUM_GUARD", "3")
    assert run(capsys, "enumerate", "--n", "5")[0] == 2


@pytest.mark.parametrize("argv", [
    ["verify", "--suite", "closed-form", "--l", "3,5,7", "--n-max", "40"],
    ["verify", "--suite", "identities", "--n-max", "30"],
    ["verify", "--suite", "oracle", "--n-max", "14"],
])
def test_verify_examples_pass(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and json.loads(out)["passed"] is True


def test_verify_mismatch_exits_one(capsys):
    code, out, err = run(capsys, "verify", "--suite", "wz", "--n-max", "4")
    assert code == 1
    assert json.loads(out)["passed"] is False
    assert err.startswith("first counterexample: (wz, ")


def test_verify_corrected_certificate(capsys):
    code, _, _ = run(capsys, "verify", "--suite", "wz", "--n-max", "6", "--wz-certificate", "corrected")
    assert code == 0


def test_boundary(capsys):
    code, out, _ = run(capsys, "boundary", "--model", "auxiliary", "--l", "3", "--strip", "2", "--n-max", "6")
    assert code == 0
    pts = json.loads(out)["boundary"]
    assert pts and {x for x, _ in pts} == {2}


@pytest.mark.parametrize("argv", [
    ["count", "--l", "2", "--n", "4"],
    ["count", "--n", "-1"],
    ["count"],
    ["count", "--model", "filter", "--n", "4"],
    ["count", "--l", "3,5", "--n", "4"],
    ["verify", "--suite", "nope"],
])
def test_usage_errors_exit_two(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_argparse_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["count", "--format", "xml"])
    assert exc.value.code == 2
