import json

import pytest

from wfengine.cli import main


def test_compute_json(capsys):
    assert main(["compute", "--n", "1", "--lo", "-3", "--hi", "-1",
                 "--format", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["variables"] == ["t1"]
    assert any(t["exp"] == [-1] for t in out["terms"])


def test_compute_text(capsys):
    assert main(["compute", "--n", "2", "--symmetrized"]) == 0
    assert "window:" in capsys.readouterr().out


def test_verify_subsets(capsys):
    assert main(["verify", "closed-form"]) == 0
    assert main(["verify", "relations"]) == 0
    out = capsys.readouterr().out
    assert "ok" in out and "FAIL" not in out


def test_weight_vector(capsys):
    assert main(["weight-vector", "--n", "1", "--spin", "half",
                 "--format", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["variables"] == ["t1", "z"]


def test_roots_commands(capsys):
    assert main(["roots", "ladder", "--type", "a1", "--word", "0,1",
                 "--count", "4"]) == 0
    assert main(["roots", "verify-ord1", "--type", "a2",
                 "--word", "0,1,2,1", "--height", "6"]) == 0
    assert main(["roots", "verify-shift", "--type", "a1", "--word", "0,1",
                 "--c", "1", "--count", "6"]) == 0


def test_module_validate(capsys):
    assert main(["module", "--dim", "4"]) == 0
    assert "ok" in capsys.readouterr().out


def test_bad_input_exits_2(capsys):
    assert main(["roots", "ladder", "--type", "a1", "--word", "0,1,1",
                 "--count", "4"]) == 2
    with pytest.raises(SystemExit) as e:
        main(["verify", "nonsense"])
    assert e.value.code == 2
