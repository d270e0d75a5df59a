import json

import pytest

from cycloden.cli import main


def run_cli(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_density_command(capsys):
    code, out, _ = run_cli(capsys, "density", "--conductor", "8", "--ell", "2",
                           "--gens", "12,18")
    assert code == 0
    doc = json.loads(out)
    assert doc["density"] == "1/56"
    assert doc["path"] == "closed-form-cyclic"
    assert doc["d"] == [0, 1] and doc["h"] == [0, 0]
    assert abs(doc["density_decimal"] - 1 / 56) < 1e-12


def test_params_command(capsys):
    code, out, _ = run_cli(capsys, "params", "--conductor", "1", "--ell", "3",
                           "--gens", "12,18")
    assert code == 0
    doc = json.loads(out)
    assert doc["d"] == [0, 1] and doc["h"] == [0, 0]
    assert doc["unimodular"] is True
    assert doc["prescreen"] == "verified"


def test_bracket_command(capsys):
    code, out, _ = run_cli(capsys, "bracket", "--conductor", "1", "--ell", "3",
                           "--gens", "12,18", "--terms", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["lower"] == "1/2" and doc["upper"] == "1"


def test_degree_command(capsys):
    code, out, _ = run_cli(capsys, "degree", "--conductor", "1", "--ell", "3",
                           "--gens", "12,18", "--m", "2", "--n", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["total_degree"] == 162
    assert doc["kummer_degree"] == 27


def test_structure_command(capsys):
    code, out, _ = run_cli(capsys, "structure", "--conductor", "1", "--ell", "3",
                           "--gens", "12,18", "--n", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["delta"] == [2, 1] and doc["total_valuation"] == 3
    assert doc["index"] == 27


def test_valuation_command(capsys):
    code, out, _ = run_cli(capsys, "valuation", "--conductor", "1", "--ell", "3",
                           "--gens", "2", "--n", "1")
    assert code == 0
    assert json.loads(out)["density"] == "1/4"


def test_multi_command(capsys):
    code, out, _ = run_cli(capsys, "multi", "--conductor", "1", "--ell", "3",
                           "--gens", "2,5", "--valuations", "1,1")
    assert code == 0
    doc = json.loads(out)
    assert doc["density"] == "2/13"
    assert doc["folded_zero_indices"] == []


def test_verify_command(capsys):
    code, out, _ = run_cli(capsys, "verify", "--conductor", "1", "--ell", "2",
                           "--gens", "2", "--bound", "5000")
    assert code == 0
    doc = json.loads(out)
    assert doc["exact"] == "7/24"
    assert doc["total"] == 669  # pi(5000)
    assert doc["bound"] == 5000 and doc["convention"] == "all"


def test_exit_code_usage(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["density", "--conductor", "8"])  # missing --ell
    assert exc.value.code == 1


def test_exit_code_parse_error(capsys):
    code, _, err = run_cli(capsys, "density", "--conductor", "8", "--ell", "2",
                           "--gens", "12,+18")
    assert code == 1
    assert "position" in err


def test_exit_code_unsupported_field(capsys):
    code, _, err = run_cli(capsys, "density", "--conductor", "0", "--ell", "2",
                           "--gens", "2")
    assert code == 2


def test_exit_code_envelope(capsys):
    code, _, err = run_cli(capsys, "density", "--conductor", "32", "--ell", "2",
                           "--gens", "2")
    assert code == 2 and "--force" in err
    # the envelope is overridable
    code, out, _ = run_cli(capsys, "density", "--conductor", "32", "--ell", "2",
                           "--gens", "7", "--force")
    assert code == 0


def test_exit_code_dependent_generators(capsys):
    code, _, err = run_cli(capsys, "density", "--conductor", "1", "--ell", "2",
                           "--gens", "2,4")
    assert code == 3 and "dependent" in err


def test_exit_code_resource_cap(capsys):
    gens = ",".join(str(p) for p in (2, 3, 5, 7, 11, 13, 17))
    code, _, err = run_cli(capsys, "density", "--conductor", "1", "--ell", "7",
                           "--gens", gens, "--force")
    assert code == 4


def test_seed_changes_nothing_semantic(capsys):
    _, out1, _ = run_cli(capsys, "density", "--conductor", "8", "--ell", "2",
                         "--gens", "12,18*z", "--seed", "1")
    _, out2, _ = run_cli(capsys, "density", "--conductor", "8", "--ell", "2",
                         "--gens", "12,18*z", "--seed", "99")
    assert json.loads(out1)["density"] == json.loads(out2)["density"] == "1/448"
