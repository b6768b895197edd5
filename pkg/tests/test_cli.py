import io
import json
import math

import pytest

from auxfield.cli import (
    EXIT_NUMERICAL,
    EXIT_OK,
    EXIT_VALIDATION,
    main,
    parse_system,
    solution_from_dict,
    solution_to_dict,
)
from auxfield.engine import afm_mass
from auxfield.model import BoundCharacter, Kinematics


def run_cli(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def write_spec(tmp_path, payload, name="system.json"):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


LINEAR_SPEC = {
    "N": 3,
    "mass": 1.0,
    "kinematics": "semirelativistic",
    "one_body": [],
    "pairwise": [{"type": "power", "coefficient": 0.2, "exponent": 1.0}],
    "modes": [[0, 0], [0, 0]],
}

HO_SPEC = {
    "N": 3,
    "mass": 1.0,
    "kinematics": "nonrelativistic",
    "pairwise": [{"type": "power", "coefficient": 1.0, "exponent": 2.0}],
    "modes": [[0, 0], [0, 0]],
}

GAUSS_SPEC = {
    "N": 3,
    "mass": 1.0,
    "kinematics": "nonrelativistic",
    "pairwise": [{"type": "gaussian", "depth": 2.0, "range": 0.5}],
    "modes": [[0, 0], [0, 0]],
}


# ---------------------------------------------------------------------------
# parsing and serialization


def test_parse_system_round_trip():
    spec, q = parse_system(LINEAR_SPEC)
    assert spec.n == 3
    assert spec.kinematics is Kinematics.SEMIRELATIVISTIC
    assert q.q == 3.0


def test_solution_dict_round_trip_is_bitwise():
    spec, q = parse_system(LINEAR_SPEC)
    sol = afm_mass(spec, q)
    data = json.loads(json.dumps(solution_to_dict(sol)))
    back = solution_from_dict(data)
    assert back == sol  # dataclass equality covers every float bitwise


# ---------------------------------------------------------------------------
# commands


def test_solve_json_output(tmp_path):
    path = write_spec(tmp_path, LINEAR_SPEC)
    code, text = run_cli(["solve", "--spec", path, "--format", "json"])
    assert code == EXIT_OK
    data = json.loads(text)
    spec, q = parse_system(LINEAR_SPEC)
    assert data["mass"] == pytest.approx(afm_mass(spec, q).mass, rel=1e-12)
    assert set(data) == {"mass", "X0", "mu0", "r0_one", "r0_pair", "bound"}
    assert data["bound"] == "upper"


def test_solve_tsv_and_json_agree_to_15_digits(tmp_path):
    path = write_spec(tmp_path, LINEAR_SPEC)
    _, tsv = run_cli(["solve", "--spec", path, "--format", "tsv"])
    _, js = run_cli(["solve", "--spec", path, "--format", "json"])
    data = json.loads(js)
    parsed = dict(line.split("\t") for line in tsv.strip().splitlines())
    for key, value in data.items():
        if isinstance(value, float):
            assert f"{float(parsed[key]):.15g}" == f"{value:.15g}"
        else:
            assert parsed[key] == value


def test_ho_command_value(tmp_path):
    path = write_spec(tmp_path, HO_SPEC)
    code, text = run_cli(["ho", "--spec", path, "--format", "json"])
    assert code == EXIT_OK
    data = json.loads(text)
    assert data["energy"] == pytest.approx(3.0 * math.sqrt(6.0), rel=1e-12)
    assert data["energy"] == pytest.approx(7.348469, abs=5e-7)


def test_ho_semirelativistic_goes_through_oscillator_mass(tmp_path):
    spec = dict(HO_SPEC, kinematics="semirelativistic")
    path = write_spec(tmp_path, spec)
    code, text = run_cli(["ho", "--spec", path, "--format", "json"])
    assert code == EXIT_OK
    assert json.loads(text)["bound"] == "upper"


def test_baryon_table_reference_row():
    code, text = run_cli(["baryon-table", "--lambda", "0.2", "--alphas", "0.4"])
    assert code == EXIT_OK
    lines = text.strip().splitlines()
    assert lines[0].split("\t") == ["B", "L", "M0", "M1", "M2"]
    assert lines[1].split("\t") == ["0", "0", "2.468", "2.168", "2.168"]
    assert len(lines) == 17


def test_baryon_table_json_full_precision():
    code, text = run_cli(
        ["baryon-table", "--lambda", "0.2", "--alphas", "0.4", "--format", "json"]
    )
    rows = json.loads(text)
    assert len(rows) == 16
    assert rows[0]["M0"] == pytest.approx(2.468, abs=5e-4)
    assert abs(rows[0]["M0"] - round(rows[0]["M0"], 3)) > 0  # not pre-rounded


def test_baryon_table_variant_selection():
    code, text = run_cli(
        ["baryon-table", "--lambda", "0.2", "--alphas", "0.4", "--variant", "m2"]
    )
    assert code == EXIT_OK
    lines = text.strip().splitlines()
    assert lines[0].split("\t") == ["B", "L", "M2"]
    assert lines[3].split("\t") == ["2", "0", "2.811"]


def test_gaussian_command(tmp_path):
    path = write_spec(tmp_path, GAUSS_SPEC)
    code, text = run_cli(["gaussian", "--spec", path, "--format", "json"])
    assert code == EXIT_OK
    data = json.loads(text)
    assert data["g"] == pytest.approx(8.0)
    assert data["g_critical"] == pytest.approx(9.0 * math.e / 6.0, rel=1e-12)
    assert "mass" not in data
    code, text = run_cli(
        ["gaussian", "--spec", path, "--add-rest-mass", "--format", "json"]
    )
    data = json.loads(text)
    assert data["mass"] == pytest.approx(data["energy"] + 3.0, rel=1e-12)


def test_duality_check_passes():
    code, text = run_cli(["duality-check", "--n", "3", "--format", "json"])
    assert code == EXIT_OK
    rows = json.loads(text)
    assert len(rows) == 3
    assert all(row["verdict"] == "match" for row in rows)


def test_verify_matches_oracle(tmp_path):
    path = write_spec(tmp_path, LINEAR_SPEC)
    code, text = run_cli(["verify", "--spec", path, "--format", "json"])
    assert code == EXIT_OK
    data = json.loads(text)
    assert data["verdict"] == "match"
    assert data["relative_gap"] <= 1e-8


# ---------------------------------------------------------------------------
# exit codes and error objects


def test_invalid_exponent_exits_2(tmp_path):
    bad = dict(LINEAR_SPEC, pairwise=[{"type": "power", "coefficient": 1.0, "exponent": -1.5}])
    path = write_spec(tmp_path, bad)
    code, text = run_cli(["solve", "--spec", path, "--format", "json"])
    assert code == EXIT_VALIDATION
    assert json.loads(text)["error"]["type"] == "InvalidExponent"


def test_missing_file_exits_2(tmp_path):
    code, _ = run_cli(["solve", "--spec", str(tmp_path / "nope.json")])
    assert code == EXIT_VALIDATION


def test_numerical_failure_exits_3(tmp_path):
    collapse = dict(
        LINEAR_SPEC,
        one_body=[{"type": "power", "coefficient": 3.0, "exponent": -1.0}],
        pairwise=[],
    )
    path = write_spec(tmp_path, collapse)
    code, text = run_cli(["solve", "--spec", path, "--format", "json"])
    assert code == EXIT_NUMERICAL
    assert json.loads(text)["error"]["type"] == "NoPositiveRoot"


def test_gaussian_below_critical_exits_3(tmp_path):
    weak = dict(GAUSS_SPEC, pairwise=[{"type": "gaussian", "depth": 0.1, "range": 0.5}])
    path = write_spec(tmp_path, weak)
    code, text = run_cli(["gaussian", "--spec", path, "--format", "json"])
    assert code == EXIT_NUMERICAL
    assert json.loads(text)["error"]["type"] == "NoBoundState"
