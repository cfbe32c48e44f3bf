"""End-to-end CLI behavior: exit codes, reports and deterministic output."""

import json

import pytest

from schurmann import KPairCocycle, schurmann_functional
from schurmann.cli import main
from schurmann.serialize import (
    cocycle_to_json,
    functional_to_json,
    presentation_to_json,
    two_cocycle_to_json,
)


@pytest.fixture
def run(capsys):
    def _run(*argv):
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run


@pytest.fixture
def write(tmp_path):
    def _write(name, obj):
        path = tmp_path / name
        path.write_text(json.dumps(obj))
        return str(path)

    return _write


@pytest.fixture
def files(write, u2, o3, eta_sym_u2, eta_asym_u2):
    out = {
        "pres_u2": write("pres_u2.json", presentation_to_json(u2)),
        "pres_o3": write("pres_o3.json", presentation_to_json(o3)),
        "asym": write("asym.json", cocycle_to_json(eta_asym_u2)),
        "sym": write("sym.json", cocycle_to_json(eta_sym_u2)),
        "psi": write(
            "psi.json", functional_to_json(schurmann_functional(eta_sym_u2))
        ),
        "kpair": write(
            "kpair.json", two_cocycle_to_json(KPairCocycle(eta_asym_u2, eta_asym_u2))
        ),
    }
    bad = cocycle_to_json(eta_asym_u2)
    bad["W"] = [[bad["V"][j][k] for j in range(2)] for k in range(2)]
    out["badW"] = write("badw.json", bad)
    out["badscalar"] = write(
        "badscalar.json", {"kind": "u_q", "d": 2, "q_diag": ["1/0", "1"]}
    )
    return out


def test_validate_ok(run, files):
    code, out, _ = run("validate", "--input", files["pres_u2"])
    assert code == 0
    assert "valid" in out


def test_validate_names_violated_relations(run, files):
    code, out, _ = run("validate", "--input", files["badW"])
    assert code == 1
    assert "violated relations" in out
    assert "uu*(1,1)" in out


def test_malformed_scalar_is_input_error(run, files):
    code, _, err = run("validate", "--input", files["badscalar"])
    assert code == 2
    assert "1/0" in err


def test_missing_input_flag(run):
    code, _, err = run("check", "gf")
    assert code == 2
    assert "requires --input" in err


def test_unreadable_file(run):
    code, _, err = run("validate", "--input", "/does/not/exist.json")
    assert code == 2
    assert "cannot read" in err


def test_invalid_json_file(run, tmp_path):
    p = tmp_path / "broken.json"
    p.write_text("{not json")
    code, _, err = run("validate", "--input", str(p))
    assert code == 2
    assert "invalid JSON" in err


def test_wrong_shape_rejected(run, files):
    code, _, err = run("check", "gf", "--input", files["pres_u2"])
    assert code == 2
    assert "expected a cocycle" in err


def test_check_gf_negative_prints_both_matrices(run, files):
    code, out, _ = run("check", "gf", "--input", files["asym"])
    assert code == 1
    assert "gf exists: false" in out
    assert "b_tilde:" in out
    assert "b transpose:" in out
    # the exact offending matrices, column aligned
    assert "[    1  1*i ]" in out
    assert "[    2  1*i ]" in out


def test_check_gf_positive(run, files):
    code, out, _ = run("check", "gf", "--input", files["sym"])
    assert code == 0
    assert "gf exists: true" in out


def test_check_real_negative_with_witness(run, files):
    code, out, _ = run("check", "real", "--input", files["asym"])
    assert code == 1
    assert "real: false" in out
    assert "u[1,1]" in out and "u[1,2]" in out


def test_check_h1_dimension(run, files):
    code, out, _ = run("check", "h1", "--input", files["pres_o3"])
    assert code == 0
    assert out.strip() == "h1 dimension: 3"


def test_check_h1_json(run, files):
    code, out, _ = run("check", "h1", "--input", files["pres_o3"], "--json")
    assert code == 0
    assert json.loads(out) == {"dimension": 3}


def test_check_lk(run, files):
    code, out, _ = run("check", "lk", "--input", files["psi"])
    assert code == 0
    assert "decomposable: true" in out


def test_check_psd(run, files):
    code, out, _ = run("check", "psd", "--input", files["psi"])
    assert code == 0
    assert "psd true" in out


def test_check_defect(run, files):
    code, out, _ = run("check", "defect", "--input", files["kpair"])
    assert code == 0
    assert "unitary defect:" in out
    assert "flavor check (trace zero): pass" in out


def test_basis_listing(run, files):
    code, out, _ = run("basis", "--input", files["pres_u2"])
    assert code == 0
    assert "3 classes" in out
    for label in ("K_1_2", "K_2_1", "K_p_1"):
        assert label in out


def test_primitive_obstructed_prints_defect(run, files):
    code, out, _ = run("primitive", "--input", files["kpair"])
    assert code == 1
    assert "not a coboundary" in out
    assert "[ -1  0 ]" in out


def test_class_coords(run, files):
    code, out, _ = run("class-coords", "--input", files["kpair"])
    assert code == 0
    assert "flavor: unitary" in out
    assert "K_p_1: 1" in out


def test_solve_cocycles_deterministic(run, files):
    code1, out1, _ = run("solve-cocycles", "--input", files["pres_u2"])
    code2, out2, _ = run("solve-cocycles", "--input", files["pres_u2"])
    assert code1 == code2 == 0
    assert out1 == out2
    assert "dimension: 4" in out1


def test_solve_cocycles_json(run, files):
    code, out, _ = run("solve-cocycles", "--input", files["pres_u2"], "--json")
    assert code == 0
    data = json.loads(out)
    assert data["dimension"] == 4
    assert len(data["basis"]) == 4


def test_reproduce_paper_short_pool(run):
    code1, out1, _ = run("reproduce-paper", "--max-word-len", "2")
    code2, out2, _ = run("reproduce-paper", "--max-word-len", "2")
    assert code1 == code2 == 0
    assert out1 == out2
    assert "checks passed" in out1
    assert "FAIL" not in out1
