import json
import subprocess
import sys

import pytest

from nilkahler import algebra, forms, operators
from nilkahler.cli import main
from nilkahler.families import emit
from nilkahler.reproduce import criterion_verdicts

from conftest import claim_results


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, json.loads(out), err


def test_check_semikahler_pass_and_fail(capsys):
    code, rep, _ = run(capsys, "check", "--algebra", "catalog:g3_renamed",
                       "--form", "family:g3.omega_semikahler", "--predicate", "semi-kahler")
    assert code == 0 and rep["holds"]
    code, rep, err = run(capsys, "check", "--algebra", "catalog:g3_renamed",
                         "--form", "family:g3.omega_hermitian", "--predicate", "semi-kahler")
    assert code == 1 and not rep["holds"]
    five = rep["result"]["omega_wedge_domega"]
    assert five["degree"] == 5 and five["terms"]
    assert "fails" in err


def test_check_rotation_on_abelian(tmp_path, capsys):
    J = operators.Endomorphism.from_images(4, {1: {2: 1}, 2: {1: -1}, 3: {4: 1}, 4: {3: -1}})
    path = tmp_path / "J.json"
    path.write_text(operators.dumps(J))
    code, rep, _ = run(capsys, "check", "--algebra", "catalog:abelian_4", "--operator", f"file:{path}",
                       "--predicate", "complex")
    assert code == 0 and rep["result"]["nijenhuis"] == {}
    assert len(rep["inputs"]["operator"]["sha256"]) == 64


def test_check_algebra_from_file(tmp_path, capsys):
    path = tmp_path / "a.json"
    path.write_text(algebra.dumps(algebra.catalog("g1")))
    code, rep, _ = run(capsys, "check", "--algebra", f"file:{path}", "--predicate", "jacobi")
    assert code == 0 and rep["result"]["residual"] == []


@pytest.mark.parametrize("argv", [
    ["--form", "family:g1.omega2?w46=1", "--operator", "family:g1.P_domega2?w46=1",
     "--kind", "para", "--predicate", "compatible"],
    ["--operator", "family:g2.J_nilpotent?psi12=1&psi63=2", "--predicate", "nilpotent-structure"],
    ["--algebra", "catalog:h5_heisenberg_like", "--form", "family:g3.eta", "--predicate", "contact"],
    ["--form", "family:g2.omega0", "--operator", "family:g2.J_nilpotent?psi12=1&psi63=-1/2",
     "--kind", "complex", "--predicate", "ricci-flat"],
    ["--operator", "family:g3.P", "--predicate", "para"],
])
def test_check_predicates_hold(capsys, argv):
    code, rep, _ = run(capsys, "check", *argv)
    assert code == 0, rep


def test_ricci_flat_fails_for_sasaki(capsys):
    code, rep, _ = run(capsys, "check", "--form", "family:g3.omega_hermitian", "--operator",
                       "family:g3.J_sasaki", "--kind", "complex", "--predicate", "ricci-flat")
    assert code == 1 and rep["result"]["scalar"] == "-1"


def test_geometry_examples(capsys):
    code, rep, _ = run(capsys, "geometry", "--form", "family:g2.semikahler_para?w15=1&w24=2&w36=-1",
                       "--operator", "family:g2.P", "--kind", "para")
    assert code == 0 and rep["result"]["flags"]["ricci_flat"]
    code, rep, _ = run(capsys, "geometry", "--form", "family:g3.omega_hermitian",
                       "--operator", "family:g3.J_sasaki", "--kind", "complex")
    assert rep["result"]["scalar"] == "-1"
    code, rep, _ = run(capsys, "geometry", "--algebra", "catalog:g1_magnin",
                       "--form", "family:g1.omega_k4?w12=1&w13=0&w34=1&w36=1",
                       "--operator", "family:g1.J_magnin?xi36=1", "--kind", "complex")
    assert code == 0 and rep["result"]["scalar"] == "1"
    assert rep["inputs"]["form"]["params"] == {"w12": "1", "w13": "0", "w34": "1", "w36": "1"}


def test_hitchin_examples(capsys):
    code, rep, _ = run(capsys, "hitchin", "--form", "family:g1.omega2?w46=2&w12=1&w35=1")
    assert code == 0 and rep["result"]["kind"] == "para" and rep["result"]["lambda"] == "16"
    P = emit("g1.P_domega2", {"w46": 2, "w12": 1, "w35": 1})
    assert rep["result"]["induced_structure"] == operators.matrix_to_strings(P.rows)
    code, rep, _ = run(capsys, "hitchin", "--form", "family:g2.semikahler_general?w12=3&w24=-1")
    assert rep["result"]["kind"] == "degenerate"


def test_hitchin_closed_form(tmp_path, capsys):
    path = tmp_path / "w.json"
    path.write_text(forms.dumps(forms.KForm(6, 2, {(1, 2): 1, (3, 6): 5})))
    code, rep, _ = run(capsys, "hitchin", "--algebra", "catalog:g3_renamed", "--form", f"file:{path}")
    assert code == 0 and rep["result"]["lambda"] == "0"
    assert all(x == "0" for row in rep["result"]["K"] for x in row)


@pytest.mark.parametrize("argv", [
    ["check", "--algebra", "catalog:g9", "--predicate", "jacobi"],
    ["check", "--algebra", "nonsense", "--predicate", "jacobi"],
    ["check", "--algebra", "file:/nonexistent.json", "--predicate", "jacobi"],
    ["check", "--algebra", "catalog:h3", "--form", "family:g2.omega0", "--predicate", "semi-kahler"],
    ["check", "--predicate", "jacobi"],
    ["check", "--form", "family:g1.omega2", "--predicate", "semi-kahler"],
    ["check", "--form", "family:g1.omega2?w46=0", "--predicate", "semi-kahler"],
    ["check", "--form", "family:g2.P", "--predicate", "semi-kahler"],
    ["geometry", "--form", "family:g3.omega_hermitian", "--operator", "family:g2.P", "--kind", "para"],
    ["geometry", "--form", "family:g3.omega_hermitian", "--operator", "family:g3.J_sasaki"],
    ["hitchin", "--algebra", "catalog:h3", "--form", "family:g2.omega0"],
])
def test_input_errors_exit_2(capsys, argv):
    code, rep, err = run(capsys, *argv)
    assert code == 2 and "error" in rep and err.startswith("error")


def test_malformed_json_file(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, rep, _ = run(capsys, "check", "--algebra", f"file:{path}", "--predicate", "jacobi")
    assert code == 2


def test_unknown_predicate_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["check", "--algebra", "catalog:h3", "--predicate", "kahler"])
    assert exc.value.code == 2


def test_reports_are_byte_stable(tmp_path):
    outs = []
    for k in range(2):
        out = tmp_path / f"r{k}.json"
        main(["geometry", "--form", "family:g3.omega_semikahler",
              "--operator", "family:g3.J_family?psi12=1&psi34=-2&psi56=3/2", "--kind", "complex",
              "--out", str(out)])
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]
    assert json.loads(outs[0])["engine_version"]


def test_reproduce_verdicts_stable_across_seed_and_samples(capsys):
    code = main(["reproduce", "--seed", "3", "--samples", "1"])
    out, _ = capsys.readouterr()
    rep = json.loads(out)
    expected = {str(k): v for k, v in criterion_verdicts(claim_results()).items()}
    assert rep["criteria"] == expected
    assert code == (0 if all(expected.values()) else 1)
    assert {c["claim"] for c in rep["claims"]} == {r.claim for r in claim_results()}


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "nilkahler", "check", "--algebra", "catalog:g2",
                           "--predicate", "jacobi"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["holds"] is True
    assert proc.stderr.strip() == "jacobi: holds"
