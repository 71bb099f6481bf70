import json
import subprocess
import sys

import pytest

from hopfext.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_center_of_b(capsys):
    code, out, _ = run(capsys, "center", "--object", "B", "--zeta", "1")
    data = json.loads(out)
    assert code == 0
    assert data["dim"] == 11
    assert data["zeta"] == "1" and data["failures"] == []
    assert set(data) >= {"command", "variant", "paper_anchor"}


def test_subalgebras_normal_flags_negative_zeta(capsys):
    code, out, _ = run(capsys, "subalgebras", "--object", "B", "--dim", "8", "--zeta", "-i")
    data = json.loads(out)
    assert code == 0
    assert data["zeta"] == "-i"
    assert [e["name"] for e in data["subalgebras"]] == ["M1", "M2", "M3"]
    assert data["normal"] == [False, True, False]


def test_output_is_deterministic(capsys, tmp_path):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["grouplikes", "--zeta", "i", "--output", str(first)]) == 0
    assert main(["grouplikes", "--zeta", "i", "--output", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()
    assert json.loads(first.read_text())["grouplikes"]["count"] == 8


def test_isomorphic(capsys):
    code, out, _ = run(capsys, "isomorphic", "--from", "Bprime", "--to", "B", "--zeta", "i")
    data = json.loads(out)
    assert code == 0 and data["isomorphism"] is True
    code, out, _ = run(capsys, "isomorphic", "--from", "Hd11", "--to", "N", "--zeta", "-1")
    assert code == 0 and json.loads(out)["bijective"] is True


def test_grothendieck(capsys):
    code, out, _ = run(capsys, "grothendieck", "--zeta", "i")
    data = json.loads(out)
    assert code == 0 and data["commutative"] is True
    assert data["dims"]["rho"] == 4
    assert set(data["products"]["pi1.pi1"].split(" + ")) == {"1", "chi1", "chi2", "chi1*chi2"}


def test_dump_hd11(capsys, tmp_path):
    path = tmp_path / "hd11.json"
    assert main(["dump", "--object", "Hd11", "--output", str(path)]) == 0
    data = json.loads(path.read_text())
    assert data["object"] == "Hd11"
    assert len(data["structure"]["basis"]) == 16


def test_dump_yd_object(capsys):
    code, out, _ = run(capsys, "dump", "--object", "C", "--zeta", "-1")
    assert code == 0 and json.loads(out)["structure"]["dim"] == 4


def test_yd_object_rejected_by_hopf_commands(capsys):
    code, _, err = run(capsys, "center", "--object", "A")
    assert code == 2 and "Yetter-Drinfel'd" in err


def test_unknown_object_exits_2(capsys):
    code, _, err = run(capsys, "center", "--object", "Nope")
    assert code == 2 and "unknown object" in err


def test_bad_zeta_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["center", "--zeta", "2"])
    assert exc.value.code == 2


def test_bad_dim_exits_2(capsys):
    code, _, _ = run(capsys, "subalgebras", "--dim", "5")
    assert code == 2
    code, _, _ = run(capsys, "subalgebras")
    assert code == 2


def test_unsupported_isomorphism_pair(capsys):
    code, _, _ = run(capsys, "isomorphic", "--from", "B", "--to", "N")
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hopfext.cli", "center", "--object", "U", "--zeta", "-1"],
                          capture_output=True, text=True, timeout=300)
    assert proc.returncode == 0, proc.stderr
    assert json.loads(proc.stdout)["dim"] == 2
