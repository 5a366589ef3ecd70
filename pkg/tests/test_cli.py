import json
import subprocess
import sys

import pytest

from k3hodge import cli, hilb2, hodge, k3, lattice, serialize
from k3hodge.checks import sample_configs


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_mu_table_csv(capsys):
    code, out, _ = run(capsys, "mu-table", "--format", "csv")
    assert code == 0
    rows = serialize.matrix_from_csv(out)
    assert rows[1][2] == -20 and len(rows) == 22


def test_mu_table_json_round_trip(capsys):
    code, out, _ = run(capsys, "mu-table")
    assert code == 0
    mu = serialize.gram_from_json(json.loads(out))
    assert all(mu[i][j] == mu[j][i] for i in range(22) for j in range(22))
    assert all(mu[i][i] % 2 == 0 for i in range(22))
    assert lattice.matmul(k3.k3_lattice().gram, mu) == lattice.identity(22)


@pytest.mark.parametrize("t, disc", [(1, "84"), (5, "10500")])
def test_generic(capsys, t, disc):
    code, out, _ = run(capsys, "generic", "--t", str(t))
    assert code == 0
    assert json.loads(out)["discriminant"] == disc


def test_generic_csv(capsys):
    code, out, _ = run(capsys, "generic", "--t", "2", "--format", "csv")
    assert code == 0 and serialize.matrix_from_csv(out) == hodge.generic_gram_closed_form(2)


@pytest.mark.parametrize("argv", [
    ["generic", "--t", "0"],
    ["generic", "--t", "x"],
    ["generic"],
    ["generic", "--t", "1", "--bogus"],
    ["frobnicate"],
    [],
    ["mu-table", "--format", "xml"],
])
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 64


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


def test_analyze_matches_generic(capsys, tmp_path):
    path = write(tmp_path, "t2.json", {"pic_gram": [["4"]], "embedding": [serialize.matrix_to_strings(
        k3.generic_surface(2).embedding)[0]], "assume_general": True})
    a = run(capsys, "analyze", path)
    b = run(capsys, "generic", "--t", "2")
    assert a[0] == b[0] == 0 and a[1] == b[1]


def test_analyze_hyperbolic_plane(capsys, tmp_path):
    cfg = sample_configs()["U"]
    path = write(tmp_path, "u.json", serialize.config_to_json(cfg))
    code, out, _ = run(capsys, "analyze", path)
    obj = json.loads(out)
    assert code == 0 and obj["rank"] == 7 and obj["closed_form_match"] is None


def test_analyze_bad_inputs(capsys, tmp_path):
    row = [0] * 22
    row[16] = row[17] = 2
    path = write(tmp_path, "np.json", {"pic_gram": [[8]], "embedding": [row]})
    code, _, err = run(capsys, "analyze", path)
    assert code == 65 and "NotPrimitive" in err

    row = [0] * 22
    row[16] = row[17] = 1
    path = write(tmp_path, "gm.json", {"pic_gram": [[4]], "embedding": [row]})
    code, _, err = run(capsys, "analyze", path)
    assert code == 65 and "GramMismatch" in err

    bad = tmp_path / "broken.json"
    bad.write_text("{not json")
    assert run(capsys, "analyze", str(bad))[0] == 65
    assert run(capsys, "analyze", write(tmp_path, "missing.json", {"pic_gram": [[2]]}))[0] == 65
    assert run(capsys, "analyze", str(tmp_path / "nope.json"))[0] == 65
    code, _, err = run(capsys, "analyze", write(tmp_path, "ng.json", {"t": 1, "assume_general": False}))
    assert code == 65 and "GeneralityRequired" in err
    path = write(tmp_path, "ng2.json", {"pic_gram": [[2]], "embedding": [row[:16] + [1, 1] + [0] * 4],
                                        "assume_general": False})
    code, _, err = run(capsys, "analyze", path)
    assert code == 65 and "GeneralityRequired" in err


def test_pair(capsys, tmp_path):
    code, out, _ = run(capsys, "pair", "qdual", "qdual")
    assert code == 0 and json.loads(out) == {"pairing": "575"}
    path = write(tmp_path, "c2.json", serialize.h4_to_json(hilb2.c2()))
    code, out, _ = run(capsys, "pair", path, "c2")
    assert code == 0 and json.loads(out)["pairing"] == "828"
    assert run(capsys, "pair", "point", str(tmp_path / "missing.json"))[0] == 65


def test_out_flag_and_determinism(capsys, tmp_path):
    target = tmp_path / "report.json"
    assert run(capsys, "generic", "--t", "3", "--out", str(target))[0] == 0
    first = target.read_bytes()
    assert run(capsys, "generic", "--t", "3", "--out", str(target))[0] == 0
    assert target.read_bytes() == first
    assert json.loads(first)["discriminant"] == "2268"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "k3hodge", "generic", "--t", "0"], capture_output=True, text=True)
    assert proc.returncode == 64
    proc = subprocess.run([sys.executable, "-m", "k3hodge", "pair", "point", "point"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and '"1"' in proc.stdout


def test_verify_exit_codes(capsys, monkeypatch):
    from k3hodge import checks

    monkeypatch.setattr(checks, "CHECKS", (checks.check_c2, checks.check_indivisibility))
    code, out, _ = run(capsys, "verify")
    assert code == 0 and out.count("PASS") == 2 and "2/2 checks passed" in out

    def broken():
        return checks.CheckResult("deliberately failing", False, "nope")

    def crashing():
        raise RuntimeError("boom")

    monkeypatch.setattr(checks, "CHECKS", (checks.check_c2, broken, crashing))
    code, out, _ = run(capsys, "verify")
    assert code == 1 and "failed: deliberately failing; crashing" in out


def test_internal_inconsistency_exit(capsys, monkeypatch):
    from k3hodge.errors import InternalInconsistency

    def explode(args):
        raise InternalInconsistency("two routes disagree")

    monkeypatch.setitem(cli.COMMANDS, "mu-table", explode)
    assert run(capsys, "mu-table")[0] == 2
