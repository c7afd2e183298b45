import json
import subprocess
import sys
from pathlib import Path

import pytest

from simplicial_torsion.cli import Report, main

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "data"
GOLDEN = Path(__file__).resolve().parent / "golden"


def run(capsys, *args):
    code = main([str(DATA / a) if (DATA / a).is_file() else a for a in args])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("name, args", [
    ("homology_rp2", ["homology", "rp2.scx"]),
    ("fibers_squash", ["fibers", "edge.scx", "circle.scx", "squash.smap"]),
    ("collapse_disc8", ["collapse", "disc8.scx", "--budget", "1000"]),
    ("cover_circle", ["cover", "circle.scx"]),
    ("torsion_kite", ["torsion", "kite.scx", "sd_kite.scx", "sd_kite_last_vertex.smap", "--trivial-pi", "--n", "5"]),
])
def test_golden(capsys, name, args):
    code, out, _ = run(capsys, *args)
    assert code == 0
    assert out == (GOLDEN / f"{name}.txt").read_text()


def test_homology_lines(capsys):
    assert run(capsys, "homology", "sphere2.scx")[1].startswith("H0=Z H1=0 H2=Z, chi=2\n")
    assert run(capsys, "homology", "point.scx")[1].startswith("H0=Z, chi=1\n")


def test_collapse_messages(capsys):
    assert run(capsys, "collapse", "simplex3.scx")[1] == "collapsed to point in 7 moves\n"
    assert run(capsys, "collapse", "circle.scx", "--budget", "10")[1] == "no free faces\nNOT COLLAPSIBLE\n"
    out = run(capsys, "collapse", "rp2.scx", "--budget", "1")[1]
    assert out.endswith("NOT COLLAPSIBLE\n")


def test_torsion_with_labels(capsys):
    code, out, _ = run(capsys, "torsion", "circle.scx", "circle.scx", "circle_identity.smap", "circle_mod5.slab")
    assert code == 0 and out.startswith("class = 1 (TRIVIAL)")


def test_not_an_equivalence_exits_3(capsys):
    code, out, err = run(capsys, "torsion", "edge.scx", "circle.scx", "squash.smap", "--trivial-pi")
    assert code == 3 and out == ""
    assert err == "error: not a homology equivalence: cone H2 = Z\n"


def test_bad_input_exits_2(capsys, tmp_path):
    bad = tmp_path / "bad.scx"
    bad.write_text("0 1\n0 0\n")
    code, _, err = run(capsys, "homology", str(bad))
    assert code == 2 and f"{bad}:2: repeated vertex" in err

    smap = tmp_path / "bad.smap"
    smap.write_text("0 -> 10\n1 -> 11\n2 -> 12\n")
    code, _, err = run(capsys, "fibers", "edge.scx", "circle.scx", str(smap))
    assert code == 2 and err.startswith("error:")

    slab = tmp_path / "bad.slab"
    slab.write_text("mod 3\n0 1 1\n")
    code, _, err = run(capsys, "torsion", "simplex3.scx", "simplex3.scx", "circle_identity.smap", str(slab))
    assert code == 2


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["torsion", str(DATA / "kite.scx")])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        main(["collapse", str(DATA / "kite.scx"), "--budget", "0"])


def test_check_commands(capsys):
    base = ["check", "kite.scx", "sd_kite.scx", "sd_kite_last_vertex.smap"]
    code, out, _ = run(capsys, *base, "--cover", "sd_kite_half_a.scx", "sd_kite_half_b.scx")
    assert code == 0 and out.splitlines()[0] == "sum formula" and out.endswith("OK\n")
    code, out, _ = run(capsys, *base, "--compose", "sd2_kite.scx", "sd2_kite_last_vertex.smap")
    assert code == 0 and out.splitlines()[0] == "composition formula" and out.endswith("OK\n")


@pytest.mark.parametrize("args", [
    ["homology", "rp2.scx"],
    ["fibers", "edge.scx", "circle.scx", "squash.smap"],
    ["torsion", "kite.scx", "sd_kite.scx", "sd_kite_last_vertex.smap", "--trivial-pi"],
    ["collapse", "kite.scx", "--budget", "100"],
    ["cover", "kite.scx", "--dual-blocks"],
    ["check", "kite.scx", "sd_kite.scx", "sd_kite_last_vertex.smap", "--cover", "sd_kite_half_a.scx", "sd_kite_half_b.scx"],
])
def test_json_round_trip(capsys, args):
    code, out, _ = run(capsys, *args, "--json")
    assert code == 0
    rep = Report.from_json(out)
    assert rep.schema == 1 and rep.command == args[0]
    assert Report.from_json(rep.to_json()) == rep
    assert all(v["digest"].startswith("sha256:") for v in rep.inputs.values())


def test_json_values(capsys):
    rep = Report.from_json(run(capsys, "homology", "rp2.scx", "--json")[1])
    assert rep.result["homology"] == {"0": "Z", "1": "Z/2", "2": "0"}
    rep = Report.from_json(run(capsys, "fibers", "edge.scx", "circle.scx", "squash.smap", "--json")[1])
    assert rep.result["witness"] == [10, 11] and rep.result["locally_acyclic"] is False
    with pytest.raises(ValueError):
        Report.from_json(json.dumps({"schema": 2, "command": "x", "inputs": {}, "result": {}}))


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "simplicial_torsion", "homology", str(DATA / "circle.scx")],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("H0=Z H1=Z, chi=0")
