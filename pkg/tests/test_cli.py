import subprocess
import sys

import pytest

from cubepart import _backend
from cubepart.cli import main
from cubepart.partition import Partition, dump_many, load_many, validate


@pytest.fixture(autouse=True)
def restore_backend():
    before = _backend.name()
    yield
    _backend.use(before)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count(capsys):
    assert run(capsys, "count", "--d", "3") == (0, "154\n", "")
    assert run(capsys, "count", "--d", "4", "--dims", "1")[1] == "272\n"
    assert run(capsys, "--backend", "python", "count", "--d", "2", "--dims", "0-1")[1] == "7\n"


def test_matchings(capsys):
    assert run(capsys, "matchings", "--d", "4", "--method", "both")[:2] == (0, "272\n")
    code, out, err = run(capsys, "matchings", "--d", "3", "--progress")
    assert out == "9\n" and "chunk" in err


def test_bounds_csv(capsys):
    code, out, _ = run(capsys, "bounds", "--d", "3")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "quantity,d,log2,exact"
    assert "f,3,7.266787,154" in lines
    assert any(ln.startswith("schrijver,3,") for ln in lines)


def test_encode_decode_roundtrip(tmp_path, capsys):
    parts = [Partition.from_strings(s) for s in (["***"], ["0**", "10*", "110", "111"], ["*00", "*01", "*1*"])]
    src = tmp_path / "p.txt"
    src.write_text(dump_many(parts))
    enc = tmp_path / "e.txt"
    assert run(capsys, "encode", "--in", str(src), "--out", str(enc))[0] == 0
    out = tmp_path / "back.txt"
    assert run(capsys, "decode", "--in", str(enc), "--out", str(out))[0] == 0
    assert load_many(out.read_text()) == parts


def test_decode_rejects(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("d=2;1,2\n")
    code, _, err = run(capsys, "decode", "--in", str(bad))
    assert code == 1 and err.startswith("not a valid encoding")
    bad.write_text("d=2;2,1\n")
    code, _, err = run(capsys, "decode", "--in", str(bad), "--dims", "0,1")
    assert code == 1 and "not a valid encoding" in err
    bad.write_text("garbage\n")
    code, _, err = run(capsys, "decode", "--in", str(bad))
    assert code == 1 and "not a valid encoding" in err


def test_encode_rejects_invalid(tmp_path, capsys):
    f = tmp_path / "p.txt"
    f.write_text("d=2\n0*\n00\n1*\n")
    code, _, err = run(capsys, "encode", "--in", str(f))
    assert code == 1 and "overlap" in err


def test_irreducible_check(tmp_path, capsys):
    f = tmp_path / "p.json"
    f.write_text('[["0*", "1*"], ["00", "01", "1*"]]')
    code, out, _ = run(capsys, "irreducible-check", "--in", str(f))
    lines = out.splitlines()
    assert code == 1
    assert lines[1] == "0,2,true,false,true,"
    assert lines[2] == "1,3,true,true,false,0*"


def test_irreducible_gen_and_check(tmp_path, capsys, seed4):
    out = tmp_path / "gen.txt"
    code, _, err = run(capsys, "irreducible", "gen", "--d", "5", "--limit", "12", "--out", str(out))
    assert code == 0 and "wrote 12" in err
    parts = load_many(out.read_text())
    assert len(parts) == 12
    code, rows, _ = run(capsys, "irreducible", "check", "--in", str(out))
    assert code == 0 and len(rows.splitlines()) == 13


def test_sample_two_cubes(tmp_path, capsys):
    emit = tmp_path / "emit"
    code, out, err = run(capsys, "sample", "two-cubes", "--d", "8", "--alpha", "0.05", "--seed", "3",
                         "--trials", "3", "--emit", str(emit))
    assert code == 0
    assert out.splitlines()[0].startswith("trial,d,chosen")
    assert len(out.splitlines()) == 4 and "mean_removal_fraction" in err
    files = sorted(emit.iterdir())
    assert len(files) == 3
    assert all(validate(load_many(f.read_text())[0]) is True for f in files)
    again = run(capsys, "sample", "two-cubes", "--d", "8", "--alpha", "0.05", "--seed", "3", "--trials", "3")[1]
    assert again == out


def test_sample_nibble(capsys):
    code, out, _ = run(capsys, "sample", "nibble", "--d", "8", "--r", "2", "--seed", "1", "--trials", "2")
    assert code == 0 and len(out.splitlines()) == 3


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--d-max", "2")
    assert code == 0
    rows = out.splitlines()
    assert rows[0] == "quantity,d,value,source,status"
    assert not any(r.endswith(",fail") for r in rows)
    assert "f,5,71319425714,computed,pass" in rows


def test_usage_errors(capsys):
    assert run(capsys, "count", "--d", "9")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["count"])
    assert exc.value.code == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "cubepart", "count", "--d", "2"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "8\n"
