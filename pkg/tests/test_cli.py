import subprocess
import sys

import pytest

from cellrook.cli import main
from cellrook.grid import format_collection
from cellrook.rook import board
from oracles import RING, SQUARE


@pytest.fixture
def shapes_file(tmp_path):
    path = tmp_path / "in.txt"
    path.write_text("\n".join(format_collection(P) for P in (board(3, 4), SQUARE, RING)) + "\n")
    return path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out.splitlines(), out.err


def test_enumerate(capsys, tmp_path):
    code, out, _ = run(capsys, "enumerate", "--kind", "polyomino", "--rank", 4, "--count-only")
    assert code == 0 and out == ["5"]
    code, out, _ = run(capsys, "enumerate", "--kind", "collection", "--rank", 3)
    assert len(out) == 5
    dest = tmp_path / "c3.txt"
    run(capsys, "enumerate", "--kind", "collection", "--rank", 3, "--out", dest)
    assert dest.read_text().splitlines() == out


def test_rook(capsys, shapes_file):
    code, out, _ = run(capsys, "rook", "--input", shapes_file)
    assert code == 0 and out[0].split("\t")[1] == "1,12,36,24"
    _, out, _ = run(capsys, "rook", "--input", shapes_file, "--number")
    assert out[0].split("\t")[1] == "3"
    _, out, _ = run(capsys, "rook", "--input", shapes_file, "--polynomial", "--number")
    assert out[0].split("\t")[1:] == ["1,12,36,24", "3"]


def test_switch(capsys, shapes_file):
    _, out, _ = run(capsys, "switch", "--input", shapes_file)
    assert out[0].split("\t")[1:] == ["1,12,18,4", "3"]
    assert out[1].split("\t")[1:] == ["1,4,1", "2"]


def test_ideal(capsys, shapes_file):
    _, out, _ = run(capsys, "ideal", "--input", shapes_file, "--order", "rev", "--sharp")
    assert [line.split("\t")[1] for line in out] == ["true", "true", "true"]
    _, out, _ = run(capsys, "ideal", "--input", shapes_file, "--order", "lex", "--initial")
    assert len(out[1].split("\t")[1].split("; ")) == 9
    _, out, _ = run(capsys, "ideal", "--input", shapes_file, "--basis")
    assert " - " in out[1]


def test_hpoly(capsys, shapes_file):
    _, out, _ = run(capsys, "hpoly", "--input", shapes_file, "--order", "lex")
    assert out[0].split("\t")[1:] == ["1,12,18,4", "8", "3"]


def test_convex_h(capsys, shapes_file):
    _, out, _ = run(capsys, "convex-h", "--input", shapes_file)
    assert out[0].split("\t")[1:] == ["1,12,18,4", "certified"]
    # the ring is not convex: pipeline value, flagged
    assert out[2].split("\t")[1:] == ["1,8,16,8,1", "uncertified"]


def test_verify_report_and_figure(capsys, tmp_path):
    report = tmp_path / "rep.tsv"
    dataset = tmp_path / "p5.txt"
    code, _, _ = run(capsys, "verify", "--kind", "polyomino", "--rank", 5,
                     "--dataset", dataset, "--report", report, "--jobs", 2)
    assert code == 0
    assert dataset.exists() and len(dataset.read_text().splitlines()) == 12
    assert report.read_text().splitlines()[-1] == "OK 12"
    png = report.with_suffix(".png")
    assert png.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"

    # second run reads the dataset back
    code, out, _ = run(capsys, "verify", "--kind", "polyomino", "--rank", 5, "--dataset", dataset)
    assert code == 0 and out[-1] == "OK 12" and len(out) == 13


def test_verify_resume(capsys, tmp_path):
    ckpt = tmp_path / "c.json"
    run(capsys, "verify", "--kind", "collection", "--rank", 3, "--checkpoint", ckpt)
    code, out, _ = run(capsys, "verify", "--kind", "collection", "--rank", 3, "--resume", ckpt)
    assert code == 0 and out[-1] == "OK 5"


def test_bad_input_reports_error(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("{{{1,1},{3,3}}}\n")
    code, _, err = run(capsys, "rook", "--input", bad)
    assert code == 2 and "bad.txt:1" in err


def test_module_entry_point(shapes_file):
    res = subprocess.run(
        [sys.executable, "-m", "cellrook", "switch", "--input", str(shapes_file)],
        capture_output=True, text=True, check=True,
    )
    assert res.stdout.splitlines()[0].endswith("\t1,12,18,4\t3")
