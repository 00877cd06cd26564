import json

import numpy as np
import pytest

from netlevels.cli import main


def _files(d):
    return {p.name: p.read_bytes() for p in sorted(d.iterdir())}


def test_analyze_triangle(tmp_path, capsys):
    src = tmp_path / "triangle.txt"
    src.write_text("a b\nb c\nc a\n")
    assert main(["analyze", str(src), "--out", str(tmp_path / "out")]) == 0
    out = tmp_path / "out"
    report = json.loads((out / "report.json").read_text())
    assert (report["dataset"], report["N"], report["E"], report["P2P"]) == ("triangle", 3, 3, 3)
    assert report["R_PL_t"] is None and report["R_W_t"] is None
    assert set(_files(out)) == {
        "report.json", "report.csv", "total.ccdf.tsv", "p2c.ccdf.tsv", "p2p.ccdf.tsv",
        "classification.tsv",
    }
    assert (out / "report.csv").read_text() == (
        "dataset,N,E,P2C,P2P,R_PL_t,R_PL_p2c,R_W_p2p,R_W_t\ntriangle,3,3,0,3,,,,\n"
    )
    assert "triangle,3,3,0,3" in capsys.readouterr().out


def test_analyze_fail_on_fit_error(tmp_path):
    src = tmp_path / "triangle.txt"
    src.write_text("a b\nb c\nc a\n")
    assert main(["analyze", str(src), "--out", str(tmp_path), "--fail-on-fit-error"]) == 3


def test_analyze_disconnected(tmp_path):
    src = tmp_path / "two.txt"
    src.write_text("a b\nb c\nc a\nx y\n")
    assert main(["analyze", str(src), "--out", str(tmp_path / "lcc")]) == 0
    report = json.loads((tmp_path / "lcc" / "report.json").read_text())
    assert report["N"] == 3 and report["provenance"]["lcc_reduced"] is True
    assert main(["analyze", str(src), "--strict-connected", "--out", str(tmp_path / "s")]) == 2


def test_analyze_parse_failure(tmp_path):
    src = tmp_path / "bad.txt"
    src.write_text("a b\nc\n")
    assert main(["analyze", str(src), "--out", str(tmp_path)]) == 1
    assert main(["analyze", str(tmp_path / "missing.txt"), "--out", str(tmp_path)]) == 1


def test_analyze_with_truth_and_formats(tmp_path, capsys):
    src = tmp_path / "g.txt"
    src.write_text("h a\nh b\nh c\na b\n")
    truth = tmp_path / "truth.txt"
    truth.write_text("a h P2C\nh b P2C\nc h P2P\nb a P2P\nz q P2C\n")
    out = tmp_path / "json_only"
    assert main(["analyze", str(src), "--truth", str(truth), "--format", "json",
                 "--name", "toy", "--out", str(out)]) == 0
    report = json.loads((out / "report.json").read_text())
    assert report["dataset"] == "toy"
    assert report["agreement"] == {
        "matched": 3, "compared": 4, "agreement_percent": 75.0,
        "missing_in_truth": 0, "unmatched_truth": 1,
    }
    assert not (out / "report.csv").exists()
    assert "agreement: 75.0%" in capsys.readouterr().out

    bad = tmp_path / "bad_truth.txt"
    bad.write_text("a h SIBLING\n")
    assert main(["analyze", str(src), "--truth", str(bad), "--out", str(out)]) == 1


@pytest.mark.parametrize("algo", ["naive", "pruned"])
def test_analyze_is_byte_deterministic(tmp_path, algo):
    rng = np.random.default_rng(0)
    lines = [f"n{int(rng.integers(0, v))} n{v}" for v in range(1, 300)]
    lines += [f"n{a} n{b}" for a, b in rng.integers(0, 300, size=(200, 2))]
    src = tmp_path / "g.txt"
    src.write_text("\n".join(lines) + "\n")
    for run in ("a", "b"):
        assert main(["analyze", str(src), "--ecc-algorithm", algo, "--out", str(tmp_path / run)]) == 0
    assert _files(tmp_path / "a") == _files(tmp_path / "b")


def test_generate_twice_identical(tmp_path):
    args = ["generate", "ba", "--m0", "2", "--m", "1", "--t", "10", "--seed", "7"]
    assert main(args + ["--out", str(tmp_path / "a")]) == 0
    assert main(args + ["--out", str(tmp_path / "b")]) == 0
    a, b = _files(tmp_path / "a"), _files(tmp_path / "b")
    assert a == b
    edges = [ln for ln in a["ba_seed7.edges"].decode().splitlines() if not ln.startswith("#")]
    assert len(edges) == 11
    rep = json.loads(a["ba_seed7.generation.json"])
    assert rep["node_count"] == 12 and rep["config"]["seed"] == 7


def test_generate_invalid_parameters(tmp_path):
    assert main(["generate", "eba", "--p", "0.6", "--q", "0.5", "--t", "10", "--out", str(tmp_path)]) == 1


def test_generate_and_analyze(tmp_path):
    assert main(["generate", "eba", "--p", "0.35", "--q", "0.5", "--m", "1", "--m0", "2",
                 "--t", "3000", "--seed", "3", "--analyze", "--out", str(tmp_path)]) == 0
    report = json.loads((tmp_path / "report.json").read_text())
    assert report["P2C"] + report["P2P"] == report["E"]
    assert report["provenance"]["input"].endswith("eba_seed3.edges")


def test_fit_star_degree_file_fails_precondition(tmp_path, capsys):
    path = tmp_path / "star.deg"
    path.write_text("100\n" + "1\n" * 100)
    assert main(["fit", str(path), "--model", "power-law"]) == 3
    out = json.loads(capsys.readouterr().out)
    assert "error" in out["power_law"]


def test_fit_exact_weibull_file(tmp_path, capsys):
    k = np.arange(1, 201)
    F = np.exp(-((k / 10.0) ** 0.8))
    path = tmp_path / "exact.ccdf.tsv"
    path.write_text("k\tF\n" + "".join(f"{a}\t{b!r}\n" for a, b in zip(k.tolist(), F.tolist())))
    assert main(["fit", str(path), "--model", "weibull"]) == 0
    w = json.loads(capsys.readouterr().out)["weibull"]
    # JSON carries 6 significant digits
    assert w["scale_b"] == pytest.approx(10.0, rel=1e-6)
    assert w["shape_c"] == pytest.approx(0.8, rel=1e-6)
    assert w["r_percent"] == pytest.approx(100.0, abs=1e-6)


def test_fit_degree_list_both_models(tmp_path, capsys):
    path = tmp_path / "deg.txt"
    path.write_text("\n".join(str(d) for d in [1, 1, 1, 1, 2, 2, 3, 4, 6, 9]) + "\n")
    assert main(["fit", str(path)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert set(out) == {"input", "points", "power_law", "weibull"}


def test_fit_malformed(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("1\nx\n")
    assert main(["fit", str(path)]) == 1
