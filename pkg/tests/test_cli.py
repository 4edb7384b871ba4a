import json

import pytest

from hypergame.cli import main, parse_config


def run(argv, tmp_path, name):
    out = tmp_path / name
    assert main(argv + ["--out", str(out)]) == 0
    return out


def test_parse_defaults():
    args = parse_config(["table"])
    assert (args.b, args.c, args.delta, args.w) == (3.0, 1.0, 0.25, 1.0)
    assert args.mode == "pairs"


def test_parse_rejects_negative_w():
    with pytest.raises(SystemExit):
        parse_config(["table", "--w", "-1"])


def test_parse_requires_command():
    with pytest.raises(SystemExit):
        parse_config([])


def test_config_file_merge(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"b": 1.5, "w": 0.1}))
    args = parse_config(["--config", str(cfg), "table"])
    assert args.b == 1.5 and args.w == 0.1
    # Flags override the file.
    args = parse_config(["--config", str(cfg), "table", "--b", "2.0"])
    assert args.b == 2.0 and args.w == 0.1


def test_config_file_unknown_key_rejected(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"bb": 1.5}))
    with pytest.raises(SystemExit):
        parse_config(["--config", str(cfg), "table"])


def test_table_command(tmp_path):
    out = run(["table", "--b", "1.5", "--w", "0.1", "--round", "4"], tmp_path, "t")
    lines = (out / "payoffs.csv").read_text().splitlines()
    assert lines[0] == "w,b,c,delta,set_row,set_col,payoff"
    assert len(lines) == 10  # header + 3x3 ordered pairs
    row = dict(zip(lines[0].split(","), lines[2].split(",")))
    assert row["set_row"] == "CD" and row["set_col"] == "CL"
    assert float(row["payoff"]) == pytest.approx(0.6197, abs=5e-4)
    manifest = json.loads((out / "manifest.json").read_text())
    assert manifest["rng_algorithm"] == "splitmix64"
    assert all((out / f).exists() for f in manifest["outputs"])


def test_tournament_command(tmp_path):
    out = run(["tournament", "--mode", "all", "--b", "3", "--w", "10"], tmp_path, "t")
    report = (out / "report.csv").read_text().splitlines()
    assert report[0] == "set,combined_score,rank"
    scores = {line.split(",")[0]: float(line.split(",")[1]) for line in report[1:]}
    assert scores["CL"] == pytest.approx(5.4253, abs=2e-3)


def test_thresholds_command(tmp_path):
    out = run(["thresholds", "--b", "1.9"], tmp_path, "t")
    data = json.loads((out / "thresholds.json").read_text())
    assert data["critical_w_vs_d_method_spread"] < 1e-6
    assert data["critical_w_vs_dl"] == pytest.approx(1.37, abs=0.05)


def test_replicator_command(tmp_path):
    out = run(["replicator", "--w", "10", "--t-max", "500"], tmp_path, "t")
    lines = (out / "trajectory.csv").read_text().splitlines()
    assert lines[0] == "t,x_CD,x_CL,x_DL,P_bar"
    last = [float(v) for v in lines[-1].split(",")]
    assert last[2] > 0.99  # x_CL column


def test_map7_command(tmp_path):
    out = run(["map7", "--w", "0.1", "--generations", "2000"], tmp_path, "t")
    lines = (out / "map7.csv").read_text().splitlines()
    header = lines[0].split(",")
    final = dict(zip(header, (float(v) for v in lines[-1].split(","))))
    assert max(final[k] for k in header[1:-1]) == final["x_L"]


def test_lattice_command(tmp_path):
    out = run(
        ["lattice", "--w", "10", "--steps", "300000", "--width", "40", "--height", "40",
         "--replicates", "1", "--snapshot-times", "0", "300000"],
        tmp_path, "t",
    )
    lines = (out / "fractions.csv").read_text().splitlines()
    assert lines[0] == "replicate,sweep,x_CD,x_CL,x_DL"
    final = [float(v) for v in lines[-1].split(",")]
    assert final[3] > 0.95  # x_CL dominant
    assert (out / "snapshot_r0_t300000.pgm").exists()
    meta = json.loads((out / "snapshot_r0_t0.json").read_text())
    assert meta["sets"]["1"] == "CL"


def test_sweep_command(tmp_path):
    out = run(
        ["sweep", "--b-grid", "1.5", "3", "--w-grid", "0.1", "--jobs", "1"],
        tmp_path, "t",
    )
    lines = (out / "sweep.csv").read_text().splitlines()
    assert len(lines) == 1 + 2 * 9  # two (b, w) points, 3x3 table each


def test_byte_identical_reruns(tmp_path):
    argv = ["lattice", "--w", "0.1", "--steps", "50000", "--width", "20", "--height", "20",
            "--replicates", "2", "--seed", "11"]
    out1 = run(argv, tmp_path, "a")
    out2 = run(argv, tmp_path, "b")
    assert (out1 / "fractions.csv").read_bytes() == (out2 / "fractions.csv").read_bytes()
