"""Command-line interface: exit codes, config handling, self-check."""

import numpy as np

from molopt.cli import main
from molopt.selfcheck import run_self_checks


def test_presets_list(capsys):
    assert main(["presets", "list"]) == 0
    out = capsys.readouterr().out
    assert "fig4b" in out and "fig10a" in out


def test_sweep_from_preset_with_overrides(tmp_path):
    out = tmp_path / "fig2b.csv"
    assert main(["sweep", "--preset", "fig2b", "--out", str(out),
                 "--threads", "2"]) == 0
    text = out.read_text()
    assert "theta,Gt_plus,Gt_minus,status" in text


def test_sweep_config_file(tmp_path):
    cfg = tmp_path / "sweep.toml"
    cfg.write_text("""
output_path = "%s"
outputs = ["E_B1B2"]
parallelism = 2

[base]
kappa = 0.3333333333333333
gamma_1 = 0.3
gamma_2 = 0.3
n_th = 0.001
J_m = 0.02
theta = 1.5707963267948966

[base.drive]
mode = "direct"
G_1 = 0.2
G_2 = 0.2
delta_tilde = 1.5

[[axes]]
name = "G_j"
min = 0.0
max = 0.3
count = 5
""" % (tmp_path / "out.csv"))
    assert main(["sweep", "--config", str(cfg)]) == 0
    assert (tmp_path / "out.csv").exists()


def test_config_overrides_preset(tmp_path):
    cfg = tmp_path / "small.toml"
    cfg.write_text("""
[[axes]]
name = "theta"
min = 0.0
max = 6.283185307179586
count = 16
""")
    out = tmp_path / "polar.csv"
    assert main(["sweep", "--preset", "fig2b", "--config", str(cfg),
                 "--out", str(out)]) == 0
    rows = [l for l in out.read_text().splitlines()
            if l and not l.startswith("#")]
    assert len(rows) == 1 + 16  # header + downsampled grid


def test_flagged_points_exit_code(tmp_path):
    cfg = tmp_path / "unstable.toml"
    cfg.write_text("""
outputs = ["E_B1B2"]

[base]
kappa = 0.2
gamma_1 = 0.001
gamma_2 = 0.001
theta = 0.0

[base.drive]
mode = "direct"
G_1 = 0.0
G_2 = 0.0
delta_tilde = 1.5

[[axes]]
name = "G_j"
min = 0.3
max = 1.2
count = 8
""")
    assert main(["sweep", "--config", str(cfg),
                 "--out", str(tmp_path / "u.csv")]) == 2


def test_config_errors_exit_code(tmp_path, capsys):
    assert main(["sweep", "--preset", "not-a-preset",
                 "--out", str(tmp_path / "x.csv")]) == 1
    assert main(["sweep", "--out", str(tmp_path / "x.csv")]) == 1
    bad = tmp_path / "bad.toml"
    bad.write_text("outputs = [\n")  # malformed TOML
    assert main(["sweep", "--config", str(bad),
                 "--out", str(tmp_path / "x.csv")]) == 1
    capsys.readouterr()


def test_self_check_suite_passes():
    assert run_self_checks(np.random.default_rng(3))
