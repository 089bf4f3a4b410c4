"""End-to-end command-line tests through main(argv)."""

import numpy as np
import pytest

from grushin import io as gio
from grushin.cli import main
from grushin.diffop import GridFunction2D
from grushin.functions import wave_packet
from grushin.heat import heat_kernel_half


@pytest.fixture
def packet_grid_file(tmp_path):
    """The round-trip packet sampled finely enough for cubic interpolation."""
    fr = wave_packet(2.0, 0.6, 3.0)
    fs = wave_packet(3.2, 0.9, 5.5)
    r = np.arange(0.05, 5.35, 0.02)
    s = np.arange(0.05, 8.2, 0.02)
    grid = GridFunction2D(r, s, fr(r)[:, None] * fs(s)[None, :])
    path = tmp_path / "f.csv"
    gio.write_grid(path, grid, alpha=0.4, beta=0.25)
    return path, grid


def test_heat_kernel_prints_closed_form(capsys):
    code = main(["heat-kernel", "--t", "0.5", "--alpha", "-0.5", "--beta", "-0.5",
                 "--point", "1,1,1,1"])
    assert code == 0
    printed = float(capsys.readouterr().out.strip())
    want = heat_kernel_half(0.5, 1.0, 1.0, 1.0, 1.0, variant="cosh")
    assert printed == pytest.approx(want, rel=1e-6)


def test_transform_round_trip(tmp_path, packet_grid_file):
    fpath, grid = packet_grid_file
    spath = tmp_path / "F.csv"
    assert main(["gtransform", "--alpha", "0.4", "--beta", "0.25",
                 "--input", str(fpath), "--nmax", "64",
                 "--output", str(spath)]) == 0

    # probe at a subset of the original grid nodes
    take_r = np.arange(95, 140, 9)
    take_s = np.arange(150, 190, 8)
    pts = [(grid.r_nodes[i], grid.s_nodes[j]) for i in take_r for j in take_s]
    ppath = tmp_path / "pts.csv"
    ppath.write_text("".join(f"{r:.16e},{s:.16e}\n" for r, s in pts))
    opath = tmp_path / "g.csv"
    assert main(["igtransform", "--input", str(spath), "--points", str(ppath),
                 "--output", str(opath)]) == 0

    rows = [ln.split(",") for ln in opath.read_text().splitlines()
            if not ln.startswith("#")]
    got = np.array([float(r[2]) for r in rows])
    want = np.array([grid.values[i, j] for i in take_r for j in take_s])
    scale = np.max(np.abs(grid.values))
    assert np.sqrt(np.mean((got - want) ** 2)) / scale < 1e-3


def test_heat_apply_routes_agree(tmp_path, packet_grid_file):
    fpath, grid = packet_grid_file
    ppath = tmp_path / "pts.csv"
    ppath.write_text("2.0,3.0\n1.6,2.6\n")
    outs = []
    for route in ("kernel", "spectral"):
        opath = tmp_path / f"out_{route}.csv"
        assert main(["heat-apply", "--t", "0.5", "--alpha", "0.4",
                     "--beta", "0.25", "--input", str(fpath),
                     "--points", str(ppath), "--route", route,
                     "--output", str(opath)]) == 0
        rows = [ln.split(",") for ln in opath.read_text().splitlines()
                if not ln.startswith("#")]
        outs.append(np.array([float(r[2]) for r in rows]))
    assert np.max(np.abs(outs[0] - outs[1]) / np.abs(outs[0])) < 1e-3


def test_profiles_command(tmp_path):
    opath = tmp_path / "p.csv"
    assert main(["profiles", "--kind", "F1", "--alpha", "0.25", "--beta", "0.4",
                 "--grid", "log:1e-3:1e-2:10", "--output", str(opath)]) == 0
    rows = [ln for ln in opath.read_text().splitlines() if not ln.startswith("#")]
    assert len(rows) == 10
    xs, vals = np.array([[float(t) for t in r.split(",")] for r in rows]).T
    slope = np.polyfit(np.log(xs), np.log(vals), 1)[0]
    assert abs(slope - 0.8) < 0.1


def test_verify_suite_exit_codes():
    assert main(["verify", "--suite", "laguerre"]) == 0
    # an absurdly tightened tolerance must flip to failure (exit 1)
    assert main(["verify", "--suite", "laguerre", "--tol-scale", "1e-20"]) == 1


def test_usage_error_exit_code():
    assert main(["gtransform", "--alpha", "0.0"]) == 2
    assert main(["bogus-subcommand"]) == 2


def test_determinism(tmp_path, packet_grid_file):
    fpath, _ = packet_grid_file
    outs = []
    for tag in ("a", "b"):
        opath = tmp_path / f"F_{tag}.csv"
        main(["gtransform", "--alpha", "0.4", "--beta", "0.25",
              "--input", str(fpath), "--nmax", "16", "--output", str(opath)])
        outs.append(opath.read_bytes())
    assert outs[0] == outs[1]


def test_config_file_supplies_missing_flags(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("t=0.5\nalpha=-0.5\nbeta=-0.5\n")
    code = main(["heat-kernel", "--t", "0.5", "--alpha", "-0.5", "--beta", "-0.5",
                 "--point", "1,1,1,1"])
    want = capsys.readouterr().out
    # config fills in every flag that was not given
    code2 = main(["heat-kernel", "--point", "1,1,1,1", "--config", str(cfg)])
    got2 = capsys.readouterr().out
    assert code == 0 and code2 == 0 and got2 == want
    # an explicit flag beats the config value
    code3 = main(["heat-kernel", "--t", "2.0", "--point", "1,1,1,1",
                  "--config", str(cfg)])
    got3 = capsys.readouterr().out
    assert code3 == 0 and got3 != want


def test_missing_required_flag_is_usage_error():
    assert main(["heat-kernel", "--t", "0.5", "--alpha", "0.0",
                 "--beta", "0.0"]) == 2


def test_numeric_failure_cites_origin(capsys):
    # out-of-range type parameter fails with the originating module named
    code = main(["heat-kernel", "--t", "0.5", "--alpha", "-1.5",
                 "--beta", "0.0", "--point", "1,1,1,1"])
    err = capsys.readouterr().err
    assert code == 2
    assert "heat-kernel" in err and "ValueError" in err


def test_bad_grid_spec(tmp_path):
    code = main(["profiles", "--kind", "F1", "--alpha", "0.0", "--beta", "0.0",
                 "--grid", "weird:1:2:3", "--output", str(tmp_path / "x.csv")])
    assert code == 2


def test_thread_env_var_validation(monkeypatch):
    from grushin._util import thread_count
    monkeypatch.setenv("GRUSHIN_THREADS", "3")
    assert thread_count() == 3
    monkeypatch.setenv("GRUSHIN_THREADS", "0")
    assert thread_count() >= 1
    monkeypatch.setenv("GRUSHIN_THREADS", "many")
    with pytest.raises(ValueError):
        thread_count()
