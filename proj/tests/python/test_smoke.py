import math

import numpy as np
import pytest

import dpdsim as dp


def small_config():
    cfg = dp.ExperimentConfig()
    cfg.a = 25.0
    cfg.gamma = 4.5
    cfg.n = 125
    cfg.box = 5.0
    cfg.dt = 0.05
    cfg.time = 5.0
    cfg.seed = 7
    cfg.threads = 1
    return cfg


def test_standard_params():
    p = dp.DpdParams.standard(25.0, 4.5, 1.0, 1.0, 5.0, 125)
    assert p.sigma == pytest.approx(math.sqrt(2.0 * 4.5), rel=1e-15)
    assert p.rho == pytest.approx(1.0)
    with pytest.raises(ValueError):
        dp.DpdParams.standard(25.0, 4.5, 1.0, 1.0, 1.0, 125)  # box < 2 rc


def test_simulation_conserves_momentum():
    p = dp.DpdParams.standard(25.0, 4.5, 1.0, 1.0, 5.0, 125)
    sim = dp.Simulation(p, scheme=dp.SchemeKind.shardlow, seed=3)
    sim.step(0.02, n=100)
    assert sim.step_count == 100
    assert sim.time == pytest.approx(2.0)
    assert np.abs(sim.total_momentum()).max() < 1e-10
    assert sim.positions().shape == (125, 3)
    assert 0.5 < sim.kinetic_temperature() < 1.5
    assert sim.counters.force_evaluations == 100


def test_force_report_shapes():
    p = dp.DpdParams.standard(25.0, 4.5, 1.0, 1.0, 5.0, 125)
    sim = dp.Simulation(p, seed=11)
    rep = sim.force_report()
    assert rep.pair_count > 0
    assert rep.potential > 0.0
    assert rep.grad_sq_sum > 0.0


def test_run_single_counts_steps():
    cfg = small_config()
    rep = dp.run_single(cfg)
    assert rep.stable
    assert rep.steps == 100
    assert rep.counters.force_evaluations == 100
    assert 0.5 < rep.t_k < 1.5


def test_run_single_rejects_bad_config():
    cfg = small_config()
    cfg.n = 1
    with pytest.raises(ValueError):
        dp.run_single(cfg)


def test_scheme_names_round_trip():
    for kind in (dp.SchemeKind.shardlow, dp.SchemeKind.aboba,
                 dp.SchemeKind.mshardlow1, dp.SchemeKind.mshardlow2):
        assert dp.scheme_from_name(dp.scheme_name(kind)) == kind
    assert dp.scheme_from_name("nosuch") is None


def test_fit_and_grid_helpers():
    xs = [0.01, 0.02, 0.04, 0.08]
    ys = [x * x for x in xs]
    assert dp.fit_loglog_slope(xs, ys) == pytest.approx(2.0, abs=1e-10)
    grid = dp.geometric_grid(0.01, 0.1, 12)
    assert grid[0] == pytest.approx(0.01)
    assert grid[-1] == pytest.approx(0.1)
    assert len(grid) == 13


def test_csv_writer(tmp_path):
    cfg = small_config()
    rep = dp.run_single(cfg)
    out = tmp_path / "runs.csv"
    dp.write_runs_csv(out, [rep])
    lines = out.read_text().splitlines()
    assert lines[0] == ("scheme,a,gamma,dt,steps,t_c,t_k,rel_err_tc,rel_err_tk,"
                        "ms_per_step,force_evals,stable")
    assert lines[1].startswith("shardlow,25,4.5,0.05,100,")


def test_config_text_round_trip():
    cfg = dp.ExperimentConfig()
    dp.apply_config_text(cfg, "a = 30\ngamma = 9\nscheme = aboba\n")
    assert cfg.a == 30.0
    assert cfg.gamma == 9.0
    assert cfg.scheme == dp.SchemeKind.aboba
    with pytest.raises(ValueError):
        dp.apply_config_text(cfg, "nonsense_key = 1\n")
