import math

import numpy as np
import pytest

from oracles import rounds_to_one
from hhqr.core import Precision, RngState
from hhqr.experiment import (
    ExperimentConfig,
    LeftBranchInapplicable,
    build_sweep_matrix,
    delta_for,
    loglog_slope,
    peak,
    probe_corpus,
    probe_matrices,
    run_sweep,
    verify_left_branch,
)

EPS64 = 2.0**-52
EPS32 = 2.0**-23


@pytest.fixture(scope="module")
def sweep64():
    return run_sweep(ExperimentConfig())


@pytest.fixture(scope="module")
def sweep32():
    return run_sweep(ExperimentConfig(p_max=7, precision=Precision.BINARY32))


def test_sweep_matrix_first_column():
    a = build_sweep_matrix(0.1, 3, 2, RngState(1))
    assert a[:, 0].tolist() == [1.0, 0.1, 0.0]
    assert ((0 <= a[:, 1]) & (a[:, 1] < 1)).all()


def test_sweep_matrix_zero_delta():
    a = build_sweep_matrix(0.0, 5, 3, RngState(1))
    assert a[:, 0].tolist() == [1.0, 0, 0, 0, 0]


def test_sweep_matrix_column_major_fill():
    a = build_sweep_matrix(0.5, 4, 3, RngState(3))
    s = RngState(3)
    expected = [float(s.uniform()) for _ in range(8)]
    assert a[:, 1:].T.ravel().tolist() == expected


def test_sweep_matrix_deterministic():
    a = build_sweep_matrix(1e-3, 6, 4, RngState(99))
    b = build_sweep_matrix(1e-3, 6, 4, RngState(99))
    assert a.tobytes() == b.tobytes()


def test_sweep_matrix_shape_checked():
    with pytest.raises(ValueError):
        build_sweep_matrix(0.1, 2, 3, RngState(1))


@pytest.mark.parametrize("kwargs", [dict(m=2, n=3), dict(n=1), dict(p_min=5, p_max=4), dict(seed=-1)])
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        ExperimentConfig(**kwargs)


def test_sweep_records(sweep64):
    assert [r.p for r in sweep64] == list(range(1, 17))
    for r in sweep64:
        assert r.delta == float(f"1e-{r.p}")
        vals = [r.err_stable, r.err_wrong, r.orth_stable, r.orth_wrong, r.first_col_err_wrong]
        assert all(math.isfinite(v) and v >= 0 for v in vals)


def test_sweep_single_point():
    recs = run_sweep(ExperimentConfig(p_min=5, p_max=5))
    assert len(recs) == 1 and recs[0].p == 5


def test_sweep_deterministic(sweep64):
    assert run_sweep(ExperimentConfig()) == sweep64


def test_sweep_point_independent_of_range(sweep64):
    # same seed gives the same random columns at every delta
    assert run_sweep(ExperimentConfig(p_min=8, p_max=8))[0] == sweep64[7]


def test_stable_level(sweep64):
    assert all(r.err_stable <= 100 * EPS64 for r in sweep64)


def test_right_side_rises(sweep64):
    errs = [r.err_wrong for r in sweep64[:7]]
    assert all(b >= a / 3 for a, b in zip(errs, errs[1:]))


def test_left_side_linear(sweep64):
    left = [r for r in sweep64 if 9 <= r.p <= 15]
    assert all(b.err_wrong < a.err_wrong for a, b in zip(left, left[1:]))
    assert all(0.5 <= r.err_wrong / r.delta <= 2 for r in left)
    assert abs(loglog_slope(sweep64, 9, 15) - 1) <= 0.05


def test_peak_location(sweep64):
    top = peak(sweep64)
    assert top.p in (7, 8, 9)
    assert 1e-9 <= top.err_wrong <= 1e-7


def test_orthogonality_policy_independent(sweep64):
    for r in sweep64:
        assert r.orth_stable <= 100 * EPS64 * 3
        assert r.orth_wrong <= 100 * EPS64 * 3


def test_left_branch_first_column_error_is_delta(sweep64):
    for r in sweep64:
        if rounds_to_one(r.delta, 52):
            assert r.first_col_err_wrong == r.delta


def test_binary32_peak(sweep32):
    top = peak(sweep32)
    root = math.sqrt(EPS32)
    assert root / 10 <= top.delta <= root * 10
    assert all(r.orth_stable <= 100 * EPS32 * 3 for r in sweep32)


def test_larger_matrix_shape_above_roundoff_floor():
    # With uniform [0, 1) columns ||A|| is about 15 at 50x20, so the ordinary
    # roundoff floor is near 1e-14; the linear branch is checked down to p = 14.
    recs = run_sweep(ExperimentConfig(m=50, n=20))
    assert peak(recs).p in (7, 8, 9)
    errs = [r.err_wrong for r in recs[:7]]
    assert all(b >= a / 3 for a, b in zip(errs, errs[1:]))
    assert all(0.5 <= r.err_wrong / r.delta <= 2 for r in recs if 9 <= r.p <= 14)
    assert abs(loglog_slope(recs, 9, 14) - 1) <= 0.05
    assert all(max(r.orth_stable, r.orth_wrong) <= 100 * EPS64 * 50 for r in recs)


@pytest.mark.parametrize("delta", [1e-9, 1e-10, 1e-12, 1e-16, 1e-300])
def test_left_branch_binary64(delta):
    assert verify_left_branch(delta)


def test_left_branch_larger_matrix():
    assert verify_left_branch(1e-10, ExperimentConfig(m=50, n=20))


def test_left_branch_gate():
    with pytest.raises(LeftBranchInapplicable):
        verify_left_branch(1e-4)


def test_left_branch_binary32():
    d = np.float32(1e-5)
    assert rounds_to_one(d, 23)
    assert verify_left_branch(d, ExperimentConfig(precision=Precision.BINARY32))


@pytest.mark.parametrize("p", range(1, 17))
def test_gate_agrees_with_rounding_oracle(p):
    for precision, bits in ((Precision.BINARY64, 52), (Precision.BINARY32, 23)):
        d = delta_for(p, precision)
        cfg = ExperimentConfig(precision=precision)
        if rounds_to_one(d, bits):
            assert verify_left_branch(d, cfg)
        else:
            with pytest.raises(LeftBranchInapplicable):
                verify_left_branch(d, cfg)


def test_probe_identity():
    s = probe_matrices([np.eye(3)])
    assert s.trials == 1 and s.max_err_stable == 0 and s.max_err_wrong == 0


def test_probe_small_matrices():
    s = probe_corpus(ExperimentConfig(), 1000)
    assert s.trials == 1000
    assert s.max_err_stable <= 100 * EPS64
    assert s.max_err_wrong >= s.q99_err_wrong >= s.q90_err_wrong >= s.median_err_wrong
    assert s.conjecture_margin == s.max_err_wrong / math.sqrt(EPS64)


def test_probe_deterministic():
    cfg = ExperimentConfig(m=6, n=3, seed=7)
    assert probe_corpus(cfg, 20) == probe_corpus(cfg, 20)


def test_probe_needs_trials():
    with pytest.raises(ValueError):
        probe_corpus(ExperimentConfig(), 0)


@pytest.mark.slow
def test_probe_square_50():
    s = probe_corpus(ExperimentConfig(m=50, n=50), 1000)
    print(f"conjecture margin at 50x50: {s.conjecture_margin:.4g}")
    assert s.conjecture_margin <= 100
