import csv
import io
import json
import random

import pytest

from embedthresh.cli import main
from embedthresh.complex import AlphaVector
from embedthresh.errors import PreconditionError
from embedthresh.sweep import (CSV_COLUMNS, SweepSpec, aggregate, derive_seed, rows_to_csv,
                               run_sweep)


def _cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_derive_seed_is_stable_and_distinct():
    assert derive_seed(1, 2, 3) == derive_seed(1, 2, 3)
    seeds = {derive_seed(1, g, t, s) for g in range(5) for t in range(5) for s in range(3)}
    assert len(seeds) == 75
    assert all(0 <= s < 2 ** 63 for s in seeds)


def test_spec_validation():
    a = AlphaVector((1.0,))
    with pytest.raises(PreconditionError):
        SweepSpec(d=1, n=10, alpha=a, vary=3, grid=(0, 1, 2), trials=1, seed=0)
    with pytest.raises(PreconditionError):
        SweepSpec(d=1, n=10, alpha=a, vary=1, grid=(0, 1, 2), trials=1, seed=0,
                  measurements=("bogus",))
    spec = SweepSpec(d=1, n=10, alpha=a, vary=1, grid=(0.5, 1.5, 3), trials=1, seed=0)
    assert spec.grid_values() == [0.5, 1.0, 1.5]


def test_sweep_trend_is_monotone():
    spec = SweepSpec(d=1, n=150, alpha=AlphaVector((1.0,)), vary=1, grid=(0.6, 1.4, 5),
                     trials=12, seed=3)
    rates = [r.no_core_rate for r in run_sweep(spec)]
    assert rates[0] == 0.0 and rates[-1] == 1.0
    assert all(a <= b for a, b in zip(rates, rates[1:]))


def test_sweep_measurements_contract():
    spec = SweepSpec(d=1, n=60, alpha=AlphaVector((1.3,)), vary=1, grid=(1.3, 1.3, 1),
                     trials=3, seed=1)
    (row,) = run_sweep(spec)
    assert row.match_rate is None and row.embed_success_rate is None
    assert row.mean_match_estimate is None and row.max_component_vertices is None
    spec = SweepSpec(d=1, n=60, alpha=AlphaVector((1.3,)), vary=1, grid=(1.3, 1.3, 1),
                     trials=3, seed=1, measurements=("embed-rate", "match-rate", "component-size"),
                     match_samples=50)
    (row,) = run_sweep(spec)
    assert row.embed_success_rate == 1.0
    assert row.match_rate is not None and row.mean_match_estimate is not None
    assert row.max_component_vertices >= 2


def test_trial_permutation_leaves_aggregate_unchanged():
    spec = SweepSpec(d=1, n=80, alpha=AlphaVector((1.0,)), vary=1, grid=(1.0, 1.0, 1),
                     trials=10, seed=4, measurements=("core-rate", "component-size"))
    rows, trials = run_sweep(spec, return_trials=True)
    shuffled = trials[:]
    random.Random(0).shuffle(shuffled)
    assert aggregate(1.0, shuffled) == rows[0]


def test_parallel_sweep_matches_serial():
    kw = dict(d=1, n=60, alpha=AlphaVector((1.0,)), vary=1, grid=(0.8, 1.2, 3), trials=4, seed=9)
    assert run_sweep(SweepSpec(**kw, workers=2)) == run_sweep(SweepSpec(**kw))


def test_csv_header():
    spec = SweepSpec(d=1, n=20, alpha=AlphaVector((1.0,)), vary=1, grid=(1, 1, 1), trials=1, seed=0)
    text = rows_to_csv(run_sweep(spec))
    assert text.splitlines()[0] == ",".join(CSV_COLUMNS)
    assert text.splitlines()[0] == ("alpha,trials,no_core_rate,embed_success_rate,match_rate,"
                                   "mean_match_estimate,max_component_vertices")


def test_cli_classify_and_janson(capsys):
    code, out, _ = _cli(capsys, "classify", "--d", "2", "--alpha", "0,2.5")
    assert code == 0 and json.loads(out) == {"class": "Sparse", "exponent": 0.5}
    code, out, _ = _cli(capsys, "janson", "--d", "1", "--alpha", "0.8")
    assert json.loads(out) == {"min_exponent": 4.2, "argmin": [1, 1, 1, 2]}


def test_cli_is_byte_identical(capsys):
    argv = ["sweep", "--d", "1", "--n", "40", "--alpha", "1.0", "--vary", "1", "--grid",
            "0.8:1.2:3", "--trials", "3", "--seed", "5", "--format", "csv",
            "--measure", "core-rate,match-rate"]
    _, first, _ = _cli(capsys, *argv)
    _, second, _ = _cli(capsys, *argv)
    assert first == second
    rows = list(csv.DictReader(io.StringIO(first)))
    assert [float(r["alpha"]) for r in rows] == [0.8, 1.0, 1.2]
    _, a, _ = _cli(capsys, "sample", "--n", "20", "--alpha", "0.5,1", "--seed", "1")
    _, b, _ = _cli(capsys, "sample", "--n", "20", "--alpha", "0.5,1", "--seed", "1")
    assert a == b


def test_cli_pipeline_through_files(tmp_path, capsys):
    cx = tmp_path / "x.json"
    assert main(["sample", "--n", "30", "--d", "1", "--alpha", "1.4", "--dim-cap", "1",
                 "--seed", "2", "--out", str(cx)]) == 0
    code, out, _ = _cli(capsys, "collapse", "--d", "1", "--complex", str(cx))
    assert code == 0 and json.loads(out)["core"] == []
    code, out, _ = _cli(capsys, "embed", "--d", "1", "--complex", str(cx), "--seed", "3")
    assert code == 0 and json.loads(out)["verified"] is True
    code, out, _ = _cli(capsys, "radon-count", "--d", "1", "--complex", str(cx))
    assert code == 0 and json.loads(out)["mode"] == "exhaustive"
    code, out, _ = _cli(capsys, "census", "--n", "7", "--m", "2", "--format", "csv")
    assert code == 0 and out.startswith("checked,balanced_hits")


def test_cli_exit_codes(tmp_path, capsys):
    assert _cli(capsys, "classify", "--d", "1")[0] == 2  # missing --alpha
    assert _cli(capsys, "classify", "--d", "1", "--alpha", "-1")[0] == 2
    assert _cli(capsys, "nope")[0] == 2
    # a triangle cycle has a 2-core: the builder precondition fails
    assert _cli(capsys, "embed", "--d", "1", "--n", "12", "--alpha", "0")[0] == 2
    # budget exhaustion is a computation error
    assert _cli(capsys, "radon-count", "--d", "1", "--n", "40", "--alpha", "0.5",
                "--budget", "10")[0] == 3
    # a degenerate configuration file
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"m": 2, "points": [["0", "0"], ["1", "0"], ["2", "0"], ["0", "1"]]}))
    cx = tmp_path / "x.json"
    cx.write_text(json.dumps({"n": 4, "dim_cap": 1,
                              "faces": [[[0], [1], [2], [3]], [[0, 1], [2, 3]]]}))
    assert _cli(capsys, "radon-count", "--d", "1", "--complex", str(cx), "--config", str(cfg))[0] == 3
    assert _cli(capsys, "collapse", "--d", "1", "--complex", str(tmp_path / "missing.json"))[0] == 2
