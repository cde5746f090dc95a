"""Monte Carlo sweeps across the embedding threshold.

One exponent of an alpha template varies over a grid; at each grid point a
batch of independent complexes is sampled and peeled.  Depending on the
requested measurements, each trial also builds and verifies an embedding,
looks for Radon matches under fresh random configurations, or records the
largest weakly connected component.
"""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from .collapse import build_hypergraph, max_component_vertices, two_core
from .complex import AlphaVector, dimension, pure_part, sample_complex
from .embedding import build_embedding, verify_embedding
from .errors import ComputationError, DegeneracyError, PreconditionError
from .geometry import random_configuration, resample_seed
from .radon_match import has_radon_match, sample_radon_matches

MEASUREMENTS = ("core-rate", "embed-rate", "match-rate", "component-size")
CSV_COLUMNS = ("alpha", "trials", "no_core_rate", "embed_success_rate", "match_rate",
               "mean_match_estimate", "max_component_vertices")


@dataclass(frozen=True)
class SweepSpec:
    d: int
    n: int
    alpha: AlphaVector
    vary: int  # 1-based index of the varying exponent
    grid: tuple  # (start, stop, steps)
    trials: int
    seed: int
    measurements: tuple = ("core-rate",)
    dim_cap: int | None = None  # defaults to d + 1
    configs: int = 1  # random configurations per trial for match-rate
    match_samples: int = 0  # sampled subsets per trial for mean_match_estimate
    coord_bound: int = 2 ** 31
    workers: int = 1

    def __post_init__(self):
        start, stop, steps = self.grid
        if steps < 1 or self.trials < 1:
            raise PreconditionError("steps and trials must be >= 1")
        if self.d < 1 or self.n < 1:
            raise PreconditionError("d and n must be >= 1")
        if not 1 <= self.vary <= self.cap:
            raise PreconditionError("varying coordinate must lie in 1..dim_cap")
        bad = set(self.measurements) - set(MEASUREMENTS)
        if bad:
            raise PreconditionError(f"unknown measurements {sorted(bad)}")
        if self.configs < 1:
            raise PreconditionError("configs must be >= 1")

    @property
    def cap(self) -> int:
        return self.dim_cap if self.dim_cap is not None else self.d + 1

    def grid_values(self) -> list:
        start, stop, steps = self.grid
        if steps == 1:
            return [float(start)]
        return [round(float(x), 12) for x in np.linspace(start, stop, steps)]


@dataclass
class TrialResult:
    grid_index: int
    trial: int
    no_core: bool
    embedded: bool | None = None
    match_hits: int = 0
    match_tries: int = 0
    match_estimate: float | None = None
    max_component: int | None = None
    errors: list = field(default_factory=list)


@dataclass(frozen=True)
class SweepRow:
    alpha: float
    trials: int
    no_core_rate: float
    embed_success_rate: float | None
    match_rate: float | None
    mean_match_estimate: float | None
    max_component_vertices: int | None
    errors: int = 0


def derive_seed(master: int, grid_index: int, trial: int, stream: int = 0) -> int:
    """Stable 63-bit seed for one (grid point, trial, stream)."""
    ss = np.random.SeedSequence([master & ((1 << 64) - 1), grid_index, trial, stream])
    return int(ss.generate_state(1, np.uint64)[0] >> np.uint64(1))


def run_trial(spec: SweepSpec, grid_index: int, alpha_value: float, trial: int) -> TrialResult:
    alpha = spec.alpha.with_entry(spec.vary, alpha_value)
    seed = derive_seed(spec.seed, grid_index, trial)
    X = sample_complex(spec.n, alpha, spec.cap, seed)
    peel = two_core(build_hypergraph(pure_part(X, spec.d), spec.d))
    res = TrialResult(grid_index, trial, not peel.core)
    meas = set(spec.measurements)
    if "embed-rate" in meas and res.no_core:
        try:
            if dimension(X) > spec.d:
                raise ComputationError("complex has faces above dimension d")
            config = build_embedding(X, peel, spec.d, derive_seed(spec.seed, grid_index, trial, 1),
                                     coord_bound=spec.coord_bound)
            res.embedded = verify_embedding(X, config, spec.d)
        except ComputationError as exc:
            res.embedded = False
            res.errors.append(str(exc))
    if "match-rate" in meas:
        for c in range(spec.configs):
            cseed = derive_seed(spec.seed, grid_index, trial, 2 + c)
            res.match_tries += 1
            try:
                try:
                    config = random_configuration(spec.n, 2 * spec.d, spec.coord_bound, cseed)
                    hit = has_radon_match(X, config, spec.d)
                except DegeneracyError:
                    config = random_configuration(spec.n, 2 * spec.d, spec.coord_bound,
                                                  resample_seed(cseed))
                    hit = has_radon_match(X, config, spec.d)
            except ComputationError as exc:
                res.errors.append(str(exc))
                continue
            res.match_hits += hit
            if c == 0 and spec.match_samples > 0:
                try:
                    rep = sample_radon_matches(X, config, spec.d, spec.match_samples, cseed)
                    res.match_estimate = rep.estimate
                except ComputationError as exc:
                    res.errors.append(str(exc))
    if "component-size" in meas:
        res.max_component = max_component_vertices(X, spec.d)
    return res


def _run_task(args):
    return run_trial(*args)


def aggregate(alpha_value: float, results: list) -> SweepRow:
    trials = len(results)
    no_core = sum(r.no_core for r in results)
    emb = [r.embedded for r in results if r.embedded is not None]
    tries = sum(r.match_tries for r in results)
    ests = [r.match_estimate for r in results if r.match_estimate is not None]
    comps = [r.max_component for r in results if r.max_component is not None]
    return SweepRow(
        alpha=alpha_value,
        trials=trials,
        no_core_rate=no_core / trials,
        embed_success_rate=sum(emb) / len(emb) if emb else None,
        match_rate=sum(r.match_hits for r in results) / tries if tries else None,
        mean_match_estimate=math.fsum(ests) / len(ests) if ests else None,
        max_component_vertices=max(comps) if comps else None,
        errors=sum(len(r.errors) for r in results),
    )


def run_sweep(spec: SweepSpec, return_trials: bool = False):
    """Rows ordered by grid index; trial order never affects the aggregates."""
    values = spec.grid_values()
    tasks = [(spec, g, a, t) for g, a in enumerate(values) for t in range(spec.trials)]
    if spec.workers > 1:
        with ProcessPoolExecutor(max_workers=spec.workers) as pool:
            results = list(pool.map(_run_task, tasks, chunksize=max(1, len(tasks) // (4 * spec.workers))))
    else:
        results = [_run_task(t) for t in tasks]
    rows = []
    for g, a in enumerate(values):
        rows.append(aggregate(a, [r for r in results if r.grid_index == g]))
    return (rows, results) if return_trials else rows


def _fmt(v):
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(round(v, 12))
    return str(v)


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in rows:
        w.writerow([_fmt(getattr(r, c)) for c in CSV_COLUMNS])
    return buf.getvalue()


def rows_to_json(rows) -> str:
    return json.dumps([asdict(r) for r in rows], separators=(",", ":"))
