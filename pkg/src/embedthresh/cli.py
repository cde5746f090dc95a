"""Command-line driver.

Exit codes: 0 success, 2 bad arguments or violated preconditions,
3 degenerate input, exhausted budget, or failed construction.

Sweep CSV columns (fixed):
  alpha, trials, no_core_rate, embed_success_rate, match_rate,
  mean_match_estimate, max_component_vertices
Rates are fractions of trials; an empty cell means not measured.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from .collapse import build_hypergraph, max_component_vertices, two_core
from .complex import AlphaVector, SimplicialComplex, f_vector, pure_part, sample_complex
from .embedding import build_embedding, verify_embedding
from .errors import ComputationError, PreconditionError
from .geometry import PointConfiguration, random_configuration, with_generic_configuration
from .radon_match import (balanced_split_census, count_radon_matches,
                          has_radon_match, sample_radon_matches)
from .sweep import CSV_COLUMNS, MEASUREMENTS, SweepSpec, rows_to_csv, rows_to_json, run_sweep
from .thresholds import classify, face_exponent, janson_exponent

CLI_BUDGET = 10 ** 7


def _num(x):
    if isinstance(x, float):
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return round(x, 12)
    return x


def _grid(text):
    try:
        a, b, k = text.split(":")
        return float(a), float(b), int(k)
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid must look like start:stop:steps, got {text!r}") from None


def _alpha(text):
    try:
        return AlphaVector.parse(text)
    except PreconditionError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int)
    common.add_argument("--d", type=int)
    common.add_argument("--alpha", type=_alpha)
    common.add_argument("--dim-cap", type=int)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=1)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", help="output file (stdout when absent)")
    common.add_argument("--budget", type=int, default=CLI_BUDGET,
                        help="cap on exhaustively enumerated subsets (default 10^7)")
    common.add_argument("--complex", dest="complex_path", help="read a complex from JSON")
    common.add_argument("--config", dest="config_path", help="read a point configuration from JSON")
    common.add_argument("--coord-bound", type=int, default=2 ** 31)

    p = argparse.ArgumentParser(prog="embedthresh", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("sample", parents=[common], help="sample a random complex")
    sub.add_parser("classify", parents=[common], help="sparse/dense/critical for (d, alpha)")
    sub.add_parser("janson", parents=[common], help="minimal Janson overlap exponent")
    sub.add_parser("collapse", parents=[common], help="peel the pure d-part to its 2-core")
    sub.add_parser("embed", parents=[common], help="build and verify an embedding in R^2d")
    rc = sub.add_parser("radon-count", parents=[common], help="count Radon matches")
    rc.add_argument("--sampled", action="store_true", help="estimate from --trials random subsets")
    rc.add_argument("--exists", action="store_true", help="only report whether a match exists")
    cs = sub.add_parser("census", parents=[common], help="balanced Radon split census")
    cs.add_argument("--m", type=int, help="ambient dimension (default 2d)")
    sw = sub.add_parser("sweep", parents=[common], help="Monte Carlo sweep over one exponent",
                        description="CSV columns: " + ",".join(CSV_COLUMNS))
    sw.add_argument("--vary", type=int, required=True, help="1-based index of the varying alpha")
    sw.add_argument("--grid", type=_grid, required=True, help="start:stop:steps")
    sw.add_argument("--measure", default="core-rate",
                    help="comma list from " + ",".join(MEASUREMENTS))
    sw.add_argument("--configs", type=int, default=1)
    sw.add_argument("--match-samples", type=int, default=0)
    sw.add_argument("--workers", type=int, default=1)
    return p


def _need(args, *names):
    missing = [n for n in names if getattr(args, n.replace("-", "_")) is None]
    if missing:
        raise PreconditionError("missing required flags: " + ", ".join("--" + m for m in missing))


def _load_complex(args) -> SimplicialComplex:
    if args.complex_path:
        with open(args.complex_path) as fh:
            return SimplicialComplex.from_json(fh.read())
    _need(args, "n", "alpha")
    cap = args.dim_cap if args.dim_cap is not None else (args.d + 1 if args.d else len(args.alpha.entries))
    return sample_complex(args.n, args.alpha, cap, args.seed)


def _load_config(args, n, m):
    if args.config_path:
        with open(args.config_path) as fh:
            cfg = PointConfiguration.from_json(fh.read())
        if cfg.m != m:
            raise PreconditionError(f"configuration is in R^{cfg.m}, expected R^{m}")
        return cfg
    return random_configuration(n, m, args.coord_bound, args.seed)


def _dump(obj, fmt):
    if fmt == "json":
        return json.dumps(obj, separators=(",", ":")) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    rows = obj if isinstance(obj, list) else [obj]
    keys = list(rows[0].keys())
    w.writerow(keys)
    for r in rows:
        w.writerow([json.dumps(r[k]) if isinstance(r[k], (list, dict)) else r[k] for k in keys])
    return buf.getvalue()


def run(args) -> str:
    cmd = args.command
    if cmd == "classify":
        _need(args, "d", "alpha")
        return _dump({"class": classify(args.d, args.alpha).value,
                      "exponent": _num(face_exponent(args.d + 1, args.alpha))}, args.format)
    if cmd == "janson":
        _need(args, "d", "alpha")
        rep = janson_exponent(args.d, args.alpha)
        return _dump({"min_exponent": _num(rep.min_exponent), "argmin": list(rep.argmin)}, args.format)
    if cmd == "sample":
        X = _load_complex(args)
        if args.format == "json":
            return X.to_json() + "\n"
        return _dump({"n": X.n, "f_vector": list(f_vector(X))}, "csv")
    if cmd == "census":
        _need(args, "n")
        m = args.m if args.m is not None else (2 * args.d if args.d else None)
        if m is None:
            raise PreconditionError("census needs --m or --d")
        rep = with_generic_configuration(args.n, m, args.coord_bound, args.seed,
                                         lambda c: balanced_split_census(c, args.budget))
        return _dump({"checked": rep.checked, "balanced_hits": rep.balanced_hits,
                      "fraction": _num(rep.balanced_hits / rep.checked),
                      "bound": _num(1 / (m + 3)), "mode": rep.mode}, args.format)
    if cmd == "sweep":
        _need(args, "d", "n", "alpha")
        spec = SweepSpec(d=args.d, n=args.n, alpha=args.alpha, vary=args.vary, grid=args.grid,
                         trials=args.trials, seed=args.seed,
                         measurements=tuple(m.strip() for m in args.measure.split(",") if m.strip()),
                         dim_cap=args.dim_cap, configs=args.configs,
                         match_samples=args.match_samples, coord_bound=args.coord_bound,
                         workers=args.workers)
        rows = run_sweep(spec)
        return rows_to_csv(rows) if args.format == "csv" else rows_to_json(rows) + "\n"

    _need(args, "d")
    d = args.d
    X = _load_complex(args)
    peel = two_core(build_hypergraph(pure_part(X, d), d))
    if cmd == "collapse":
        if args.format == "json":
            return peel.to_json() + "\n"
        return _dump({"collapsible": not peel.core, "core_faces": len(peel.core),
                      "max_component_vertices": max_component_vertices(X, d)}, "csv")
    if cmd == "embed":
        config = build_embedding(X, peel, d, args.seed, coord_bound=args.coord_bound)
        ok = verify_embedding(X, config, d)
        if args.format == "json":
            return json.dumps({"verified": ok, "config": json.loads(config.to_json())},
                              separators=(",", ":")) + "\n"
        return _dump({"verified": ok, "n": config.n, "m": config.m}, "csv")
    if cmd == "radon-count":
        config = _load_config(args, X.n, 2 * d)
        if args.exists:
            return _dump({"has_match": has_radon_match(X, config, d)}, args.format)
        if args.sampled:
            rep = sample_radon_matches(X, config, d, args.trials, args.seed)
        else:
            rep = count_radon_matches(X, config, d, budget=args.budget)
        return _dump(json.loads(rep.to_json()), args.format)
    raise PreconditionError(f"unknown command {cmd}")


def main(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = run(args)
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ComputationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
