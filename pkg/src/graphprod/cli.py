"""Command-line entry point: ``graphprod {product,estimate,exact,evaluate}``.

Exit codes: 0 success, 2 input error, 3 numerical error, 4 infeasible
configuration.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from . import __version__
from .estimator import OrderingMethod, estimate_pipeline
from .evaluation import (
    SearchTooLargeError,
    correlation_experiment,
    exhaustive_ordering_oracle,
    factor_graphs,
    run_trials,
    summarize_errors,
    summarize_rmse,
    timing_comparison,
    trial_seed,
)
from .exact import (
    adjacency_spectrum,
    compose_adjacency_spectrum,
    compose_cartesian_laplacian,
    compose_degree_spectrum,
    laplacian_spectrum,
)
from .graph import (
    EdgeListError, Graph, degree_spectrum, format_edgelist, is_connected, read_edgelist,
)
from .linalg import NumericalError
from .products import ProductKind, product_graph
from .randgen import GenerationError, InfeasibleModelError, parse_model

EXIT_OK, EXIT_INPUT, EXIT_NUMERICAL, EXIT_INFEASIBLE = 0, 2, 3, 4


class InputError(Exception):
    pass


def make_manifest(command: str, args: argparse.Namespace) -> dict:
    params = {k: (str(v) if isinstance(v, Path) else v)
              for k, v in sorted(vars(args).items()) if k not in ("func",)}
    return {
        "command": command,
        "params": params,
        "seed": getattr(args, "seed", None),
        "version": __version__,
        "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
    }


def _load(path) -> Graph:
    try:
        return read_edgelist(path)
    except EdgeListError as exc:
        raise InputError(f"{path}: {exc}") from exc
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from exc


def _emit_json(payload: dict, out) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _spectrum_payload(manifest: dict, kind: str, values) -> dict:
    return {"manifest": manifest, "kind": kind,
            "eigenvalues": [float(v) for v in np.asarray(values, dtype=float)]}


def _write_csv(path: Path, header: list[str], rows) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        w.writerows(rows)


def _outdir(args) -> Path | None:
    if args.out is None:
        return None
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


# -- commands ------------------------------------------------------------------


def cmd_product(args) -> int:
    g, h = _load(args.g), _load(args.h)
    for name, x in (("G", g), ("H", h)):
        if not is_connected(x):
            print(f"warning: factor {name} is not connected", file=sys.stderr)
    p = product_graph(args.kind, g, h)
    manifest = make_manifest("product", args)
    text = format_edgelist(p, comment="manifest: " + json.dumps(manifest, sort_keys=True))
    if args.out is None:
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text, encoding="utf-8")
    return EXIT_OK


def cmd_estimate(args) -> int:
    if args.kind == ProductKind.CARTESIAN.value:
        raise InputError("the Cartesian Laplacian spectrum is exact; use "
                         "'graphprod exact --matrix laplacian --compose cartesian'")
    g, h = _load(args.g), _load(args.h)
    for name, x in (("G", g), ("H", h)):
        if not is_connected(x):
            raise InputError(f"factor {name} is not connected; estimation assumes "
                             "a single zero Laplacian eigenvalue per factor")
    spec = estimate_pipeline(args.kind, g, h, args.ordering, args.seed)
    payload = _spectrum_payload(make_manifest("estimate", args), "laplacian", spec.values)
    payload["product"] = args.kind
    payload["ordering"] = args.ordering
    _emit_json(payload, args.out)
    return EXIT_OK


_SINGLE = {
    "degree": degree_spectrum,
    "adjacency": adjacency_spectrum,
    "laplacian": laplacian_spectrum,
}


def cmd_exact(args) -> int:
    manifest = make_manifest("exact", args)
    if args.graph is not None:
        if args.compose or args.g or args.h:
            raise InputError("use either --graph or --compose with --g/--h")
        spec = _SINGLE[args.matrix](_load(args.graph))
        _emit_json(_spectrum_payload(manifest, args.matrix, spec.values), args.out)
        return EXIT_OK
    if not (args.compose and args.g and args.h):
        raise InputError("need --graph FILE, or --compose KIND --g FILE --h FILE")
    kind = ProductKind(args.compose)
    g, h = _load(args.g), _load(args.h)
    if args.matrix == "degree":
        spec = compose_degree_spectrum(kind, degree_spectrum(g), degree_spectrum(h))
    elif args.matrix == "adjacency":
        spec = compose_adjacency_spectrum(kind, adjacency_spectrum(g), adjacency_spectrum(h))
    elif kind is ProductKind.CARTESIAN:
        spec = compose_cartesian_laplacian(laplacian_spectrum(g), laplacian_spectrum(h))
    else:
        raise InputError(f"no exact formula exists for the Laplacian spectrum of a {kind.value} "
                         "product (an open problem); use 'graphprod estimate' instead")
    payload = _spectrum_payload(manifest, args.matrix, spec.values)
    payload["product"] = kind.value
    _emit_json(payload, args.out)
    return EXIT_OK


def _trial_rows(trials):
    for t in trials:
        yield [t.config.trial_index, t.config.seed, repr(t.rmse),
               f"{1000 * t.wall_time_exact:.3f}", f"{1000 * t.wall_time_estimate:.3f}"]


def eval_rmse_compare(args, manifest) -> dict:
    results = run_trials(args.kind, args.g, args.h, args.trials, args.seed, jobs=args.jobs)
    summaries = summarize_rmse(results)
    out = _outdir(args)
    if out is not None:
        for i, method in enumerate(OrderingMethod):
            _write_csv(out / f"rmse_{method.value}.csv",
                       ["trial", "seed", "rmse", "t_exact_ms", "t_estimate_ms"],
                       _trial_rows(t[i] for t in results))
    medians = {m.value: s.median for m, s in summaries.items()}
    return {
        "methods": {m.value: s.as_dict() for m, s in summaries.items()},
        "median_rmse": medians,
        "best_method": min(medians, key=medians.get),
    }


def eval_error_profile(args, manifest) -> dict:
    results = run_trials(args.kind, args.g, args.h, args.trials, args.seed,
                         [args.ordering], jobs=args.jobs)
    reports = [t[0] for t in results]
    prof = summarize_errors(reports)
    out = _outdir(args)
    if out is not None:
        _write_csv(out / "trials.csv", ["trial", "seed", "rmse", "t_exact_ms", "t_estimate_ms"],
                   _trial_rows(reports))
        pr = prof.per_rank
        _write_csv(out / "ranks.csv", ["rank", "p5", "q25", "median", "q75", "p95"],
                   ([k + 1, *(repr(float(getattr(pr, f)[k]))
                              for f in ("p5", "q25", "median", "q75", "p95"))]
                    for k in range(len(pr.median))))
    return {
        "fraction_within_10pct": prof.fraction_within_10pct,
        "defined_count": prof.defined_count,
        "undefined_count": prof.undefined_count,
        "undefined_ranks": prof.undefined_ranks,
        "per_rank": prof.per_rank.as_dict(),
    }


def eval_correlation(args, manifest) -> dict:
    rows, per_trial = [], []
    for i in range(args.trials):
        seed = trial_seed(args.seed, i)
        g, h, _ = factor_graphs(args.g, args.h, seed)
        coeffs = correlation_experiment(g, h, args.kind)
        rows.extend([i, seed, repr(float(c))] for c in coeffs)
        per_trial.append({
            "trial": i, "seed": seed, "pairs": int(coeffs.size),
            "median": float(np.median(coeffs)),
            "fraction_above_0.8": float(np.mean(coeffs > 0.8)),
        })
    out = _outdir(args)
    if out is not None:
        _write_csv(out / "correlations.csv", ["trial", "seed", "coefficient"], rows)
    return {"trials": per_trial}


def eval_exhaustive(args, manifest) -> dict:
    g, h, _ = factor_graphs(args.g, args.h, args.seed)
    res = exhaustive_ordering_oracle(args.kind, g, h)
    _outdir(args)
    return {
        "best_rmse": res.best_rmse,
        "correlated_rmse": res.correlated_rmse,
        "best_mu_g": res.best_mu_g.tolist(),
        "best_mu_h": res.best_mu_h.tolist(),
        "orderings_tried": res.orderings_tried,
    }


def eval_timing(args, manifest) -> dict:
    res = timing_comparison(args.kind, args.g, args.h, args.seed)
    _outdir(args)
    return {"t_exact_s": res.t_exact, "t_estimate_s": res.t_estimate, "speedup": res.speedup,
            "product_nodes": len(res.actual)}


_EVALUATORS = {
    "rmse-compare": eval_rmse_compare,
    "error-profile": eval_error_profile,
    "correlation": eval_correlation,
    "exhaustive": eval_exhaustive,
    "timing": eval_timing,
}


def cmd_evaluate(args) -> int:
    try:
        args.g = str(parse_model(args.g))
        args.h = str(parse_model(args.h))
    except InfeasibleModelError:
        raise
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    manifest = make_manifest(f"evaluate {args.experiment}", args)
    payload = {"manifest": manifest, **_EVALUATORS[args.experiment](args, manifest)}
    out = Path(args.out) if args.out is not None else None
    if out is None:
        _emit_json(payload, None)
    else:
        _emit_json(manifest, out / "manifest.json")
        _emit_json(payload, out / "summary.json")
    return EXIT_OK


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphprod",
        description="Graph products, their exact spectra, and estimated Laplacian "
                    "spectra of direct and strong products.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    kinds = [k.value for k in ProductKind]
    orderings = [m.value for m in OrderingMethod]

    p = sub.add_parser("product", help="build a product graph edge list")
    p.add_argument("--kind", choices=kinds, required=True)
    p.add_argument("--g", required=True, help="edge-list file of factor G")
    p.add_argument("--h", required=True, help="edge-list file of factor H")
    p.add_argument("--out", help="output edge-list file (default: stdout)")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("estimate", help="estimate a direct/strong product Laplacian spectrum")
    p.add_argument("--kind", choices=kinds, required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--h", required=True)
    p.add_argument("--ordering", choices=orderings, default=OrderingMethod.CORRELATED.value)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="output JSON file (default: stdout)")
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("exact", help="exact spectrum of a graph or a composed product")
    p.add_argument("--matrix", choices=list(_SINGLE), required=True)
    p.add_argument("--graph", help="single edge-list file")
    p.add_argument("--compose", choices=kinds, help="compose the spectrum of a product")
    p.add_argument("--g")
    p.add_argument("--h")
    p.add_argument("--out", help="output JSON file (default: stdout)")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("evaluate", help="run an evaluation experiment")
    p.add_argument("experiment", choices=list(_EVALUATORS))
    p.add_argument("--kind", choices=[ProductKind.DIRECT.value, ProductKind.STRONG.value],
                   default=ProductKind.DIRECT.value)
    p.add_argument("--g", required=True, help="model of G: er:N:M or ba:N:m")
    p.add_argument("--h", required=True, help="model of H: er:N:M or ba:N:m")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--ordering", choices=orderings, default=OrderingMethod.CORRELATED.value,
                   help="ordering for error-profile")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="output directory (default: JSON on stdout)")
    p.set_defaults(func=cmd_evaluate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "trials", 1) < 1:
        parser.error("--trials must be at least 1")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NumericalError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (InfeasibleModelError, GenerationError, SearchTooLargeError) as exc:
        print(f"infeasible configuration: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE


if __name__ == "__main__":
    sys.exit(main())
