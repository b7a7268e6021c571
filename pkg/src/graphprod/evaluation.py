"""Monte-Carlo evaluation of the spectrum estimator against exact eigensolves.

Per-trial seeds are derived from ``(base_seed, trial_index)`` with
:func:`trial_seed`, so every trial can be rerun in isolation and results do
not depend on how trials are scheduled across worker processes.
"""

from __future__ import annotations

import itertools
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .estimator import OrderingMethod, child_seeds, estimate_from_spectra, factor_laplacian_spectrum
from .graph import (
    Graph,
    Spectrum,
    SpectrumKind,
    degree_spectrum,
    degrees,
    laplacian_matrix,
)
from .linalg import UndefinedCorrelationError, eig_symmetric, eigvals_symmetric, pearson_correlation
from .products import ProductKind, kron_product, product_graph
from .randgen import GenerationError, generate, parse_model

PCT_EPSILON = 1e-9
WITHIN_PCT = 10.0
EXHAUSTIVE_LIMIT = 10**7


class SearchTooLargeError(ValueError):
    """Exhaustive ordering search would exceed its permutation budget."""


def rmse(actual, estimated) -> float:
    a = np.asarray(getattr(actual, "values", actual), dtype=float)
    e = np.asarray(getattr(estimated, "values", estimated), dtype=float)
    if a.shape != e.shape:
        raise ValueError(f"spectrum size mismatch: {a.size} vs {e.size}")
    return float(np.sqrt(np.mean((e - a) ** 2)))


def percentage_errors(actual, estimated, epsilon: float = PCT_EPSILON) -> np.ndarray:
    """Per-rank ``100 * (est - act) / act`` for two ascending spectra.

    A rank where both values are within ``epsilon`` of zero scores 0. A rank
    where only the actual value is near zero has no defined error and is
    returned as NaN.
    """
    a = np.asarray(getattr(actual, "values", actual), dtype=float)
    e = np.asarray(getattr(estimated, "values", estimated), dtype=float)
    if a.shape != e.shape:
        raise ValueError(f"spectrum size mismatch: {a.size} vs {e.size}")
    out = np.full(a.shape, np.nan)
    nonzero = np.abs(a) > epsilon
    out[nonzero] = 100.0 * (e[nonzero] - a[nonzero]) / a[nonzero]
    out[~nonzero & (np.abs(e) <= epsilon)] = 0.0
    return out


# -- distribution summaries ----------------------------------------------------


@dataclass(frozen=True)
class DistributionSummary:
    """Order statistics of a sample, or of each column of a 2-D sample.

    ``box_low``/``box_high`` span 25 percentile points either side of the
    percentile rank of the mean. ``outliers`` (1-D samples only) lie more than
    1.5 IQR outside the quartiles.
    """

    min: float | np.ndarray
    p5: float | np.ndarray
    q25: float | np.ndarray
    median: float | np.ndarray
    q75: float | np.ndarray
    p95: float | np.ndarray
    max: float | np.ndarray
    mean: float | np.ndarray
    box_low: float | np.ndarray
    box_high: float | np.ndarray
    count: int | np.ndarray
    outliers: list[float] = field(default_factory=list)

    @classmethod
    def from_samples(cls, samples) -> DistributionSummary:
        x = np.asarray(samples, dtype=float)
        if x.ndim == 1:
            return cls._from_1d(x[~np.isnan(x)])
        if x.ndim != 2:
            raise ValueError("samples must be 1-D or 2-D")
        cols = [cls._from_1d(c[~np.isnan(c)], with_outliers=False) for c in x.T]
        stacked = {
            name: np.array([getattr(c, name) for c in cols])
            for name in ("min", "p5", "q25", "median", "q75", "p95", "max",
                         "mean", "box_low", "box_high", "count")
        }
        return cls(**stacked)

    @classmethod
    def _from_1d(cls, x: np.ndarray, with_outliers: bool = True) -> DistributionSummary:
        if x.size == 0:
            nan = float("nan")
            return cls(nan, nan, nan, nan, nan, nan, nan, nan, nan, nan, 0)
        p = np.percentile(x, [0, 5, 25, 50, 75, 95, 100])
        mean = float(x.mean())
        rank = 100.0 * np.count_nonzero(x <= mean) / x.size
        lo, hi = np.percentile(x, [max(0.0, rank - 25.0), min(100.0, rank + 25.0)])
        outliers: list[float] = []
        if with_outliers:
            iqr = p[4] - p[2]
            mask = (x < p[2] - 1.5 * iqr) | (x > p[4] + 1.5 * iqr)
            outliers = sorted(x[mask].tolist())
        return cls(*map(float, p), mean, float(lo), float(hi), int(x.size), outliers)

    def as_dict(self) -> dict:
        def conv(v):
            return v.tolist() if isinstance(v, np.ndarray) else v
        return {k: conv(v) for k, v in self.__dict__.items()}


# -- trials --------------------------------------------------------------------


def trial_seed(base_seed: int, trial_index: int) -> int:
    """Seed of trial ``trial_index``: SeedSequence([base_seed, trial_index]) state."""
    ss = np.random.SeedSequence([int(base_seed), int(trial_index)])
    return int(ss.generate_state(1, dtype=np.uint64)[0])


@dataclass(frozen=True)
class TrialConfig:
    kind: ProductKind
    model_g: str
    model_h: str
    method: OrderingMethod
    seed: int
    trial_index: int = 0
    base_seed: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", ProductKind(self.kind))
        object.__setattr__(self, "method", OrderingMethod(self.method))

    def as_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "model_g": self.model_g,
            "model_h": self.model_h,
            "method": self.method.value,
            "seed": self.seed,
            "trial_index": self.trial_index,
            "base_seed": self.base_seed,
        }


@dataclass(frozen=True)
class TrialReport:
    config: TrialConfig
    actual: Spectrum
    estimated: Spectrum
    rmse: float
    pct_errors: np.ndarray
    wall_time_exact: float
    wall_time_estimate: float


def factor_graphs(model_g, model_h, seed: int) -> tuple[Graph, Graph, int]:
    """Factor graphs and ordering seed for one trial seed."""
    seed_g, seed_h, seed_order = child_seeds(seed, 3)
    return generate(model_g, seed_g), generate(model_h, seed_h), seed_order


def exact_product_laplacian(kind, g: Graph, h: Graph) -> Spectrum:
    return Spectrum(eigvals_symmetric(laplacian_matrix(product_graph(kind, g, h))),
                    SpectrumKind.LAPLACIAN)


def run_trial(kind, model_g, model_h, seed: int, methods=tuple(OrderingMethod),
              trial_index: int = 0, base_seed: int | None = None) -> list[TrialReport]:
    """One factor pair, one exact eigensolve, one estimate per method."""
    kind = ProductKind(kind)
    mg = parse_model(model_g) if isinstance(model_g, str) else model_g
    mh = parse_model(model_h) if isinstance(model_h, str) else model_h
    g, h, seed_order = factor_graphs(mg, mh, seed)

    t0 = time.perf_counter()
    actual = exact_product_laplacian(kind, g, h)
    t_exact = time.perf_counter() - t0

    t0 = time.perf_counter()
    d_g, mu_g = degree_spectrum(g), factor_laplacian_spectrum(g)
    d_h, mu_h = degree_spectrum(h), factor_laplacian_spectrum(h)
    t_factors = time.perf_counter() - t0

    reports = []
    for method in methods:
        method = OrderingMethod(method)
        t0 = time.perf_counter()
        est = estimate_from_spectra(kind, d_g, mu_g, d_h, mu_h, method, seed_order)
        t_est = t_factors + time.perf_counter() - t0
        cfg = TrialConfig(kind, str(mg), str(mh), method, seed, trial_index, base_seed)
        reports.append(TrialReport(
            config=cfg,
            actual=actual,
            estimated=est,
            rmse=rmse(actual, est),
            pct_errors=percentage_errors(actual, est),
            wall_time_exact=t_exact,
            wall_time_estimate=t_est,
        ))
    return reports


def rerun(config: TrialConfig) -> TrialReport:
    """Reproduce a single report from its recorded configuration."""
    return run_trial(config.kind, config.model_g, config.model_h, config.seed,
                     [config.method], config.trial_index, config.base_seed)[0]


def _trial_job(args):
    kind, mg, mh, base_seed, index, methods = args
    try:
        return run_trial(kind, mg, mh, trial_seed(base_seed, index), methods, index, base_seed)
    except GenerationError as exc:
        raise GenerationError(f"trial {index}: {exc}") from exc


def run_trials(kind, model_g, model_h, trials: int, base_seed: int,
               methods=tuple(OrderingMethod), jobs: int = 1) -> list[list[TrialReport]]:
    """Run ``trials`` independent trials; result ``[trial][method]`` in trial order."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    kind = ProductKind(kind)
    methods = tuple(OrderingMethod(m) for m in methods)
    jobs_args = [(kind, str(model_g), str(model_h), base_seed, i, methods) for i in range(trials)]
    if jobs <= 1:
        return [_trial_job(a) for a in jobs_args]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_trial_job, jobs_args))


def summarize_rmse(results: list[list[TrialReport]]) -> dict[OrderingMethod, DistributionSummary]:
    by_method: dict[OrderingMethod, list[float]] = {}
    for trial in results:
        for rep in trial:
            by_method.setdefault(rep.config.method, []).append(rep.rmse)
    return {m: DistributionSummary.from_samples(v) for m, v in by_method.items()}


@dataclass(frozen=True)
class ErrorProfile:
    per_rank: DistributionSummary
    fraction_within_10pct: float
    defined_count: int
    undefined_count: int
    undefined_ranks: list[int]


def summarize_errors(reports: list[TrialReport], within: float = WITHIN_PCT) -> ErrorProfile:
    """Pool percentage errors by rank (rows = trials) and overall."""
    errs = np.vstack([r.pct_errors for r in reports])
    defined = ~np.isnan(errs)
    n_def = int(defined.sum())
    within_count = int(np.count_nonzero(np.abs(errs[defined]) <= within))
    undefined_ranks = sorted({int(k) + 1 for k in np.nonzero(~defined)[1]})
    return ErrorProfile(
        per_rank=DistributionSummary.from_samples(errs),
        fraction_within_10pct=within_count / n_def if n_def else float("nan"),
        defined_count=n_def,
        undefined_count=int(errs.size - n_def),
        undefined_ranks=undefined_ranks,
    )


def run_method_comparison(kind, model_g, model_h, trials: int = 100, base_seed: int = 0,
                          jobs: int = 1):
    """RMSE summary for every ordering method over shared factor pairs.

    Returns ``(summaries, results)`` where ``results`` is the raw trial grid.
    """
    results = run_trials(kind, model_g, model_h, trials, base_seed, tuple(OrderingMethod), jobs)
    return summarize_rmse(results), results


def run_error_profile(kind, model_g, model_h, trials: int = 100, base_seed: int = 0,
                      method=OrderingMethod.CORRELATED, jobs: int = 1):
    """Per-rank percentage-error profile. Returns ``(profile, reports)``."""
    results = run_trials(kind, model_g, model_h, trials, base_seed, [method], jobs)
    reports = [t[0] for t in results]
    return summarize_errors(reports), reports


# -- correlation between Kronecker eigenvectors and their images ---------------


def correlation_experiment(g: Graph, h: Graph, kind=ProductKind.DIRECT) -> np.ndarray:
    """Pearson correlation of ``w_i ⊗ w_j`` with ``L (w_i ⊗ w_j)`` for all pairs.

    ``w_i``, ``w_j`` are Laplacian eigenvectors of ``g`` and ``h`` and ``L`` is
    the explicit product Laplacian. Pairs whose correlation is undefined
    (notably the two constant eigenvectors) are left out. Order is row-major
    in ``(i, j)`` with the undefined pairs removed.
    """
    w_g = eig_symmetric(laplacian_matrix(g)).vectors
    w_h = eig_symmetric(laplacian_matrix(h)).vectors
    basis = kron_product(w_g, w_h)
    images = laplacian_matrix(product_graph(kind, g, h)) @ basis
    out = []
    for k in range(basis.shape[1]):
        try:
            out.append(pearson_correlation(basis[:, k], images[:, k]))
        except UndefinedCorrelationError:
            continue
    return np.asarray(out)


# -- exhaustive search over eigenvalue orderings ------------------------------


@dataclass(frozen=True)
class ExhaustiveResult:
    best_rmse: float
    best_mu_g: np.ndarray
    best_mu_h: np.ndarray
    correlated_rmse: float
    orderings_tried: int


def exhaustive_ordering_oracle(kind, g: Graph, h: Graph,
                               limit: int = EXHAUSTIVE_LIMIT) -> ExhaustiveResult:
    """Minimum estimate RMSE over every pairing of eigenvalues with sorted degrees.

    Raises ``ValueError`` if ``|V_G|! * |V_H|!`` exceeds ``limit``.
    """
    kind = ProductKind(kind)
    if kind is ProductKind.CARTESIAN:
        raise ValueError("no estimator exists for the Cartesian product; it is exact")
    m, n = g.node_count, h.node_count
    total = math.factorial(m) * math.factorial(n)
    if total > limit:
        raise SearchTooLargeError(f"{m}! * {n}! = {total} orderings exceeds the limit of {limit}")

    actual = exact_product_laplacian(kind, g, h).values
    d_g = np.sort(degrees(g)).astype(float)
    d_h = np.sort(degrees(h)).astype(float)
    mu_g = factor_laplacian_spectrum(g).values
    mu_h = factor_laplacian_spectrum(h).values

    perms_h = mu_h[np.array(list(itertools.permutations(range(n))))]   # (n!, n)
    best = (np.inf, None, None)
    for pg in itertools.permutations(range(m)):
        mg = mu_g[list(pg)][None, :, None]                               # (1, m, 1)
        mh = perms_h[:, None, :]                                         # (n!, 1, n)
        est = mg * d_h[None, None, :] + d_g[None, :, None] * mh - mg * mh
        if kind is ProductKind.STRONG:
            est = est + mg + mh
        est = np.sort(est.reshape(est.shape[0], -1), axis=1)
        errs = np.sqrt(np.mean((est - actual) ** 2, axis=1))
        k = int(np.argmin(errs))
        if errs[k] < best[0]:
            best = (float(errs[k]), mu_g[list(pg)], perms_h[k].copy())

    corr = estimate_from_spectra(kind, d_g, mu_g, d_h, mu_h, OrderingMethod.CORRELATED)
    return ExhaustiveResult(best[0], best[1], best[2], rmse(actual, corr), total)


# -- timing ----------------------------------------------------------------------


@dataclass(frozen=True)
class TimingResult:
    t_exact: float
    t_estimate: float
    speedup: float
    actual: Spectrum
    estimated: Spectrum


def timing_comparison(kind, model_g, model_h, seed: int,
                      method=OrderingMethod.CORRELATED) -> TimingResult:
    """Wall time of the explicit product eigensolve vs the factor-only estimate.

    The exact side includes building the product graph and its Laplacian; the
    estimate side includes both factor eigensolves.
    """
    g, h, seed_order = factor_graphs(model_g, model_h, seed)
    t0 = time.perf_counter()
    actual = exact_product_laplacian(kind, g, h)
    t_exact = time.perf_counter() - t0
    t0 = time.perf_counter()
    est = estimate_from_spectra(kind, degree_spectrum(g), factor_laplacian_spectrum(g),
                                degree_spectrum(h), factor_laplacian_spectrum(h), method, seed_order)
    t_est = time.perf_counter() - t0
    return TimingResult(t_exact, t_est, t_exact / t_est, actual, est)

