"""Grid-plus-simplex maximization of the angle and parameter landscapes.

Both surfaces we care about are cheap, smooth, low-dimensional and mildly
multimodal, so the strategy is deliberately plain: sweep a regular grid,
keep the best handful of cells, refine each with a bounded Nelder-Mead
simplex, and report every distinct local maximum found.  Ties between
equal grid cells go to the lowest row-major index so golden outputs are
stable across runs.
"""

from __future__ import annotations

import dataclasses
import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .classical import ClassicalParams, exact_prob_d2, exact_prob_d3
from .qaoa_engine import closed_form_f2, closed_form_f3

DEFAULT_TOL = 1e-9
DEFAULT_MAX_ITERS = 2000
TOP_K = 8           # grid cells carried into refinement
DISTINCT_TOL = 1e-3  # refined points closer than this count as one maximum

QAOA_BOX = ((0.0, 2.0 * math.pi), (0.0, math.pi))


@dataclass(frozen=True)
class GridSweep:
    """Full value grid plus the best cell, for heatmap export and seeding."""
    axes: tuple
    values: np.ndarray
    argmax: tuple[float, ...]
    value: float


@dataclass(frozen=True)
class OptimizationReport:
    argmax: tuple[float, ...]
    value: float
    grid_resolution: tuple[int, ...] | None
    grid_value: float | None
    iterations: int
    converged: bool
    tol: float
    tolerance_achieved: float
    maxima: tuple[tuple[tuple[float, ...], float], ...]


def grid_sweep(objective, box, resolution, include_endpoint: bool = False,
               workers: int = 1) -> GridSweep:
    """Evaluate `objective` on a regular grid over `box`.

    `box` is a sequence of (lo, hi) pairs and `resolution` an int or a
    per-axis sequence, at least 2 everywhere.  Angle domains are periodic,
    so the default grid is half-open (hi excluded); probability boxes want
    `include_endpoint=True` to land on the corners.  The best cell is the
    first (lowest row-major index) among equal maxima.
    """
    box = tuple((float(lo), float(hi)) for lo, hi in box)
    for lo, hi in box:
        if not (math.isfinite(lo) and math.isfinite(hi)) or hi <= lo:
            raise ValueError(f"box axis ({lo}, {hi}) is not a finite interval")
    if isinstance(resolution, int):
        resolution = (resolution,) * len(box)
    resolution = tuple(int(r) for r in resolution)
    if len(resolution) != len(box) or any(r < 2 for r in resolution):
        raise ValueError(f"need resolution >= 2 on each of {len(box)} axes, "
                         f"got {resolution}")
    axes = tuple(
        np.linspace(lo, hi, r) if include_endpoint
        else lo + (hi - lo) * np.arange(r) / r
        for (lo, hi), r in zip(box, resolution)
    )
    points = itertools.product(*(tuple(float(t) for t in ax) for ax in axes))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            flat = list(pool.map(objective, points, chunksize=64))
    else:
        flat = [objective(pt) for pt in points]
    values = np.array(flat, dtype=float).reshape(resolution)
    idx = np.unravel_index(int(np.argmax(values)), resolution)
    argmax = tuple(float(axes[j][idx[j]]) for j in range(len(axes)))
    return GridSweep(axes=axes, values=values, argmax=argmax,
                     value=float(values[idx]))


def nelder_mead(objective, start, box=None, tol: float = DEFAULT_TOL,
                max_iters: int = DEFAULT_MAX_ITERS) -> OptimizationReport:
    """Maximize `objective` by simplex refinement from `start`.

    Stops once both the simplex diameter and the value spread fall below
    `tol`.  Iterates are kept inside `box` by clamping.  Hitting the
    iteration cap is reported via `converged=False`, not raised, and the
    result is never worse than the starting point.
    """
    x0 = np.asarray(start, dtype=float)
    if box is not None:
        box = tuple((float(lo), float(hi)) for lo, hi in box)
        if len(box) != x0.size or any(
                not lo <= t <= hi for t, (lo, hi) in zip(x0, box)):
            raise ValueError(f"start {tuple(x0)} is outside the search box")
    seed_value = float(objective(x0))
    res = minimize(lambda x: -objective(x), x0, method="Nelder-Mead",
                   bounds=box,
                   options={"xatol": tol, "fatol": tol,
                            "maxiter": max_iters, "maxfev": 4 * max_iters})
    sim, fsim = res.final_simplex
    achieved = max(float(np.max(np.abs(sim[1:] - sim[0]))),
                   float(np.max(fsim) - np.min(fsim)))
    argmax = tuple(float(t) for t in res.x)
    value = float(-res.fun)
    if value < seed_value:
        argmax, value = tuple(float(t) for t in x0), seed_value
    return OptimizationReport(argmax=argmax, value=value,
                              grid_resolution=None, grid_value=None,
                              iterations=int(res.nit),
                              converged=bool(res.success), tol=tol,
                              tolerance_achieved=achieved,
                              maxima=((argmax, value),))


def _multistart(objective, box, resolution, include_endpoint, workers,
                tol, max_iters, report_margin):
    """Grid sweep, refine the TOP_K cells, merge coincident maxima."""
    sweep = grid_sweep(objective, box, resolution,
                       include_endpoint=include_endpoint, workers=workers)
    shape = sweep.values.shape
    order = np.argsort(-sweep.values.ravel(), kind="stable")[:TOP_K]
    reports = []
    for f in order:
        idx = np.unravel_index(int(f), shape)
        seed = tuple(float(sweep.axes[j][idx[j]]) for j in range(len(shape)))
        reports.append(nelder_mead(objective, seed, box=box,
                                   tol=tol, max_iters=max_iters))
    best = reports[0]
    for r in reports[1:]:
        if r.value > best.value:
            best = r
    kept = []
    for r in sorted(reports, key=lambda r: -r.value):
        if all(math.dist(r.argmax, k.argmax) > DISTINCT_TOL for k in kept):
            kept.append(r)
    maxima = tuple((r.argmax, r.value) for r in kept
                   if r.value >= best.value - report_margin)
    return OptimizationReport(argmax=best.argmax, value=best.value,
                              grid_resolution=tuple(shape),
                              grid_value=sweep.value,
                              iterations=sum(r.iterations for r in reports),
                              converged=best.converged, tol=tol,
                              tolerance_achieved=best.tolerance_achieved,
                              maxima=maxima)


def qaoa_objective(d: int):
    """Per-vertex expectation F/n as a function of the packed point (gamma, beta)."""
    if d == 2:
        return lambda x: closed_form_f2(1, (x[0], x[1]))
    if d == 3:
        return lambda x: closed_form_f3(1, (x[0], x[1]))
    raise ValueError(f"closed forms cover d in {{2, 3}}, got {d}")


def classical_objective(d: int):
    """Satisfaction probability as a function of the packed point (p, q0..qd)."""
    if d == 2:
        return lambda x: exact_prob_d2(
            ClassicalParams(x[0], (x[1], x[2], x[3])))
    if d == 3:
        return lambda x: exact_prob_d3(
            ClassicalParams(x[0], (x[1], x[2], x[3], x[4])))
    raise ValueError(f"exact forms cover d in {{2, 3}}, got {d}")


def optimize_qaoa(d: int, resolution: int = 256, workers: int = 1,
                  tol: float = DEFAULT_TOL, max_iters: int = DEFAULT_MAX_ITERS,
                  report_margin: float = 0.1) -> OptimizationReport:
    """Maximize the per-vertex one-round expectation over one angle period."""
    return _multistart(qaoa_objective(d), QAOA_BOX, resolution,
                       include_endpoint=False, workers=workers,
                       tol=tol, max_iters=max_iters,
                       report_margin=report_margin)


def _canonical_classical(x):
    """Smallest symmetry image of a classical parameter vector.

    The satisfaction probability is invariant under p -> 1-p (complement
    the initial cut) and under q -> 1-q componentwise (complement the
    final cut), so maxima come in orbits of up to four points.  Reports
    use the lexicographically smallest image as the representative.
    """
    p, q = x[0], tuple(x[1:])
    return min((pp,) + qq
               for pp in (p, 1.0 - p)
               for qq in (q, tuple(1.0 - t for t in q)))


def optimize_classical(d: int, resolution: int | None = None, workers: int = 1,
                       tol: float = DEFAULT_TOL,
                       max_iters: int = DEFAULT_MAX_ITERS,
                       report_margin: float = 0.1) -> OptimizationReport:
    """Maximize the one-round satisfaction probability over (p, q0..qd).

    The closed grid over [0,1]^(d+2) is coarse (the default lands on the
    known corner structure and on p = 1/2) and exists only to seed the
    simplex refinements; the reported optimum comes from those.  Argmax
    and maxima are canonicalized per `_canonical_classical`, collapsing
    reflection-equivalent copies of the same maximum.
    """
    objective = classical_objective(d)
    if resolution is None:
        resolution = 11 if d == 2 else 7
    box = ((0.0, 1.0),) * (d + 2)
    report = _multistart(objective, box, resolution,
                         include_endpoint=True, workers=workers,
                         tol=tol, max_iters=max_iters,
                         report_margin=report_margin)
    argmax = _canonical_classical(report.argmax)
    maxima = []
    for x, _ in report.maxima:
        cx = _canonical_classical(x)
        if all(math.dist(cx, kx) > DISTINCT_TOL for kx, _ in maxima):
            maxima.append((cx, float(objective(cx))))
    return dataclasses.replace(report, argmax=argmax,
                               value=float(objective(argmax)),
                               maxima=tuple(maxima))


def report_to_json(report: OptimizationReport) -> dict:
    grid_res = report.grid_resolution
    return {
        "argmax": list(report.argmax),
        "value": report.value,
        "grid_resolution": list(grid_res) if grid_res is not None else None,
        "grid_value": report.grid_value,
        "iterations": report.iterations,
        "converged": report.converged,
        "tol": report.tol,
        "tolerance_achieved": report.tolerance_achieved,
        "maxima": [{"argmax": list(x), "value": v} for x, v in report.maxima],
    }
