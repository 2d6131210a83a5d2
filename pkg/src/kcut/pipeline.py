"""End-to-end minimum k-cut solver.

Branches on the 2-approximation value: small values go to the exact solver,
large ones through partition contraction, per-island-count border
enumeration, and island extension, with the 2-approximate cut always kept
as a safety floor.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Optional

from .borders import BorderParams, default_trials, enumerate_borders, tau_for
from .graph import Graph, GraphError, KCut, canonical_labels, connected_components, contract
from .islands import extend_border
from .oracle import (
    BRUTE_FORCE_KCUT_LIMIT,
    _zero_value_kcut,
    branch_and_bound_min_kcut,
    brute_force_min_kcut,
    sv_2approx,
)
from .partition import kt_partition
from .rng import mix64

_SEED_STRIDE = 0x9E3779B97F4A7C15


@dataclass(frozen=True)
class PipelineConfig:
    t: int = 2                      # exact-algorithm exponent knob
    threshold_const: int = 10
    trial_cap: int = 100_000
    oracle_n_limit: int = BRUTE_FORCE_KCUT_LIMIT
    seed: int = 0
    force_branch: Optional[str] = None   # "exact" | "sparsify"

    def __post_init__(self):
        if self.t < 1:
            raise ValueError("t must be >= 1")
        if self.threshold_const <= 0:
            raise ValueError("threshold_const must be positive")
        if self.force_branch not in (None, "exact", "sparsify"):
            raise ValueError(f"unknown branch override {self.force_branch!r}")


@dataclass
class SolveReport:
    k: int
    value: int
    cut: KCut
    branch: str                      # disconnected | exact | sparsify
    fallback: bool
    lambda_bar: Optional[int]
    seed: int
    partition_stats: Optional[dict] = None
    border_stats: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        parts: list = [[] for _ in range(self.k)]
        for v, lab in enumerate(self.cut.labels):
            parts[lab].append(v)
        parts.sort(key=lambda p: p[0])
        return {
            "k": self.k,
            "value": self.value,
            "components": parts,
            "method": "pipeline",
            "branch": self.branch,
            "fallback": self.fallback,
            "lambda_bar": self.lambda_bar,
            "seed": self.seed,
            "stats": {
                "partition": self.partition_stats,
                "borders": self.border_stats,
                "timings": self.timings,
            },
        }


def exact_min_kcut(g: Graph, k: int, n_limit: int = BRUTE_FORCE_KCUT_LIMIT) -> KCut:
    """Exact solver: exhaustive oracle at small n, pruned search above."""
    if g.n <= n_limit:
        return brute_force_min_kcut(g, k, n_limit=n_limit)
    return branch_and_bound_min_kcut(g, k)


def min_kcut(g: Graph, k: int, cfg: PipelineConfig = PipelineConfig()) -> SolveReport:
    """Solve minimum k-cut on a simple graph; see module docstring."""
    if not g.simple:
        raise GraphError("the pipeline accepts simple graphs only")
    if not 2 <= k <= g.n:
        raise ValueError(f"k must be in 2..n, got k={k} with n={g.n}")
    t0 = time.perf_counter()
    timings: dict = {}

    comps = connected_components(g)
    if len(comps.blocks) >= k:
        cut = _zero_value_kcut(g, k, comps)
        timings["total"] = time.perf_counter() - t0
        return SolveReport(k=k, value=0, cut=cut, branch="disconnected",
                           fallback=False, lambda_bar=None, seed=cfg.seed,
                           timings=timings)

    sv_cut = sv_2approx(g, k)
    lambda_bar = sv_cut.value
    timings["approx"] = time.perf_counter() - t0
    assert lambda_bar >= 1  # zero-value cuts exited above

    threshold = cfg.threshold_const * g.n ** (1.0 / (cfg.t + 1))
    go_exact = cfg.force_branch == "exact" or (
        cfg.force_branch is None and lambda_bar <= threshold)

    if go_exact:
        cut = exact_min_kcut(g, k, n_limit=cfg.oracle_n_limit)
        timings["exact"] = time.perf_counter() - t0 - timings["approx"]
        timings["total"] = time.perf_counter() - t0
        return SolveReport(k=k, value=cut.value, cut=cut, branch="exact",
                           fallback=False, lambda_bar=lambda_bar, seed=cfg.seed,
                           timings=timings)

    t1 = time.perf_counter()
    partition, kt_report = kt_partition(g, k, lambda_bar)
    gc, cmap = contract(g, partition)
    timings["kt"] = time.perf_counter() - t1

    best_key = (sv_cut.value, sv_cut.canonical_key())
    best_cut = sv_cut
    random_best: Optional[KCut] = None
    border_stats = []
    log2n = math.log2(g.n) if g.n >= 2 else 1.0
    t2 = time.perf_counter()
    for i in range(k):
        s = k - i
        beta = min(1.0, max(0.0, 1.0 - (1.0 - 2.0 / log2n) * i / k))
        tau = tau_for(beta, k)
        trials = default_trials(g.n, beta, k, cfg.trial_cap)
        seed_i = mix64(cfg.seed + (i + 1) * _SEED_STRIDE)
        params = BorderParams(s=s, beta=beta, tau=tau, trials=trials, seed=seed_i)
        max_border = math.floor(beta * lambda_bar)
        candidates = enumerate_borders(gc, params, max_value=max_border)
        extended = 0
        for cand in candidates:
            if cand.value > best_key[0]:
                break
            lifted_labels = canonical_labels(
                tuple(cand.labels[cmap[v]] for v in range(g.n)))
            lifted = KCut.from_labels(g, lifted_labels, s)
            ext = extend_border(g, lifted, i)
            extended += 1
            if ext is None:
                continue
            key = (ext.value, ext.canonical_key())
            if key < best_key:
                best_key = key
                best_cut = ext
            if random_best is None or ext.value < random_best.value:
                random_best = ext
        border_stats.append({
            "i": i, "s": s, "beta": beta, "tau": tau, "trials": trials,
            "candidates": len(candidates), "extended": extended,
        })
    timings["borders"] = time.perf_counter() - t2
    timings["total"] = time.perf_counter() - t0

    fallback = random_best is None or random_best.value > sv_cut.value
    final = KCut.from_labels(g, canonical_labels(best_cut.labels), k)
    return SolveReport(k=k, value=final.value, cut=final, branch="sparsify",
                       fallback=fallback, lambda_bar=lambda_bar, seed=cfg.seed,
                       partition_stats=kt_report, border_stats=border_stats,
                       timings=timings)
