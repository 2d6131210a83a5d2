"""Built-in benchmark suites for the bench harness.

Each suite row is (name, graph, k, oracle_value) where oracle_value is None
when no ground truth is available (timing-only rows).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .generators import (
    certified_min_kcut,
    cliques_bridge,
    cycle_graph,
    gnp_graph,
    planted_instance,
)
from .graph import Graph
from .oracle import brute_force_min_kcut


@dataclass(frozen=True)
class SuiteRow:
    name: str
    graph: Graph
    k: int
    oracle_value: Optional[int]


def suite_small(seed: int = 0) -> list:
    """Exhaustive-oracle range, n <= 12."""
    rows = []
    fixed = [
        ("cycle6", cycle_graph(6), 3),
        ("cycle8", cycle_graph(8), 2),
        ("cycle12", cycle_graph(12), 4),
        ("two_k5_bridge", cliques_bridge(5, 2, 1), 2),
        ("two_k5_bridge_k3", cliques_bridge(5, 2, 1), 3),
        ("three_k4_chain", cliques_bridge(4, 3, 1), 3),
    ]
    for name, g, k in fixed:
        rows.append(SuiteRow(name, g, k, brute_force_min_kcut(g, k).value))
    idx = 0
    for n in (8, 10, 12):
        for p in (0.3, 0.5, 0.8):
            for k in (2, 3):
                g = gnp_graph(n, p, seed + 1000 + idx)
                idx += 1
                rows.append(SuiteRow(f"gnp_n{n}_p{p}_k{k}", g, k,
                                     brute_force_min_kcut(g, k).value))
    return rows


def suite_planted(seed: int = 0) -> list:
    """Planted clusters with certified optima, n <= 60."""
    rows = []
    configs = [
        (2, 8, 0.9, 0.05, 0),
        (2, 12, 0.85, 0.03, 1),
        (3, 8, 0.9, 0.02, 0),
        (3, 10, 0.9, 0.02, 1),
        (4, 10, 0.95, 0.01, 0),
        (4, 10, 0.9, 0.01, 2),
    ]
    for idx, (k, size, p_in, p_out, islands) in enumerate(configs):
        for attempt in range(100):
            g, info = planted_instance(k, size, p_in, p_out, islands,
                                       seed=seed + 100 * idx + attempt)
            cert = certified_min_kcut(g, info, k)
            if cert is not None:
                rows.append(SuiteRow(
                    f"planted_k{k}_s{size}_i{islands}", g, k, cert[0]))
                break
        else:
            raise RuntimeError("no certifiable planted instance found")
    return rows


def suite_stress(seed: int = 0) -> list:
    """Timing only; no oracle values."""
    rows = []
    for idx, (n, p, k) in enumerate([(40, 0.3, 3), (60, 0.2, 3),
                                     (80, 0.15, 4), (100, 0.1, 4)]):
        rows.append(SuiteRow(f"stress_gnp_n{n}_k{k}",
                             gnp_graph(n, p, seed + idx), k, None))
    g, _ = planted_instance(4, 20, 0.7, 0.01, 3, seed=seed)
    rows.append(SuiteRow("stress_planted_k4", g, 4, None))
    return rows


SUITES = {
    "small": suite_small,
    "planted": suite_planted,
    "stress": suite_stress,
}


def get_suite(name: str, seed: int = 0) -> list:
    try:
        builder = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return builder(seed)
