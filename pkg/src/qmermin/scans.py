"""Experiment drivers: Mermin curves along Grover and QFT runs, Delta along QFT runs.

Each scan yields one value per captured step and can be written as a two-column
CSV (``iteration,intricationValue``).
"""
from __future__ import annotations

import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Sequence, TextIO

import numpy as np

from .grover import GroverProblem, grover_run, phi_ent
from .hyperdet import qft_delta_trajectory
from .mermin import MerminFamilies, constant_family_objective, full_family_objective, mermin_expectation
from .qft import PeriodicSpec, periodic_state, qft_run
from .walk import WalkCache, WalkConfig, WalkResult, derive_seed, ones, optimize_restarts

CSV_HEADER = "iteration,intricationValue"
GROVER_MAX_QUBITS = 12

Progress = Callable[[str], None]


@dataclass
class ScanResult:
    values: list[float]
    families: list[MerminFamilies] | None = None

    @property
    def k_max(self) -> int:
        """First index of the maximum (ties go to the smaller step)."""
        return int(np.argmax(self.values))

    @property
    def peak(self) -> float:
        return self.values[self.k_max]

    def rows(self) -> list[tuple[int, float]]:
        return list(enumerate(self.values))


def format_value(v: float) -> str:
    return format(float(v), ".12g")


def write_csv(result: ScanResult, fh: TextIO) -> None:
    fh.write(CSV_HEADER + "\n")
    for k, v in result.rows():
        fh.write(f"{k},{format_value(v)}\n")


def csv_text(result: ScanResult) -> str:
    buf = io.StringIO()
    write_csv(result, buf)
    return buf.getvalue()


def _walk(objective, cfg: WalkConfig, restarts: int, jobs: int, cache: WalkCache | None, label: str) -> WalkResult:
    # the cache holds the best-of-restarts outcome, so the restart count is part of the key
    key = f"{label}|R={restarts}"
    if cache is not None:
        hit = cache.get(key, cfg)
        if hit is not None:
            return hit
    result = optimize_restarts(objective, cfg, restarts=restarts, jobs=jobs)
    if cache is not None:
        cache.put(key, cfg, result)
    return result


def grover_scan(
    n: int,
    target: int = 0,
    seed: int = 0,
    restarts: int = 5,
    jobs: int = 1,
    cache: WalkCache | None = None,
    progress: Progress | None = None,
) -> ScanResult:
    """Fit constant families once at ``phi_ent`` and evaluate them along the run.

    Returns ``f(phi_k)`` for ``k = 0..k_opt`` with the same operator at every step.
    """
    if not 2 <= n <= GROVER_MAX_QUBITS:
        raise ValueError(f"grover scan supports 2..{GROVER_MAX_QUBITS} qubits, got {n}")
    problem = GroverProblem(n, {target})
    cfg = WalkConfig(start=ones(6), seed=seed)
    if progress:
        progress(f"n={n}: optimizing at phi_ent")
    best = _walk(constant_family_objective(phi_ent(n, target)), cfg, restarts, jobs, cache, f"grover|n={n}|x0={target}")
    fam = MerminFamilies.from_constant_params(n, best.argmax)
    trace = grover_run(problem)
    values = []
    for k, state in enumerate(trace.end_loop_states):
        values.append(mermin_expectation(fam, state))
        if progress and (k % 10 == 0 or k == trace.k_opt):
            progress(f"n={n}: evaluated step {k}/{trace.k_opt}")
    return ScanResult(values, [fam])


def _qft_step(state: np.ndarray, cfg: WalkConfig, restarts: int) -> WalkResult:
    return optimize_restarts(full_family_objective(state), cfg, restarts=restarts)


def qft_scan(
    l: int,
    r: int,
    n: int = 4,
    seed: int = 0,
    restarts: int = 5,
    jobs: int = 1,
    cache: WalkCache | None = None,
    progress: Progress | None = None,
) -> ScanResult:
    """Per-step maximum of ``<M_n>`` over all ``6n`` parameters along the QFT of ``phi^{l,r}``.

    Step ``k`` gets its own seed derived from ``(seed, k)``, so the output does
    not depend on ``jobs`` or on which steps came from the cache.
    """
    states = qft_run(periodic_state(PeriodicSpec(l, r, n)))
    configs = [WalkConfig(start=ones(6 * n), seed=derive_seed(seed, 1, k)) for k in range(len(states))]
    labels = [f"qft|n={n}|l={l}|r={r}|k={k}|R={restarts}" for k in range(len(states))]
    results: list[WalkResult | None] = [cache.get(lab, c) if cache else None for lab, c in zip(labels, configs)]
    todo = [k for k, res in enumerate(results) if res is None]
    if jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = {k: pool.submit(_qft_step, states[k], configs[k], restarts) for k in todo}
            for k in todo:
                results[k] = futures[k].result()
                if progress:
                    progress(f"(l,r)=({l},{r}): step {k} -> {results[k].value:.4f}")
    else:
        for k in todo:
            results[k] = _qft_step(states[k], configs[k], restarts)
            if progress:
                progress(f"(l,r)=({l},{r}): step {k} -> {results[k].value:.4f}")
    if cache is not None:
        for k in todo:
            cache.put(labels[k], configs[k], results[k])
    families = [MerminFamilies.from_params(res.argmax) for res in results]
    return ScanResult([res.value for res in results], families)


def hyperdet_scan(l: int, r: int) -> ScanResult:
    """``|Delta_2222|`` along the 12 captured states of the 4-qubit QFT."""
    return ScanResult(qft_delta_trajectory(l, r))


def is_unimodal(values: Sequence[float], tie_tol: float = 1e-12, max_ties: int = 1) -> bool:
    """Strictly up to the first maximum, strictly down after it.

    Up to ``max_ties`` consecutive differences may be ties (within ``tie_tol``).
    """
    k = int(np.argmax(values))
    ties = 0
    for i in range(len(values) - 1):
        d = values[i + 1] - values[i]
        if abs(d) <= tie_tol:
            ties += 1
        elif (d < 0) if i < k else (d > 0):
            return False
    return ties <= max_ties
