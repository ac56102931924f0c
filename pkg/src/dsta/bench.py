"""Multi-trial experiment runner and brute-force oracles."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from math import inf

import numpy as np

from . import engine
from .engine import Mode, StaParams
from .errors import TooLarge
from .problems import Problem, TspInstance

_MASK64 = (1 << 64) - 1


def derive_seed(base_seed: int, trial: int) -> int:
    """Fixed 64-bit splitmix mixing of (base seed, trial index)."""
    z = (base_seed + (trial + 1) * 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


@dataclass
class TrialStats:
    trials: int
    best: float
    mean: float
    std: float  # sample standard deviation, n-1 denominator
    costs: list[float] = field(repr=False)
    error: float | None = None


def _stats(costs: list[float], error=None) -> TrialStats:
    arr = np.array(costs)
    std = float(arr.std(ddof=1)) if len(arr) > 1 else 0.0
    return TrialStats(
        trials=len(costs),
        best=float(arr.min()),
        mean=float(arr.mean()),
        std=std,
        costs=costs,
        error=error,
    )


def run_trials(
    problem: Problem,
    params: StaParams,
    trials: int,
    base_seed: int = 0,
    error_fn=None,
    keep_results: bool = False,
):
    """Repeat seeded runs; trial i uses a seed mixed from (base_seed, i).

    error_fn, when given, maps the best-of-trials cost to the reported
    error percentage.  With keep_results the per-trial RunResults are
    returned alongside the statistics.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    results = []
    for i in range(trials):
        p = replace(params, seed=derive_seed(base_seed, i))
        results.append(engine.run(problem, p))
    costs = [r.best_cost for r in results]
    stats = _stats(costs)
    if error_fn is not None:
        stats.error = error_fn(stats.best)
    if keep_results:
        return stats, results
    return stats


def compare_modes(problem: Problem, params: StaParams, trials: int, base_seed: int = 0):
    """Run STA and DSTA with identical per-trial seeds; returns paired stats."""
    sta = run_trials(problem, replace(params, mode=Mode.SIMPLE), trials, base_seed)
    dsta = run_trials(problem, replace(params, mode=Mode.DYNAMIC), trials, base_seed)
    diff = [s - d for s, d in zip(sta.costs, dsta.costs)]
    return sta, dsta, diff


def brute_force_tsp(inst: TspInstance) -> tuple[float, np.ndarray]:
    """Exact optimum over all (n-1)!/2 distinct tours; n <= 10 only."""
    n = inst.n
    if n > 10:
        raise TooLarge(f"brute-force TSP limited to n <= 10, got {n}")
    d = inst.matrix
    best_cost = inf
    best_tour = None
    for rest in itertools.permutations(range(1, n)):
        if rest[0] > rest[-1]:  # each tour and its reversal counted once
            continue
        tour = (0,) + rest
        cost = sum(d[tour[i], tour[(i + 1) % n]] for i in range(n))
        if cost < best_cost:
            best_cost = cost
            best_tour = tour
    return float(best_cost), np.array(best_tour)


def brute_force_qubo(q: np.ndarray, c: np.ndarray, atol: float = 1e-9):
    """Exact minimum of 1/2 x'Qx - x'c over {-1,1}^n with all optimizers; n <= 20."""
    n = q.shape[0]
    if n > 20:
        raise TooLarge(f"brute-force QUBO limited to n <= 20, got {n}")
    codes = np.arange(1 << n, dtype=np.uint32)
    bits = (codes[:, None] >> np.arange(n, dtype=np.uint32)) & 1
    x = 2 * bits.astype(np.int64) - 1
    values = 0.5 * np.einsum("ij,jk,ik->i", x, q, x) - x @ c
    opt = float(values.min())
    optimizers = x[values <= opt + atol]
    return opt, optimizers


def brute_force_dvs(problem: Problem, limit: int = 10**6) -> tuple[float, np.ndarray]:
    """Exact minimum by enumerating all m^n index vectors."""
    m, n = problem.alphabet_size, problem.size
    if m is None:
        raise TooLarge("DVS oracle needs a value-vector problem")
    if m**n > limit:
        raise TooLarge(f"search space {m}^{n} exceeds the {limit} bound")
    best_cost = inf
    best = None
    for combo in itertools.product(range(m), repeat=n):
        idx = np.array(combo)
        cost = problem.evaluate(idx)
        if cost < best_cost:
            best_cost = cost
            best = idx
    return float(best_cost), best
