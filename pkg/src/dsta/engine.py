"""Core iteration loop for simple STA and dynamic STA (DSTA).

Each outer iteration applies every enabled operator in order.  An operator
round draws `se` neighbors of the current state, keeps the best of them under
a greedy criterion, and in dynamic mode may accept a worse round-best with
probability p2 ("risk").  After all rounds the incumbent is updated greedily,
and dynamic mode resets the current state to the incumbent with probability
p1 ("restore").
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import IncompatibleOperator, InvalidParams
from .operators import DEFAULT_ORDER, Operator, sample_batch


class Mode(str, Enum):
    SIMPLE = "sta"
    DYNAMIC = "dsta"


@dataclass(frozen=True)
class StaParams:
    """All algorithm knobs; defaults follow the reference parameter block."""

    se: int = 32
    ma: int = 2
    mb: int = 1
    mc: int = 0
    md: int = 1
    p1: float = 0.1459
    p2: float = 0.0557
    max_iters: int = 1500
    mode: Mode = Mode.DYNAMIC
    seed: int = 0
    operator_set: tuple[Operator, ...] | None = None  # None: default per representation

    def validate(self) -> None:
        if self.se < 1:
            raise InvalidParams(f"se must be >= 1, got {self.se}")
        if self.ma < 2:
            raise InvalidParams(f"ma must be >= 2, got {self.ma}")
        if self.mb < 1:
            raise InvalidParams(f"mb must be >= 1, got {self.mb}")
        if self.mc < 0:
            raise InvalidParams(f"mc must be >= 0, got {self.mc}")
        if self.md < 1:
            raise InvalidParams(f"md must be >= 1, got {self.md}")
        if not 0.0 <= self.p1 <= 1.0:
            raise InvalidParams(f"p1 must be in [0,1], got {self.p1}")
        if not 0.0 <= self.p2 <= 1.0:
            raise InvalidParams(f"p2 must be in [0,1], got {self.p2}")
        if self.max_iters < 1:
            raise InvalidParams(f"max_iters must be >= 1, got {self.max_iters}")
        if self.operator_set is not None and len(self.operator_set) == 0:
            raise InvalidParams("operator_set must be non-empty")

    def factor(self, op: Operator) -> int:
        return {
            Operator.SWAP: self.ma,
            Operator.SHIFT: self.mb,
            Operator.SYMMETRY: self.mc,
            Operator.SUBSTITUTE: self.md,
        }[op]


@dataclass
class SearchState:
    current: np.ndarray
    current_cost: float
    incumbent: np.ndarray
    incumbent_cost: float


@dataclass
class RunResult:
    best_solution: np.ndarray
    best_cost: float
    trace: list[tuple[int, float, float]] = field(repr=False)
    evaluations: int = 0
    wall_time: float = 0.0


def resolve_operator_set(problem, params: StaParams) -> tuple[Operator, ...]:
    """Pick the operator order, defaulting per representation.

    Substitute only acts on value vectors; requesting it explicitly on a
    permutation problem is an error, while the default set simply omits it.
    """
    if params.operator_set is None:
        if problem.alphabet_size is None:
            return tuple(op for op in DEFAULT_ORDER if op is not Operator.SUBSTITUTE)
        return DEFAULT_ORDER
    if problem.alphabet_size is None and Operator.SUBSTITUTE in params.operator_set:
        raise IncompatibleOperator("substitute cannot act on a permutation state")
    return tuple(params.operator_set)


def accept_candidate(
    current_cost: float,
    candidate_cost: float,
    mode: Mode,
    p2: float,
    rng: np.random.Generator,
) -> bool:
    """Greedy criterion, with the dynamic-mode risk branch for non-improving moves."""
    if candidate_cost < current_cost:
        return True
    if mode is Mode.DYNAMIC:
        return bool(rng.random() < p2)
    return False


def operator_round(
    state: SearchState,
    op: Operator,
    problem,
    params: StaParams,
    rng: np.random.Generator,
) -> SearchState:
    """One neighborhood round: sample se candidates, keep the round best if accepted."""
    candidates = sample_batch(
        state.current, op, params.factor(op), params.se, rng, problem.alphabet_size
    )
    costs = problem.evaluate_many(candidates)
    best = int(np.argmin(costs))  # stable: first minimum wins
    if accept_candidate(state.current_cost, float(costs[best]), params.mode, params.p2, rng):
        state.current = candidates[best].copy()
        state.current_cost = float(costs[best])
    return state


def restore_step(
    state: SearchState, mode: Mode, p1: float, rng: np.random.Generator
) -> SearchState:
    if mode is Mode.DYNAMIC and rng.random() < p1:
        state.current = state.incumbent.copy()
        state.current_cost = state.incumbent_cost
    return state


def run(problem, params: StaParams) -> RunResult:
    """Execute one seeded STA/DSTA run; deterministic given (problem, params)."""
    params.validate()
    ops = resolve_operator_set(problem, params)
    rng = np.random.default_rng(params.seed)
    t0 = time.perf_counter()

    current = problem.initial(rng)
    current_cost = float(problem.evaluate(current))
    state = SearchState(current, current_cost, current.copy(), current_cost)
    evaluations = 1

    trace: list[tuple[int, float, float]] = []
    for it in range(params.max_iters):
        for op in ops:
            state = operator_round(state, op, problem, params, rng)
            evaluations += params.se
        if state.current_cost < state.incumbent_cost:
            state.incumbent = state.current.copy()
            state.incumbent_cost = state.current_cost
        state = restore_step(state, params.mode, params.p1, rng)
        trace.append((it, state.current_cost, state.incumbent_cost))

    return RunResult(
        best_solution=state.incumbent,
        best_cost=state.incumbent_cost,
        trace=trace,
        evaluations=evaluations,
        wall_time=time.perf_counter() - t0,
    )
