"""Grover search: coefficient-level simulator, circuit form and closed-form states.

The ancilla wire of the textbook circuit is not simulated; the oracle is taken
in its phase form ``U_f|x> = (-1)^f(x) |x>``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .circuit import run
from .statevec import H, basis_state, plus_state


@dataclass(frozen=True)
class GroverProblem:
    n_qubits: int
    solutions: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "solutions", frozenset(int(x) for x in self.solutions))
        if self.n_qubits < 1:
            raise ValueError("need at least one qubit")
        if not self.solutions:
            raise ValueError("solution set must be nonempty")
        if len(self.solutions) >= self.N:
            raise ValueError("solution set must be a proper subset of the search space")
        bad = [x for x in self.solutions if not 0 <= x < self.N]
        if bad:
            raise ValueError(f"solution indices out of range: {sorted(bad)}")

    @property
    def N(self) -> int:
        return 2**self.n_qubits

    @property
    def k_opt(self) -> int:
        return k_opt(self.N, len(self.solutions))


@dataclass
class GroverTrace:
    """States at the end of each loop iteration, ``phi_0 .. phi_{k_opt}``."""

    end_loop_states: list[np.ndarray]
    k_opt: int
    problem: GroverProblem | None = field(default=None, repr=False)


def k_opt(N: int, s: int = 1) -> int:
    """Iteration count ``round(pi/4 * sqrt(N/s))`` with half-up rounding."""
    if not 1 <= s < N:
        raise ValueError(f"need 1 <= s < N, got s={s}, N={N}")
    return math.floor(math.pi / 4 * math.sqrt(N / s) + 0.5)


def oracle_apply(state: np.ndarray, solutions) -> np.ndarray:
    """Flip the sign of every amplitude indexed by ``solutions``."""
    out = np.array(state, dtype=complex)
    idx = np.fromiter((int(x) for x in solutions), dtype=np.int64)
    if idx.size and (idx.min() < 0 or idx.max() >= out.size):
        raise ValueError("solution index out of range")
    out[idx] *= -1
    return out


def diffusion_apply(state: np.ndarray) -> np.ndarray:
    """Inversion about the mean: ``a_i -> 2*mean(a) - a_i``."""
    state = np.asarray(state, dtype=complex)
    return 2 * state.mean() - state


def grover_run(problem: GroverProblem) -> GroverTrace:
    """Run ``k_opt`` oracle+diffusion rounds from ``H^{(x)n}|0...0>``."""
    state = plus_state(problem.n_qubits)
    states = [state]
    for _ in range(problem.k_opt):
        state = diffusion_apply(oracle_apply(state, problem.solutions))
        states.append(state)
    return GroverTrace(states, problem.k_opt, problem)


def oracle_matrix(n: int, solutions) -> np.ndarray:
    diag = np.ones(2**n, dtype=complex)
    diag[list(solutions)] = -1
    return np.diag(diag)


def diffusion_matrix(n: int) -> np.ndarray:
    """``2|+><+|^{(x)n} - I``."""
    plus = plus_state(n)
    return 2 * np.outer(plus, plus.conj()) - np.eye(2**n)


def grover_layers(problem: GroverProblem) -> list[list[np.ndarray]]:
    """Layered circuit: Hadamards, then ``k_opt`` pairs of (oracle, diffusion) layers.

    Oracle and diffusion are full-width dense blocks, so keep ``n`` small.
    """
    n = problem.n_qubits
    uf = oracle_matrix(n, problem.solutions)
    d = diffusion_matrix(n)
    layers = [[H] * n]
    for _ in range(problem.k_opt):
        layers += [[uf], [d]]
    return layers


def grover_run_circuit(problem: GroverProblem) -> GroverTrace:
    """Circuit-based run, keeping only the end-of-loop states."""
    states = run(grover_layers(problem), basis_state(problem.n_qubits, 0))
    # states[1] is after the Hadamard layer; each loop adds two layers
    end_loop = [states[1 + 2 * k] for k in range(problem.k_opt + 1)]
    return GroverTrace(end_loop, problem.k_opt, problem)


@dataclass(frozen=True)
class GroverCoefficients:
    """Amplitudes of ``phi_k``: ``alpha`` on solutions, ``beta`` elsewhere.

    ``alpha_tilde``/``beta_tilde`` give the secant-line form
    ``phi_k = alpha_tilde * sum_{x in S}|x> + beta_tilde * |+>^{(x)n}``.
    """

    alpha: float
    beta: float
    alpha_tilde: float
    beta_tilde: float


def grover_angle(N: int, s: int) -> float:
    """``theta`` with ``sin(theta/2) = sqrt(s/N)``."""
    return 2 * math.asin(math.sqrt(s / N))


def explicit_coefficients(n: int, s: int, k: int) -> GroverCoefficients:
    if k < 0:
        raise ValueError("iteration index must be non-negative")
    N = 2**n
    half = (2 * k + 1) / 2 * grover_angle(N, s)
    alpha = math.sin(half) / math.sqrt(s)
    beta = math.cos(half) / math.sqrt(N - s)
    return GroverCoefficients(alpha, beta, alpha - beta, 2 ** (n / 2) * beta)


def explicit_state(n: int, solutions, k: int) -> np.ndarray:
    """Closed-form ``phi_k`` after ``k`` Grover iterations."""
    solutions = sorted(set(solutions))
    c = explicit_coefficients(n, len(solutions), k)
    state = np.full(2**n, c.beta, dtype=complex)
    state[solutions] = c.alpha
    return state


def phi_ent(n: int, x0: int = 0) -> np.ndarray:
    """``(|x0> + |+>^{(x)n}) / K`` with ``K = sqrt(2 + 2**(1 - n/2))``."""
    state = basis_state(n, x0) + plus_state(n)
    K = math.sqrt(2 + 2 * 2 ** (-n / 2))
    return state / K


def success_probability(state: np.ndarray, solutions) -> float:
    return float(np.sum(np.abs(np.asarray(state)[list(solutions)]) ** 2))

