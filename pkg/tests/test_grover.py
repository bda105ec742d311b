import math

import numpy as np
import pytest

from qmermin.grover import (
    GroverProblem,
    diffusion_apply,
    explicit_coefficients,
    explicit_state,
    grover_angle,
    grover_run,
    grover_run_circuit,
    k_opt,
    oracle_apply,
    phi_ent,
    success_probability,
)
from qmermin.statevec import basis_state, plus_state, random_state


@pytest.mark.parametrize("N, s, expected", [(16, 1, 3), (4096, 1, 50), (512, 1, 18), (256, 1, 13), (64, 2, 4)])
def test_k_opt(N, s, expected):
    assert k_opt(N, s) == expected


@pytest.mark.parametrize("s", [0, 16, 17])
def test_k_opt_rejects(s):
    with pytest.raises(ValueError):
        k_opt(16, s)


def test_problem_validation():
    with pytest.raises(ValueError):
        GroverProblem(3, set())
    with pytest.raises(ValueError):
        GroverProblem(2, {4})
    with pytest.raises(ValueError):
        GroverProblem(1, {0, 1})
    assert GroverProblem(3, [1, 1, 2]).solutions == frozenset({1, 2})


def test_oracle_examples():
    u = plus_state(2)
    np.testing.assert_allclose(oracle_apply(u, {3}), [0.5, 0.5, 0.5, -0.5])
    np.testing.assert_allclose(oracle_apply(oracle_apply(u, {3}), {3}), u)
    np.testing.assert_allclose(oracle_apply(u, set()), u)
    with pytest.raises(ValueError):
        oracle_apply(u, {4})


def test_diffusion_examples(rng):
    u = plus_state(3)
    np.testing.assert_allclose(diffusion_apply(u), u)
    np.testing.assert_allclose(diffusion_apply(basis_state(2, 3)), [0.5, 0.5, 0.5, -0.5])
    v = random_state(4, rng)
    np.testing.assert_allclose(diffusion_apply(diffusion_apply(v)), v, atol=1e-10)


def test_two_qubit_search_is_exact():
    trace = grover_run(GroverProblem(2, {0}))
    assert trace.k_opt == 2
    assert abs(trace.end_loop_states[1][0] - 1) < 1e-12
    np.testing.assert_allclose(explicit_state(2, {0}, 1), basis_state(2, 0), atol=1e-12)


def test_trace_length():
    trace = grover_run(GroverProblem(4, {0}))
    assert trace.k_opt == 3
    assert len(trace.end_loop_states) == 4


@pytest.mark.parametrize("s", [1, 2])
def test_run_matches_closed_form(s):
    for n in range(2, 11):
        solutions = set(range(0, 2 * s, 2))
        trace = grover_run(GroverProblem(n, solutions))
        for k, state in enumerate(trace.end_loop_states):
            np.testing.assert_allclose(state, explicit_state(n, solutions, k), atol=1e-9)


def test_circuit_matches_fast_run():
    for n in range(2, 7):
        for solutions in ({0}, {2**n - 1}, {1, 2}):
            problem = GroverProblem(n, solutions)
            fast = grover_run(problem).end_loop_states
            slow = grover_run_circuit(problem).end_loop_states
            for a, b in zip(fast, slow):
                np.testing.assert_allclose(a, b, atol=1e-9)


def test_first_state_is_plus():
    for n, S in [(3, {5}), (6, {0, 9})]:
        np.testing.assert_allclose(explicit_state(n, S, 0), plus_state(n), atol=1e-12)


def test_secant_form_reconstructs_state():
    for n, S in [(5, {3}), (7, {0, 100})]:
        for k in range(k_opt(2**n, len(S)) + 1):
            c = explicit_coefficients(n, len(S), k)
            rebuilt = c.beta_tilde * plus_state(n)
            rebuilt[sorted(S)] += c.alpha_tilde
            np.testing.assert_allclose(rebuilt, explicit_state(n, S, k), atol=1e-12)
            assert abs(np.linalg.norm(rebuilt) - 1) < 1e-12


@pytest.mark.parametrize("s", [1, 2])
def test_secant_coefficients_monotone(s):
    for n in range(2, 13):
        N = 2**n
        if s >= N:
            continue
        horizon = math.pi / 4 * math.sqrt(N / s) - 0.5
        coeffs = [explicit_coefficients(n, s, k) for k in range(k_opt(N, s) + 1)]
        a = [c.alpha_tilde for c in coeffs]
        b = [c.beta_tilde for c in coeffs]
        for k in range(len(coeffs) - 1):
            # strict inside the proven range, at worst flat on the final overshoot step
            strict = k + 1 <= horizon
            assert a[k + 1] > a[k] if strict else a[k + 1] >= a[k] - 1e-12
            assert b[k + 1] < b[k]


def test_success_probability_guarantee():
    for n in range(4, 13):
        N = 2**n
        theta = grover_angle(N, 1)
        trace = grover_run(GroverProblem(n, {0}))
        # round(pi/4 sqrt(N)) lands within one rotation step of pi/2
        assert success_probability(trace.end_loop_states[-1], {0}) >= math.cos(theta) ** 2 - 1e-12
        # the nearest-integer count to arccos(sqrt(1/N))/theta gets within half a step
        best = round(math.acos(math.sqrt(1 / N)) / theta)
        assert success_probability(explicit_state(n, {0}, best), {0}) >= 1 - 1 / N


def test_phi_ent():
    np.testing.assert_allclose(phi_ent(1, 0), np.array([1 + 2**-0.5, 2**-0.5]) / math.sqrt(2 + 2**0.5))
    prev = None
    for n in range(1, 13):
        state = phi_ent(n, 0)
        assert abs(np.linalg.norm(state) - 1) < 1e-12
        K = math.sqrt(2 + 2 * 2 ** (-n / 2))
        overlap = state[0].real
        assert overlap == pytest.approx((1 + 2 ** (-n / 2)) / K)
        assert overlap > 1 / math.sqrt(2)
        if prev is not None:
            assert overlap < prev
        prev = overlap
