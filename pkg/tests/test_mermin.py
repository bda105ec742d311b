from functools import reduce

import numpy as np
import pytest

from qmermin import mermin
from qmermin.errors import CapacityError, NumericalConsistencyError
from qmermin.mermin import (
    MerminFamilies,
    ObservableTriple,
    mermin_apply,
    mermin_dense,
    mermin_expectation,
    observable,
    observable_conjugate,
    quantum_bound,
)
from qmermin.statevec import H, X, Y, Z, basis_from_bits, ghz_state, random_state, random_unitary


def kron(*ops):
    return reduce(np.kron, ops)


def random_families(n, rng):
    return MerminFamilies(rng.normal(size=(n, 3)), rng.normal(size=(n, 3)))


def random_product_state(n, rng):
    return kron(*[random_state(1, rng) for _ in range(n)])


def test_observable_examples():
    np.testing.assert_allclose(observable((0, 0, 1)), Z)
    np.testing.assert_allclose(observable((1, 0, 0)), X)
    np.testing.assert_allclose(observable((2, 0, 0)), X)
    np.testing.assert_allclose(observable(ObservableTriple(0, -3, 0)), -Y)
    with pytest.raises(ValueError):
        observable((0, 0, 0))


def test_observable_spectrum(rng):
    for _ in range(20):
        a = observable(rng.normal(size=3))
        np.testing.assert_allclose(a, a.conj().T, atol=1e-12)
        np.testing.assert_allclose(np.linalg.eigvalsh(a), [-1, 1], atol=1e-12)
        t = ObservableTriple(*rng.normal(size=3)).normalized()
        assert abs(np.linalg.norm(t.as_array()) - 1) < 1e-12


def test_families_validation():
    with pytest.raises(ValueError):
        MerminFamilies(np.ones((2, 3)), np.ones((3, 3)))
    with pytest.raises(ValueError):
        MerminFamilies(np.zeros((1, 3)), np.ones((1, 3)))
    fam = MerminFamilies.from_params(np.arange(1, 13))
    assert fam.n == 2
    np.testing.assert_allclose(fam.unprimed[1], [7, 8, 9])
    np.testing.assert_allclose(fam.primed[0], [4, 5, 6])
    np.testing.assert_allclose(fam.to_params(), np.arange(1, 13))


def test_single_qubit_base_case():
    fam = MerminFamilies.from_triples([(0, 0, 1)], [(1, 0, 0)])
    np.testing.assert_allclose(mermin_apply(fam, basis_from_bits("0")), basis_from_bits("0"))
    np.testing.assert_allclose(mermin_dense(fam), Z)


def test_two_qubit_unrolling(rng):
    a, b = rng.normal(size=3), rng.normal(size=3)
    A, B = observable(a), observable(b)
    expected = 0.5 * (kron(A, A) + kron(A, B) + kron(B, A) - kron(B, B))
    np.testing.assert_allclose(mermin_dense(MerminFamilies.constant(2, a, b)), expected, atol=1e-12)


def test_three_qubit_expansion(rng):
    fam = random_families(3, rng)
    a = [observable(t) for t in fam.unprimed]
    b = [observable(t) for t in fam.primed]
    expected = 0.5 * (
        kron(a[0], a[1], b[2]) + kron(a[0], b[1], a[2]) + kron(b[0], a[1], a[2]) - kron(b[0], b[1], b[2])
    )
    np.testing.assert_allclose(mermin_dense(fam), expected, atol=1e-12)


def test_matrix_free_matches_dense(rng):
    for n in range(1, 7):
        for _ in range(5):
            fam = random_families(n, rng)
            state = random_state(n, rng)
            np.testing.assert_allclose(mermin_apply(fam, state), mermin_dense(fam) @ state, atol=1e-10)
            np.testing.assert_allclose(
                mermin_apply(fam, state, primed=True), mermin_dense(fam.swapped()) @ state, atol=1e-10
            )


def test_primed_equals_unprimed_when_families_coincide(rng):
    t = rng.normal(size=(4, 3))
    fam = MerminFamilies(t, t)
    state = random_state(4, rng)
    np.testing.assert_allclose(mermin_apply(fam, state, primed=True), mermin_apply(fam, state), atol=1e-14)


def test_dense_is_hermitian_and_capacity(rng):
    for n in range(1, 6):
        M = mermin_dense(random_families(n, rng))
        np.testing.assert_allclose(M, M.conj().T, atol=1e-9)
    with pytest.raises(CapacityError):
        mermin_dense(random_families(9, rng))


def test_width_mismatch(rng):
    with pytest.raises(ValueError):
        mermin_apply(random_families(3, rng), random_state(2, rng))


def test_chsh_on_bell_state():
    bell = (basis_from_bits("00") + basis_from_bits("11")) / np.sqrt(2)
    fam = MerminFamilies.from_triples([(0, 0, 1), (1, 0, 1)], [(1, 0, 0), (-1, 0, 1)])
    assert abs(mermin_expectation(fam, bell) - np.sqrt(2)) < 1e-9
    # dense route, independent of the sweep
    M = mermin_dense(fam)
    assert abs(np.vdot(bell, M @ bell).real - np.sqrt(2)) < 1e-9


def test_ghz3_reaches_bound():
    fam = MerminFamilies.constant(3, (0, 1, 0), (-1, 0, 0))
    assert abs(mermin_expectation(fam, ghz_state(3)) - 2) < 1e-12


def test_ghz_saturates_quantum_bound():
    # equatorial settings a at angle t, a' at t + pi/2, with t = -(n-1) pi / (4n)
    for n in range(2, 9):
        t = -np.pi / (4 * n) * (n - 1)
        u = (np.cos(t), np.sin(t), 0)
        v = (np.cos(t + np.pi / 2), np.sin(t + np.pi / 2), 0)
        value = mermin_expectation(MerminFamilies.constant(n, u, v), ghz_state(n))
        assert value == pytest.approx(quantum_bound(n), abs=1e-9)


def test_classical_bound_on_product_states(rng):
    worst = 0.0
    for trial in range(600):
        n = 1 + trial % 8
        value = mermin_expectation(random_families(n, rng), random_product_state(n, rng))
        worst = max(worst, abs(value))
        assert abs(value) <= 1 + 1e-9
    assert worst > 0.5


def test_quantum_bound(rng):
    for n in range(1, 7):
        for _ in range(10):
            M = mermin_dense(random_families(n, rng))
            assert np.linalg.eigvalsh(M).max() <= quantum_bound(n) + 1e-6
    for n in range(1, 11):
        for _ in range(10):
            value = mermin_expectation(random_families(n, rng), random_state(n, rng))
            assert value <= quantum_bound(n) + 1e-6


def test_expectation_is_real(rng):
    for n in range(1, 9):
        fam = random_families(n, rng)
        state = random_state(n, rng)
        assert abs(np.vdot(state, mermin_apply(fam, state)).imag) < 1e-9


def test_imaginary_part_rejected(monkeypatch, rng):
    monkeypatch.setattr(mermin, "mermin_apply", lambda fam, state: 1j * state)
    with pytest.raises(NumericalConsistencyError):
        mermin_expectation(random_families(2, rng), random_state(2, rng))


def test_scale_invariance(rng):
    fam = random_families(5, rng)
    state = random_state(5, rng)
    scales = rng.uniform(0.1, 10, size=(5, 1))
    scaled = MerminFamilies(fam.unprimed * scales, fam.primed * scales[::-1])
    assert mermin_expectation(scaled, state) == pytest.approx(mermin_expectation(fam, state), abs=1e-12)


def test_conjugate_examples(rng):
    t = ObservableTriple(0.3, -0.4, 0.5)
    np.testing.assert_allclose(observable_conjugate(t, np.eye(2)).as_array(), t.normalized().as_array(), atol=1e-12)
    np.testing.assert_allclose(observable_conjugate((0, 0, 1), H).as_array(), [1, 0, 0], atol=1e-12)
    with pytest.raises(ValueError):
        observable_conjugate((0, 0, 1), np.diag([1, 2]))
    for _ in range(50):
        g = random_unitary(2, rng)
        v = rng.normal(size=3)
        out = observable_conjugate(v, g)
        assert abs(np.linalg.norm(out.as_array()) - 1) < 1e-9
        np.testing.assert_allclose(observable(out), g.conj().T @ observable(v) @ g, atol=1e-12)


def test_local_unitary_covariance(rng):
    for trial in range(120):
        n = 1 + trial % 6
        fam = random_families(n, rng)
        state = random_state(n, rng)
        gates = [random_unitary(2, rng) for _ in range(n)]
        moved = kron(*gates) @ state
        # <G phi| M(l'') |G phi> with a''_j = g_j a_j g_j^dagger
        fam_moved = fam.conjugated([g.conj().T for g in gates])
        assert mermin_expectation(fam_moved, moved) == pytest.approx(mermin_expectation(fam, state), abs=1e-9)
