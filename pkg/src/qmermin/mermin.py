"""Mermin polynomials and their expectation values on pure states.

``M_1 = a_1`` and ``M_n = 1/2 M_{n-1} (x) (a_n + a'_n) + 1/2 M'_{n-1} (x) (a_n - a'_n)``,
where ``M'`` swaps primed and unprimed observables. Each observable is
``alpha X + beta Y + gamma Z`` with a real unit vector ``(alpha, beta, gamma)``.

The pair ``(M_k, M'_k)`` obeys a linear recursion with a 2x2 operator-valued
transfer matrix, so ``M_n |psi>`` is computed by sweeping the qubits once while
carrying two partial vectors. Nothing of size ``2**n x 2**n`` is ever built.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import CapacityError, NumericalConsistencyError
from .statevec import X, Y, Z, is_unitary, num_qubits

PAULIS = np.stack([X, Y, Z])
_PAULI_ROWS = PAULIS.reshape(3, 4)
IMAG_TOL = 1e-9
DENSE_MAX_QUBITS = 8


@dataclass(frozen=True)
class ObservableTriple:
    alpha: float
    beta: float
    gamma: float

    def as_array(self) -> np.ndarray:
        return np.array([self.alpha, self.beta, self.gamma], dtype=float)

    def normalized(self) -> "ObservableTriple":
        return ObservableTriple(*_unit(self.as_array()))


def _unit(v: np.ndarray) -> np.ndarray:
    norm = np.linalg.norm(v, axis=-1, keepdims=True)
    if np.any(norm == 0):
        raise ValueError("observable triple must be nonzero")
    return v / norm


def observable(t) -> np.ndarray:
    """``alpha X + beta Y + gamma Z`` after scaling the triple to unit length."""
    v = t.as_array() if isinstance(t, ObservableTriple) else np.asarray(t, dtype=float)
    if v.shape != (3,):
        raise ValueError(f"expected three real coefficients, got shape {v.shape}")
    return np.tensordot(_unit(v), PAULIS, axes=1)


def _observables(triples: np.ndarray) -> np.ndarray:
    """Stack of 2x2 observables for an ``(n, 3)`` array of raw triples."""
    return np.tensordot(_unit(triples), PAULIS, axes=1)


@dataclass(frozen=True)
class MerminFamilies:
    """Observables ``a_1..a_n`` (``unprimed``) and ``a'_1..a'_n`` (``primed``).

    Both are stored as ``(n, 3)`` float arrays of (possibly unnormalized)
    triples; normalization happens when the operators are formed.
    """

    unprimed: np.ndarray
    primed: np.ndarray

    def __post_init__(self):
        u = np.atleast_2d(np.asarray(self.unprimed, dtype=float))
        p = np.atleast_2d(np.asarray(self.primed, dtype=float))
        if u.shape != p.shape or u.ndim != 2 or u.shape[1] != 3 or u.shape[0] < 1:
            raise ValueError(f"families must both have shape (n, 3), got {u.shape} and {p.shape}")
        _unit(u), _unit(p)
        object.__setattr__(self, "unprimed", u)
        object.__setattr__(self, "primed", p)

    @property
    def n(self) -> int:
        return self.unprimed.shape[0]

    @classmethod
    def from_triples(cls, unprimed: Sequence, primed: Sequence) -> "MerminFamilies":
        def arr(ts):
            return np.array([t.as_array() if isinstance(t, ObservableTriple) else t for t in ts], dtype=float)

        return cls(arr(unprimed), arr(primed))

    @classmethod
    def constant(cls, n: int, a, a_prime) -> "MerminFamilies":
        """Every ``a_j`` equal to ``a`` and every ``a'_j`` equal to ``a_prime``."""
        a = a.as_array() if isinstance(a, ObservableTriple) else np.asarray(a, dtype=float)
        b = a_prime.as_array() if isinstance(a_prime, ObservableTriple) else np.asarray(a_prime, dtype=float)
        return cls(np.tile(a, (n, 1)), np.tile(b, (n, 1)))

    @classmethod
    def from_constant_params(cls, n: int, params) -> "MerminFamilies":
        """Six reals ``(alpha, beta, gamma, alpha', beta', gamma')``."""
        params = np.asarray(params, dtype=float)
        if params.shape != (6,):
            raise ValueError(f"expected 6 parameters, got {params.shape}")
        return cls.constant(n, params[:3], params[3:])

    @classmethod
    def from_params(cls, params) -> "MerminFamilies":
        """``6n`` reals packed per qubit as ``(alpha_j, beta_j, gamma_j, alpha'_j, beta'_j, gamma'_j)``."""
        params = np.asarray(params, dtype=float)
        if params.ndim != 1 or params.size % 6 or params.size == 0:
            raise ValueError(f"expected 6n parameters, got {params.size}")
        blocks = params.reshape(-1, 2, 3)
        return cls(blocks[:, 0], blocks[:, 1])

    def to_params(self) -> np.ndarray:
        return np.stack([self.unprimed, self.primed], axis=1).reshape(-1)

    def swapped(self) -> "MerminFamilies":
        """Families with primed and unprimed interchanged (gives ``M'_n``)."""
        return MerminFamilies(self.primed, self.unprimed)

    def conjugated(self, gates: Sequence[np.ndarray]) -> "MerminFamilies":
        """Replace each ``a_j`` by ``g_j^dagger a_j g_j`` (same for primes)."""
        if len(gates) != self.n:
            raise ValueError(f"need {self.n} gates, got {len(gates)}")
        u = [observable_conjugate(t, g).as_array() for t, g in zip(self.unprimed, gates)]
        p = [observable_conjugate(t, g).as_array() for t, g in zip(self.primed, gates)]
        return MerminFamilies(np.array(u), np.array(p))


def _sweep(unprimed: np.ndarray, primed: np.ndarray, psi: np.ndarray) -> np.ndarray:
    """Rows ``(M_n psi, M'_n psi)`` for unit triples of shape ``(n, 3)``.

    The bond index ``b`` tracks (unprimed, primed) and step ``j`` maps
    ``(M_{j-1}, M'_{j-1})`` to ``(M_j, M'_j)`` through
    ``W = [[(A+B)/2, (B-A)/2], [(A-B)/2, (A+B)/2]]`` acting on qubit ``j``.
    The qubit being processed is kept in front and rotated to the back
    afterwards, so after ``n`` steps the original order is restored.
    """
    n = unprimed.shape[0]
    A = (unprimed @ _PAULI_ROWS).reshape(n, 2, 2)
    B = (primed @ _PAULI_ROWS).reshape(n, 2, 2)
    plus = (A + B) / 2
    minus = (A - B) / 2
    # W[j, c, o, b, i]: bond b -> c, qubit i -> o
    W = np.empty((n, 2, 2, 2, 2), dtype=complex)
    W[:, 0, :, 0, :] = plus
    W[:, 0, :, 1, :] = minus
    W[:, 1, :, 0, :] = -minus
    W[:, 1, :, 1, :] = plus
    # M_1 = a_1 and M'_1 = a'_1 enter through a start vector with empty primed bond
    W[0] = 0
    W[0, 0, :, 0, :] = A[0]
    W[0, 1, :, 0, :] = B[0]
    W = W.reshape(n, 4, 4)
    rest = psi.size // 2
    phi = np.zeros((2, psi.size), dtype=complex)
    phi[0] = psi
    for j in range(n):
        out = W[j] @ phi.reshape(4, rest)
        phi = out.reshape(2, 2, rest).transpose(0, 2, 1).reshape(2, psi.size)
    return phi


def mermin_apply_pair(fam: MerminFamilies, state: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """``(M_n |state>, M'_n |state>)``, matrix-free in ``O(n 2**n)``."""
    n = num_qubits(state)
    if fam.n != n:
        raise ValueError(f"families are for {fam.n} qubits, state has {n}")
    phi = _sweep(_unit(fam.unprimed), _unit(fam.primed), np.asarray(state, dtype=complex))
    return phi[0], phi[1]


def mermin_apply(fam: MerminFamilies, state: np.ndarray, primed: bool = False) -> np.ndarray:
    """``M_n |state>`` (or ``M'_n |state>`` with ``primed=True``)."""
    m, m_prime = mermin_apply_pair(fam, state)
    return m_prime if primed else m


def _real_expectation(state: np.ndarray, image: np.ndarray) -> float:
    value = np.vdot(state, image)
    if not np.isfinite(value) or abs(value.imag) > IMAG_TOL:
        raise NumericalConsistencyError(f"Mermin expectation {value} is not real")
    return float(value.real)


def mermin_expectation(fam: MerminFamilies, state: np.ndarray) -> float:
    """``<state| M_n |state>``; raises if the imaginary part is not negligible."""
    state = np.asarray(state, dtype=complex)
    return _real_expectation(state, mermin_apply(fam, state))


def mermin_dense(fam: MerminFamilies) -> np.ndarray:
    """Explicit ``2**n x 2**n`` matrix of ``M_n`` built by Kronecker products."""
    if fam.n > DENSE_MAX_QUBITS:
        raise CapacityError(f"dense Mermin operator limited to {DENSE_MAX_QUBITS} qubits")
    A = _observables(fam.unprimed)
    B = _observables(fam.primed)
    m, m_prime = A[0], B[0]
    for j in range(1, fam.n):
        m, m_prime = (
            0.5 * np.kron(m, A[j] + B[j]) + 0.5 * np.kron(m_prime, A[j] - B[j]),
            0.5 * np.kron(m_prime, B[j] + A[j]) + 0.5 * np.kron(m, B[j] - A[j]),
        )
    return m


def observable_conjugate(t, g) -> ObservableTriple:
    """Triple of ``g^dagger (alpha X + beta Y + gamma Z) g`` for unitary ``g``."""
    g = np.asarray(g, dtype=complex)
    if g.shape != (2, 2) or not is_unitary(g):
        raise ValueError("conjugating gate must be a 2x2 unitary")
    conj = g.conj().T @ observable(t) @ g
    coeffs = np.einsum("pij,ji->p", PAULIS, conj).real / 2
    return ObservableTriple(*coeffs)


def quantum_bound(n: int) -> float:
    """Largest quantum value ``2**((n-1)/2)`` of ``<M_n>``."""
    return 2 ** ((n - 1) / 2)


def constant_family_objective(state: np.ndarray) -> Callable[[np.ndarray], float]:
    """``f(params) = <state|M_n|state>`` over the 6 constant-family parameters."""
    state = np.asarray(state, dtype=complex)
    n = num_qubits(state)

    def f(params):
        params = np.asarray(params, dtype=float)
        if params.shape != (6,):
            raise ValueError(f"expected 6 parameters, got {params.shape}")
        t = _unit(params.reshape(2, 3))
        u, p = np.broadcast_to(t[0], (n, 3)), np.broadcast_to(t[1], (n, 3))
        return _real_expectation(state, _sweep(u, p, state)[0])

    return f


def full_family_objective(state: np.ndarray) -> Callable[[np.ndarray], float]:
    """``f(params) = <state|M_n|state>`` over all ``6n`` parameters, packed as in ``from_params``."""
    state = np.asarray(state, dtype=complex)
    n = num_qubits(state)

    def f(params):
        params = np.asarray(params, dtype=float)
        if params.shape != (6 * n,):
            raise ValueError(f"expected {6 * n} parameters, got {params.size}")
        t = _unit(params.reshape(n, 2, 3))
        return _real_expectation(state, _sweep(t[:, 0], t[:, 1], state)[0])

    return f
