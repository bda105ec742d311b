"""Dense statevectors and qubit-local operator application.

States are plain 1-D complex numpy arrays of length ``2**n``. Basis indices are
big-endian: qubit 1 is the most significant bit, so ``|q1 q2 ... qn>`` sits at
index ``q1*2**(n-1) + ... + qn``.
"""
from __future__ import annotations

import numpy as np

ATOL = 1e-9

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)
H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)


def num_qubits(state: np.ndarray) -> int:
    """Number of qubits of a length-``2**n`` vector; raises on other lengths."""
    size = np.shape(state)[0]
    n = size.bit_length() - 1
    if size < 1 or 1 << n != size or np.ndim(state) != 1:
        raise ValueError(f"state length {size} is not a power of two")
    return n


def as_state(amplitudes) -> np.ndarray:
    """Copy ``amplitudes`` into a complex128 vector, checking the length."""
    state = np.array(amplitudes, dtype=complex).reshape(-1)
    num_qubits(state)
    return state


def normalized(state: np.ndarray) -> np.ndarray:
    norm = np.linalg.norm(state)
    if norm == 0:
        raise ValueError("cannot normalize the zero vector")
    return np.asarray(state, dtype=complex) / norm


def basis_state(n: int, index: int) -> np.ndarray:
    if not 0 <= index < 2**n:
        raise ValueError(f"basis index {index} out of range for {n} qubits")
    state = np.zeros(2**n, dtype=complex)
    state[index] = 1.0
    return state


def basis_from_bits(bits: str) -> np.ndarray:
    """``basis_from_bits("0110")`` -> ``|0110>``."""
    return basis_state(len(bits), int(bits, 2))


def plus_state(n: int) -> np.ndarray:
    """``|+>^{(x)n}``, the uniform superposition."""
    return np.full(2**n, 2 ** (-n / 2), dtype=complex)


def ghz_state(n: int) -> np.ndarray:
    state = np.zeros(2**n, dtype=complex)
    state[0] = state[-1] = 1 / np.sqrt(2)
    return state


def product_state(*factors) -> np.ndarray:
    out = np.ones(1, dtype=complex)
    for f in factors:
        out = np.kron(out, np.asarray(f, dtype=complex))
    return out


def kronecker_power(gate, n: int) -> np.ndarray:
    """``gate`` tensored with itself ``n`` times; ``n == 0`` gives ``[[1]]``."""
    if n < 0:
        raise ValueError("kronecker power must be non-negative")
    gate = np.asarray(gate, dtype=complex)
    out = np.ones((1,) * gate.ndim, dtype=complex)
    for _ in range(n):
        out = np.kron(out, gate)
    return out


def embed(gate, qubit: int, n: int) -> np.ndarray:
    """Dense ``I (x) ... (x) gate (x) ... (x) I`` with ``gate`` on ``qubit`` (1-based)."""
    if not 1 <= qubit <= n:
        raise ValueError(f"qubit {qubit} out of range 1..{n}")
    return np.kron(np.kron(np.eye(2 ** (qubit - 1)), gate), np.eye(2 ** (n - qubit)))


def apply_local(state: np.ndarray, first_qubit: int, block) -> np.ndarray:
    """Apply a ``2**m x 2**m`` block to qubits ``first_qubit .. first_qubit+m-1``.

    Works by reshaping the state to ``(left, 2**m, right)`` so the cost is
    ``O(2**n * 2**m)`` and no ``2**n``-sized matrix is formed.
    """
    n = num_qubits(state)
    block = np.asarray(block)
    dim = block.shape[0]
    m = dim.bit_length() - 1
    if block.shape != (dim, dim) or 1 << m != dim:
        raise ValueError(f"block of shape {block.shape} is not 2**m square")
    if first_qubit < 1 or first_qubit + m - 1 > n:
        raise ValueError(f"block on qubits {first_qubit}..{first_qubit + m - 1} exceeds {n} qubits")
    view = np.asarray(state).reshape(2 ** (first_qubit - 1), dim, 2 ** (n - first_qubit - m + 1))
    return np.einsum("ij,ajb->aib", block, view).reshape(-1)


def apply_single_qubit(state: np.ndarray, qubit: int, gate) -> np.ndarray:
    """``(I (x) ... gate ... (x) I)|state>`` with ``gate`` on ``qubit`` (1-based)."""
    gate = np.asarray(gate)
    if gate.shape != (2, 2):
        raise ValueError(f"single-qubit gate must be 2x2, got {gate.shape}")
    return apply_local(state, qubit, gate)


def inner_product(a: np.ndarray, b: np.ndarray) -> complex:
    """``<a|b>``, conjugating the first argument."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise ValueError(f"length mismatch: {a.shape} vs {b.shape}")
    return complex(np.vdot(a, b))


def is_unitary(gate, atol: float = ATOL) -> bool:
    gate = np.asarray(gate)
    return np.allclose(gate.conj().T @ gate, np.eye(gate.shape[0]), atol=atol)


def is_hermitian(gate, atol: float = ATOL) -> bool:
    gate = np.asarray(gate)
    return np.allclose(gate, gate.conj().T, atol=atol)


def random_state(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random pure state on ``n`` qubits."""
    v = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
    return v / np.linalg.norm(v)


def random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random unitary via QR with phase correction."""
    z = (rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))
