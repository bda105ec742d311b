"""Quantum Fourier Transform as a layered circuit, plus periodic input states."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .circuit import run
from .statevec import I2, H, num_qubits


@dataclass(frozen=True)
class PeriodicSpec:
    """Shift ``l`` and period ``r`` of a periodic state on ``n_qubits`` qubits."""

    shift: int
    period: int
    n_qubits: int = 4

    def __post_init__(self):
        N = 2**self.n_qubits
        if self.n_qubits < 1:
            raise ValueError("need at least one qubit")
        if not 0 <= self.shift <= N - 1:
            raise ValueError(f"shift must lie in [0, {N - 1}], got {self.shift}")
        if not 1 <= self.period <= N - self.shift - 1:
            raise ValueError(
                f"period must lie in [1, {N - self.shift - 1}] for shift {self.shift}, got {self.period}"
            )

    @property
    def N(self) -> int:
        return 2**self.n_qubits

    @property
    def count(self) -> int:
        """Number of basis states in the support, ``ceil((N - l) / r)``."""
        return -(-(self.N - self.shift) // self.period)

    @property
    def support(self) -> list[int]:
        return list(range(self.shift, self.N, self.period))


def valid_periodic_pairs(n: int = 4) -> list[tuple[int, int]]:
    """Every admissible ``(l, r)`` for ``n`` qubits, ordered by shift then period."""
    N = 2**n
    return [(l, r) for l in range(N) for r in range(1, N - l)]


def periodic_state(spec: PeriodicSpec) -> np.ndarray:
    state = np.zeros(spec.N, dtype=complex)
    state[spec.support] = 1 / math.sqrt(spec.count)
    return state


def rotation_phase(k: int) -> complex:
    """``exp(2 i pi / 2**k)``."""
    return np.exp(2j * np.pi / 2**k)


def cRk_matrix(k: int) -> np.ndarray:
    if k < 1:
        raise ValueError("rotation index k must be >= 1")
    return np.diag([1, 1, 1, rotation_phase(k)]).astype(complex)


def controlled_rotation_block(k: int, span: int) -> np.ndarray:
    """``cR_k`` between the first and last of ``span`` adjacent wires.

    The gate is diagonal, so which end is the control does not matter.
    """
    if span < 2:
        raise ValueError("a controlled rotation needs two distinct wires")
    diag = np.ones(2**span, dtype=complex)
    idx = np.arange(2**span)
    both = ((idx >> (span - 1)) & 1) & (idx & 1)
    diag[both == 1] = rotation_phase(k)
    return np.diag(diag)


def swap_matrix(w1: int, w2: int, n: int) -> np.ndarray:
    """Permutation matrix exchanging wires ``w1`` and ``w2`` (1-based) of ``n``."""
    if not (1 <= w1 <= n and 1 <= w2 <= n) or w1 == w2:
        raise ValueError(f"invalid wires ({w1}, {w2}) for {n} qubits")
    idx = np.arange(2**n)
    b1 = (idx >> (n - w1)) & 1
    b2 = (idx >> (n - w2)) & 1
    swapped = idx ^ ((b1 ^ b2) << (n - w1)) ^ ((b1 ^ b2) << (n - w2))
    out = np.zeros((2**n, 2**n), dtype=complex)
    out[swapped, idx] = 1
    return out


def global_swap_matrix(n: int) -> np.ndarray:
    """Reverse the wire order: wire ``i`` <-> wire ``n + 1 - i``."""
    out = np.eye(2**n, dtype=complex)
    for w in range(1, n // 2 + 1):
        out = swap_matrix(w, n + 1 - w, n) @ out
    return out


def qft_layers(n: int) -> list[list[np.ndarray]]:
    """One layer per gate of the textbook QFT circuit, then the global swap.

    Wire ``w`` gets a Hadamard followed by ``cR_k`` (``k = 2 .. n-w+1``)
    controlled by wire ``w+k-1``. There are ``n(n+1)/2 + 1`` layers.
    """
    if n < 1:
        raise ValueError("need at least one qubit")
    layers = []
    for w in range(1, n + 1):
        layers.append([I2] * (w - 1) + [H] + [I2] * (n - w))
        for k in range(2, n - w + 2):
            layers.append([I2] * (w - 1) + [controlled_rotation_block(k, k)] + [I2] * (n - w - k + 1))
    layers.append([global_swap_matrix(n)] if n > 1 else [I2])
    return layers


def qft_matrix(n: int) -> np.ndarray:
    """DFT matrix ``omega**(k*j) / sqrt(N)`` with ``omega = exp(2 i pi / N)``."""
    N = 2**n
    k = np.arange(N)
    return np.exp(2j * np.pi * np.outer(k, k) / N) / math.sqrt(N)


def qft_run(state: np.ndarray) -> list[np.ndarray]:
    """States after each gate of the QFT, including the input at position 0."""
    return run(qft_layers(num_qubits(state)), state)
