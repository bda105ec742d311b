"""Layered circuits.

A circuit is a list of layers and a layer is a list of square matrices laid out
top to bottom along the wires, e.g. ``[[H, I4], [X, X, I2], [I4, H], [H, H, H]]``
for a three-wire circuit. The first block of a layer acts on the most
significant qubits.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from .statevec import apply_local, num_qubits

Layer = Sequence[np.ndarray]
Circuit = Sequence[Layer]


def block_qubits(block) -> int:
    dim = np.shape(block)[0]
    m = dim.bit_length() - 1
    if np.shape(block) != (dim, dim) or dim < 1 or 1 << m != dim:
        raise ValueError(f"block of shape {np.shape(block)} is not a 2**m square matrix")
    return m


def layer_width(layer: Layer) -> int:
    """Total number of wires covered by ``layer``."""
    return sum(block_qubits(b) for b in layer)


def circuit_width(circuit: Circuit) -> int | None:
    """Common width of all non-empty layers, or ``None`` for an empty circuit."""
    widths = {layer_width(layer) for layer in circuit if len(layer)}
    if len(widths) > 1:
        raise ValueError(f"layers have inconsistent widths {sorted(widths)}")
    return widths.pop() if widths else None


def layer_matrix(layer: Layer) -> np.ndarray:
    """Dense Kronecker product of the blocks, first block most significant."""
    if not len(layer):
        raise ValueError("empty layer")
    out = np.ones((1, 1), dtype=complex)
    for block in layer:
        block_qubits(block)
        out = np.kron(out, np.asarray(block, dtype=complex))
    return out


def apply_layer(layer: Layer, state: np.ndarray) -> np.ndarray:
    n = num_qubits(state)
    if not len(layer):
        return state
    if layer_width(layer) != n:
        raise ValueError(f"layer width {layer_width(layer)} does not match {n}-qubit state")
    qubit = 1
    for block in layer:
        m = block_qubits(block)
        # identities are skipped outright; they dominate gate-per-layer circuits
        if not (m and _is_identity(block)):
            state = apply_local(state, qubit, block)
        qubit += m
    return state


def _is_identity(block) -> bool:
    block = np.asarray(block)
    return np.array_equal(block, np.eye(block.shape[0]))


def run(circuit: Circuit, initial: np.ndarray) -> list[np.ndarray]:
    """States after each layer, with ``initial`` at position 0.

    Blocks are applied qubit-locally, so only blocks themselves are ever dense.
    """
    state = np.asarray(initial, dtype=complex)
    n = num_qubits(state)
    width = circuit_width(circuit)
    if width is not None and width != n:
        raise ValueError(f"circuit width {width} does not match {n}-qubit state")
    states = [state.copy()]
    for layer in circuit:
        state = apply_layer(layer, state)
        states.append(state)
    return states


def run_dense(circuit: Circuit, initial: np.ndarray) -> list[np.ndarray]:
    """Reference execution multiplying full layer matrices (small widths only)."""
    state = np.asarray(initial, dtype=complex)
    states = [state.copy()]
    for layer in circuit:
        state = layer_matrix(layer) @ state
        states.append(state)
    return states
