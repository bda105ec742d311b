"""Polynomial invariants of four-qubit states and the Cayley hyperdeterminant.

Amplitudes are addressed as ``a[i, j, k, l]`` for the basis state ``|ijkl>``
(flat index ``8i + 4j + 2k + l``). ``H`` has degree 2, ``L`` and ``M`` degree 4,
``D`` degree 6; ``Delta = S**3 - 27 T**2`` has degree 24.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .qft import PeriodicSpec, periodic_state, qft_run

# Round-off on exact zeros stays below ~1e-22 while the smallest genuine
# values met on periodic-state QFT runs are ~1e-17; the threshold sits between.
ZERO_TOL = 1e-20


def amplitudes(state) -> np.ndarray:
    """``(2, 2, 2, 2)`` view of a 16-amplitude state.

    Object arrays (e.g. of ``mpmath.mpc``) are kept as they are so every
    invariant below can also be evaluated in extended precision.
    """
    a = np.asarray(state)
    if a.dtype != object:
        a = a.astype(complex)
    if a.shape == (2, 2, 2, 2):
        return a
    if a.shape != (16,):
        raise ValueError(f"expected 16 amplitudes, got shape {a.shape}")
    return a.reshape(2, 2, 2, 2)


def _entry(a: np.ndarray, bits: str) -> complex:
    return a[tuple(int(b) for b in bits)]


def invariant_H(state) -> complex:
    a = amplitudes(state)

    def e(bits):
        return _entry(a, bits)

    return (
        e("0000") * e("1111") - e("1000") * e("0111") - e("0100") * e("1011") + e("1100") * e("0011")
        - e("0010") * e("1101") + e("1010") * e("0101") + e("0110") * e("1001") - e("1110") * e("0001")
    )


_L_LAYOUT = [
    ["0000", "0010", "0001", "0011"],
    ["1000", "1010", "1001", "1011"],
    ["0100", "0110", "0101", "0111"],
    ["1100", "1110", "1101", "1111"],
]
_M_LAYOUT = [
    ["0000", "0001", "0100", "0101"],
    ["1000", "1001", "1100", "1101"],
    ["0010", "0011", "0110", "0111"],
    ["1010", "1011", "1110", "1111"],
]


def _layout_matrix(a: np.ndarray, layout) -> np.ndarray:
    return np.array([[_entry(a, bits) for bits in row] for row in layout], dtype=a.dtype)


def _perm_sign(p) -> int:
    sign = 1
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign


_PERMS = {m: [(p, _perm_sign(p)) for p in permutations(range(m))] for m in (3, 4)}


def _det(m: np.ndarray):
    """Leibniz expansion; exact term structure, works on any number type."""
    total = 0
    for p, sign in _PERMS[m.shape[0]]:
        term = sign
        for i, j in enumerate(p):
            term = term * m[i, j]
        total = total + term
    return total


def invariant_L(state) -> complex:
    return _det(_layout_matrix(amplitudes(state), _L_LAYOUT))


def invariant_M(state) -> complex:
    return _det(_layout_matrix(amplitudes(state), _M_LAYOUT))


def bxt_matrix(state) -> np.ndarray:
    """3x3 matrix ``B`` of ``det(d^2 A / dy_j dz_k)`` in the bases ``x_0^2, x_0 x_1, x_1^2``
    (rows) and ``t_0^2, t_0 t_1, t_1^2`` (columns).

    With ``P_jk = sum_{i,l} a_ijkl x_i t_l`` the determinant is
    ``sum C[i, i', l, l'] x_i x_i' t_l t_l'`` where
    ``C = a[:, 0, 0, :] (x) a[:, 1, 1, :] - a[:, 0, 1, :] (x) a[:, 1, 0, :]``;
    ``B[p, q]`` collects the terms with ``i + i' = p`` and ``l + l' = q``.
    """
    a = amplitudes(state)
    # C[i, i', l, l'] with outer products ordered (i, l, i', l') -> transpose
    C = (np.multiply.outer(a[:, 0, 0, :], a[:, 1, 1, :]) - np.multiply.outer(a[:, 0, 1, :], a[:, 1, 0, :])).transpose(
        0, 2, 1, 3
    )
    B = np.zeros((3, 3), dtype=a.dtype)
    for i in range(2):
        for ip in range(2):
            for l in range(2):
                for lp in range(2):
                    B[i + ip, l + lp] += C[i, ip, l, lp]
    return B


def invariant_D(state) -> complex:
    return _det(bxt_matrix(state))


@dataclass(frozen=True)
class InvariantReport:
    H: complex
    L: complex
    M: complex
    D: complex
    U: complex
    V: complex
    S: complex
    T: complex
    Delta: complex


def report(state) -> InvariantReport:
    a = amplitudes(state)
    H, L, M, D = invariant_H(a), invariant_L(a), invariant_M(a), invariant_D(a)
    U = H**2 - 4 * (L - M)
    V = 12 * (H * D - 2 * L * M)
    S = (U**2 - 2 * V) / 12
    T = (U**3 - 3 * U * V + 216 * D**2) / 216
    return InvariantReport(H, L, M, D, U, V, S, T, S**3 - 27 * T**2)


def delta2222(state) -> complex:
    return report(state).Delta


def qft_delta_trajectory(l: int, r: int) -> list[float]:
    """``|Delta|`` along the 12 captured states of the 4-qubit QFT on ``phi^{l,r}``."""
    states = qft_run(periodic_state(PeriodicSpec(l, r, 4)))
    return [abs(delta2222(s)) for s in states]


def classify_trajectory(values, tol: float = ZERO_TOL) -> int:
    """Case 1: never zero; case 2: zero at the start, nonzero later; case 3: always zero.

    Returns 0 for any other pattern (nonzero at the start, zero later).
    """
    nonzero = [v > tol for v in values]
    if all(nonzero):
        return 1
    if not nonzero[0] and any(nonzero):
        return 2
    if not any(nonzero):
        return 3
    return 0
