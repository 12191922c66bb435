"""Amplitude-damping Kraus operators and their single-qubit trace kernels.

Every connection-matrix entry factorizes over qubits into the closed-form
kernels below, so dense Kraus matrices are only needed as test oracles.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterator

import numpy as np

from adlp.pauli import LETTERS, MAX_DENSE_QUBITS, SizeOverflowError


def check_gamma(gamma: float) -> float:
    gamma = float(gamma)
    if not 0.0 <= gamma <= 1.0 or math.isnan(gamma):
        raise ValueError(f"damping parameter must lie in [0, 1], got {gamma}")
    return gamma


def _letter(sigma: str | int) -> int:
    if isinstance(sigma, str):
        return LETTERS.index(sigma.upper())
    if sigma not in range(4):
        raise ValueError(f"invalid single-qubit Pauli code {sigma}")
    return sigma


def _bit(a: int) -> int:
    if a not in (0, 1):
        raise ValueError(f"Kraus bit must be 0 or 1, got {a}")
    return a


def kernel_A_table(gamma: float) -> np.ndarray:
    """tr(A_a sigma) as a (2, 4) array indexed [a, sigma]."""
    gamma = check_gamma(gamma)
    s = math.sqrt(1.0 - gamma)
    r = math.sqrt(gamma)
    return np.array(
        [
            [1.0 + s, 0.0, 0.0, 1.0 - s],
            [0.0, r, 1j * r, 0.0],
        ],
        dtype=complex,
    )


def kernel_B_table(gamma: float) -> np.ndarray:
    """tr(A_a sigma A_a^dag tau) as a (2, 4, 4) real array indexed [a, sigma, tau]."""
    gamma = check_gamma(gamma)
    s = math.sqrt(1.0 - gamma)
    table = np.zeros((2, 4, 4))
    # a = 0
    table[0, 0, 0] = table[0, 3, 3] = 2.0 - gamma
    table[0, 0, 3] = table[0, 3, 0] = gamma
    table[0, 1, 1] = table[0, 2, 2] = 2.0 * s
    # a = 1
    table[1, 0, 0] = table[1, 0, 3] = gamma
    table[1, 3, 0] = table[1, 3, 3] = -gamma
    return table


def kernel_A(a: int, sigma: str | int, gamma: float) -> complex:
    return complex(kernel_A_table(gamma)[_bit(a), _letter(sigma)])


def kernel_A_dagger(a: int, tau: str | int, gamma: float) -> complex:
    # Pauli factors are Hermitian, so tr(A^dag tau) = conj(tr(A tau)).
    return kernel_A(a, tau, gamma).conjugate()


def kernel_B(a: int, sigma: str | int, tau: str | int, gamma: float) -> float:
    return float(kernel_B_table(gamma)[_bit(a), _letter(sigma), _letter(tau)])


def kraus_single(a: int, gamma: float) -> np.ndarray:
    gamma = check_gamma(gamma)
    if _bit(a) == 0:
        return np.array([[1.0, 0.0], [0.0, math.sqrt(1.0 - gamma)]], dtype=complex)
    return np.array([[0.0, math.sqrt(gamma)], [0.0, 0.0]], dtype=complex)


def kraus_dense(bits: str | tuple[int, ...], gamma: float) -> np.ndarray:
    """Dense A_x = A_{x_1} (x) ... (x) A_{x_n}; test oracle."""
    bits = _parse_bits(bits)
    if len(bits) > MAX_DENSE_QUBITS:
        raise SizeOverflowError(f"dense Kraus operators limited to {MAX_DENSE_QUBITS} qubits")
    out = np.ones((1, 1), dtype=complex)
    for a in bits:
        out = np.kron(out, kraus_single(a, gamma))
    return out


def _parse_bits(bits: str | tuple[int, ...]) -> tuple[int, ...]:
    if isinstance(bits, str):
        if not bits or set(bits) - {"0", "1"}:
            raise ValueError(f"invalid Kraus label {bits!r}")
        return tuple(int(ch) for ch in bits)
    return tuple(_bit(a) for a in bits)


def kraus_weight(bits: str | tuple[int, ...]) -> int:
    return sum(_parse_bits(bits))


def kraus_labels(n: int, i: int | None = None) -> Iterator[tuple[int, ...]]:
    """Labels x in lexicographic order, optionally restricted to the class K_i."""
    for bits in itertools.product((0, 1), repeat=n):
        if i is None or sum(bits) == i:
            yield bits


def apply_kraus(bits: tuple[int, ...], gamma: float, states: np.ndarray) -> np.ndarray:
    """A_x applied to the columns of a (2**n, k) array without forming A_x."""
    n = len(bits)
    k = states.shape[1]
    out = states.reshape((2,) * n + (k,))
    for j, a in enumerate(bits):
        out = np.moveaxis(np.tensordot(kraus_single(a, gamma), out, axes=([1], [j])), 0, j)
    return out.reshape(2**n, k)
