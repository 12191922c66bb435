"""n-qubit Pauli strings as a Hermitian operator basis.

Strings are indexed base-4, qubit 0 most significant, with I=0, X=1, Y=2, Z=3.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

LETTERS = "IXYZ"
MAX_QUBITS = 12
MAX_DENSE_QUBITS = 10

SINGLE_QUBIT = np.array(
    [
        [[1, 0], [0, 1]],
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)


class SizeOverflowError(ValueError):
    """Requested object is too large for the supported qubit range."""


@dataclass(frozen=True)
class PauliString:
    letters: str

    def __post_init__(self) -> None:
        letters = self.letters.upper()
        if not letters or any(ch not in LETTERS for ch in letters):
            raise ValueError(f"invalid Pauli string {self.letters!r}")
        if len(letters) > MAX_QUBITS:
            raise SizeOverflowError(f"at most {MAX_QUBITS} qubits supported, got {len(letters)}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def from_index(cls, index: int, n: int) -> PauliString:
        return cls(decode(index, n))

    @property
    def n(self) -> int:
        return len(self.letters)

    @property
    def index(self) -> int:
        return encode(self)

    @property
    def weight(self) -> int:
        return weight(self)

    def __str__(self) -> str:
        return self.letters


def _letters(p: PauliString | str) -> str:
    return p.letters if isinstance(p, PauliString) else PauliString(p).letters


def encode(p: PauliString | str) -> int:
    index = 0
    for ch in _letters(p):
        index = 4 * index + LETTERS.index(ch)
    return index


def decode(index: int, n: int) -> str:
    if not 1 <= n <= MAX_QUBITS:
        raise SizeOverflowError(f"qubit count must be in [1, {MAX_QUBITS}], got {n}")
    if not 0 <= index < 4**n:
        raise ValueError(f"index {index} out of range for {n} qubits")
    digits = []
    for _ in range(n):
        index, d = divmod(index, 4)
        digits.append(LETTERS[d])
    return "".join(reversed(digits))


def weight(p: PauliString | str) -> int:
    return sum(ch != "I" for ch in _letters(p))


def dense_matrix(p: PauliString | str) -> np.ndarray:
    """Kronecker product of the single-qubit factors (test oracle only)."""
    letters = _letters(p)
    if len(letters) > MAX_DENSE_QUBITS:
        raise SizeOverflowError(f"dense Pauli matrices limited to {MAX_DENSE_QUBITS} qubits")
    out = np.ones((1, 1), dtype=complex)
    for ch in letters:
        out = np.kron(out, SINGLE_QUBIT[LETTERS.index(ch)])
    return out


@functools.lru_cache(maxsize=None)
def digits_table(n: int) -> np.ndarray:
    """(4**n, n) array of per-qubit letter codes in canonical order."""
    idx = np.arange(4**n)
    return np.stack([(idx >> (2 * (n - 1 - j))) & 3 for j in range(n)], axis=1)


@functools.lru_cache(maxsize=None)
def weights(n: int) -> np.ndarray:
    """Weight of every Pauli string, indexed canonically."""
    if not 1 <= n <= MAX_QUBITS:
        raise SizeOverflowError(f"qubit count must be in [1, {MAX_QUBITS}], got {n}")
    return np.count_nonzero(digits_table(n), axis=1)


def count_of_weight(n: int, i: int) -> int:
    return math.comb(n, i) * 3**i


def num_pairs(n: int) -> int:
    """Number of unordered pairs {sigma, tau} (sigma <= tau) of n-qubit Paulis."""
    N = 4**n
    return N * (N + 1) // 2


def pair_index(sigma, tau, n: int):
    """Row-major upper-triangle position of the unordered pair {sigma, tau}.

    Works elementwise on integer arrays; matches ``np.triu_indices(4**n)`` order.
    """
    N = 4**n
    lo = np.minimum(sigma, tau)
    hi = np.maximum(sigma, tau)
    return lo * N - lo * (lo - 1) // 2 + (hi - lo)


def pair_from_index(k: int, n: int) -> tuple[int, int]:
    N = 4**n
    lo = 0
    while k >= N - lo:
        k -= N - lo
        lo += 1
    return lo, lo + k
