"""Weight enumerators of explicit codes.

Shor-Laflamme enumerators over the Pauli basis, amplitude-damping enumerators
over the Kraus classes K_i, and the auxiliary vector phi[sigma] = tr(sigma P).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from adlp import kraus
from adlp.codes import CodeSpec
from adlp.pauli import SINGLE_QUBIT, SizeOverflowError, num_pairs, weights

MAX_AD_QUBITS = 10
MAX_PAULI_QUBITS = 8
MAX_REDUCED_QUBITS = 6
_IMAG_TOL = 1e-9

Kind = Literal["A", "B", "A_SL", "B_SL"]


@dataclass(frozen=True, eq=False)
class EnumeratorVector:
    kind: Kind
    values: np.ndarray
    gamma: float | None = None

    @property
    def n(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, i: int) -> float:
        return float(self.values[i])

    def __len__(self) -> int:
        return len(self.values)

    def to_dict(self) -> dict:
        out = {"kind": self.kind, "values": [float(v) for v in self.values]}
        if self.gamma is not None:
            out["gamma"] = self.gamma
        return out


@dataclass(frozen=True, eq=False)
class AuxVector:
    """phi in canonical Pauli order; |AUX> = phi (x) phi is kept implicit."""

    n: int
    phi: np.ndarray

    @property
    def trace(self) -> float:
        return float(self.phi[0])

    def pair_value(self, sigma: int, tau: int) -> float:
        return float(self.phi[sigma] * self.phi[tau])

    def reduced(self) -> np.ndarray:
        """y[{sigma, tau}] = phi[sigma] phi[tau] for sigma <= tau, row-major upper triangle."""
        if self.n > MAX_REDUCED_QUBITS:
            raise SizeOverflowError(
                f"reduced AUX vector has {num_pairs(self.n)} entries; limited to n <= {MAX_REDUCED_QUBITS}"
            )
        rows, cols = np.triu_indices(len(self.phi))
        return self.phi[rows] * self.phi[cols]

    def purity(self) -> float:
        return float(self.phi @ self.phi)


def _check_size(code: CodeSpec, limit: int) -> None:
    if code.n > limit:
        raise SizeOverflowError(f"{code.n}-qubit code exceeds the {limit}-qubit limit")


def ad_enumerators(code: CodeSpec, gamma: float) -> tuple[EnumeratorVector, EnumeratorVector]:
    """A_i = sum_{E in K_i} |tr(EP)|^2 / M^2 and B_i = sum_{E in K_i} tr(E P E^dag P) / M.

    With P = V V^dag and W = V^dag E V, tr(EP) = tr(W) and tr(E P E^dag P) = ||W||_F^2,
    so only the M x M compressions of each Kraus operator are needed.
    """
    _check_size(code, MAX_AD_QUBITS)
    gamma = kraus.check_gamma(gamma)
    n, M, V = code.n, code.M, code.frame
    A = np.zeros(n + 1)
    B = np.zeros(n + 1)
    for bits in kraus.kraus_labels(n):
        W = V.conj().T @ kraus.apply_kraus(bits, gamma, V)
        i = sum(bits)
        A[i] += abs(np.trace(W)) ** 2
        B[i] += np.vdot(W, W).real
    return (
        EnumeratorVector("A", A / M**2, gamma),
        EnumeratorVector("B", B / M, gamma),
    )


def aux_vector(code: CodeSpec) -> AuxVector:
    """phi[sigma] = tr(sigma P), one qubit contracted at a time."""
    _check_size(code, MAX_PAULI_QUBITS)
    n = code.n
    T = code.projector.reshape((2,) * (2 * n))
    # T axes: sigma_0..sigma_{j-1}, r_j..r_{n-1}, c_j..c_{n-1}; c_j always sits at axis n
    for j in range(n):
        T = np.tensordot(T, SINGLE_QUBIT, axes=([j, n], [2, 1]))
        T = np.moveaxis(T, -1, j)
    phi = T.reshape(-1)
    if np.max(np.abs(phi.imag), initial=0.0) > _IMAG_TOL:
        raise ValueError("projector is not Hermitian: tr(sigma P) has an imaginary part")
    return AuxVector(n=n, phi=phi.real.copy())


def _krawtchouk(n: int) -> np.ndarray:
    """K[i, w] = sum over weight-i Paulis E of the commutation sign with a fixed weight-w Pauli.

    Generating function in z: (1 + 3z)^(n - w) (1 - z)^w.
    """
    K = np.zeros((n + 1, n + 1))
    for w in range(n + 1):
        poly = np.array([1.0])
        for _ in range(n - w):
            poly = np.convolve(poly, [1.0, 3.0])
        for _ in range(w):
            poly = np.convolve(poly, [1.0, -1.0])
        K[:, w] = poly
    return K


def sl_enumerators(code: CodeSpec) -> tuple[EnumeratorVector, EnumeratorVector]:
    """Shor-Laflamme enumerators from the Pauli spectrum of P.

    tr(E P E P) = 2^-n sum_sigma (+-1) tr(sigma P)^2, the sign recording whether E
    commutes with sigma; grouping by weight turns the sum into a Krawtchouk transform.
    """
    aux = aux_vector(code)
    n, M = code.n, code.M
    by_weight = np.bincount(weights(n), weights=aux.phi**2, minlength=n + 1)
    A = by_weight / M**2
    B = _krawtchouk(n) @ by_weight / (M * 2**n)
    return EnumeratorVector("A_SL", A), EnumeratorVector("B_SL", B)


def is_tc_ad_code(code: CodeSpec, t: int, c: float, gamma: float, tol: float = 0.0) -> bool:
    """Whether B_i - A_i <= c gamma^(t+1) for i = 0..t at this damping value."""
    A, B = ad_enumerators(code, gamma)
    bound = c * gamma ** (t + 1) + tol
    return bool(np.all(B.values[: t + 1] - A.values[: t + 1] <= bound))


def binomial_bounds(n: int, gamma: float) -> np.ndarray:
    return np.array([math.comb(n, i) * gamma**i for i in range(n + 1)])
