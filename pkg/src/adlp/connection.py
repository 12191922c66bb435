"""Connection matrices M_A and M_B on the unordered-pair auxiliary index space.

An ordered pair (sigma, tau) only receives a contribution from Kraus labels whose
per-qubit kernel products are nonzero, so rows are assembled qubit by qubit as
polynomials in a weight-counting variable z; the coefficient of z^i is row i.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Literal

import numpy as np
import scipy.sparse as sp

from adlp import kraus
from adlp.codes import CodeSpec
from adlp.enumerator import ad_enumerators, aux_vector
from adlp.pauli import SizeOverflowError, num_pairs, pair_index

MAX_CONNECTION_QUBITS = 6

Kind = Literal["A", "B"]


def _qubit_options(kind: Kind, gamma: float, scaled: bool) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Nonzero single-qubit factors as (sigma, tau, [z^0 coeff, z^1 coeff])."""
    kA = kraus.kernel_A_table(gamma)
    kB = kraus.kernel_B_table(gamma)
    if scaled:
        # A_1 kernels at gamma = 1 are the gamma-free parts, so row i arrives divided by gamma^i
        kA[1] = kraus.kernel_A_table(1.0)[1]
        kB[1] = kraus.kernel_B_table(1.0)[1]
    sig, tau, coef = [], [], []
    for s in range(4):
        for t in range(4):
            if kind == "A":
                poly = [kA[0, s] * np.conj(kA[0, t]), kA[1, s] * np.conj(kA[1, t])]
            else:
                poly = [kB[0, s, t], kB[1, s, t]]
            if poly[0] != 0 or poly[1] != 0:
                sig.append(s)
                tau.append(t)
                coef.append(poly)
    return np.array(sig), np.array(tau), np.array(coef, dtype=complex)


def raw_entries(kind: Kind, n: int, gamma: float, scaled: bool = False):
    """Ordered pairs with their complex row polynomials.

    Returns (sigma, tau, values) where values[k, i] is the raw entry m_{sigma tau} of
    row i (already divided by 4^n; and by gamma^i when ``scaled``).
    """
    if kind not in ("A", "B"):
        raise ValueError(f"kind must be 'A' or 'B', got {kind!r}")
    if not 1 <= n <= MAX_CONNECTION_QUBITS:
        raise SizeOverflowError(f"connection matrices limited to 1 <= n <= {MAX_CONNECTION_QUBITS}")
    gamma = kraus.check_gamma(gamma)
    os_, ot, oc = _qubit_options(kind, gamma, scaled)
    sig = np.zeros(1, dtype=np.int64)
    tau = np.zeros(1, dtype=np.int64)
    poly = np.ones((1, 1), dtype=complex)
    for _ in range(n):
        K, m = len(sig), len(os_)
        sig = (sig[:, None] * 4 + os_[None, :]).reshape(-1)
        tau = (tau[:, None] * 4 + ot[None, :]).reshape(-1)
        deg = poly.shape[1]
        new = np.zeros((K, m, deg + 1), dtype=complex)
        new[:, :, :deg] += poly[:, None, :] * oc[None, :, 0, None]
        new[:, :, 1:] += poly[:, None, :] * oc[None, :, 1, None]
        poly = new.reshape(K * m, deg + 1)
    return sig, tau, poly / 4.0**n


@dataclass(frozen=True, eq=False)
class ConnectionMatrix:
    kind: Kind
    n: int
    gamma: float
    rows: sp.csr_matrix
    scaled: bool = False

    def apply(self, y: np.ndarray) -> np.ndarray:
        """Row values against a reduced pair vector (see ``AuxVector.reduced``)."""
        return self.rows @ y

    def to_json(self) -> list[dict]:
        out = []
        for i in range(self.n + 1):
            row = self.rows.getrow(i).tocoo()
            entries = []
            for k, v in sorted(zip(row.col.tolist(), row.data.tolist())):
                s, t = _unpair(k, self.n)
                entries.append([s, t, v])
            out.append({"i": i, "entries": entries})
        return out

    def dump(self, path) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh)


def _unpair(k: int, n: int) -> tuple[int, int]:
    N = 4**n
    # invert lo*N - lo*(lo-1)/2 + (hi-lo) = k
    lo = int(np.floor(((2 * N + 1) - np.sqrt((2 * N + 1) ** 2 - 8 * k)) / 2))
    while pair_index(lo + 1, lo + 1, n) <= k:
        lo += 1
    while pair_index(lo, lo, n) > k:
        lo -= 1
    return lo, lo + k - int(pair_index(lo, lo, n))


def build(kind: Kind, n: int, gamma: float, scaled: bool = False) -> ConnectionMatrix:
    """Reduce the raw entries onto unordered pairs.

    Off-diagonal pairs collect Re(m_st + m_ts) since both orders appear in the raw
    list; diagonal pairs collect Re(m_ss). Imaginary parts cancel by conj(m_st) = m_ts.
    """
    sig, tau, poly = raw_entries(kind, n, gamma, scaled)
    cols = pair_index(sig, tau, n)
    rows_, cols_, data = [], [], []
    for i in range(n + 1):
        vals = poly[:, i].real
        keep = vals != 0
        rows_.append(np.full(np.count_nonzero(keep), i))
        cols_.append(cols[keep])
        data.append(vals[keep])
    mat = sp.coo_matrix(
        (np.concatenate(data), (np.concatenate(rows_), np.concatenate(cols_))),
        shape=(n + 1, num_pairs(n)),
    ).tocsr()
    mat.sum_duplicates()
    mat.eliminate_zeros()
    mat.sort_indices()
    return ConnectionMatrix(kind=kind, n=n, gamma=float(gamma), rows=mat, scaled=scaled)


@dataclass(frozen=True)
class LemmaReport:
    gamma: float
    residual_A: float
    residual_B: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.residual_A < self.tol and self.residual_B < self.tol


def verify_lemma(code: CodeSpec, gamma: float, tol: float = 1e-9) -> LemmaReport:
    """Compare M_A y and M_B y with (tr P)^2 A and (tr P) B from direct enumeration."""
    y = aux_vector(code).reduced()
    A, B = ad_enumerators(code, gamma)
    M = code.M
    res_A = np.max(np.abs(build("A", code.n, gamma).apply(y) - M**2 * A.values))
    res_B = np.max(np.abs(build("B", code.n, gamma).apply(y) - M * B.values))
    return LemmaReport(gamma=float(gamma), residual_A=float(res_A), residual_B=float(res_B), tol=tol)
