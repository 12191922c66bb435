"""Explicit ((n, M)) quantum codes: validation, JSON I/O and built-in examples."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from adlp.pauli import MAX_DENSE_QUBITS, SizeOverflowError

ORTHONORMAL_TOL = 1e-10


class CodeError(ValueError):
    pass


class NotNormalizedError(CodeError):
    def __init__(self, index: int, norm: float) -> None:
        super().__init__(f"codeword {index} has squared norm {norm!r}, expected 1")
        self.index = index
        self.norm = norm


class NotOrthogonalError(CodeError):
    def __init__(self, pair: tuple[int, int], overlap: complex) -> None:
        super().__init__(f"codewords {pair[0]} and {pair[1]} have inner product {overlap!r}")
        self.pair = pair
        self.overlap = overlap


class UnknownCodeError(CodeError, KeyError):
    pass


@dataclass(frozen=True, eq=False)
class CodeSpec:
    """M orthonormal codewords of dimension 2**n, stored as columns of ``frame``."""

    n: int
    frame: np.ndarray
    name: str = ""
    _projector: np.ndarray | None = field(default=None, repr=False)

    @property
    def M(self) -> int:
        return self.frame.shape[1]

    @property
    def codewords(self) -> list[np.ndarray]:
        return [self.frame[:, k] for k in range(self.M)]

    @property
    def projector(self) -> np.ndarray:
        if self._projector is None:
            if self.n > MAX_DENSE_QUBITS:
                raise SizeOverflowError(f"dense projector limited to {MAX_DENSE_QUBITS} qubits")
            object.__setattr__(self, "_projector", self.frame @ self.frame.conj().T)
        return self._projector


def validate(n: int, codewords, name: str = "", tol: float = ORTHONORMAL_TOL) -> CodeSpec:
    """Check normalization and pairwise orthogonality; never re-orthogonalizes."""
    if n < 1:
        raise CodeError(f"qubit count must be positive, got {n}")
    vectors = [np.asarray(v, dtype=complex).reshape(-1) for v in codewords]
    if not vectors:
        raise CodeError("a code needs at least one codeword")
    for k, v in enumerate(vectors):
        if v.shape != (2**n,):
            raise CodeError(f"codeword {k} has length {v.size}, expected {2**n}")
    frame = np.stack(vectors, axis=1)
    gram = frame.conj().T @ frame
    for k in range(len(vectors)):
        norm = gram[k, k].real
        if abs(norm - 1.0) > tol:
            raise NotNormalizedError(k, norm)
    for j in range(len(vectors)):
        for k in range(j + 1, len(vectors)):
            if abs(gram[j, k]) > tol:
                raise NotOrthogonalError((j, k), complex(gram[j, k]))
    return CodeSpec(n=n, frame=frame, name=name)


def basis_state(bits: str) -> np.ndarray:
    v = np.zeros(2 ** len(bits), dtype=complex)
    v[int(bits, 2)] = 1.0
    return v


def leung4() -> CodeSpec:
    zero = (basis_state("0000") + basis_state("1111")) / np.sqrt(2)
    one = (basis_state("0011") + basis_state("1100")) / np.sqrt(2)
    return validate(4, [zero, one], name="leung4")


def shor9() -> CodeSpec:
    plus = (basis_state("000") + basis_state("111")) / np.sqrt(2)
    minus = (basis_state("000") - basis_state("111")) / np.sqrt(2)
    zero = np.kron(np.kron(plus, plus), plus)
    one = np.kron(np.kron(minus, minus), minus)
    return validate(9, [zero, one], name="shor9")


def trivial(bit: str, n: int) -> CodeSpec:
    return validate(n, [basis_state(bit * n)], name=f"trivial-{'zero' if bit == '0' else 'one'}({n})")


_TRIVIAL = re.compile(r"trivial-(zero|one)\((\d+)\)")


def builtin(name: str) -> CodeSpec:
    if name == "leung4":
        return leung4()
    if name == "shor9":
        return shor9()
    match = _TRIVIAL.fullmatch(name)
    if match:
        return trivial("0" if match[1] == "zero" else "1", int(match[2]))
    raise UnknownCodeError(f"unknown built-in code {name!r}")


def random_code(n: int, M: int, rng: np.random.Generator) -> CodeSpec:
    """Haar-ish random M-frame from the QR of a complex Gaussian matrix."""
    g = rng.normal(size=(2**n, M)) + 1j * rng.normal(size=(2**n, M))
    q, _ = np.linalg.qr(g)
    return validate(n, list(q.T), name=f"random({n},{M})")


def from_json(data: dict) -> CodeSpec:
    try:
        n = int(data["n"])
        codewords = [[complex(re_, im) for re_, im in word] for word in data["codewords"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise CodeError(f"malformed code file: {exc}") from exc
    return validate(n, codewords, name=str(data.get("name", "")))


def to_json(code: CodeSpec) -> dict:
    return {
        "n": code.n,
        "codewords": [[[float(z.real), float(z.imag)] for z in word] for word in code.codewords],
    }


def load(source: str | Path) -> CodeSpec:
    """Built-in name, or a path to a JSON code file."""
    path = Path(source)
    if path.suffix == ".json" or path.exists():
        with open(path) as fh:
            return from_json(json.load(fh))
    return builtin(str(source))
