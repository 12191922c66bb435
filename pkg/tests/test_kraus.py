import itertools
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from adlp import kraus
from adlp.pauli import LETTERS, dense_matrix, decode

gammas = st.floats(0.0, 1.0)
open_gammas = st.floats(1e-6, 1 - 1e-6)


def two_by_two_A(a, sigma, gamma):
    return np.trace(kraus.kraus_single(a, gamma) @ dense_matrix(sigma))


def two_by_two_B(a, sigma, tau, gamma):
    E = kraus.kraus_single(a, gamma)
    return np.trace(E @ dense_matrix(sigma) @ E.conj().T @ dense_matrix(tau))


def test_kernel_examples():
    assert kraus.kernel_A(0, "X", 0.42) == 0
    assert kraus.kernel_A(0, "I", 0.19) == pytest.approx(1.9, abs=1e-15)
    assert kraus.kernel_A(1, "Y", 0.25) == pytest.approx(0.5j, abs=1e-15)
    assert kraus.kernel_A_dagger(1, "Y", 0.25) == pytest.approx(-0.5j, abs=1e-15)
    assert kraus.kernel_A_dagger(0, "Z", 0.36) == pytest.approx(0.2, abs=1e-15)
    assert kraus.kernel_A_dagger(1, "I", 0.7) == 0
    assert kraus.kernel_B(1, "I", "I", 0.1) == pytest.approx(0.1)
    assert kraus.kernel_B(1, "Z", "Z", 0.1) == pytest.approx(-0.1)
    assert kraus.kernel_B(0, "X", "X", 0.75) == pytest.approx(1.0)


def test_kernel_examples_match_2x2_oracle():
    assert two_by_two_A(0, "I", 0.19) == pytest.approx(1.9)
    assert two_by_two_A(1, "Y", 0.25) == pytest.approx(0.5j)
    assert two_by_two_B(0, "X", "X", 0.75) == pytest.approx(1.0)


@given(gammas)
def test_kernels_match_2x2_oracle(gamma):
    for a, s in itertools.product((0, 1), LETTERS):
        assert kraus.kernel_A(a, s, gamma) == pytest.approx(two_by_two_A(a, s, gamma), abs=1e-14)
        Ed = kraus.kraus_single(a, gamma).conj().T
        assert kraus.kernel_A_dagger(a, s, gamma) == pytest.approx(np.trace(Ed @ dense_matrix(s)), abs=1e-14)
        for t in LETTERS:
            val = kraus.kernel_B(a, s, t, gamma)
            assert isinstance(val, float)
            assert val == pytest.approx(two_by_two_B(a, s, t, gamma), abs=1e-14)


@given(open_gammas)
def test_completeness(gamma):
    A0, A1 = kraus.kraus_single(0, gamma), kraus.kraus_single(1, gamma)
    np.testing.assert_allclose(A0.conj().T @ A0 + A1.conj().T @ A1, np.eye(2), atol=1e-14)


def test_dense_examples():
    g = 0.3
    np.testing.assert_allclose(kraus.kraus_dense("0", g), np.diag([1, math.sqrt(0.7)]))
    np.testing.assert_allclose(kraus.kraus_dense("1", g), [[0, math.sqrt(0.3)], [0, 0]])
    E = kraus.kraus_dense("101", 1.0)
    A1 = kraus.kraus_single(1, 1.0)
    np.testing.assert_array_equal(E, np.kron(np.kron(A1, kraus.kraus_single(0, 1.0)), A1))
    assert kraus.kraus_weight("101") == 2
    # |101> -> |000> with unit amplitude at gamma = 1
    assert E[0, 0b101] == 1 and np.count_nonzero(E) == 1


@pytest.mark.parametrize("n", [1, 2, 3])
def test_operator_norm_scaling(n):
    g = 0.2
    for x in kraus.kraus_labels(n):
        norm = np.linalg.norm(kraus.kraus_dense(x, g), 2)
        assert norm == pytest.approx(g ** (sum(x) / 2))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_weight_classes(n):
    for i in range(n + 1):
        assert len(list(kraus.kraus_labels(n, i))) == math.comb(n, i)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_factorization(n):
    g = 0.37
    tA = kraus.kernel_A_table(g)
    tB = kraus.kernel_B_table(g)
    rng = np.random.default_rng(n)
    for x in kraus.kraus_labels(n):
        E = kraus.kraus_dense(x, g)
        for s in rng.choice(4**n, size=min(16, 4**n), replace=False):
            S = decode(int(s), n)
            want = np.trace(E @ dense_matrix(S))
            got = np.prod([tA[a, LETTERS.index(c)] for a, c in zip(x, S)])
            assert abs(want - got) < 1e-12
            t = int(rng.integers(4**n))
            T = decode(t, n)
            want = np.trace(E @ dense_matrix(S) @ E.conj().T @ dense_matrix(T))
            got = np.prod([tB[a, LETTERS.index(c), LETTERS.index(d)] for a, c, d in zip(x, S, T)])
            assert abs(want - got) < 1e-12


def test_trace_preservation(rng):
    n, g = 3, 0.23
    G = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
    P = G @ G.conj().T
    total = sum(np.trace(kraus.kraus_dense(x, g).conj().T @ kraus.kraus_dense(x, g) @ P) for x in kraus.kraus_labels(n))
    assert abs(total - np.trace(P)) < 1e-10


def test_apply_kraus_matches_dense(rng):
    V = rng.normal(size=(16, 3)) + 1j * rng.normal(size=(16, 3))
    for x in [(0, 1, 1, 0), (1, 0, 0, 1), (1, 1, 1, 1)]:
        np.testing.assert_allclose(kraus.apply_kraus(x, 0.4, V), kraus.kraus_dense(x, 0.4) @ V, atol=1e-14)


@pytest.mark.parametrize("bad", [-0.1, 1.5, float("nan")])
def test_gamma_domain(bad):
    with pytest.raises(ValueError):
        kraus.kernel_A(0, "I", bad)


def test_bad_labels():
    with pytest.raises(ValueError):
        kraus.kernel_B(2, "I", "I", 0.1)
    with pytest.raises(ValueError):
        kraus.kraus_dense("012", 0.1)
