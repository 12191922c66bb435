import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from adlp import codes, enumerator
from adlp.lp import FeasibilityQuery, QueryError, assemble, witness_from_code
from adlp.pauli import pair_index

from strategies import random_codes

EXAMPLE3_GAMMAS = (0.1, 0.05, 0.01, 0.0001)


def code_witness(problem, code):
    enums = [enumerator.ad_enumerators(code, g) for g in problem.query.gammas]
    return witness_from_code(problem, enumerator.aux_vector(code), enums)


def test_toy_counts():
    p = assemble(FeasibilityQuery(1, 1, 0, 1.0, (0.1,), "paper"))
    assert p.n_aux == 10
    assert p.n_vars == 10 + 2 * 2
    assert p.A_eq.shape[0] == 4
    zero = np.zeros(p.n_vars)
    assert p.residuals(zero)["bounds"] == pytest.approx(1.0)  # y_{I,I} = M^2 = 1
    zero[0] = 1.0
    assert p.residuals(zero)["bounds"] == 0.0


def test_example3_counts():
    p = assemble(FeasibilityQuery(3, 2, 1, 9.8e4, EXAMPLE3_GAMMAS))
    assert p.n_aux == 64 * 65 // 2 == 2080
    assert p.n_vars - p.n_aux == 4 * 8


def test_strengthened_adds_rows():
    paper = assemble(FeasibilityQuery(2, 1, 1, 1.0, (0.1, 0.2), "paper"))
    strong = assemble(FeasibilityQuery(2, 1, 1, 1.0, (0.1, 0.2), "strengthened"))
    assert strong.A_eq.shape[0] == paper.A_eq.shape[0] + 1
    assert strong.A_ub.shape[0] == paper.A_ub.shape[0] + 2 * (1 + 3)
    assert np.isinf(paper.ub[1:paper.n_aux]).all()
    diag_IX = int(pair_index(1, 1, 2))
    assert strong.lb[diag_IX] == 0.0 and strong.ub[diag_IX] == 1.0
    assert np.isinf(strong.ub[int(pair_index(1, 2, 2))])
    assert strong.lb[0] == strong.ub[0] == 1.0


def test_variable_names():
    p = assemble(FeasibilityQuery(1, 1, 0, 1.0, (0.1, 0.2)))
    names = p.var_names()
    assert names[:5] == ["y_0_0", "y_0_1", "y_0_2", "y_0_3", "y_1_1"]
    assert names[10:] == ["A_0_0", "A_1_0", "B_0_0", "B_1_0", "A_0_1", "A_1_1", "B_0_1", "B_1_1"]
    assert [p.var_name(j) for j in range(p.n_vars)] == names


@pytest.mark.slow
def test_leung_witness_satisfies_program(leung):
    p = assemble(FeasibilityQuery(4, 2, 1, 3 / 64, (0.1,), "strengthened"))
    x = code_witness(p, leung)
    assert p.max_violation(x) < 1e-9


@pytest.mark.parametrize("constraint_set", ["paper", "strengthened"])
def test_repetition_code_witness_for_example3(constraint_set):
    rep = codes.validate(3, [codes.basis_state("000"), codes.basis_state("111")])
    p = assemble(FeasibilityQuery(3, 2, 1, 9.8e4, EXAMPLE3_GAMMAS, constraint_set))
    assert p.max_violation(code_witness(p, rep)) < 1e-12


@given(
    random_codes(max_n=2),
    st.lists(st.floats(1e-3, 0.95), min_size=1, max_size=3, unique=True),
    st.integers(0, 2),
    st.sampled_from(["paper", "strengthened"]),
)
def test_soundness_random_codes(code, gammas, t, constraint_set):
    t = min(t, code.n)
    # smallest c for which this code satisfies the (t, c) condition at every gamma
    need = 0.0
    for g in gammas:
        A, B = enumerator.ad_enumerators(code, g)
        need = max(need, float(np.max((B.values - A.values)[: t + 1])) / g ** (t + 1))
    q = FeasibilityQuery(code.n, code.M, t, max(need, 0.0) * (1 + 1e-9) + 1e-9, tuple(gammas), constraint_set)
    p = assemble(q)
    assert p.max_violation(code_witness(p, code)) < 1e-9


@given(
    st.integers(1, 3),
    st.integers(0, 3),
    st.floats(0.0, 1e6),
    st.lists(st.floats(1e-4, 0.99), min_size=1, max_size=4, unique=True),
    st.sampled_from(["paper", "strengthened"]),
)
def test_scaled_conditioning(n, t, c, gammas, constraint_set):
    t = min(t, n)
    p = assemble(FeasibilityQuery(n, 1, t, c, tuple(gammas), constraint_set))
    hi = max(c, math.comb(n, n // 2))
    vals = np.concatenate([p.A_ub.data, p.b_ub])
    assert vals.min() >= -1 and vals.max() <= hi
    assert np.isfinite(p.A_eq.data).all()


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(n=0, M=1, t=0, c=1, gammas=(0.1,)),
        dict(n=2, M=5, t=0, c=1, gammas=(0.1,)),
        dict(n=2, M=1, t=3, c=1, gammas=(0.1,)),
        dict(n=2, M=1, t=0, c=-1, gammas=(0.1,)),
        dict(n=2, M=1, t=0, c=1, gammas=()),
        dict(n=2, M=1, t=0, c=1, gammas=(0.1, 0.1)),
        dict(n=2, M=1, t=0, c=1, gammas=(1.0,)),
        dict(n=2, M=1, t=0, c=1, gammas=(0.1,), constraint_set="sdp"),
        dict(n=7, M=1, t=0, c=1, gammas=(0.1,)),
    ],
)
def test_query_validation(kwargs):
    with pytest.raises(QueryError):
        FeasibilityQuery(**kwargs)


def test_paper_literal_alias():
    assert FeasibilityQuery(1, 1, 0, 1, (0.1,), "paper-literal").constraint_set == "paper"


def test_unscaled_enumerators():
    code = codes.builtin("trivial-one(2)")
    p = assemble(FeasibilityQuery(2, 1, 0, 1.0, (0.2, 0.4)))
    x = code_witness(p, code)
    rec = p.unscaled_enumerators(x)
    for k, g in enumerate((0.2, 0.4)):
        A, B = enumerator.ad_enumerators(code, g)
        np.testing.assert_allclose(rec[k]["A"], A.values, atol=1e-14)
        np.testing.assert_allclose(rec[k]["B"], B.values, atol=1e-14)
