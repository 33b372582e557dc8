import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from defectlab.budget import Budget
from defectlab.config import PointConfiguration, bar, make_configuration, pyramid_index
from defectlab.exactlin import ExactMatrix, rank
from defectlab.fixtures import EXAMPLES, example
from defectlab.report import PASS, SKIP, circuit_lemma_checks, compute_all, crosscheck, lemma_suite, thread_count

from pyramids import add_apexes
from strategies import configs

KEYS = ["n", "d", "m", "p", "homogeneous", "rho", "iota", "lambda", "theta", "defect", "identities", "witnesses",
        "notes"]


@pytest.mark.parametrize("name", ["OCT", "PRISM", "GALE6", "FANO7"])
def test_fixture_reports(name):
    ex = example(name)
    rep = compute_all(ex.config)
    assert rep.ok and all(i.status == PASS for i in rep.identities)
    got = {"n": rep.n, "d": rep.d, "m": rep.m, "rho": rep.rho, "iota": rep.iota, "lambda": rep.lambda_,
           "theta": rep.theta, "defect": rep.defect}
    for k, v in ex.expected.items():
        assert got[k] == v, k


def test_json_layout():
    d = json.loads(compute_all(example("PRISM").config).to_json())
    assert list(d) == KEYS
    assert d["defect"] == "1" and d["theta"] == "1"
    assert d["witnesses"]["fi_decomposition"] == [[0, 1], [2, 3], [4, 5]]
    assert all(isinstance(i, int) for part in d["witnesses"]["rho_chain"] for i in part)


def test_table():
    t = compute_all(example("PRISM").config).to_table()
    assert "defect       1" in t and "[pass]" in t


def test_non_homogeneous_is_barred():
    rep = compute_all(example("LINE123").config)
    assert not rep.homogeneous and rep.m == 1
    assert rep.notes and rep.ok


def test_simplex():
    rep = compute_all(bar(PointConfiguration.from_points([(0, 0), (1, 0), (0, 1)])))
    assert rep.m == 0 and rep.defect == 0 and rep.rho is None and rep.identities == []
    assert json.loads(rep.to_json())["rho"] is None
    assert crosscheck(bar(PointConfiguration.from_points([(0,), (1,)])))[0].status == SKIP


def test_pyramid_over_prism():
    A = add_apexes(example("PRISM").config, 1)
    info = pyramid_index(A)
    assert info.p == 1
    rep = compute_all(A)
    assert rep.ok
    assert (rep.rho, rep.iota, rep.lambda_, rep.theta, rep.defect) == (5, 2, 0, 2, 2)
    assert any(i.name == "rho(A) = rho(A') + p" and i.status == PASS for i in rep.identities)


def test_budget_exhaustion():
    rep = compute_all(example("FANO7").config, Budget(max_nodes=1))
    assert rep.budget_exhausted and rep.ok
    assert rep.rho == 6
    assert any(i.status == SKIP for i in rep.identities)
    assert any("via identity" in n for n in rep.notes)


def test_thread_count(monkeypatch):
    monkeypatch.delenv("DEFECTLAB_THREADS", raising=False)
    assert thread_count() == 1
    monkeypatch.setenv("DEFECTLAB_THREADS", "4")
    assert thread_count() == 4
    assert thread_count(2) == 2


def test_lemma_suite_line123():
    checks = lemma_suite(example("LINE123").config)
    assert checks and all(ok for _, ok in checks)


def test_circuit_lemma_oct():
    checks = circuit_lemma_checks(example("OCT").config)
    assert checks and all(ok for _, ok in checks)
    # circuit {0,1,2,3}: complement {4,5} is a codimension-one flat
    assert ("circuit (0, 1, 2, 3): complement is a codimension-one flat", True) in checks


@settings(max_examples=30)
@given(configs(max_n=8))
def test_identity_chain(A):
    rep = compute_all(A)
    assert rep.ok
    assert rep.theta == rep.m - 1 - rep.lambda_ == rep.n - 1 - rep.rho == rep.d - rep.iota


@settings(max_examples=20)
@given(configs(max_n=7))
def test_circuit_lemmas(A):
    assert all(ok for _, ok in circuit_lemma_checks(A))


@settings(max_examples=20)
@given(configs(max_n=7), st.integers(0, 2**31))
def test_affine_invariance(A, seed):
    rnd = random.Random(seed)
    perm = list(range(A.n))
    rnd.shuffle(perm)
    while True:
        G = ExactMatrix([[rnd.randint(-2, 2) for _ in range(A.e)] for _ in range(A.e)])
        if rank(G) == A.e:
            break
    A2 = make_configuration((G @ A.matrix).select_columns(perm))
    assert compute_all(A2).defect == compute_all(A).defect


@settings(max_examples=15)
@given(configs(max_n=6), st.integers(1, 2))
def test_pyramid_relations(A, k):
    rep = compute_all(add_apexes(A, k))
    base = compute_all(A)
    assert rep.p == k and rep.ok
    assert (rep.n, rep.d, rep.m) == (base.n + k, base.d + k, base.m)
    assert (rep.rho, rep.iota, rep.lambda_) == (base.rho + k, base.iota, base.lambda_)
    assert rep.defect == base.defect + k


def test_examples_table_complete():
    assert set(EXAMPLES) == {"OCT", "PRISM", "LINE123", "GALE6", "FI14", "FANO7"}
