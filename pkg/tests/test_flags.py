import random

import pytest
from hypothesis import assume, given, settings, strategies as st

from defectlab.config import GaleDual, bar, gale_dual, gale_homogenize
from defectlab.errors import InvalidFlagError, PyramidError
from defectlab.exactlin import ExactMatrix, rank
from defectlab.fixtures import GALE6_GALE, OCT_GALE, PRISM_GALE, example
from defectlab.flags import Flag, is_irreducible, is_nonsplitting, lambda_, nonsplitting_flags, quotient, reduce

from oracles import lambda_brute
from strategies import gales

# frozen from lambda_brute
FROZEN = {"OCT": 1, "PRISM": 0, "GALE6": 2, "FANO7": 2, "FI14": 6}


@pytest.mark.parametrize("name", sorted(FROZEN))
def test_lambda_frozen(name):
    B = example(name).config.gale
    res = lambda_(B)
    assert res.value == FROZEN[name]
    assert len(res.witness) == res.value and is_nonsplitting(B, res.witness)


@pytest.mark.parametrize("name", ["OCT", "PRISM", "GALE6", "FANO7"])
def test_lambda_frozen_rederived(name):
    B = example(name).config.gale
    assert lambda_brute(B.matroid.int_vectors) == FROZEN[name]


def test_line123_values():
    A = example("LINE123").config
    B = gale_dual(A)
    assert lambda_(B).value == 2
    assert lambda_(gale_homogenize(B)).value == 1
    assert lambda_(bar(A).gale).value == 0


@pytest.mark.parametrize("vecs,value", [(OCT_GALE, 1), (PRISM_GALE, 0), (GALE6_GALE, 2)])
def test_lambda_on_stated_duals(vecs, value):
    assert lambda_(GaleDual.from_vectors(vecs)).value == value


def test_witness_is_lex_least():
    B = example("GALE6").config.gale
    res = lambda_(B)
    longest = [f for f in nonsplitting_flags(B) if len(f) == res.value]
    assert res.witness.key() == min(f.key() for f in longest)


def test_invalid_flags():
    B = GaleDual.from_vectors(OCT_GALE)
    with pytest.raises(InvalidFlagError):
        is_nonsplitting(B, Flag((0b1,)))  # not a flat
    with pytest.raises(InvalidFlagError):
        is_nonsplitting(B, Flag((0b111111,)))  # wrong rank
    assert is_nonsplitting(B, Flag((0b11,)))


def test_loops_rejected():
    B = GaleDual.from_vectors([(0, 0), (1, 0), (-1, 0)])
    with pytest.raises(PyramidError):
        lambda_(B)
    assert lambda_(B, allow_loops=True).value == 0


def test_reduce():
    r = reduce(GaleDual.from_vectors(OCT_GALE))
    # the three parallel pairs do not split: each becomes twice its vector
    assert len(r.splitting) == 0 and r.reduced.n == 3
    r = reduce(GaleDual.from_vectors(PRISM_GALE))
    assert len(r.splitting) == 3 and r.reduced.n == 0
    assert is_irreducible(GaleDual.from_vectors(GALE6_GALE))
    assert not is_irreducible(GaleDual.from_vectors(OCT_GALE))


@settings(max_examples=60)
@given(gales(max_n=7))
def test_lambda_matches_brute(B):
    assert lambda_(B).value == lambda_brute(B.matroid.int_vectors)


@settings(max_examples=60)
@given(gales(max_n=7, dual_homogeneous=False))
def test_homogenization(B):
    assert lambda_(B).value == lambda_(gale_homogenize(B)).value + 1


@settings(max_examples=60)
@given(gales(max_n=8))
def test_upper_bound(B):
    assert lambda_(B).value <= B.rank - 1


@settings(max_examples=60)
@given(gales(max_n=8))
def test_reduction_preserves_lambda(B):
    red = reduce(B).reduced
    assert lambda_(B).value == (lambda_(red).value if red.n else 0)


@settings(max_examples=60)
@given(gales(max_n=8), st.integers(0, 2**31))
def test_gl_invariance(B, seed):
    rnd = random.Random(seed)
    k = B.matrix.ncols
    while True:
        G = ExactMatrix([[rnd.randint(-2, 2) for _ in range(k)] for _ in range(k)])
        if rank(G) == k:
            break
    B2 = GaleDual(B.matrix @ G, source=None)
    assert lambda_(B2).value == lambda_(B).value


@settings(max_examples=60)
@given(gales(max_n=8))
def test_quotient_lemma(B):
    res = lambda_(B)
    assume(res.value >= 1)
    F1 = res.witness.flats[0]
    Bq, _ = quotient(B, F1)
    assert lambda_(Bq).value == res.value - 1
    # any non-splitting line: the quotient can only lose length
    M = B.matroid
    for F in M.rank_one_flats():
        if any(M.int_sum(F)):
            assert lambda_(quotient(B, F)[0]).value <= res.value - 1


@settings(max_examples=40)
@given(gales(max_n=7), st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_avoidance(B, line):
    v = line[: B.matrix.ncols]
    assume(any(v))
    lam = lambda_(B).value
    assume(lam >= 1)
    M = B.matroid
    longest = [f for f in nonsplitting_flags(B) if len(f) == lam]
    assert any(not M.in_span(v, f.flats[-1]) for f in longest)
