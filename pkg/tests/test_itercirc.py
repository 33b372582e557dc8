import pytest
from hypothesis import given, settings

from defectlab.config import PointConfiguration, bar, make_configuration
from defectlab.exactlin import rank
from defectlab.errors import InvalidIteratedCircuit, PyramidError, SimplexError
from defectlab.fixtures import example
from defectlab.itercirc import (IteratedCircuit, affine_dim, all_iterated_circuits, eta, extend_to_full, iota,
                                iota_direct, phi, psi, validate)
from defectlab.rho import SupportChain, literal_rank, rho, sigma_matrix

from bijection import check_bijection
from strategies import configs

# frozen from iota_direct (an independent part-by-part search)
FROZEN = {"OCT": 3, "PRISM": 2, "GALE6": 2, "FANO7": 3}


@pytest.mark.parametrize("name", sorted(FROZEN))
def test_iota_frozen(name):
    A = example(name).config
    res = iota(A)
    assert res.value == FROZEN[name]
    assert eta(A, res.witness) == res.value
    validate(A, res.witness.parts)


@pytest.mark.parametrize("name", sorted(FROZEN))
def test_iota_frozen_rederived(name):
    assert iota_direct(example(name).config) == FROZEN[name]


def test_octahedron_witness():
    A = example("OCT").config
    I = validate(A, [(0, 1, 2, 3), (4, 5)])
    assert eta(A, I) == 3


def test_prism_witness():
    A = example("PRISM").config
    I = validate(A, [(2, 3, 4, 5), (0, 1)])
    # the two remaining points coincide modulo the circuit span
    assert eta(A, I) == 2


def test_validate_reports_part():
    A = example("OCT").config
    with pytest.raises(InvalidIteratedCircuit) as exc:
        validate(A, [(0, 1, 2), (4, 5)])
    assert exc.value.part == 0
    with pytest.raises(InvalidIteratedCircuit) as exc:
        validate(A, [(0, 1, 2, 3), (4,)])
    assert exc.value.part == 1
    with pytest.raises(InvalidIteratedCircuit):
        validate(A, [(0, 1, 2, 3), (0, 4)])


def test_guards():
    with pytest.raises(SimplexError):
        iota(bar(PointConfiguration.from_points([(0, 0), (1, 0), (0, 1)])))
    apex = bar(PointConfiguration.from_points([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)]))
    with pytest.raises(PyramidError):
        iota(apex)
    # the apex does not change iota: the square base is the best circuit
    assert iota(apex, allow_pyramid=True).value == iota(apex.restrict([0, 1, 2, 3])).value == 2


def test_fi14_phi_psi():
    A = example("FI14").config
    I = iota(A).witness
    assert eta(A, I) == 4
    J = extend_to_full(A, I)
    chain = phi(A, J)
    assert literal_rank(A, chain) == 12
    assert psi(A, chain) == J


def test_fi14_iota_rederived():
    assert iota_direct(example("FI14").config) == 4


@pytest.mark.parametrize("name", ["OCT", "PRISM", "GALE6", "FANO7"])
def test_bijection_on_fixtures(name):
    rep = check_bijection(example(name).config)
    assert rep.chains and rep.structural == [] and rep.identity == []


def test_rank_identity_counterexample():
    # two later parts each collapse to a repeated point; the off-diagonal
    # blocks of the sigma-matrix add a rank the block count does not see
    A = make_configuration([[1, 1, 1, 0, 0, 0], [0, 0, 0, 1, 1, 1], [0, 1, 1, 0, 1, 1]])
    chain = SupportChain((0b000110, 0b110110, 0b111111))
    I = psi(A, chain)
    assert I.key() == ((1, 2), (4, 5), (0, 3))
    assert (affine_dim(A, I.union), eta(A, I)) == (2, 0)
    assert rank(sigma_matrix(A, chain)) == 4  # so n - 1 - rank = 1, not 2
    rep = check_bijection(A)
    assert rep.structural == [] and rep.inequality == [] and rep.identity
    # the maximum is unaffected
    assert A.n - 1 - rho(A).value == A.d - iota(A).value


def test_all_iterated_circuits_agree_with_iota():
    A = example("PRISM").config
    circs = all_iterated_circuits(A)
    assert max(eta(A, I) for I in circs) == 2
    for I in circs:
        validate(A, I.parts)


@settings(max_examples=40)
@given(configs(max_n=7))
def test_iota_matches_direct(A):
    assert iota(A).value == iota_direct(A)


@settings(max_examples=25)
@given(configs(max_n=7))
def test_bijection_property(A):
    rep = check_bijection(A)
    assert rep.structural == [] and rep.inequality == []


@settings(max_examples=25)
@given(configs(max_n=7))
def test_eta_bounded_by_dimension(A):
    for I in all_iterated_circuits(A, limit=2000):
        assert 0 <= eta(A, I) <= A.d


def test_iterated_circuit_key():
    assert IteratedCircuit((0b11, 0b1100)).key() == ((0, 1), (2, 3))
