"""
Tests des modules explicites : modules standard, formes de Gram, têtes
simples, dual, localisation et homomorphismes.
"""
import pytest

from algebra import AlgebraElement
from config import Configuration, get_configuration, set_configuration
from data_generator import random_pairs
from diagrams import dimension, generators
from errors import DomainError, ResourceError
from linalg import DenseMatrix
from models import BrauerDiagram, Partition
from modules import (are_isomorphic, block_indicator, check_decomposition_support, check_globalisation,
                     check_simple_duality, dual_module, globalised_dimension, gram_matrix, gram_rank, hom_dimension,
                     localise, localised_dimension_expected, simple_dimensions, simple_module, standard_dimension,
                     standard_module)
from partitions import enumerate_lambda

P = Partition


def test_dimensions_standard():
    assert standard_dimension(3, P((1,))) == 3
    assert standard_dimension(3, P((3,))) == 1
    assert standard_dimension(3, P((2, 1))) == 2
    assert standard_dimension(4, P()) == 3
    for n in range(0, 7):
        assert sum(standard_dimension(n, lam) ** 2 for lam in enumerate_lambda(n)) == dimension(n)
    with pytest.raises(DomainError):
        standard_dimension(3, P((2,)))


def test_representation():
    for p in (0, 3):
        for lam in enumerate_lambda(3):
            module = standard_module(3, lam, p)
            assert module.dimension == standard_dimension(3, lam)
            assert module.check_relations(random_pairs(3, 40, seed=11)) == []


def test_representation_n4():
    for lam in enumerate_lambda(4):
        assert standard_module(4, lam, 5).check_relations(random_pairs(4, 20, seed=4)) == []


def test_critere_de_simplicite():
    for p in (3, 5):
        for n in range(1, 4):
            restricted = enumerate_lambda(n, p, restricted_only=True)
            for lam in enumerate_lambda(n):
                assert (gram_rank(n, lam, p) > 0) == (lam in restricted)


def test_forme_de_gram_en_caracteristique_nulle():
    # e·e = 0 : forme nulle sur W_2(∅)
    assert gram_rank(2, P(), 0) == 0
    assert gram_matrix(3, P((1,)), 0).shape == (3, 3)


def test_borne_de_gram():
    saved = get_configuration()
    set_configuration(Configuration(gram_max_n=2))
    try:
        with pytest.raises(ResourceError):
            gram_matrix(3, P((1,)), 3)
    finally:
        set_configuration(saved)


def test_modules_simples():
    dims = simple_dimensions(3, 5)
    assert dims[P((2, 1))] == 2
    for lam, dim in dims.items():
        module = simple_module(3, lam, 5)
        assert module.dimension == dim
        assert hom_dimension(module, module) == 1
    assert are_isomorphic(simple_module(3, P((2, 1)), 5), simple_module(3, P((2, 1)), 5))
    assert not are_isomorphic(simple_module(3, P((3,)), 5), simple_module(3, P((1, 1, 1)), 5))
    with pytest.raises(DomainError):
        simple_module(2, P(), 3)


def test_dual_des_simples():
    for p in (3, 5):
        assert check_simple_duality(3, p) == []


def test_dual():
    module = standard_module(3, P((1,)), 3)
    dual = dual_module(module)
    assert dual.dimension == module.dimension
    assert hom_dimension(module, module) >= 1


def test_localisation():
    for n in range(3, 6):
        for lam in enumerate_lambda(n):
            local = localise(standard_module(n, lam, 3))
            assert local.n == n - 2
            assert local.dimension == localised_dimension_expected(n, lam)
    assert localise(standard_module(3, P((1,)), 0)).dimension == 1
    assert localise(standard_module(3, P((3,)), 0)).dimension == 0
    with pytest.raises(DomainError):
        localise(standard_module(2, P((2,)), 0))


def test_localisation_est_un_module():
    local = localise(standard_module(4, P((1, 1)), 5))
    assert local.dimension == standard_dimension(2, P((1, 1)))
    identity = DenseMatrix.identity(local.field, local.dimension)
    assert local.act(BrauerDiagram.identity(2)) == identity
    for _, g in generators(2):
        assert local.act(g).shape == (local.dimension, local.dimension)


def test_globalisation():
    for n in range(1, 4):
        for lam in enumerate_lambda(n):
            assert check_globalisation(n, lam, 3)
            assert globalised_dimension(n, lam) == standard_dimension(n + 2, lam)


def test_indicateur_de_bloc():
    module = standard_module(3, P((2, 1)), 5)
    field = module.field
    assert block_indicator(module, AlgebraElement.one(3, field)) is True
    assert block_indicator(module, AlgebraElement.zero(3, field)) is False


def test_support_des_multiplicites():
    for n in range(1, 5):
        for p in (3, 5):
            assert check_decomposition_support(n, p) == []
    assert hom_dimension(standard_module(3, P((3,)), 3), simple_module(3, P((1,)), 3)) == 0
    assert hom_dimension(standard_module(3, P((2, 1)), 5), simple_module(3, P((2, 1)), 5)) == 1
    assert are_isomorphic(localise(simple_module(3, P((1,)), 3)), simple_module(1, P((1,)), 3))
    assert localise(simple_module(3, P((2, 1)), 5)).dimension == 0


@pytest.mark.slow
def test_support_des_multiplicites_n5():
    for p in (3, 5):
        assert check_decomposition_support(5, p) == []


if __name__ == "__main__":
    import sys
    from outils_tests import lancer_tests
    sys.exit(lancer_tests(dict(globals()), "TESTS DES MODULES"))
