"""
Tests de l'algèbre A_n : arithmétique des éléments, base de Murphy, base
standard, centre et idempotents centraux.
"""
import random

import pytest

from algebra import (AlgebraElement, MurphyBasis, center, central_idempotents, get_murphy_basis,
                     mullineux_oracle, multiplication_table, sign_twisted_action, standard_basis)
from config import Configuration, get_configuration, set_configuration
from data_generator import random_element
from diagrams import cup_cap, dimension, generators, simple_transposition
from errors import ResourceError, UsageError
from linalg import get_field, inverse, rank, DenseMatrix
from models import BrauerDiagram, Partition
from partitions import is_p_restricted, mullineux, partitions_of

P = Partition


def test_unite_et_associativite():
    for p in (0, 5):
        field = get_field(p)
        rng = random.Random(p)
        one = AlgebraElement.one(3, field)
        for _ in range(10):
            a, b, c = (random_element(3, field, rng) for _ in range(3))
            assert one * a == a
            assert a * one == a
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c


def test_relations_des_generateurs():
    field = get_field(0)
    e = AlgebraElement.from_diagram(cup_cap(2, 1), field)
    s = AlgebraElement.from_diagram(simple_transposition(2, 1), field)
    assert (e * e).is_zero
    assert s * s == AlgebraElement.one(2, field)
    # e·s = −e, s·e = e
    assert e * s == -e
    assert s * e == e


def test_elements_incompatibles():
    a = AlgebraElement.one(2, get_field(3))
    with pytest.raises(UsageError):
        a + AlgebraElement.one(2, get_field(5))
    with pytest.raises(UsageError):
        AlgebraElement(2, get_field(3), {BrauerDiagram.identity(3): 1})


def test_serialisation_json():
    field = get_field(0)
    x = random_element(3, field, random.Random(7)).scale("1/2")
    assert AlgebraElement.from_dict(x.to_dict()) == x
    assert AlgebraElement.from_vector(3, field, x.to_vector()) == x
    with pytest.raises(UsageError):
        AlgebraElement.from_dict({'n': 2})


def test_table_de_multiplication():
    target, sign = multiplication_table(2)
    assert target.shape == (3, 3)
    assert set(sign[target >= 0].tolist()) <= {-1, 1}
    assert int((target < 0).sum()) == 1


def test_base_de_murphy():
    for t in range(1, 5):
        basis = get_murphy_basis(t)
        assert len(basis.labels) == len(basis.permutations)
        # base sur Z : inversible dans toutes les caractéristiques
        for p in (0, 3):
            field = get_field(p)
            matrix = DenseMatrix.from_integers(field, basis.change_of_basis())
            assert rank(matrix) == len(basis.labels)


def test_module_cellulaire():
    field = get_field(0)
    basis = get_murphy_basis(3)
    lam = P((2, 1))
    identity = basis.cell_action(lam, (0, 1, 2), field)
    assert identity == DenseMatrix.identity(field, 2)
    s1 = basis.cell_action(lam, (1, 0, 2), field)
    assert s1 @ s1 == identity
    assert rank(basis.gram(lam, field)) == 2
    assert rank(basis.gram(lam, get_field(3))) == 1


def test_torsion_par_le_signe():
    for p in (0, 3):
        for lam in partitions_of(4):
            assert sign_twisted_action(4, lam, get_field(p))


def test_mullineux_par_torsion():
    assert mullineux_oracle(P((2, 1)), 3) == P((1, 1, 1))
    for size in range(1, 5):
        for lam in partitions_of(size):
            if is_p_restricted(lam, 3):
                assert mullineux_oracle(lam, 3) == mullineux(lam, 3)


@pytest.mark.slow
def test_mullineux_par_torsion_jusqu_a_6():
    for size in (5, 6):
        for lam in partitions_of(size):
            if is_p_restricted(lam, 3):
                assert mullineux_oracle(lam, 3) == mullineux(lam, 3), lam


def test_borne_de_murphy():
    saved = get_configuration()
    set_configuration(Configuration(murphy_max_t=2))
    try:
        with pytest.raises(ResourceError):
            MurphyBasis(3)
    finally:
        set_configuration(saved)


def test_base_standard():
    for p in (0, 3, 5):
        basis = standard_basis(3, p)
        assert len(basis.labels) == dimension(3)
        inverse(basis.matrix)
        assert basis.triangularity_violations() == []


def test_coordonnees_standard():
    basis = standard_basis(2, 0)
    for label in basis.labels:
        assert basis.coordinates(basis.element(label)) == {label: 1}


def test_centre():
    for p in (3, 5):
        field = get_field(p)
        elements = center(3, p).elements()
        assert elements
        for z in elements:
            for _, g in generators(3):
                x = AlgebraElement.from_diagram(g, field)
                assert z * x == x * z


def test_idempotents_centraux():
    for n, p, expected in ((3, 5, 2), (3, 3, 1), (3, 7, 2)):
        field = get_field(p)
        idempotents = central_idempotents(n, p)
        assert len(idempotents) == expected
        total = AlgebraElement.zero(n, field)
        for i, e in enumerate(idempotents):
            assert e * e == e
            for f in idempotents[i + 1:]:
                assert (e * f).is_zero
            total = total + e
        assert total == AlgebraElement.one(n, field)


if __name__ == "__main__":
    import sys
    from outils_tests import lancer_tests
    sys.exit(lancer_tests(dict(globals()), "TESTS DE L'ALGÈBRE A_n"))
