"""
Tests de la combinatoire des partitions : cœurs, escaliers, restriction,
tableaux, chemins et conjugaison de Mullineux.
"""
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from data_generator import random_partition
from errors import DomainError, UsageError
from models import Partition
from partitions import (dominance_leq, enumerate_lambda, enumerate_paths, hook_length, in_lambda,
                        initial_tableau, is_p_regular, is_p_restricted, mullineux, p_core, partitions_of,
                        path_vector, remove_rim_hooks, removable_rim_hooks, staircase, staircase_index,
                        standard_tableaux, tableau_count, transpose, two_core)

P = Partition


def test_lecture_des_partitions():
    assert Partition.parse("(4,4,2,1)") == P((4, 4, 2, 1))
    assert Partition.parse("3 1") == P((3, 1))
    assert Partition.parse("∅") == P()
    assert Partition.parse("()") == P()
    assert str(P((2, 1))) == "(2,1)"
    assert str(P()) == "∅"
    with pytest.raises(UsageError):
        Partition.parse("(1,2)")
    with pytest.raises(UsageError):
        Partition.parse("deux")


def test_transposee_et_dominance():
    assert transpose(P((4, 2, 1))) == P((3, 2, 1, 1))
    assert transpose(P()) == P()
    assert dominance_leq(P((2, 1)), P((3,)))
    assert not dominance_leq(P((3,)), P((2, 1)))
    # une partition plus grande est dominée
    assert dominance_leq(P((1, 1, 1)), P((1,)))
    assert not dominance_leq(P((2, 2)), P((3, 1, 1)))


def test_longueurs_de_crochet():
    lam = P((2, 1))
    assert hook_length(lam, (0, 0)) == 3
    assert hook_length(lam, (0, 1)) == 1
    assert [hook for hook, _ in removable_rim_hooks(lam, 3)] == [(0, 0)]


def test_p_coeur():
    assert p_core(P((4, 4, 2, 1)), 3) == P((1, 1))
    assert p_core(P((2, 1)), 3) == P()
    assert p_core(P((3, 1)), 3) == P((3, 1))
    assert two_core(P((2, 1))) == P((2, 1))
    assert two_core(P((2,))) == P()
    with pytest.raises(UsageError):
        p_core(P((1,)), 1)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from([2, 3, 5, 7]))
def test_p_coeur_independant_de_l_ordre_des_retraits(seed, p):
    rng = random.Random(seed)
    lam = random_partition(20, rng)
    core = p_core(lam, p)
    for _ in range(5):
        assert remove_rim_hooks(lam, p, rng) == core


def test_escaliers():
    assert staircase(3) == P((3, 2, 1))
    assert staircase_index(P((2, 1))) == 2
    assert staircase_index(P()) == 0
    assert staircase_index(P((2, 2))) is None
    for r in range(1, 6):
        assert two_core(staircase(r)) == staircase(r)


def test_restriction_et_regularite():
    assert is_p_restricted(P((3, 1)), 3)
    assert not is_p_restricted(P((4, 1)), 3)
    assert is_p_restricted(P((7,)), 0)
    assert is_p_regular(P((2, 2)), 3)
    assert not is_p_regular(P((1, 1, 1)), 3)
    for lam in partitions_of(7):
        assert is_p_restricted(lam, 3) == is_p_regular(transpose(lam), 3)


def test_ensemble_lambda():
    assert list(enumerate_lambda(3)) == [P((3,)), P((2, 1)), P((1, 1, 1)), P((1,))]
    assert len(enumerate_lambda(4)) == 8
    restricted = enumerate_lambda(4, 3, restricted_only=True)
    assert P() not in restricted
    assert P((4,)) not in restricted
    assert len(restricted) == 6
    assert in_lambda(P((1,)), 5)
    assert not in_lambda(P((2,)), 5)
    with pytest.raises(UsageError):
        enumerate_lambda(-1)


def test_tableaux_standard():
    assert tableau_count(P((2, 1))) == 2
    assert tableau_count(P((3, 2))) == 5
    for lam in partitions_of(5):
        tableaux = standard_tableaux(lam)
        assert len(tableaux) == tableau_count(lam)
        assert tableaux[0] == initial_tableau(lam)
    assert initial_tableau(P((2, 1))).rows == ((1, 2), (3,))


def test_chemins():
    assert len(enumerate_paths(3, P((1,)))) == 3
    assert len(enumerate_paths(2, P((2,)))) == 1
    for n in range(1, 6):
        for lam in enumerate_lambda(n):
            assert all(path.end == lam for path in enumerate_paths(n, lam))
    path = enumerate_paths(2, P((1, 1)))[0]
    assert path_vector(path, 0) == (-1,)
    assert path_vector(path, 3) == (2,)
    with pytest.raises(DomainError):
        enumerate_paths(3, P((2,)))


def test_mullineux_exemples():
    assert mullineux(P((2, 1)), 3) == P((1, 1, 1))
    assert mullineux(P((2, 2)), 3) == P((1, 1, 1, 1))
    assert mullineux(P((3, 1)), 0) == P((2, 1, 1))
    with pytest.raises(DomainError):
        mullineux(P((4,)), 3)


def test_mullineux_involution():
    for p in (3, 5, 7):
        for size in range(1, 9):
            for lam in partitions_of(size):
                if not is_p_restricted(lam, p):
                    continue
                image = mullineux(lam, p)
                assert is_p_restricted(image, p)
                assert image.size == lam.size
                assert mullineux(image, p) == lam


def test_mullineux_sur_les_coeurs():
    for p in (3, 5):
        for size in range(1, 9):
            for lam in partitions_of(size):
                if is_p_restricted(lam, p) and p_core(lam, p) == lam:
                    assert mullineux(lam, p) == transpose(lam)


if __name__ == "__main__":
    import sys
    from outils_tests import lancer_tests
    sys.exit(lancer_tests(dict(globals()), "TESTS DE LA COMBINATOIRE DES PARTITIONS"))
