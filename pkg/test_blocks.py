"""
Tests de la classification des blocs, de l'oracle par idempotents centraux
et des propositions de liaison.
"""
import pytest

from blocks import (check_linkage_closure, check_p_core_linkage, check_transpose_symmetry,
                    check_two_hook_linkage, classify, eligible_staircases, kappa, linkage_closure, oracle,
                    single_block_bound, staircase_eligibility)
from errors import UnsupportedError, UsageError
from models import BlockDecomposition, Partition, Provenance
from partitions import enumerate_lambda, two_core

P = Partition


def as_sets(decomposition: BlockDecomposition):
    return {frozenset(block) for block in decomposition.blocks}


def test_classification_n3_p5():
    result = classify(3, 5)
    assert as_sets(result) == {frozenset({P((2, 1))}), frozenset({P((3,)), P((1, 1, 1)), P((1,))})}
    assert result.provenance is Provenance.CLASSIFIER
    assert "B(ρ_2)" in result.labels


def test_un_seul_bloc_en_petite_caracteristique():
    assert len(classify(3, 3).blocks) == 1
    for p in (3, 5, 7):
        for n in range(single_block_bound(p), 13):
            assert len(classify(n, p).blocks) == 1


def test_borne_d_un_seul_bloc():
    assert single_block_bound(3) == 2
    assert single_block_bound(5) == 4
    assert single_block_bound(7) == 7


def test_caracteristique_nulle():
    for n in range(0, 13):
        fibres = {}
        for lam in enumerate_lambda(n):
            fibres.setdefault(two_core(lam), set()).add(lam)
        assert as_sets(classify(n, 0)) == {frozenset(v) for v in fibres.values()}
    for p in (7, 11, 13):
        for n in range(0, p):
            assert classify(n, p).same_partition(classify(n, 0))


def test_escaliers_eligibles():
    record = staircase_eligibility(2, 3, 5)
    assert record.eligible
    assert record.to_dict()['eligible'] is True
    assert not staircase_eligibility(2, 3, 3).rim_condition
    assert not staircase_eligibility(2, 4, 5).in_lambda
    assert eligible_staircases(6, 7) == [3]
    assert eligible_staircases(3, 3) == []


def test_kappa():
    assert kappa(3) == P((1,))
    assert kappa(4) == P((1, 1))


def test_entrees_invalides():
    with pytest.raises(UnsupportedError):
        classify(3, 2)
    with pytest.raises(UsageError):
        classify(3, 9)
    with pytest.raises(UnsupportedError):
        oracle(3, 0)


def test_oracle_egal_classification():
    for n in range(2, 5):
        for p in (3, 5, 7):
            found = oracle(n, p)
            assert found.provenance is Provenance.ORACLE
            assert found.same_partition(classify(n, p)), (n, p)


@pytest.mark.slow
def test_oracle_egal_classification_n5():
    found = oracle(5, 3)
    assert found.provenance is Provenance.ORACLE
    assert found.same_partition(classify(5, 3))


def test_liaisons_sur_l_oracle():
    for n in range(2, 5):
        for p in (3, 5):
            decomposition = oracle(n, p)
            assert check_two_hook_linkage(n, p, decomposition) == []
            assert check_transpose_symmetry(n, p, decomposition) == []
            assert check_p_core_linkage(n, p, decomposition) == []


def test_liaisons_sur_la_classification():
    for n in range(2, 9):
        for p in (3, 5, 7):
            decomposition = classify(n, p)
            assert check_two_hook_linkage(n, p, decomposition) == []
            assert check_transpose_symmetry(n, p, decomposition) == []
            assert check_p_core_linkage(n, p, decomposition) == []
            assert check_linkage_closure(n, p) == []


def test_fermeture_des_liaisons():
    closure = linkage_closure(3, 5)
    assert closure.provenance is Provenance.LINKAGE
    assert as_sets(closure) == as_sets(classify(3, 5))
    # en caractéristique 0 seuls les dominos et la transposition relient
    assert as_sets(linkage_closure(4, 0)) == as_sets(classify(4, 0))


def test_serialisation():
    decomposition = classify(5, 7)
    assert BlockDecomposition.from_dict(decomposition.to_dict()) == decomposition


if __name__ == "__main__":
    import sys
    from outils_tests import lancer_tests
    sys.exit(lancer_tests(dict(globals()), "TESTS DES BLOCS"))
