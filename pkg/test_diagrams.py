"""
Tests des diagrammes de Brauer : produit signé, deux calculs du signe,
anti-automorphisme φ, diagrammes ε, f, g et factorisation S1·w·S2^op.
"""
import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algebra import generators_span, perm_inverse
from data_generator import random_diagram, random_pairs
from diagrams import (assemble, compose_chain, compose_signed, concatenate, cup_cap, dimension, enumerate_I,
                      enumerate_diagrams, factorize, factorize_left, generators, simple_transposition,
                      special_diagrams, standard_marking, tensor_signed)
from errors import ConsistencyError, UsageError
from layers import (Generator, compose_via_layers, coxeter_length, decompose, evaluate_word, phi, word_pairs,
                    word_sign)
from models import ZERO, BrauerDiagram, Marker, SignedDiagram

CUP = BrauerDiagram(2, 0, ((1, 2),))
CAP = BrauerDiagram(0, 2, ((1, 2),))
CROSS = simple_transposition(2, 1)


def times(x: SignedDiagram, d: BrauerDiagram) -> SignedDiagram:
    """x·d pour un diagramme signé x."""
    if x.is_zero:
        return ZERO
    return compose_signed(x.diagram, d).times(x.sign)


def before(d: BrauerDiagram, x: SignedDiagram) -> SignedDiagram:
    """d·x pour un diagramme signé x."""
    if x.is_zero:
        return ZERO
    return compose_signed(d, x.diagram).times(x.sign)


def test_diagramme_invalide():
    with pytest.raises(UsageError):
        BrauerDiagram(2, 2, ((1, 2), (2, 3)))
    with pytest.raises(UsageError):
        BrauerDiagram(1, 2, ((1, 2),))


def test_enumerations():
    assert len(enumerate_diagrams(3, 3)) == 15
    assert len(enumerate_I(3, 1)) == 3
    assert len(enumerate_I(4, 2)) == 6
    for n in range(0, 5):
        assert len(enumerate_diagrams(n, n)) == dimension(n)
    assert dimension(5) == 945
    assert enumerate_diagrams(1, 2) == ()


def test_marquage_standard():
    d = BrauerDiagram(4, 4, ((1, 2), (3, 4), (5, 8), (6, 7)))
    markings = standard_marking(d).markings
    assert [edge for edge, _ in markings] == [(1, 2), (3, 4), (6, 7), (5, 8)]
    assert [m for _, m in markings] == [Marker.DIAMOND, Marker.DIAMOND, Marker.RIGHT_ARROW, Marker.RIGHT_ARROW]


def test_generateurs_elementaires():
    e = cup_cap(2, 1)
    identity = BrauerDiagram.identity(2)
    assert compose_signed(e, e) == ZERO
    assert compose_signed(CROSS, CROSS) == SignedDiagram(1, identity)
    assert compose_signed(CAP, CROSS) == SignedDiagram(-1, CAP)
    assert compose_signed(CROSS, CUP) == SignedDiagram(1, CUP)
    assert compose_signed(CUP, CAP) == SignedDiagram(1, e)
    assert compose_signed(CAP, CUP) == ZERO
    assert compose_signed(CROSS, CAP) == ZERO


def test_idempotents_speciaux():
    for size in range(3, 9):
        eps, g, f = special_diagrams(size)
        assert compose_signed(eps, eps) == SignedDiagram(1, eps)
        assert compose_signed(f, g) == SignedDiagram(1, BrauerDiagram.identity(size - 2))
        assert compose_signed(g, f) == SignedDiagram(1, eps)
    with pytest.raises(UsageError):
        special_diagrams(2)


def test_associativite_exhaustive_n3():
    basis = enumerate_diagrams(3, 3)
    for a, b, c in itertools.product(basis, repeat=3):
        assert times(compose_signed(a, b), c) == before(a, compose_signed(b, c))


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from([4, 5]))
def test_associativite_aleatoire(seed, n):
    rng = random.Random(seed)
    a, b, c = (random_diagram(n, n, rng) for _ in range(3))
    assert times(compose_signed(a, b), c) == before(a, compose_signed(b, c))


def test_deux_calculs_du_signe():
    for n in range(1, 4):
        basis = enumerate_diagrams(n, n)
        for a, b in itertools.product(basis, repeat=2):
            assert compose_signed(a, b) == compose_via_layers(a, b)
    for a, b in random_pairs(4, 500, seed=1):
        assert compose_signed(a, b) == compose_via_layers(a, b)


def test_decomposition_en_couches():
    for n in range(1, 4):
        for d in enumerate_diagrams(n, n):
            word = decompose(d)
            assert all(sum(gen is not Generator.I for gen in layer) == 1 for layer in word)
            pairs, s = word_pairs(word, n)
            assert BrauerDiagram(n, s, pairs) == d
            assert word_sign(word, d) == 1
    assert decompose(BrauerDiagram.identity(3)) == []
    assert decompose(CROSS) == [(Generator.X,)]
    assert decompose(cup_cap(2, 1)) == [(Generator.CUP,), (Generator.CAP,)]


def test_signes_par_couches():
    x, cup, cap = Generator.X, Generator.CUP, Generator.CAP
    I = Generator.I
    # ∩X = −∩, X∪ = ∪
    assert word_sign([(cap,), (x,)], CAP) == -1
    assert word_sign([(x,), (cup,)], CUP) == 1
    # deux caps échangés : signe de l'échange de couches impaires
    two_caps = BrauerDiagram(0, 4, ((1, 2), (3, 4)))
    assert word_sign([(cap,), (I, I, cap)], two_caps) == -word_sign([(cap,), (cap, I, I)], two_caps)
    # zigzags
    identity = BrauerDiagram.identity(1)
    assert word_sign([(I, cap), (cup, I)], identity) == -1
    assert word_sign([(cap, I), (I, cup)], identity) == 1
    # la boucle s'annule
    assert evaluate_word([(cap,), (cup,)], ()) == {}
    assert word_pairs([(cap,), (cup,)], 0) == (None, 0)
    with pytest.raises(UsageError):
        word_sign([(cap, cap)], two_caps)
    with pytest.raises(ConsistencyError):
        word_sign([(cap,)], CUP)


def test_couches_sur_les_diagrammes_speciaux():
    for size in range(3, 7):
        eps, g, f = special_diagrams(size)
        assert compose_via_layers(eps, eps) == SignedDiagram(1, eps)
        assert compose_via_layers(f, g) == SignedDiagram(1, BrauerDiagram.identity(size - 2))
        assert compose_via_layers(g, f) == SignedDiagram(1, eps)
    e = cup_cap(2, 1)
    assert compose_via_layers(e, e) == ZERO
    assert compose_via_layers(e, CROSS) == SignedDiagram(-1, e)
    assert compose_via_layers(CROSS, e) == SignedDiagram(1, e)


def test_produit_tensoriel():
    identity = BrauerDiagram.identity(1)
    assert tensor_signed(identity, identity) == SignedDiagram(1, BrauerDiagram.identity(2))
    assert tensor_signed(CUP, identity) == SignedDiagram(1, BrauerDiagram(3, 1, ((1, 2), (3, 4))))


def test_phi_sur_les_generateurs():
    assert phi(CROSS) == SignedDiagram(-1, CROSS)
    assert phi(CAP) == SignedDiagram(1, CUP)
    assert phi(CUP) == SignedDiagram(-1, CAP)
    e = cup_cap(2, 1)
    assert phi(e) == SignedDiagram(-1, e)


def test_phi_sur_les_permutations():
    for n in range(1, 5):
        for w in itertools.permutations(range(n)):
            d = BrauerDiagram.from_permutation(w)
            sign = -1 if coxeter_length(w) % 2 else 1
            assert phi(d) == SignedDiagram(sign, BrauerDiagram.from_permutation(perm_inverse(w)))
    # (1 2 3) est de longueur 2
    cycle = BrauerDiagram.from_permutation((1, 2, 0))
    assert phi(cycle) == SignedDiagram(1, BrauerDiagram.from_permutation((2, 0, 1)))


def test_phi_anti_multiplicatif():
    for n in range(2, 5):
        for a, b in random_pairs(n, 250, seed=n):
            left = compose_signed(a, b)
            if left.is_zero:
                continue
            image = phi(left.diagram).times(left.sign)
            pa, pb = phi(a), phi(b)
            right = compose_signed(pb.diagram, pa.diagram).times(pa.sign * pb.sign)
            assert image == right


def test_phi_involutif_au_signe_pres():
    for d in enumerate_diagrams(3, 3):
        first = phi(d)
        assert first.diagram == d.flip()
        assert phi(first.diagram).diagram == d


def test_factorisation():
    for n in range(1, 5):
        for d in enumerate_diagrams(n, n):
            s1, w, s2 = factorize(d)
            t = d.num_propagating
            assert s1 in enumerate_I(n, t)
            assert s2 in enumerate_I(n, t)
            assert sorted(w) == list(range(t))
            assert assemble(s1, w, s2) == d


def test_factorisation_a_gauche():
    for s in enumerate_I(4, 2):
        for w in itertools.permutations(range(2)):
            x = concatenate(s, BrauerDiagram.from_permutation(w))
            assert factorize_left(x) == (s, w)
    with pytest.raises(UsageError):
        factorize_left(cup_cap(2, 1))


def test_produit_en_chaine():
    eps, g, f = special_diagrams(4)
    assert compose_chain(g, f, g, f) == SignedDiagram(1, eps)
    assert compose_chain(cup_cap(2, 1), cup_cap(2, 1)) == ZERO


def test_generateurs_engendrent():
    assert [name for name, _ in generators(3)] == ["s1", "s2", "e1", "e2"]
    for n in range(1, 5):
        assert generators_span(n)


def test_serialisation_json():
    d = BrauerDiagram(3, 1, ((1, 4), (2, 3)))
    assert BrauerDiagram.from_dict(d.to_dict()) == d
    assert SignedDiagram(-1, d).to_dict()['sign'] == -1
    assert ZERO.to_dict() == {'zero': True}
    with pytest.raises(UsageError):
        BrauerDiagram.from_dict({'r': 1})


if __name__ == "__main__":
    import sys
    from outils_tests import lancer_tests
    sys.exit(lancer_tests(dict(globals()), "TESTS DES DIAGRAMMES ET DE LA RÈGLE DES SIGNES"))
