"""
Décomposition des diagrammes en couches élémentaires (I, X, ∪, ∩) et second
calcul du signe d'un produit, indépendant des marquages.

Chaque mot est évalué dans la super-représentation V = k^{1|1} : X agit par
l'échange super-symétrique, ∪ (pair → 0) par la forme impaire
⟨e0, e1⟩ = ⟨e1, e0⟩ = 1, ∩ (0 → paire) par 1 ↦ e0⊗e1 − e1⊗e0. Une couche
1^k ⊗ g ⊗ 1^m applique g avec le signe de Koszul (−1)^{|g|·|x|}, x étant la
partie gauche du vecteur : c'est l'échange des couches impaires. La boucle
vaut ⟨e0, e1⟩ − ⟨e1, e0⟩ = 0.

Sert aussi à définir l'anti-automorphisme φ.
"""
import logging
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from errors import ConsistencyError, UsageError
from models import ZERO, BrauerDiagram, SignedDiagram

logger = logging.getLogger(__name__)

Bits = Tuple[int, ...]
Vector = Dict[Bits, int]


class Generator(Enum):
    """Générateurs monoïdaux ; la valeur est (entrées, sorties, parité)."""
    I = (1, 1, 0)
    X = (2, 2, 0)
    CUP = (2, 0, 1)
    CAP = (0, 2, 1)

    @property
    def inputs(self) -> int:
        return self.value[0]

    @property
    def outputs(self) -> int:
        return self.value[1]

    @property
    def odd(self) -> bool:
        return bool(self.value[2])

    def flipped(self) -> 'Generator':
        return {Generator.CUP: Generator.CAP, Generator.CAP: Generator.CUP}.get(self, self)


Layer = Tuple[Generator, ...]
Word = List[Layer]


def _single_layer(width: int, position: int, gen: Generator) -> Layer:
    """g sur les brins position.. ; identité ailleurs (`width` brins en entrée)."""
    return (Generator.I,) * position + (gen,) + (Generator.I,) * (width - position - gen.inputs)


def _crossing_layer(width: int, i: int) -> Layer:
    """X sur les positions i, i+1 (à partir de 0)."""
    return _single_layer(width, i, Generator.X)


def _bubble_sort(labels: List[int], rank) -> Word:
    """Couches X réalisant le tri à bulles de `labels` selon `rank`."""
    labels = list(labels)
    word = []
    changed = True
    while changed:
        changed = False
        for i in range(len(labels) - 1):
            if rank(labels[i]) > rank(labels[i + 1]):
                labels[i], labels[i + 1] = labels[i + 1], labels[i]
                word.append(_crossing_layer(len(labels), i))
                changed = True
    return word


def decompose(d: BrauerDiagram) -> Word:
    """
    Mot de d, un générateur par couche, de haut en bas : les cups par nœud
    gauche croissant (chaque extrémité droite amenée contre la gauche), les
    caps par nœud gauche décroissant ajoutés à droite, puis la permutation
    du bas. Les jambes d'un cap ne se croisent jamais. Les couches identité
    sont omises.
    """
    word = []
    current = list(range(1, d.r + 1))
    for a, b in sorted(d.cups()):
        i, j = current.index(a), current.index(b)
        while j > i + 1:
            word.append(_crossing_layer(len(current), j - 1))
            current[j - 1], current[j] = current[j], current[j - 1]
            j -= 1
        word.append(_single_layer(len(current), i, Generator.CUP))
        del current[i:i + 2]

    partner = dict(d.propagating())
    current = [partner[a] for a in current]
    for a, b in sorted(d.caps(), key=lambda edge: -edge[0]):
        word.append(_single_layer(len(current), len(current), Generator.CAP))
        current += [a, b]

    word += _bubble_sort(current, lambda node: node)
    return word


def _step(layer: Layer) -> Tuple[Optional[Generator], int]:
    """Générateur non trivial de la couche et sa position."""
    moving = [(k, gen) for k, gen in enumerate(layer) if gen is not Generator.I]
    if not moving:
        return None, 0
    if len(moving) > 1:
        raise UsageError(f"couche {layer} : un seul générateur non trivial par couche")
    k, gen = moving[0]
    return gen, k


def _check_widths(word: Word, r: int) -> int:
    width = r
    for layer in word:
        if sum(gen.inputs for gen in layer) != width:
            raise ConsistencyError(f"couche {layer} incompatible avec la largeur {width}")
        width = sum(gen.outputs for gen in layer)
    return width


# ---------------------------------------------------------------------------
# Appariement d'un mot
# ---------------------------------------------------------------------------

def word_pairs(word: Word, r: int) -> Tuple[Optional[Tuple[Tuple[int, int], ...]], int]:
    """
    Appariement des nœuds de l'image du mot (nord 1..r, sud r+1..r+s) ;
    None si une boucle se ferme.
    """
    s = _check_widths(word, r)
    links: Dict[object, List[object]] = {}

    def link(x, y):
        links.setdefault(x, []).append(y)
        links.setdefault(y, []).append(x)

    current: List[object] = [('n', k) for k in range(1, r + 1)]
    fresh = 0
    for layer in word:
        gen, k = _step(layer)
        if gen is Generator.X:
            current[k], current[k + 1] = current[k + 1], current[k]
        elif gen is Generator.CUP:
            link(current[k], current[k + 1])
            del current[k:k + 2]
        elif gen is Generator.CAP:
            u, v = ('c', fresh), ('c', fresh + 1)
            fresh += 2
            link(u, v)
            current[k:k] = [u, v]
    for j, end in enumerate(current):
        link(end, ('s', j + 1))

    def number(node) -> int:
        return node[1] if node[0] == 'n' else r + node[1]

    seen = set()
    pairs = []
    for start in [('n', k) for k in range(1, r + 1)] + [('s', j) for j in range(1, s + 1)]:
        if start in seen:
            continue
        previous, node = None, start
        seen.add(node)
        while True:
            following = [x for x in links[node] if x != previous] or links[node]
            previous, node = node, following[0]
            seen.add(node)
            if node[0] in ('n', 's'):
                break
        pairs.append((number(start), number(node)))
    if len(seen) != len(links):
        return None, s
    return tuple(pairs), s


# ---------------------------------------------------------------------------
# Évaluation dans V^{⊗k}
# ---------------------------------------------------------------------------

def _apply_layer(state: Vector, layer: Layer) -> Vector:
    gen, k = _step(layer)
    if gen is None:
        return state
    result: Vector = {}

    def add(bits: Bits, coeff: int):
        total = result.get(bits, 0) + coeff
        if total:
            result[bits] = total
        else:
            result.pop(bits, None)

    for bits, coeff in state.items():
        koszul = -coeff if gen.odd and sum(bits[:k]) % 2 else coeff
        if gen is Generator.X:
            swapped = bits[:k] + (bits[k + 1], bits[k]) + bits[k + 2:]
            add(swapped, -coeff if bits[k] and bits[k + 1] else coeff)
        elif gen is Generator.CUP:
            if bits[k] != bits[k + 1]:
                add(bits[:k] + bits[k + 2:], koszul)
        else:
            add(bits[:k] + (0, 1) + bits[k:], koszul)
            add(bits[:k] + (1, 0) + bits[k:], -koszul)
    return result


def evaluate_word(word: Word, bits: Bits) -> Vector:
    """Image du vecteur de base e_bits par le mot."""
    state: Vector = {tuple(bits): 1}
    for layer in word:
        state = _apply_layer(state, layer)
        if not state:
            break
    return state


def _test_vector(d: BrauerDiagram) -> Bits:
    """Vecteur sur lequel l'image de d est non nulle : e0 ⊗ e1 sur chaque cup."""
    bits = [0] * d.r
    for _, b in d.cups():
        bits[b - 1] = 1
    return tuple(bits)


def word_sign(word: Word, d: BrauerDiagram) -> int:
    """
    s(W) : l'image du mot vaut s(W) fois l'élément de base d.

    Raises:
        ConsistencyError: le mot ne reproduit pas d
    """
    pairs, s = word_pairs(word, d.r)
    if pairs is None or BrauerDiagram(d.r, s, pairs) != d:
        raise ConsistencyError(f"le mot ne reproduit pas {d}")
    v = _test_vector(d)
    image = evaluate_word(word, v)
    reference = evaluate_word(decompose(d), v)
    if image == reference:
        return 1
    if image == {bits: -c for bits, c in reference.items()}:
        return -1
    raise ConsistencyError(f"image du mot non proportionnelle à {d}")


def compose_via_layers(d1: BrauerDiagram, d2: BrauerDiagram) -> SignedDiagram:
    """d1·d2 calculé en empilant les mots des deux facteurs."""
    if d1.s != d2.r:
        return ZERO
    word = decompose(d1) + decompose(d2)
    pairs, s = word_pairs(word, d1.r)
    if pairs is None:
        return ZERO
    composite = BrauerDiagram(d1.r, s, pairs)
    return SignedDiagram(word_sign(word, composite), composite)


def _count(word: Word, kinds: Sequence[Generator]) -> int:
    return sum(1 for layer in word for gen in layer if gen in kinds)


def phi(d: BrauerDiagram) -> SignedDiagram:
    """
    Anti-automorphisme φ : φ(X) = −X, φ(∩) = ∪, φ(∪) = −∩, φ(ab) = φ(b)φ(a).
    Le diagramme image est le retourné vertical de d.
    """
    word = decompose(d)
    sign = -1 if _count(word, (Generator.X, Generator.CUP)) % 2 else 1
    mirrored = [tuple(gen.flipped() for gen in layer) for layer in reversed(word)]
    return SignedDiagram(sign * word_sign(mirrored, d.flip()), d.flip())


def coxeter_length(w: Tuple[int, ...]) -> int:
    """Nombre d'inversions de w."""
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])
