"""
Générateurs de données aléatoires (graine fixe) pour les vérifications :
diagrammes, partitions, éléments de A_n, paires et triplets de diagrammes.
"""
import random
from typing import List, Optional, Tuple

from algebra import AlgebraElement
from linalg import Field
from models import BrauerDiagram, Partition
from partitions import partitions_of


def random_diagram(r: int, s: int, rng: random.Random) -> BrauerDiagram:
    """Diagramme (r, s) uniforme : appariement aléatoire des r + s nœuds."""
    nodes = list(range(1, r + s + 1))
    rng.shuffle(nodes)
    pairs = [(nodes[i], nodes[i + 1]) for i in range(0, len(nodes), 2)]
    return BrauerDiagram(r, s, tuple(pairs))


def random_partition(max_size: int, rng: random.Random, min_size: int = 0) -> Partition:
    """Partition de taille tirée uniformément dans [min_size, max_size]."""
    size = rng.randint(min_size, max_size)
    candidates = partitions_of(size)
    return candidates[rng.randrange(len(candidates))]


def random_element(n: int, field: Field, rng: random.Random, terms: int = 3) -> AlgebraElement:
    """Élément de A_n à `terms` diagrammes aléatoires et coefficients entiers dans [−3, 3]."""
    result = AlgebraElement.zero(n, field)
    for _ in range(terms):
        result = result + AlgebraElement.from_diagram(random_diagram(n, n, rng), field, rng.randint(-3, 3))
    return result


def random_pairs(n: int, count: int, seed: Optional[int] = 0) -> List[Tuple[BrauerDiagram, BrauerDiagram]]:
    rng = random.Random(seed)
    return [(random_diagram(n, n, rng), random_diagram(n, n, rng)) for _ in range(count)]


def random_triples(n: int, count: int,
                   seed: Optional[int] = 0) -> List[Tuple[BrauerDiagram, BrauerDiagram, BrauerDiagram]]:
    rng = random.Random(seed)
    return [(random_diagram(n, n, rng), random_diagram(n, n, rng), random_diagram(n, n, rng))
            for _ in range(count)]
