"""
Modèles de données : partitions, tableaux, diagrammes de Brauer, blocs.
"""
from dataclasses import dataclass, field
from enum import Enum
from itertools import accumulate
from typing import Any, Dict, Iterator, List, Optional, Tuple

from errors import UsageError


# ---------------------------------------------------------------------------
# Partitions et tableaux
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Partition:
    """Partition d'un entier : parts décroissantes strictement positives."""
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if any(x <= 0 for x in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise UsageError(f"{list(self.parts)} n'est pas une partition")
        object.__setattr__(self, 'parts', parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def part(self, i: int) -> int:
        """λ_i (indice à partir de 0), nul au-delà de la longueur."""
        return self.parts[i] if 0 <= i < len(self.parts) else 0

    def boxes(self) -> List[Tuple[int, int]]:
        """Cases (ligne, colonne) indexées à partir de 0."""
        return [(i, j) for i, row in enumerate(self.parts) for j in range(row)]

    def partial_sums(self) -> Tuple[int, ...]:
        return tuple(accumulate(self.parts))

    def dominance_key(self) -> Tuple[Any, ...]:
        """Clé d'un ordre total qui prolonge ⊴ (taille décroissante puis sommes partielles)."""
        return (-self.size, self.partial_sums())

    def to_list(self) -> List[int]:
        return list(self.parts)

    @staticmethod
    def from_list(data: List[int]) -> 'Partition':
        return Partition(tuple(data))

    @staticmethod
    def parse(text: str) -> 'Partition':
        """Lit "(4,4,2,1)", "4,4,2,1", "4 4 2 1", "()" ou "∅"."""
        cleaned = text.strip().strip('()[]').replace(' ', ',')
        if cleaned in ('', '∅'):
            return Partition()
        try:
            return Partition(tuple(int(x) for x in cleaned.split(',') if x))
        except ValueError:
            raise UsageError(f"partition illisible: {text!r}")

    def __str__(self) -> str:
        if not self.parts:
            return "∅"
        return "(" + ",".join(str(x) for x in self.parts) + ")"


@dataclass(frozen=True)
class StandardTableau:
    """Tableau standard : entrées 1..n croissantes le long des lignes et des colonnes."""
    rows: Tuple[Tuple[int, ...], ...]

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(row) for row in self.rows))

    def entry(self, i: int, j: int) -> int:
        return self.rows[i][j]

    def position(self, value: int) -> Tuple[int, int]:
        for i, row in enumerate(self.rows):
            if value in row:
                return i, row.index(value)
        raise UsageError(f"{value} absent du tableau")

    def to_list(self) -> List[List[int]]:
        return [list(row) for row in self.rows]

    def __str__(self) -> str:
        return "/".join(",".join(str(x) for x in row) for row in self.rows)


@dataclass(frozen=True)
class PartitionPath:
    """Chemin de partitions 𝔱(1) = (1), ..., 𝔱(n) : une case ajoutée ou retirée à chaque pas."""
    steps: Tuple[Partition, ...]

    @property
    def end(self) -> Partition:
        return self.steps[-1]

    def to_list(self) -> List[List[int]]:
        return [step.to_list() for step in self.steps]


@dataclass(frozen=True)
class LambdaSet:
    """Λ_n (ou Λ′_n si `restricted`) : λ ⊢ t avec 0 ≤ t ≤ n et n − t pair."""
    n: int
    members: Tuple[Partition, ...]
    p: int = 0
    restricted: bool = False

    def __iter__(self) -> Iterator[Partition]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, item: object) -> bool:
        return item in self.members


# ---------------------------------------------------------------------------
# Diagrammes de Brauer
# ---------------------------------------------------------------------------

class Marker(Enum):
    """Marques portées par les arcs d'un diagramme marqué."""
    DIAMOND = "losange"
    LEFT_ARROW = "flèche gauche"
    RIGHT_ARROW = "flèche droite"


@dataclass(frozen=True, order=True)
class BrauerDiagram:
    """
    Diagramme de Brauer (r, s) : appariement parfait des nœuds nord 1..r
    (gauche à droite) et sud r+1..r+s (gauche à droite).
    """
    r: int
    s: int
    pairs: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple(sorted(tuple(sorted(pair)) for pair in self.pairs))
        nodes = [x for pair in pairs for x in pair]
        if (self.r + self.s) % 2 or sorted(nodes) != list(range(1, self.r + self.s + 1)):
            raise UsageError(f"appariement invalide pour un diagramme ({self.r},{self.s}): {pairs}")
        object.__setattr__(self, 'pairs', pairs)

    # --- requêtes -------------------------------------------------------

    def is_north(self, node: int) -> bool:
        return node <= self.r

    def partner_map(self) -> Dict[int, int]:
        result = {}
        for a, b in self.pairs:
            result[a] = b
            result[b] = a
        return result

    def cups(self) -> List[Tuple[int, int]]:
        """Arcs nord-nord."""
        return [pair for pair in self.pairs if pair[1] <= self.r]

    def caps(self) -> List[Tuple[int, int]]:
        """Arcs sud-sud."""
        return [pair for pair in self.pairs if pair[0] > self.r]

    def propagating(self) -> List[Tuple[int, int]]:
        """Traits propagateurs (nord, sud), triés par nœud nord."""
        return [pair for pair in self.pairs if pair[0] <= self.r < pair[1]]

    @property
    def num_propagating(self) -> int:
        return len(self.propagating())

    def is_permutation(self) -> bool:
        return self.r == self.s and self.num_propagating == self.r

    def permutation(self) -> Tuple[int, ...]:
        """w avec nord i -> sud w[i] (indices à partir de 0), pour un diagramme de permutation."""
        if not self.is_permutation():
            raise UsageError("le diagramme n'est pas une permutation")
        return tuple(b - self.r - 1 for _, b in self.propagating())

    # --- constructions --------------------------------------------------

    @staticmethod
    def identity(n: int) -> 'BrauerDiagram':
        return BrauerDiagram(n, n, tuple((i, n + i) for i in range(1, n + 1)))

    @staticmethod
    def from_permutation(w: Tuple[int, ...]) -> 'BrauerDiagram':
        """Ψ(w) : nord i relié au sud w[i] (indices à partir de 0)."""
        n = len(w)
        return BrauerDiagram(n, n, tuple((i + 1, n + w[i] + 1) for i in range(n)))

    def flip(self) -> 'BrauerDiagram':
        """Symétrie verticale : diagramme (s, r)."""
        def image(node: int) -> int:
            return node + self.s if node <= self.r else node - self.r
        return BrauerDiagram(self.s, self.r, tuple((image(a), image(b)) for a, b in self.pairs))

    def pad_right(self, k: int) -> 'BrauerDiagram':
        """d ⊗ I^k."""
        r, s = self.r, self.s

        def image(node: int) -> int:
            return node if node <= r else node + k
        pairs = [(image(a), image(b)) for a, b in self.pairs]
        pairs += [(r + i, r + k + s + i) for i in range(1, k + 1)]
        return BrauerDiagram(r + k, s + k, tuple(pairs))

    def pad_left(self, k: int) -> 'BrauerDiagram':
        """I^k ⊗ d."""
        r, s = self.r, self.s

        def image(node: int) -> int:
            return node + k if node <= r else node + 2 * k
        pairs = [(image(a), image(b)) for a, b in self.pairs]
        pairs += [(i, r + k + i) for i in range(1, k + 1)]
        return BrauerDiagram(r + k, s + k, tuple(pairs))

    # --- sérialisation --------------------------------------------------

    def to_dict(self) -> Dict[str, Any]:
        return {'r': self.r, 's': self.s, 'pairs': [list(pair) for pair in self.pairs]}

    @staticmethod
    def from_dict(data: Dict[str, Any]) -> 'BrauerDiagram':
        try:
            return BrauerDiagram(int(data['r']), int(data['s']), tuple(tuple(p) for p in data['pairs']))
        except (KeyError, TypeError, ValueError) as e:
            raise UsageError(f"diagramme JSON invalide: {e}")

    def to_ascii(self) -> str:
        """Deux lignes : chaque arc reçoit une lettre, répétée à ses deux extrémités."""
        letters = {}
        for index, (a, b) in enumerate(self.pairs):
            letter = chr(ord('a') + index % 26)
            letters[a] = letter
            letters[b] = letter
        north = " ".join(letters[i] for i in range(1, self.r + 1))
        south = " ".join(letters[self.r + j] for j in range(1, self.s + 1))
        return f"N: {north}\nS: {south}"

    def __str__(self) -> str:
        body = " ".join(f"{a}-{b}" for a, b in self.pairs)
        return f"[{self.r},{self.s}: {body}]"


@dataclass(frozen=True)
class MarkedDiagram:
    """Diagramme dont les cups portent un losange et les caps une flèche, dans un ordre total."""
    base: BrauerDiagram
    markings: Tuple[Tuple[Tuple[int, int], Marker], ...]

    def __post_init__(self):
        marked = {edge for edge, _ in self.markings}
        expected = set(self.base.cups()) | set(self.base.caps())
        if marked != expected or len(marked) != len(self.markings):
            raise UsageError("chaque cup et chaque cap porte exactement une marque")
        for edge, marker in self.markings:
            is_cup = edge[1] <= self.base.r
            if is_cup != (marker is Marker.DIAMOND):
                raise UsageError(f"marque {marker.value} incompatible avec l'arc {edge}")


@dataclass(frozen=True)
class SignedDiagram:
    """±d ou le zéro distingué."""
    sign: int = 0
    diagram: Optional[BrauerDiagram] = None

    @property
    def is_zero(self) -> bool:
        return self.diagram is None

    def negate(self) -> 'SignedDiagram':
        return SignedDiagram(-self.sign, self.diagram) if self.diagram else self

    def times(self, sign: int) -> 'SignedDiagram':
        return SignedDiagram(self.sign * sign, self.diagram) if self.diagram else self

    def to_dict(self) -> Dict[str, Any]:
        if self.is_zero:
            return {'zero': True}
        data = self.diagram.to_dict()
        data['sign'] = self.sign
        return data

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return ("+" if self.sign > 0 else "-") + str(self.diagram)


ZERO = SignedDiagram()


# ---------------------------------------------------------------------------
# Blocs
# ---------------------------------------------------------------------------

class Provenance(Enum):
    """Origine d'une décomposition en blocs."""
    CLASSIFIER = "classifier"
    ORACLE = "oracle"
    LINKAGE = "linkage"


@dataclass(frozen=True)
class BlockDecomposition:
    """Partition de Λ_n en blocs disjoints."""
    n: int
    p: int
    blocks: Tuple[Tuple[Partition, ...], ...]
    provenance: Provenance
    labels: Tuple[str, ...] = ()

    def __post_init__(self):
        ordered = [tuple(sorted(block, key=Partition.dominance_key)) for block in self.blocks]
        order = sorted(range(len(ordered)), key=lambda i: ordered[i][0].dominance_key())
        object.__setattr__(self, 'blocks', tuple(ordered[i] for i in order))
        if self.labels:
            object.__setattr__(self, 'labels', tuple(self.labels[i] for i in order))
        members = [lam for block in self.blocks for lam in block]
        if len(members) != len(set(members)):
            raise UsageError("blocs non disjoints")

    def as_set_partition(self) -> frozenset:
        return frozenset(frozenset(block) for block in self.blocks)

    def same_partition(self, other: 'BlockDecomposition') -> bool:
        return self.as_set_partition() == other.as_set_partition()

    def block_of(self, lam: Partition) -> int:
        for index, block in enumerate(self.blocks):
            if lam in block:
                return index
        raise UsageError(f"{lam} n'appartient à aucun bloc")

    def to_dict(self) -> Dict[str, Any]:
        data = {
            'n': self.n,
            'p': self.p,
            'provenance': self.provenance.value,
            'blocks': [[lam.to_list() for lam in block] for block in self.blocks],
        }
        if self.labels:
            data['labels'] = list(self.labels)
        return data

    @staticmethod
    def from_dict(data: Dict[str, Any]) -> 'BlockDecomposition':
        return BlockDecomposition(
            n=data['n'],
            p=data['p'],
            blocks=tuple(tuple(Partition.from_list(x) for x in block) for block in data['blocks']),
            provenance=Provenance(data['provenance']),
            labels=tuple(data.get('labels', ())),
        )


@dataclass(frozen=True)
class StaircaseEligibility:
    """Conditions sur r pour que ρ_r forme un bloc à part."""
    r: int
    n: int
    p: int
    rim_condition: bool      # 2r − 1 < p
    degree_condition: bool   # r(r+1)/2 + p − 2r > n
    in_lambda: bool          # r(r+1)/2 ≤ n, même parité que n

    @property
    def eligible(self) -> bool:
        return self.r >= 2 and self.rim_condition and self.degree_condition and self.in_lambda

    def to_dict(self) -> Dict[str, Any]:
        return {
            'r': self.r, 'n': self.n, 'p': self.p,
            'rim_condition': self.rim_condition,
            'degree_condition': self.degree_condition,
            'in_lambda': self.in_lambda,
            'eligible': self.eligible,
        }
