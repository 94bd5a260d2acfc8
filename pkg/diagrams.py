"""
Diagrammes de Brauer et règle des signes de l'algèbre périplectique.

Conventions :
    - nœuds nord 1..r, sud r+1..r+s, de gauche à droite ;
    - dans un produit d1·d2, d1 est placé au-dessus de d2 ;
    - marquage standard : les cups (losanges) d'abord, par nœud gauche
      croissant, puis les caps (flèches droites) par nœud gauche décroissant ;
      l'ordre se lit de haut en bas ;
    - une flèche gauche vaut l'opposé de la flèche droite sur le même cap.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

from errors import ConsistencyError, UsageError
from models import ZERO, BrauerDiagram, MarkedDiagram, Marker, SignedDiagram

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Marquage standard
# ---------------------------------------------------------------------------

def standard_marking(d: BrauerDiagram) -> MarkedDiagram:
    """Marquage canonique de d (ordre total de haut en bas)."""
    cups = sorted(d.cups())
    caps = sorted(d.caps(), key=lambda edge: -edge[0])
    markings = tuple((edge, Marker.DIAMOND) for edge in cups)
    markings += tuple((edge, Marker.RIGHT_ARROW) for edge in caps)
    return MarkedDiagram(d, markings)


# ---------------------------------------------------------------------------
# Suivi des chemins dans une image empilée
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Segment:
    """Arc élémentaire d'une image ; une flèche droite pointe vers `b`."""
    a: Hashable
    b: Hashable
    marker: Optional[Marker] = None
    height: int = -1


@dataclass(frozen=True)
class TracedMarking:
    """Marque repérée sur un arc composé : position le long du chemin et sens."""
    edge: int
    position: int
    marker: Marker
    height: int
    direction: int = 0


@dataclass(frozen=True)
class Trace:
    """Arcs composés (orientés du plus petit nœud vers le plus grand) et leurs marques."""
    pairs: Tuple[Tuple[int, int], ...]
    markings: Tuple[TracedMarking, ...]


def trace_picture(segments: Sequence[Segment], boundary: Sequence[Hashable]) -> Optional[Trace]:
    """
    Suit chaque arc composé à partir de son extrémité de plus petit indice.

    Args:
        segments: arcs élémentaires de l'image
        boundary: boundary[k] est le nœud de l'image correspondant au nœud k+1

    Returns:
        la trace, ou None si l'image contient une boucle fermée
    """
    incident: Dict[Hashable, List[int]] = {}
    for index, segment in enumerate(segments):
        incident.setdefault(segment.a, []).append(index)
        incident.setdefault(segment.b, []).append(index)
    position_of = {node: k + 1 for k, node in enumerate(boundary)}

    used = set()
    finished = set()
    pairs = []
    markings = []
    for start in boundary:
        if start in finished:
            continue
        edge = len(pairs)
        node, previous, position = start, None, 0
        while True:
            following = [i for i in incident[node] if i != previous]
            if not following:
                raise UsageError(f"nœud {node!r} isolé dans l'image")
            index = following[0]
            segment = segments[index]
            used.add(index)
            forward = node == segment.a
            other = segment.b if forward else segment.a
            if segment.marker is Marker.DIAMOND:
                markings.append(TracedMarking(edge, position, Marker.DIAMOND, segment.height))
            elif segment.marker is not None:
                direction = 1 if forward else -1
                if segment.marker is Marker.LEFT_ARROW:
                    direction = -direction
                markings.append(TracedMarking(edge, position, Marker.RIGHT_ARROW, segment.height, direction))
            position += 1
            previous, node = index, other
            if node in position_of:
                break
        finished.update((start, node))
        pairs.append((position_of[start], position_of[node]))
    if len(used) != len(segments):
        return None
    return Trace(tuple(pairs), tuple(markings))


def _inversion_parity(sequence: Sequence[int]) -> int:
    count = 0
    for i in range(len(sequence)):
        for j in range(i + 1, len(sequence)):
            if sequence[i] > sequence[j]:
                count += 1
    return count % 2


def evaluate_trace(trace: Trace) -> int:
    """
    Signe d'une image marquée relativement à l'ordre canonique (arcs rangés par
    extrémité minimale, marques dans l'ordre du chemin) : sgn(σ)·Π directions.
    """
    canonical = sorted(trace.markings, key=lambda m: (min(trace.pairs[m.edge]), m.position))
    rank = {id(m): k for k, m in enumerate(canonical)}
    by_height = sorted(trace.markings, key=lambda m: m.height)
    sign = -1 if _inversion_parity([rank[id(m)] for m in by_height]) else 1
    for m in trace.markings:
        if m.marker is not Marker.DIAMOND:
            sign *= m.direction
    return sign


def standard_evaluation(d: BrauerDiagram) -> int:
    """Même signe pour le marquage standard de d."""
    order = [edge for edge, _ in standard_marking(d).markings]
    canonical = sorted(order)
    return -1 if _inversion_parity([canonical.index(edge) for edge in order]) else 1


# ---------------------------------------------------------------------------
# Composition signée
# ---------------------------------------------------------------------------

def _diagram_segments(d: BrauerDiagram, top: str, bottom: str, offset: int) -> List[Segment]:
    """Arcs de d entre les niveaux `top` et `bottom`, marques standard décalées de `offset`."""
    def node(k: int):
        return (top, k) if k <= d.r else (bottom, k - d.r)

    heights = {edge: offset + h for h, (edge, _) in enumerate(standard_marking(d).markings)}
    segments = []
    for a, b in d.pairs:
        if (a, b) in heights:
            marker = Marker.DIAMOND if b <= d.r else Marker.RIGHT_ARROW
            segments.append(Segment(node(a), node(b), marker, heights[(a, b)]))
        else:
            segments.append(Segment(node(a), node(b)))
    return segments


def concatenate(d1: BrauerDiagram, d2: BrauerDiagram) -> Optional[BrauerDiagram]:
    """Concaténation non signée d1 ⋆ d2 ; None si une boucle se ferme."""
    if d1.s != d2.r:
        raise UsageError(f"tailles incompatibles ({d1.r},{d1.s}) ⋆ ({d2.r},{d2.s})")
    segments = _diagram_segments(d1, 'N', 'M', 0) + _diagram_segments(d2, 'M', 'S', 0)
    boundary = [('N', k) for k in range(1, d1.r + 1)] + [('S', k) for k in range(1, d2.s + 1)]
    trace = trace_picture(segments, boundary)
    return None if trace is None else BrauerDiagram(d1.r, d2.s, trace.pairs)


def _normalisation_cost(trace: Trace, composite: BrauerDiagram) -> int:
    """
    γ : nombre de mouvements ramenant les marques empilées au marquage
    standard du composé (échanges adjacents, annulations losange-flèche,
    retournements de flèches gauches).
    """
    order = sorted(trace.markings, key=lambda m: m.height)
    by_edge: Dict[int, List[TracedMarking]] = {}
    for m in sorted(trace.markings, key=lambda m: m.position):
        by_edge.setdefault(m.edge, []).append(m)

    gamma = 0
    while True:
        best = None
        for edge, items in by_edge.items():
            for x, y in zip(items, items[1:]):
                if (x.marker is Marker.DIAMOND) == (y.marker is Marker.DIAMOND):
                    continue
                diamond, arrow = (x, y) if x.marker is Marker.DIAMOND else (y, x)
                gap = order.index(diamond) - order.index(arrow)
                if gap <= 0:
                    raise ConsistencyError("losange au-dessus de sa flèche voisine")
                key = (gap, order.index(arrow), edge)
                if best is None or key < best[0]:
                    best = (key, diamond, arrow)
        if best is None:
            break
        (gap, _, edge), diamond, arrow = best
        gamma += gap - 1
        toward = ((diamond.position > arrow.position and arrow.direction > 0)
                  or (diamond.position < arrow.position and arrow.direction < 0))
        if not toward:
            gamma += 1
        order.remove(diamond)
        order.remove(arrow)
        by_edge[edge] = [m for m in by_edge[edge] if m is not diamond and m is not arrow]

    gamma += sum(1 for m in order if m.marker is not Marker.DIAMOND and m.direction < 0)

    rank = {edge: k for k, (edge, _) in enumerate(standard_marking(composite).markings)}
    remaining = [trace.pairs[m.edge] for m in order]
    if sorted(remaining) != sorted(rank):
        raise ConsistencyError("marques résiduelles incompatibles avec le diagramme composé")
    gamma += _inversion_parity([rank[edge] for edge in remaining])
    return gamma


@lru_cache(maxsize=1 << 16)
def compose_signed(d1: BrauerDiagram, d2: BrauerDiagram) -> SignedDiagram:
    """
    d1·d2 = (−1)^γ d1 ⋆ d2 (d1 au-dessus), ou zéro si les tailles diffèrent
    ou si une boucle se ferme.
    """
    if d1.s != d2.r:
        return ZERO
    segments = _diagram_segments(d1, 'N', 'M', 0)
    segments += _diagram_segments(d2, 'M', 'S', len(standard_marking(d1).markings))
    boundary = [('N', k) for k in range(1, d1.r + 1)] + [('S', k) for k in range(1, d2.s + 1)]
    trace = trace_picture(segments, boundary)
    if trace is None:
        return ZERO
    composite = BrauerDiagram(d1.r, d2.s, trace.pairs)
    gamma = _normalisation_cost(trace, composite)
    return SignedDiagram(-1 if gamma % 2 else 1, composite)


def compose_chain(*diagrams: BrauerDiagram) -> SignedDiagram:
    """Produit signé d'une suite de diagrammes, de haut en bas."""
    result = SignedDiagram(1, diagrams[0])
    for d in diagrams[1:]:
        if result.is_zero:
            return ZERO
        result = compose_signed(result.diagram, d).times(result.sign)
    return result


def tensor_signed(d1: BrauerDiagram, d2: BrauerDiagram) -> SignedDiagram:
    """d1 ⊗ d2 = (d1 ⊗ I^{r′})·(I^{s} ⊗ d2)."""
    return compose_signed(d1.pad_right(d2.r), d2.pad_left(d1.s))


# ---------------------------------------------------------------------------
# Générateurs, diagrammes spéciaux, énumérations
# ---------------------------------------------------------------------------

def simple_transposition(n: int, i: int) -> BrauerDiagram:
    """s_i : croise les traits i et i+1."""
    w = list(range(n))
    w[i - 1], w[i] = w[i], w[i - 1]
    return BrauerDiagram.from_permutation(tuple(w))


def cup_cap(n: int, i: int) -> BrauerDiagram:
    """e_i : cup sur les nœuds nord i, i+1 et cap sur les nœuds sud i, i+1."""
    pairs = [(i, i + 1), (n + i, n + i + 1)]
    pairs += [(j, n + j) for j in range(1, n + 1) if j not in (i, i + 1)]
    return BrauerDiagram(n, n, tuple(pairs))


def generators(n: int) -> List[Tuple[str, BrauerDiagram]]:
    """Générateurs (s_1..s_{n−1}, e_1..e_{n−1}) de A_n, nommés."""
    result = [(f"s{i}", simple_transposition(n, i)) for i in range(1, n)]
    result += [(f"e{i}", cup_cap(n, i)) for i in range(1, n)]
    return result


def epsilon_diagram(size: int) -> BrauerDiagram:
    """ε_{n+2} pour size = n + 2."""
    if size < 3:
        raise UsageError(f"ε_N défini pour N ≥ 3 (reçu {size})")
    n = size - 2
    pairs = [(i, size + i) for i in range(1, n)]
    pairs += [(n, 2 * size), (size - 1, size), (size + n, size + n + 1)]
    return BrauerDiagram(size, size, tuple(pairs))


def g_diagram(n: int) -> BrauerDiagram:
    """g_{n+2,n} : n traits droits puis un cup sur les nœuds nord n+1, n+2."""
    pairs = [(i, n + 2 + i) for i in range(1, n + 1)] + [(n + 1, n + 2)]
    return BrauerDiagram(n + 2, n, tuple(pairs))


def f_diagram(n: int) -> BrauerDiagram:
    """f_{n,n+2} : n−1 traits droits, nord n relié au sud n+2, cap sur les nœuds sud n, n+1."""
    pairs = [(i, n + i) for i in range(1, n)]
    pairs += [(n, 2 * n + 2), (2 * n, 2 * n + 1)]
    return BrauerDiagram(n, n + 2, tuple(pairs))


def special_diagrams(size: int) -> Tuple[BrauerDiagram, BrauerDiagram, BrauerDiagram]:
    """(ε_N, g_{N,N−2}, f_{N−2,N}) pour N = size."""
    return epsilon_diagram(size), g_diagram(size - 2), f_diagram(size - 2)


def _matchings(nodes: Tuple[int, ...]):
    if not nodes:
        yield ()
        return
    first = nodes[0]
    for k in range(1, len(nodes)):
        rest = nodes[1:k] + nodes[k + 1:]
        for matching in _matchings(rest):
            yield ((first, nodes[k]),) + matching


@lru_cache(maxsize=None)
def enumerate_diagrams(r: int, s: int) -> Tuple[BrauerDiagram, ...]:
    """Tous les diagrammes (r, s), dans un ordre déterministe."""
    if (r + s) % 2:
        return ()
    return tuple(BrauerDiagram(r, s, m) for m in _matchings(tuple(range(1, r + s + 1))))


@lru_cache(maxsize=None)
def enumerate_I(n: int, t: int) -> Tuple[BrauerDiagram, ...]:
    """I(n, t) : diagrammes (n, t) à exactement t traits propagateurs sans croisement."""
    if t > n or (n - t) % 2:
        return ()
    result = []
    for props in combinations(range(1, n + 1), t):
        rest = tuple(k for k in range(1, n + 1) if k not in props)
        for cups in _matchings(rest):
            pairs = [(node, n + j + 1) for j, node in enumerate(props)] + list(cups)
            result.append(BrauerDiagram(n, t, tuple(pairs)))
    return tuple(result)


def dimension(n: int) -> int:
    """dim A_n = (2n − 1)!!."""
    result = 1
    for k in range(1, 2 * n, 2):
        result *= k
    return result


# ---------------------------------------------------------------------------
# Factorisation S1 · w · S2^op
# ---------------------------------------------------------------------------

def factorize_left(x: BrauerDiagram) -> Tuple[BrauerDiagram, Tuple[int, ...]]:
    """
    Écrit un diagramme (n, t) à t traits propagateurs comme S ⋆ Ψ(w) avec S ∈ I(n, t).
    """
    n, t = x.r, x.s
    props = x.propagating()
    if len(props) != t:
        raise UsageError(f"{x} n'a pas {t} traits propagateurs")
    pairs = list(x.cups()) + [(north, n + j + 1) for j, (north, _) in enumerate(props)]
    w = tuple(south - n - 1 for _, south in props)
    return BrauerDiagram(n, t, tuple(pairs)), w


def factorize(d: BrauerDiagram) -> Tuple[BrauerDiagram, Tuple[int, ...], BrauerDiagram]:
    """
    Décomposition unique d = S1 ⋆ Ψ(w) ⋆ S2^op avec S1, S2 ∈ I(n, t).
    """
    if d.r != d.s:
        raise UsageError("factorize attend un diagramme (n, n)")
    n = d.r
    props = d.propagating()
    t = len(props)
    north = [a for a, _ in props]
    south = sorted(b for _, b in props)
    s1 = BrauerDiagram(n, t, tuple(list(d.cups()) + [(a, n + j + 1) for j, a in enumerate(north)]))
    s2_pairs = [(a - n, b - n) for a, b in d.caps()] + [(b - n, n + k + 1) for k, b in enumerate(south)]
    s2 = BrauerDiagram(n, t, tuple(s2_pairs))
    w = tuple(south.index(b) for _, b in props)
    return s1, w, s2


def assemble(s1: BrauerDiagram, w: Tuple[int, ...], s2: BrauerDiagram) -> Optional[BrauerDiagram]:
    """Recomposition non signée S1 ⋆ Ψ(w) ⋆ S2^op."""
    middle = concatenate(s1, BrauerDiagram.from_permutation(w))
    return concatenate(middle, s2.flip()) if middle is not None else None
