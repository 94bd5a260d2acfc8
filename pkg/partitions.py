"""
Combinatoire des diagrammes de Young : ordre de dominance, contenus et
résidus, crochets de bord, p-cœurs, escaliers, partitions p-restreintes et
p-régulières, conjugaison de Mullineux, tableaux standard et chemins.
"""
import logging
import random
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from errors import DomainError, UsageError
from models import LambdaSet, Partition, PartitionPath, StandardTableau

logger = logging.getLogger(__name__)

EMPTY = Partition()


def transpose(lam: Partition) -> Partition:
    """Partition conjuguée λ^T (les colonnes deviennent des lignes)."""
    if not lam.parts:
        return EMPTY
    return Partition(tuple(sum(1 for row in lam.parts if row > j) for j in range(lam.parts[0])))


def dominance_leq(lam: Partition, mu: Partition) -> bool:
    """λ ⊴ μ : |λ| > |μ|, ou tailles égales et sommes partielles de λ majorées par celles de μ."""
    if lam.size != mu.size:
        return lam.size > mu.size
    a, b = lam.partial_sums(), mu.partial_sums()
    length = max(len(a), len(b))
    a = a + (lam.size,) * (length - len(a))
    b = b + (mu.size,) * (length - len(b))
    return all(x <= y for x, y in zip(a, b))


def content(box: Tuple[int, int]) -> int:
    i, j = box
    return j - i


def residue(box: Tuple[int, int], p: int) -> int:
    """Contenu réduit modulo p (contenu entier si p = 0)."""
    return content(box) % p if p else content(box)


def residue_grid(lam: Partition, p: int) -> List[List[int]]:
    return [[residue((i, j), p) for j in range(row)] for i, row in enumerate(lam.parts)]


def hook_length(lam: Partition, box: Tuple[int, int]) -> int:
    i, j = box
    return lam.part(i) - j + transpose(lam).part(j) - i - 1


# ---------------------------------------------------------------------------
# Crochets de bord et cœurs
# ---------------------------------------------------------------------------

def removable_rim_hooks(lam: Partition, p: int) -> List[Tuple[Tuple[int, int], Partition]]:
    """
    Crochets de bord de longueur p amovibles, sous la forme
    (case dont le crochet vaut p, partition obtenue après retrait).
    """
    result = []
    conjugate = transpose(lam)
    for i, j in lam.boxes():
        if hook_length(lam, (i, j)) != p:
            continue
        last = conjugate.part(j) - 1
        parts = list(lam.parts)
        for k in range(i, last):
            parts[k] = lam.part(k + 1) - 1
        parts[last] = j
        result.append(((i, j), Partition(tuple(x for x in parts if x > 0))))
    return result


def remove_rim_hooks(lam: Partition, p: int, rng: Optional[random.Random] = None) -> Partition:
    """Retrait littéral des crochets de bord de longueur p, dans un ordre aléatoire."""
    rng = rng or random.Random(0)
    current = lam
    while True:
        hooks = removable_rim_hooks(current, p)
        if not hooks:
            return current
        current = rng.choice(hooks)[1]


def p_core(lam: Partition, p: int) -> Partition:
    """p-cœur par la méthode de l'abaque (nombres bêta)."""
    if p < 2:
        raise UsageError(f"p-cœur défini pour p ≥ 2 (reçu {p})")
    k = len(lam)
    beads = {lam.parts[i] + (k - 1 - i) for i in range(k)}
    for runner in range(p):
        count = sum(1 for b in beads if b % p == runner)
        for b in [b for b in beads if b % p == runner]:
            beads.discard(b)
        beads.update(runner + p * level for level in range(count))
    ordered = sorted(beads, reverse=True)
    parts = [b - (k - 1 - i) for i, b in enumerate(ordered)]
    return Partition(tuple(x for x in parts if x > 0))


def two_core(lam: Partition) -> Partition:
    return p_core(lam, 2)


def staircase(r: int) -> Partition:
    """ρ_r = (r, r−1, ..., 1)."""
    return Partition(tuple(range(r, 0, -1)))


def staircase_index(lam: Partition) -> Optional[int]:
    """r si λ = ρ_r (0 pour ∅), sinon None."""
    r = len(lam)
    return r if lam == staircase(r) else None


def is_p_restricted(lam: Partition, p: int) -> bool:
    if p == 0:
        return True
    parts = lam.parts + (0,)
    return all(parts[i] - parts[i + 1] < p for i in range(len(lam)))


def is_p_regular(lam: Partition, p: int) -> bool:
    if p == 0:
        return True
    return all(lam.parts[i] != lam.parts[i + p - 1] for i in range(len(lam) - p + 1))


# ---------------------------------------------------------------------------
# Énumérations
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def partitions_of(t: int) -> Tuple[Partition, ...]:
    """Partitions de t, dans l'ordre lexicographique décroissant."""
    def generate(remaining: int, largest: int):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in generate(remaining - first, first):
                yield (first,) + rest
    return tuple(Partition(parts) for parts in generate(t, t))


def enumerate_lambda(n: int, p: int = 0, restricted_only: bool = False) -> LambdaSet:
    """
    Λ_n = {λ ⊢ t : 0 ≤ t ≤ n, n − t pair}, ou Λ′_n (λ p-restreinte, λ ≠ ∅ si n pair).
    """
    if n < 0:
        raise UsageError(f"n = {n} < 0")
    members = []
    for t in range(n, -1, -2):
        for lam in partitions_of(t):
            if restricted_only and (not is_p_restricted(lam, p) or (n % 2 == 0 and not lam.parts)):
                continue
            members.append(lam)
    return LambdaSet(n, tuple(members), p, restricted_only)


def in_lambda(lam: Partition, n: int) -> bool:
    return lam.size <= n and (n - lam.size) % 2 == 0


def initial_tableau(lam: Partition) -> StandardTableau:
    """t^λ : entrées 1..n écrites ligne par ligne."""
    rows, start = [], 1
    for row in lam.parts:
        rows.append(tuple(range(start, start + row)))
        start += row
    return StandardTableau(tuple(rows))


@lru_cache(maxsize=None)
def standard_tableaux(lam: Partition) -> Tuple[StandardTableau, ...]:
    """Tableaux standard de forme λ ; le premier est t^λ."""
    n = lam.size
    result = []

    def place(rows: List[List[int]], value: int):
        if value > n:
            result.append(StandardTableau(tuple(tuple(row) for row in rows)))
            return
        for i, row in enumerate(rows):
            if len(row) < lam.parts[i] and (i == 0 or len(rows[i - 1]) > len(row)):
                row.append(value)
                place(rows, value + 1)
                row.pop()

    place([[] for _ in lam.parts], 1)
    return tuple(result)


def tableau_count(lam: Partition) -> int:
    """f^λ par la formule des équerres."""
    numerator = 1
    for k in range(2, lam.size + 1):
        numerator *= k
    denominator = 1
    for box in lam.boxes():
        denominator *= hook_length(lam, box)
    return numerator // denominator


def _addable(lam: Partition) -> List[Tuple[int, int]]:
    result = []
    for i in range(len(lam) + 1):
        if lam.part(i) < lam.part(i - 1) or i == 0:
            result.append((i, lam.part(i)))
    return result


def _removable(lam: Partition) -> List[Tuple[int, int]]:
    return [(i, lam.part(i) - 1) for i in range(len(lam)) if lam.part(i) > lam.part(i + 1)]


def _with_box(lam: Partition, box: Tuple[int, int], add: bool) -> Partition:
    parts = list(lam.parts) + [0]
    parts[box[0]] += 1 if add else -1
    return Partition(tuple(x for x in parts if x > 0))


def _distance(lam: Partition, mu: Partition) -> int:
    a, b = set(lam.boxes()), set(mu.boxes())
    return len(a - b) + len(b - a)


def enumerate_paths(n: int, lam: Partition) -> List[PartitionPath]:
    """St_n(λ) : chemins (1) = 𝔱(1), ..., 𝔱(n) = λ."""
    if n < 1 or not in_lambda(lam, n):
        raise DomainError(f"{lam} n'appartient pas à Λ_{n}")
    result = []

    def extend(steps: List[Partition]):
        if len(steps) == n:
            if steps[-1] == lam:
                result.append(PartitionPath(tuple(steps)))
            return
        current = steps[-1]
        remaining = n - len(steps)
        moves = [(box, True) for box in _addable(current)] + [(box, False) for box in _removable(current)]
        for box, add in moves:
            following = _with_box(current, box, add)
            if _distance(following, lam) <= remaining - 1:
                steps.append(following)
                extend(steps)
                steps.pop()

    extend([Partition((1,))])
    return result


def path_vector(path: PartitionPath, p: int) -> Tuple[int, ...]:
    """c_𝔱(i) = res(b) si b est ajoutée, res(b) + 1 si b est retirée."""
    vector = []
    for before, after in zip(path.steps, path.steps[1:]):
        if after.size > before.size:
            box = (set(after.boxes()) - set(before.boxes())).pop()
            vector.append(residue(box, p))
        else:
            box = (set(before.boxes()) - set(after.boxes())).pop()
            value = content(box) + 1
            vector.append(value % p if p else value)
    return tuple(vector)


# ---------------------------------------------------------------------------
# Conjugaison de Mullineux
# ---------------------------------------------------------------------------

def _rim_sequence(lam: Partition) -> List[Tuple[int, int]]:
    """Cases du bord, du coin supérieur droit vers le bas à gauche."""
    boxes = []
    for i in range(len(lam)):
        low = max(lam.part(i + 1) - 1, 0)
        boxes.extend((i, j) for j in range(lam.part(i) - 1, low - 1, -1))
    return boxes


def p_rim(lam: Partition, p: int) -> List[Tuple[int, int]]:
    """
    p-bord : segments de p cases du bord, chacun commençant dans la ligne
    située sous la dernière case du segment précédent.
    """
    rim = _rim_sequence(lam)
    selected = []
    index = 0
    while index < len(rim):
        segment = rim[index:index + p]
        selected.extend(segment)
        next_row = segment[-1][0] + 1
        index = next((k for k in range(index + len(segment), len(rim)) if rim[k][0] >= next_row), len(rim))
    return selected


def mullineux_symbol(lam: Partition, p: int) -> Tuple[Tuple[int, int], ...]:
    """Colonnes (taille du p-bord, nombre de lignes) des retraits successifs du p-bord."""
    symbol = []
    current = lam
    while current.parts:
        rim = set(p_rim(current, p))
        symbol.append((len(rim), len(current)))
        parts = [sum(1 for j in range(row) if (i, j) not in rim) for i, row in enumerate(current.parts)]
        current = Partition(tuple(x for x in parts if x > 0))
    return tuple(symbol)


@lru_cache(maxsize=None)
def _regular_symbols(size: int, p: int) -> Dict[Tuple[Tuple[int, int], ...], Partition]:
    table = {}
    for mu in partitions_of(size):
        if is_p_regular(mu, p):
            table[mullineux_symbol(mu, p)] = mu
    return table


def _mullineux_regular(mu: Partition, p: int) -> Partition:
    """Application de Mullineux sur les partitions p-régulières."""
    image = []
    for a, r in mullineux_symbol(mu, p):
        epsilon = 0 if a % p == 0 else 1
        image.append((a, a - r + epsilon))
    target = _regular_symbols(mu.size, p).get(tuple(image))
    if target is None:
        raise DomainError(f"symbole de Mullineux sans partition pour {mu} (p = {p})")
    return target


def mullineux(lam: Partition, p: int) -> Partition:
    """
    Conjuguée de Mullineux λ^M d'une partition p-restreinte
    (D^λ ⊗ sgn ≅ D^{λ^M}) ; λ^T en caractéristique 0.
    """
    if not is_p_restricted(lam, p):
        raise DomainError(f"{lam} n'est pas {p}-restreinte")
    if p == 0:
        return transpose(lam)
    return transpose(_mullineux_regular(transpose(lam), p))
