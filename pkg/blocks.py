"""
Blocs de A_n : classification fermée (p impair ou caractéristique 0),
oracle par idempotents centraux primitifs, et vérifications de liaison.
"""
import logging
from typing import Dict, List, Optional, Tuple

from algebra import central_idempotents
from config import get_configuration
from errors import ConsistencyError, UnsupportedError
from linalg import get_field
from models import BlockDecomposition, Partition, Provenance, StaircaseEligibility
from modules import block_indicator, standard_module
from partitions import enumerate_lambda, p_core, removable_rim_hooks, staircase, transpose, two_core

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------

def staircase_eligibility(r: int, n: int, p: int) -> StaircaseEligibility:
    """Les trois conditions portant sur ρ_r pour A_n en caractéristique p."""
    size = r * (r + 1) // 2
    return StaircaseEligibility(
        r=r, n=n, p=p,
        rim_condition=2 * r - 1 < p,
        degree_condition=size + p - 2 * r > n,
        in_lambda=size <= n and (n - size) % 2 == 0,
    )


def eligible_staircases(n: int, p: int) -> List[int]:
    """Valeurs r ≥ 2 pour lesquelles B(ρ_r) est un bloc à part."""
    result = []
    r = 2
    while r * (r + 1) // 2 <= n:
        if staircase_eligibility(r, n, p).eligible:
            result.append(r)
        r += 1
    return result


def single_block_bound(p: int) -> int:
    """⌈(p² + 7)/8⌉ : à partir de ce n il n'y a qu'un bloc."""
    return (p * p + 7 + 7) // 8


def kappa(n: int) -> Partition:
    return Partition((1,)) if n % 2 else Partition((1, 1))


def classify(n: int, p: int) -> BlockDecomposition:
    """
    Décomposition en blocs de Λ_n.

    p = 0 : fibres du 2-cœur. p impair : un bloc B(ρ_r) par r éligible,
    le reste forme le bloc B(κ).
    """
    if p:
        get_field(p)
    members = list(enumerate_lambda(n))
    cores: Dict[Partition, List[Partition]] = {}
    for lam in members:
        cores.setdefault(two_core(lam), []).append(lam)

    if p == 0:
        blocks = [tuple(group) for group in cores.values()]
        labels = [f"2-cœur {core}" for core in cores]
        return BlockDecomposition(n, p, tuple(blocks), Provenance.CLASSIFIER, tuple(labels))

    blocks, labels, taken = [], [], set()
    for r in eligible_staircases(n, p):
        block = tuple(cores.get(staircase(r), ()))
        if block:
            blocks.append(block)
            labels.append(f"B(ρ_{r})")
            taken.update(block)
    rest = tuple(lam for lam in members if lam not in taken)
    if rest:
        blocks.append(rest)
        labels.append(f"B(κ = {kappa(n)})")
    logger.debug("classify(%d, %d) : %d bloc(s)", n, p, len(blocks))
    return BlockDecomposition(n, p, tuple(blocks), Provenance.CLASSIFIER, tuple(labels))


# ---------------------------------------------------------------------------
# Oracle
# ---------------------------------------------------------------------------

def block_of_module(module, idempotents) -> int:
    """Indice de l'unique idempotent central agissant par l'identité sur le module."""
    hits = []
    for index, e in enumerate(idempotents):
        indicator = block_indicator(module, e)
        if indicator is None:
            raise ConsistencyError(f"l'idempotent e{index} n'agit ni par 0 ni par 1 sur {module.name}")
        if indicator:
            hits.append(index)
    if len(hits) != 1:
        raise ConsistencyError(f"{module.name} est touché par {len(hits)} idempotent(s) central(aux)")
    return hits[0]


def oracle(n: int, p: int) -> BlockDecomposition:
    """
    Blocs calculés sans la classification : idempotents centraux primitifs
    du centre de A_n, puis affectation de chaque W_n(λ).
    """
    if p == 0:
        raise UnsupportedError("l'oracle travaille sur GF(p)")
    get_field(p)
    get_configuration().check_bound('centre_max_n', n)
    idempotents = central_idempotents(n, p)
    groups: Dict[int, List[Partition]] = {}
    for lam in enumerate_lambda(n):
        index = block_of_module(standard_module(n, lam, p), idempotents)
        groups.setdefault(index, []).append(lam)
    if len(groups) != len(idempotents):
        raise ConsistencyError(f"{len(idempotents)} idempotents pour {len(groups)} blocs")
    logger.info("oracle(%d, %d) : %d bloc(s)", n, p, len(groups))
    order = sorted(groups)
    return BlockDecomposition(n, p, tuple(tuple(groups[k]) for k in order), Provenance.ORACLE,
                              tuple(f"e{k}" for k in order))


# ---------------------------------------------------------------------------
# Liaisons
# ---------------------------------------------------------------------------

def check_two_hook_linkage(n: int, p: int,
                           decomposition: Optional[BlockDecomposition] = None) -> List[Tuple[Partition, Partition]]:
    """(μ, λ) avec λ = μ privée d'un domino mais dans un autre bloc ; vide attendu."""
    decomposition = decomposition or oracle(n, p)
    violations = []
    for mu in enumerate_lambda(n):
        for _, lam in removable_rim_hooks(mu, 2):
            if decomposition.block_of(mu) != decomposition.block_of(lam):
                violations.append((mu, lam))
    return violations


def check_transpose_symmetry(n: int, p: int,
                             decomposition: Optional[BlockDecomposition] = None) -> List[Tuple[Partition, ...]]:
    """Blocs dont l'image par transposition n'est pas un bloc ; vide attendu."""
    decomposition = decomposition or oracle(n, p)
    blocks = decomposition.as_set_partition()
    return [block for block in decomposition.blocks
            if frozenset(transpose(lam) for lam in block) not in blocks]


def check_p_core_linkage(n: int, p: int,
                         decomposition: Optional[BlockDecomposition] = None) -> List[Tuple[Partition, Partition]]:
    """(λ, μ) de même taille et même p-cœur dans des blocs différents ; vide attendu."""
    decomposition = decomposition or oracle(n, p)
    members = list(enumerate_lambda(n))
    violations = []
    for i, lam in enumerate(members):
        for mu in members[i + 1:]:
            if lam.size == mu.size and p_core(lam, p) == p_core(mu, p) \
                    and decomposition.block_of(lam) != decomposition.block_of(mu):
                violations.append((lam, mu))
    return violations


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[max(ra, rb)] = min(ra, rb)
        return True


def linkage_closure(n: int, p: int) -> BlockDecomposition:
    """
    Plus petite partition de Λ_n stable par retrait de dominos, par égalité
    des p-cœurs à taille égale et par transposition des classes.
    """
    members = list(enumerate_lambda(n))
    classes = _UnionFind(members)
    for mu in members:
        for _, lam in removable_rim_hooks(mu, 2):
            classes.union(mu, lam)
    if p:
        by_core: Dict[Tuple[int, Partition], Partition] = {}
        for lam in members:
            key = (lam.size, p_core(lam, p))
            if key in by_core:
                classes.union(by_core[key], lam)
            else:
                by_core[key] = lam
    changed = True
    while changed:
        changed = False
        for lam in members:
            if classes.union(transpose(lam), transpose(classes.find(lam))):
                changed = True
    groups: Dict[Partition, List[Partition]] = {}
    for lam in members:
        groups.setdefault(classes.find(lam), []).append(lam)
    return BlockDecomposition(n, p, tuple(tuple(g) for g in groups.values()), Provenance.LINKAGE)


def check_linkage_closure(n: int, p: int,
                          decomposition: Optional[BlockDecomposition] = None) -> List[Tuple[Partition, ...]]:
    """Classes de liaison à cheval sur plusieurs blocs ; vide attendu."""
    decomposition = decomposition or classify(n, p)
    return [group for group in linkage_closure(n, p).blocks
            if len({decomposition.block_of(lam) for lam in group}) > 1]
