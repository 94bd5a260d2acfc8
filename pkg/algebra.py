"""
L'algèbre A_n sur un corps : éléments, base de Murphy de l'algèbre du groupe
symétrique, base standard de A_n, table de multiplication, centre et
idempotents centraux primitifs.
"""
import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import permutations, product
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from config import get_configuration
from diagrams import compose_chain, compose_signed, enumerate_diagrams, enumerate_I, generators
from errors import ConsistencyError, DomainError, UsageError
from layers import coxeter_length
from linalg import (DenseMatrix, Field, StructureConstants, column_space, get_field, intertwiners, inverse,
                    kernel, row_space, split_idempotents)
from models import BrauerDiagram, Partition, SignedDiagram, StandardTableau
from partitions import (dominance_leq, enumerate_lambda, initial_tableau, is_p_restricted, partitions_of,
                        standard_tableaux)

logger = logging.getLogger(__name__)

Permutation = Tuple[int, ...]
GroupElement = Dict[Permutation, int]


# ---------------------------------------------------------------------------
# Éléments de A_n
# ---------------------------------------------------------------------------

@dataclass
class AlgebraElement:
    """Combinaison linéaire finie de diagrammes (n, n) ; aucun coefficient nul n'est stocké."""
    n: int
    field: Field
    terms: Dict[BrauerDiagram, Any]

    def __post_init__(self):
        cleaned = {}
        for d, c in self.terms.items():
            if d.r != self.n or d.s != self.n:
                raise UsageError(f"diagramme {d} hors de A_{self.n}")
            c = self.field(c)
            if not self.field.is_zero(c):
                cleaned[d] = c
        self.terms = cleaned

    @staticmethod
    def zero(n: int, field: Field) -> 'AlgebraElement':
        return AlgebraElement(n, field, {})

    @staticmethod
    def one(n: int, field: Field) -> 'AlgebraElement':
        return AlgebraElement(n, field, {BrauerDiagram.identity(n): 1})

    @staticmethod
    def from_diagram(d: BrauerDiagram, field: Field, coeff: Any = 1) -> 'AlgebraElement':
        return AlgebraElement(d.r, field, {d: coeff})

    @staticmethod
    def from_signed(n: int, signed: SignedDiagram, field: Field) -> 'AlgebraElement':
        if signed.is_zero:
            return AlgebraElement.zero(n, field)
        return AlgebraElement(n, field, {signed.diagram: signed.sign})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, d: BrauerDiagram) -> Any:
        return self.terms.get(d, self.field.zero)

    def _check(self, other: 'AlgebraElement') -> None:
        if self.n != other.n or self.field != other.field:
            raise UsageError(f"éléments incompatibles: A_{self.n}/{self.field.label} et "
                             f"A_{other.n}/{other.field.label}")

    def __add__(self, other: 'AlgebraElement') -> 'AlgebraElement':
        self._check(other)
        terms = dict(self.terms)
        for d, c in other.terms.items():
            terms[d] = self.field.add(terms.get(d, self.field.zero), c)
        return AlgebraElement(self.n, self.field, terms)

    def __neg__(self) -> 'AlgebraElement':
        return AlgebraElement(self.n, self.field, {d: self.field.neg(c) for d, c in self.terms.items()})

    def __sub__(self, other: 'AlgebraElement') -> 'AlgebraElement':
        return self + (-other)

    def scale(self, scalar: Any) -> 'AlgebraElement':
        scalar = self.field(scalar)
        return AlgebraElement(self.n, self.field, {d: self.field.mul(c, scalar) for d, c in self.terms.items()})

    def __mul__(self, other: 'AlgebraElement') -> 'AlgebraElement':
        return multiply(self, other)

    def to_vector(self) -> List[Any]:
        """Coordonnées dans la base des diagrammes (ordre de enumerate_diagrams)."""
        vector = [self.field.zero] * len(enumerate_diagrams(self.n, self.n))
        index = diagram_index(self.n)
        for d, c in self.terms.items():
            vector[index[d]] = c
        return vector

    @staticmethod
    def from_vector(n: int, field: Field, vector) -> 'AlgebraElement':
        return AlgebraElement(n, field, dict(zip(enumerate_diagrams(n, n), vector)))

    def to_dict(self) -> Dict[str, Any]:
        """Format JSON : {"n", "p", "terms": [{"diagram", "coeff"}]}, termes triés."""
        return {
            'n': self.n,
            'p': self.field.p,
            'terms': [{'diagram': d.to_dict(), 'coeff': self.field.to_string(c)}
                      for d, c in sorted(self.terms.items())],
        }

    @staticmethod
    def from_dict(data: Dict[str, Any]) -> 'AlgebraElement':
        try:
            field = get_field(int(data['p']))
            terms = {}
            for term in data['terms']:
                d = BrauerDiagram.from_dict(term['diagram'])
                terms[d] = field.add(terms.get(d, field.zero), field(str(term['coeff'])))
            return AlgebraElement(int(data['n']), field, terms)
        except (KeyError, TypeError, ValueError) as e:
            raise UsageError(f"élément JSON invalide: {e}")

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return " + ".join(f"{self.field.to_string(c)}·{d}" for d, c in sorted(self.terms.items()))


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Extension bilinéaire de compose_signed."""
    a._check(b)
    field = a.field
    result: Dict[BrauerDiagram, Any] = {}
    for d1, c1 in a.terms.items():
        for d2, c2 in b.terms.items():
            signed = compose_signed(d1, d2)
            if signed.is_zero:
                continue
            c = field.mul(c1, c2)
            if signed.sign < 0:
                c = field.neg(c)
            result[signed.diagram] = field.add(result.get(signed.diagram, field.zero), c)
    return AlgebraElement(a.n, field, result)


@lru_cache(maxsize=None)
def diagram_index(n: int) -> Dict[BrauerDiagram, int]:
    return {d: k for k, d in enumerate(enumerate_diagrams(n, n))}


def generators_span(n: int) -> bool:
    """Vérifie que les produits itérés des générateurs atteignent tous les diagrammes."""
    reached = {BrauerDiagram.identity(n)}
    frontier = list(reached)
    gens = [g for _, g in generators(n)]
    while frontier:
        following = []
        for d in frontier:
            for g in gens:
                signed = compose_signed(d, g)
                if not signed.is_zero and signed.diagram not in reached:
                    reached.add(signed.diagram)
                    following.append(signed.diagram)
        frontier = following
    return len(reached) == len(enumerate_diagrams(n, n))


# ---------------------------------------------------------------------------
# Groupe symétrique
# ---------------------------------------------------------------------------

def perm_mul(w1: Permutation, w2: Permutation) -> Permutation:
    """w1 puis w2 : (w1 w2)[i] = w2[w1[i]], comme l'empilement de diagrammes."""
    return tuple(w2[x] for x in w1)


def perm_inverse(w: Permutation) -> Permutation:
    result = [0] * len(w)
    for i, x in enumerate(w):
        result[x] = i
    return tuple(result)


def simple_reflection(t: int, i: int) -> Permutation:
    """s_i échange i et i+1 (indices à partir de 1)."""
    w = list(range(t))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def group_multiply(x: GroupElement, y: GroupElement) -> GroupElement:
    result: GroupElement = {}
    for w1, c1 in x.items():
        for w2, c2 in y.items():
            w = perm_mul(w1, w2)
            result[w] = result.get(w, 0) + c1 * c2
    return {w: c for w, c in result.items() if c}


def iota(x: GroupElement) -> GroupElement:
    """Anti-involution w -> w⁻¹."""
    return {perm_inverse(w): c for w, c in x.items()}


def alpha(x: GroupElement) -> GroupElement:
    """Automorphisme w -> (−1)^ℓ(w) w."""
    return {w: -c if coxeter_length(w) % 2 else c for w, c in x.items()}


def tableau_permutation(tableau: StandardTableau) -> Permutation:
    """d(T) : t^λ · d(T) = T."""
    start = initial_tableau(tableau.shape)
    w = [0] * tableau.shape.size
    for row_start, row in zip(start.rows, tableau.rows):
        for a, b in zip(row_start, row):
            w[a - 1] = b - 1
    return tuple(w)


def row_stabiliser(lam: Partition) -> List[Permutation]:
    """Sous-groupe de Young des lignes de t^λ."""
    rows = [[x - 1 for x in row] for row in initial_tableau(lam).rows]
    result = []
    for images in product(*(permutations(row) for row in rows)):
        w = list(range(lam.size))
        for row, image in zip(rows, images):
            for a, b in zip(row, image):
                w[a] = b
        result.append(tuple(w))
    return result


class MurphyBasis:
    """
    Base de Murphy m^λ_{S,T} = d(S)⁻¹ x_λ d(T) de l'algèbre du groupe 𝔖_t,
    coefficients entiers, et module cellulaire v_T = m_{T,T0} modulo H^{▷λ}.
    """

    def __init__(self, t: int):
        get_configuration().check_bound('murphy_max_t', t)
        self.t = t
        self.permutations: Tuple[Permutation, ...] = tuple(permutations(range(t)))
        self.perm_index = {w: k for k, w in enumerate(self.permutations)}
        self.labels: List[Tuple[Partition, StandardTableau, StandardTableau]] = [
            (lam, s, u) for lam in partitions_of(t)
            for s in standard_tableaux(lam) for u in standard_tableaux(lam)]
        self.label_index = {label: k for k, label in enumerate(self.labels)}
        self._elements: Dict[Tuple[Partition, StandardTableau, StandardTableau], GroupElement] = {}
        self._inverses: Dict[int, DenseMatrix] = {}
        self._cell_actions: Dict[Tuple[Partition, Permutation, int], DenseMatrix] = {}

    def element(self, lam: Partition, s: StandardTableau, u: StandardTableau) -> GroupElement:
        key = (lam, s, u)
        if key not in self._elements:
            left = perm_inverse(tableau_permutation(s))
            right = tableau_permutation(u)
            element: GroupElement = {}
            for w in row_stabiliser(lam):
                x = perm_mul(perm_mul(left, w), right)
                element[x] = element.get(x, 0) + 1
            self._elements[key] = element
        return self._elements[key]

    def change_of_basis(self) -> np.ndarray:
        """Matrice entière t! × t! : colonne k = m du k-ième label dans la base des permutations."""
        size = len(self.permutations)
        matrix = np.zeros((size, size), dtype=np.int64)
        for k, label in enumerate(self.labels):
            for w, c in self.element(*label).items():
                matrix[self.perm_index[w], k] += c
        return matrix

    def _inverse(self, field: Field) -> DenseMatrix:
        if field.p not in self._inverses:
            logger.info("Inversion de la base de Murphy t = %d sur %s (%d×%d)",
                        self.t, field.label, len(self.labels), len(self.labels))
            self._inverses[field.p] = inverse(DenseMatrix.from_integers(field, self.change_of_basis()))
        return self._inverses[field.p]

    def coordinates(self, x: GroupElement, field: Field) -> Dict[Tuple[Partition, StandardTableau, StandardTableau], Any]:
        """Coordonnées non nulles de x dans la base de Murphy."""
        column = [[0] for _ in self.permutations]
        for w, c in x.items():
            column[self.perm_index[w]] = [c]
        vector = (self._inverse(field) @ DenseMatrix.from_rows(field, column, 1)).column(0)
        return {self.labels[k]: c for k, c in enumerate(vector) if c != 0}

    def _reduce(self, x: GroupElement, lam: Partition, field: Field) -> Dict[StandardTableau, Any]:
        """x ≡ Σ r_U m_{U,T0} modulo H^{▷λ} ; tout autre terme est une incohérence."""
        t0 = standard_tableaux(lam)[0]
        result = {}
        for (mu, u, v), c in self.coordinates(x, field).items():
            if mu == lam and v == t0:
                result[u] = c
            elif mu != lam and dominance_leq(lam, mu):
                continue
            else:
                raise ConsistencyError(f"terme {mu} ({u}, {v}) hors de l'idéal H^{{▷{lam}}}")
        return result

    def cell_action(self, lam: Partition, w: Permutation, field: Field) -> DenseMatrix:
        """Matrice de w sur le module cellulaire de base (v_T) pour T ∈ 𝒯_λ."""
        key = (lam, w, field.p)
        if key not in self._cell_actions:
            tableaux = standard_tableaux(lam)
            position = {u: k for k, u in enumerate(tableaux)}
            t0 = tableaux[0]
            rows = [[0] * len(tableaux) for _ in tableaux]
            for j, u in enumerate(tableaux):
                image = group_multiply({w: 1}, self.element(lam, u, t0))
                for v, c in self._reduce(image, lam, field).items():
                    rows[position[v]][j] = c
            self._cell_actions[key] = DenseMatrix.from_rows(field, rows, len(tableaux))
        return self._cell_actions[key]

    def twisted_cell_action(self, lam: Partition, w: Permutation, field: Field) -> DenseMatrix:
        """Matrice de w sur la famille α(v_T), lue à travers α."""
        tableaux = standard_tableaux(lam)
        position = {u: k for k, u in enumerate(tableaux)}
        t0 = tableaux[0]
        rows = [[0] * len(tableaux) for _ in tableaux]
        for j, u in enumerate(tableaux):
            image = alpha(group_multiply({w: 1}, alpha(self.element(lam, u, t0))))
            for v, c in self._reduce(image, lam, field).items():
                rows[position[v]][j] = c
        return DenseMatrix.from_rows(field, rows, len(tableaux))

    def gram(self, lam: Partition, field: Field) -> DenseMatrix:
        """⟨T, U⟩ : coefficient de m_{T0,T0} dans m_{T0,T}·m_{U,T0} modulo H^{▷λ}."""
        tableaux = standard_tableaux(lam)
        t0 = tableaux[0]
        rows = []
        for u in tableaux:
            row = []
            for v in tableaux:
                reduced = self._reduce(group_multiply(self.element(lam, t0, u), self.element(lam, v, t0)), lam, field)
                if any(key != t0 for key in reduced):
                    raise ConsistencyError(f"forme de Gram de {lam} : termes hors de m_(T0,T0)")
                row.append(reduced.get(t0, 0))
            rows.append(row)
        return DenseMatrix.from_rows(field, rows, len(tableaux))

    def simple_head(self, lam: Partition, field: Field) -> Optional[Tuple[int, List[DenseMatrix]]]:
        """(dimension, matrices des s_i) de D^λ = S^λ / rad ; None si la forme est nulle."""
        q, pivots = row_space(self.gram(lam, field))
        if not pivots:
            return None
        return len(pivots), [q @ self.cell_action(lam, simple_reflection(self.t, i), field).select_columns(pivots)
                for i in range(1, self.t)]


@lru_cache(maxsize=None)
def get_murphy_basis(t: int) -> MurphyBasis:
    return MurphyBasis(t)


def murphy_basis(t: int) -> MurphyBasis:
    return get_murphy_basis(t)


def sign_twisted_action(t: int, lam: Partition, field: Field) -> bool:
    """
    La famille α(m_{T,T0}) engendre un module sur lequel chaque s_i agit par
    l'opposé de son action sur le module cellulaire.
    """
    basis = get_murphy_basis(t)
    for i in range(1, t):
        s = simple_reflection(t, i)
        if basis.twisted_cell_action(lam, s, field) != -basis.cell_action(lam, s, field):
            return False
    return True


def mullineux_oracle(lam: Partition, p: int) -> Partition:
    """
    μ tel que D^λ ⊗ sgn ≅ D^μ, calculé dans les modules cellulaires de Murphy
    (radical de Gram, torsion par le signe, test d'isomorphisme).
    """
    if not is_p_restricted(lam, p):
        raise DomainError(f"{lam} n'est pas {p}-restreinte")
    field = get_field(p)
    basis = get_murphy_basis(lam.size)
    own = basis.simple_head(lam, field)
    if own is None:
        raise ConsistencyError(f"forme de Gram nulle pour la partition restreinte {lam}")
    dim, matrices = own
    twisted = [-m for m in matrices]
    matches = []
    for mu in partitions_of(lam.size):
        if not is_p_restricted(mu, p):
            continue
        head = basis.simple_head(mu, field)
        if head is None:
            continue
        size, action = head
        if size != dim:
            continue
        if intertwiners(list(zip(twisted, action)), dim, size, field).ncols:
            matches.append(mu)
    if len(matches) != 1:
        raise ConsistencyError(f"D^{lam} ⊗ sgn reconnu {len(matches)} fois")
    return matches[0]


# ---------------------------------------------------------------------------
# Base standard de A_n
# ---------------------------------------------------------------------------

Label = Tuple[BrauerDiagram, StandardTableau]
StandardLabel = Tuple[Partition, Label, Label]


def module_labels(n: int, lam: Partition) -> List[Label]:
    """Base de W_n(λ) : S ∈ I(n, t) à l'extérieur, T ∈ 𝒯_λ à l'intérieur."""
    return [(s, u) for s in enumerate_I(n, lam.size) for u in standard_tableaux(lam)]


class StandardBasis:
    """
    Famille C^λ_{(S1,T1),(S2,T2)} = S1 · m^λ_{T1,T2} · S2^op, exprimée dans
    la base des diagrammes, et son changement de base.
    """

    def __init__(self, n: int, field: Field):
        get_configuration().check_bound('standard_basis_max_n', n)
        self.n = n
        self.field = field
        self.diagrams = enumerate_diagrams(n, n)
        self.labels: List[StandardLabel] = []
        for lam in enumerate_lambda(n):
            labels = module_labels(n, lam)
            self.labels.extend((lam, left, right) for left in labels for right in labels)
        self.label_index = {label: k for k, label in enumerate(self.labels)}
        logger.info("Base standard de A_%d : %d éléments", n, len(self.labels))

    def integral_vector(self, label: StandardLabel) -> Dict[BrauerDiagram, int]:
        lam, (s1, t1), (s2, t2) = label
        murphy = get_murphy_basis(lam.size)
        result: Dict[BrauerDiagram, int] = {}
        for w, c in murphy.element(lam, t1, t2).items():
            signed = compose_chain(s1, BrauerDiagram.from_permutation(w), s2.flip())
            if signed.is_zero:
                raise ConsistencyError(f"S1·w·S2^op nul pour {label}")
            result[signed.diagram] = result.get(signed.diagram, 0) + signed.sign * c
        return {d: c for d, c in result.items() if c}

    def element(self, label: StandardLabel) -> AlgebraElement:
        return AlgebraElement(self.n, self.field, self.integral_vector(label))

    @cached_property
    def matrix(self) -> DenseMatrix:
        index = diagram_index(self.n)
        array = np.zeros((len(self.diagrams), len(self.labels)), dtype=np.int64)
        for k, label in enumerate(self.labels):
            for d, c in self.integral_vector(label).items():
                array[index[d], k] = c
        return DenseMatrix.from_integers(self.field, array)

    @cached_property
    def inverse(self) -> DenseMatrix:
        """Changement de base inverse, calculé une fois par (n, corps)."""
        logger.info("Inversion du changement de base standard, n = %d, %s", self.n, self.field.label)
        return inverse(self.matrix)

    def coordinates(self, x: AlgebraElement) -> Dict[StandardLabel, Any]:
        column = DenseMatrix.from_rows(self.field, [[c] for c in x.to_vector()], 1)
        vector = (self.inverse @ column).column(0)
        return {self.labels[k]: c for k, c in enumerate(vector) if c != 0}

    def triangularity_violations(self) -> List[Tuple[str, StandardLabel, Partition]]:
        """(générateur, C^λ, μ) pour chaque terme μ ⋭ λ dans g·C^λ ; vide si la base est standard."""
        violations = []
        for name, g in generators(self.n):
            left = AlgebraElement.from_diagram(g, self.field)
            for label in self.labels:
                lam = label[0]
                for (mu, _, _) in self.coordinates(left * self.element(label)):
                    if not dominance_leq(lam, mu):
                        violations.append((name, label, mu))
        return violations


@lru_cache(maxsize=None)
def standard_basis(n: int, p: int = 0) -> StandardBasis:
    return StandardBasis(n, get_field(p))


# ---------------------------------------------------------------------------
# Table de multiplication, centre, idempotents
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def multiplication_table(n: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    (cible, signe) : d_i·d_j = signe[i, j]·d_{cible[i, j]}, cible = −1 pour zéro.
    """
    basis = enumerate_diagrams(n, n)
    index = diagram_index(n)
    size = len(basis)
    logger.info("Table de multiplication de A_%d : %d produits", n, size * size)
    target = np.full((size, size), -1, dtype=np.int64)
    sign = np.zeros((size, size), dtype=np.int64)
    for i, d1 in enumerate(basis):
        for j, d2 in enumerate(basis):
            signed = compose_signed(d1, d2)
            if not signed.is_zero:
                target[i, j] = index[signed.diagram]
                sign[i, j] = signed.sign
    return target, sign


@dataclass(frozen=True, eq=False)
class Centre:
    """Base du centre : colonnes de `basis`, qui vaut l'identité sur les lignes `pivots`."""
    n: int
    field: Field
    basis: DenseMatrix
    pivots: Tuple[int, ...]

    @property
    def dimension(self) -> int:
        return self.basis.ncols

    def elements(self) -> List[AlgebraElement]:
        return [AlgebraElement.from_vector(self.n, self.field, self.basis.column(j))
                for j in range(self.dimension)]


def _commutator_matrix(n: int, g: BrauerDiagram) -> np.ndarray:
    """Matrice entière de z -> z·g − g·z dans la base des diagrammes."""
    target, sign = multiplication_table(n)
    size = target.shape[0]
    gi = diagram_index(n)[g]
    matrix = np.zeros((size, size), dtype=np.int64)
    columns = np.arange(size)
    right = target[:, gi] >= 0
    np.add.at(matrix, (target[right, gi], columns[right]), sign[right, gi])
    left = target[gi, :] >= 0
    np.add.at(matrix, (target[gi, left], columns[left]), -sign[gi, left])
    return matrix


@lru_cache(maxsize=None)
def center(n: int, p: int) -> Centre:
    """Centre de A_n : noyau commun des commutateurs avec s_i et e_i."""
    get_configuration().check_bound('centre_max_n', n)
    field = get_field(p)
    size = len(enumerate_diagrams(n, n))
    solutions = DenseMatrix.identity(field, size)
    for name, g in generators(n):
        restricted = DenseMatrix.from_integers(field, _commutator_matrix(n, g)) @ solutions
        solutions = solutions @ kernel(restricted)
        logger.debug("Après %s : dimension %d", name, solutions.ncols)
    basis, pivots = column_space(solutions)
    logger.info("Centre de A_%d sur %s : dimension %d", n, field.label, basis.ncols)
    return Centre(n, field, basis, pivots)


@lru_cache(maxsize=None)
def center_structure_constants(n: int, p: int) -> StructureConstants:
    """Constantes de structure du centre dans sa base réduite."""
    centre = center(n, p)
    field = centre.field
    target, sign = multiplication_table(n)
    z = centre.basis.to_integers().astype(object)
    c = centre.dimension
    table = np.zeros((c, c, c), dtype=np.int64)
    for k, row in enumerate(centre.pivots):
        d1, d2 = np.nonzero(target == row)
        left = z[d1] * sign[d1, d2].astype(object)[:, None]
        table[:, :, k] = ((left.T @ z[d2]) % field.p).astype(np.int64)
    identity = np.zeros(target.shape[0], dtype=np.int64)
    identity[diagram_index(n)[BrauerDiagram.identity(n)]] = 1
    one = tuple(int(identity[row]) for row in centre.pivots)
    return StructureConstants(field, table, one)


@lru_cache(maxsize=None)
def central_idempotents(n: int, p: int) -> Tuple[AlgebraElement, ...]:
    """Idempotents centraux primitifs de A_n sur GF(p)."""
    centre = center(n, p)
    sc = center_structure_constants(n, p)
    result = []
    for e in split_idempotents(sc):
        coords = DenseMatrix.from_rows(centre.field, [[int(x)] for x in e.view(np.ndarray)], 1)
        result.append(AlgebraElement.from_vector(n, centre.field, (centre.basis @ coords).column(0)))
    return tuple(result)
