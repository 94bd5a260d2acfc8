"""
Modules explicites sur A_n : modules standard W_n(λ), formes de Gram, têtes
simples L_n(λ), dual Υ, localisation ε_n M et espaces d'homomorphismes.
"""
import logging
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from algebra import AlgebraElement, get_murphy_basis, module_labels, standard_basis
from config import get_configuration
from diagrams import (compose_chain, compose_signed, enumerate_I, epsilon_diagram, f_diagram, factorize_left,
                      g_diagram, generators)
from errors import ConsistencyError, DomainError, UsageError
from layers import phi
from linalg import DenseMatrix, Field, column_space, get_field, intertwiners, rank, row_space
from models import BrauerDiagram, Partition
from partitions import dominance_leq, enumerate_lambda, in_lambda, mullineux, standard_tableaux, tableau_count

logger = logging.getLogger(__name__)


class ExplicitModule:
    """Module de dimension finie donné par l'action (matricielle) de chaque diagramme."""

    def __init__(self, field: Field, n: int, dimension: int,
                 action: Callable[[BrauerDiagram], DenseMatrix], name: str = "M"):
        self.field = field
        self.n = n
        self.dimension = dimension
        self.name = name
        self._action = action
        self._cache: Dict[BrauerDiagram, DenseMatrix] = {}

    def act(self, d: BrauerDiagram) -> DenseMatrix:
        """Matrice de d (colonnes = images des vecteurs de base)."""
        if d.r != self.n or d.s != self.n:
            raise UsageError(f"{d} n'agit pas sur un module de A_{self.n}")
        if d not in self._cache:
            self._cache[d] = self._action(d)
        return self._cache[d]

    def act_element(self, x: AlgebraElement) -> DenseMatrix:
        if x.n != self.n or x.field != self.field:
            raise UsageError(f"{self.name} : élément incompatible")
        result = DenseMatrix.zeros(self.field, self.dimension, self.dimension)
        for d, c in x.terms.items():
            result = result + self.act(d).scale(c)
        return result

    def generator_matrices(self) -> List[Tuple[str, DenseMatrix]]:
        return [(name, self.act(g)) for name, g in generators(self.n)]

    def __repr__(self) -> str:
        return f"{self.name} (A_{self.n}, {self.field.label}, dim {self.dimension})"


class StandardModule(ExplicitModule):
    """
    W_n(λ) = V(n, t) ⊗ S^λ, base S ⊗ v_T (S ∈ I(n, t), T ∈ 𝒯_λ).

    d(S ⊗ x) = 0 si d·S a moins de t traits propagateurs,
    sinon ±S′ ⊗ w·x avec d·S = ±S′ ⋆ w.
    """

    def __init__(self, n: int, lam: Partition, field: Field):
        if not in_lambda(lam, n):
            raise DomainError(f"{lam} n'appartient pas à Λ_{n}")
        self.lam = lam
        self.t = lam.size
        self.diagrams_I = enumerate_I(n, self.t)
        self.labels = module_labels(n, lam)
        self._position = {s: k for k, s in enumerate(self.diagrams_I)}
        self._murphy = get_murphy_basis(self.t)
        super().__init__(field, n, len(self.labels), self._diagram_action, name=f"W_{n}{lam}")
        logger.debug("Module standard %s de dimension %d", self.name, self.dimension)

    def _diagram_action(self, d: BrauerDiagram) -> DenseMatrix:
        width = len(standard_tableaux(self.lam))
        rows = [[0] * self.dimension for _ in range(self.dimension)]
        for column, s in enumerate(self.diagrams_I):
            signed = compose_signed(d, s)
            if signed.is_zero or signed.diagram.num_propagating < self.t:
                continue
            image, w = factorize_left(signed.diagram)
            row = self._position[image]
            block = self._murphy.cell_action(self.lam, w, self.field).to_rows()
            for a in range(width):
                for b in range(width):
                    value = block[a][b]
                    rows[row * width + a][column * width + b] = -value if signed.sign < 0 else value
        return DenseMatrix.from_rows(self.field, rows, self.dimension)

    def check_relations(self, pairs: Sequence[Tuple[BrauerDiagram, BrauerDiagram]]) -> List[Tuple[BrauerDiagram, BrauerDiagram]]:
        """Paires (d1, d2) avec ρ(d1)ρ(d2) ≠ ρ(d1·d2) ; vide pour une vraie représentation."""
        failures = []
        for d1, d2 in pairs:
            product = self.act(d1) @ self.act(d2)
            signed = compose_signed(d1, d2)
            if signed.is_zero:
                expected = DenseMatrix.zeros(self.field, self.dimension, self.dimension)
            else:
                expected = self.act(signed.diagram).scale(signed.sign)
            if product != expected:
                failures.append((d1, d2))
        return failures


@lru_cache(maxsize=None)
def standard_module(n: int, lam: Partition, p: int = 0) -> StandardModule:
    return StandardModule(n, lam, get_field(p))


def standard_dimension(n: int, lam: Partition) -> int:
    """dim W_n(λ) = |I(n, t)|·f^λ."""
    if not in_lambda(lam, n):
        raise DomainError(f"{lam} n'appartient pas à Λ_{n}")
    return len(enumerate_I(n, lam.size)) * tableau_count(lam)


def globalised_dimension(n: int, lam: Partition) -> int:
    """Dimension du globalisé de W_n(λ), c'est-à-dire de W_{n+2}(λ)."""
    return standard_dimension(n + 2, lam)


# ---------------------------------------------------------------------------
# Formes de Gram et modules simples
# ---------------------------------------------------------------------------

def gram_matrix(n: int, lam: Partition, p: int = 0) -> DenseMatrix:
    """
    G[j][k] = coefficient de C_(i0,l0) dans C_(i0,j)·C_(k,l0), modulo A^{>λ}.
    """
    get_configuration().check_bound('gram_max_n', n)
    if not in_lambda(lam, n):
        raise DomainError(f"{lam} n'appartient pas à Λ_{n}")
    basis = standard_basis(n, p)
    labels = module_labels(n, lam)
    first = labels[0]
    rights = [basis.element((lam, k, first)) for k in labels]
    rows = []
    for j in labels:
        left = basis.element((lam, first, j))
        row = []
        for right in rights:
            coords = basis.coordinates(left * right)
            for (mu, a, b) in coords:
                if mu == lam and (a, b) != (first, first):
                    raise ConsistencyError(f"produit de Gram de {lam} hors de C_(i0,l0)")
                if mu != lam and not dominance_leq(lam, mu):
                    raise ConsistencyError(f"produit de Gram de {lam} avec un terme {mu} ⋭ {lam}")
            row.append(coords.get((lam, first, first), 0))
        rows.append(row)
    return DenseMatrix.from_rows(basis.field, rows, len(labels))


def gram_rank(n: int, lam: Partition, p: int = 0) -> int:
    return rank(gram_matrix(n, lam, p))


def simple_module(n: int, lam: Partition, p: int = 0) -> ExplicitModule:
    """L_n(λ) = W_n(λ) / rad, le radical étant le noyau de la forme de Gram."""
    standard = standard_module(n, lam, p)
    q, pivots = row_space(gram_matrix(n, lam, p))
    if not pivots:
        raise DomainError(f"{lam} ∉ Λ′_{n} : forme de Gram nulle")
    columns = list(pivots)

    def action(d: BrauerDiagram) -> DenseMatrix:
        return q @ standard.act(d).select_columns(columns)

    return ExplicitModule(standard.field, n, len(columns), action, name=f"L_{n}{lam}")


def simple_dimensions(n: int, p: int = 0) -> Dict[Partition, int]:
    """dim L_n(λ) pour λ ∈ Λ′_n."""
    return {lam: gram_rank(n, lam, p) for lam in enumerate_lambda(n, p, restricted_only=True)}


# ---------------------------------------------------------------------------
# Dual, localisation, homomorphismes
# ---------------------------------------------------------------------------

def dual_module(module: ExplicitModule) -> ExplicitModule:
    """Υ(M) : a agit par la transposée de l'action de φ(a)."""
    def action(d: BrauerDiagram) -> DenseMatrix:
        image = phi(d)
        return module.act(image.diagram).transpose().scale(image.sign)

    return ExplicitModule(module.field, module.n, module.dimension, action, name=f"Υ({module.name})")


def localise(module: ExplicitModule) -> ExplicitModule:
    """
    ε_n M comme module sur A_{n−2} ≅ ε_n A_n ε_n (a -> g·a·f).
    """
    n = module.n
    if n < 3:
        raise DomainError(f"localisation définie pour n ≥ 3 (reçu {n})")
    image, pivots = column_space(module.act(epsilon_diagram(n)))
    rows = list(pivots)
    size = image.ncols
    g, f = g_diagram(n - 2), f_diagram(n - 2)

    def action(d: BrauerDiagram) -> DenseMatrix:
        signed = compose_chain(g, d, f)
        if signed.is_zero:
            return DenseMatrix.zeros(module.field, size, size)
        return (module.act(signed.diagram) @ image).select_rows(rows).scale(signed.sign)

    logger.debug("Localisation de %s : dimension %d", module.name, size)
    return ExplicitModule(module.field, n - 2, size, action, name=f"ε{module.name}")


def hom_dimension(source: ExplicitModule, target: ExplicitModule) -> int:
    """dim Hom(M, N) : solutions de X·ρ_M(g) = ρ_N(g)·X pour tous les générateurs."""
    if source.n != target.n or source.field != target.field:
        raise UsageError("modules sur des algèbres différentes")
    pairs = [(source.act(g), target.act(g)) for _, g in generators(source.n)]
    if source.dimension == 0 or target.dimension == 0:
        return 0
    return intertwiners(pairs, source.dimension, target.dimension, source.field).ncols


def are_isomorphic(source: ExplicitModule, target: ExplicitModule) -> bool:
    """Test d'isomorphisme entre modules simples."""
    return source.dimension == target.dimension and hom_dimension(source, target) > 0


def check_simple_duality(n: int, p: int) -> List[Tuple[Partition, Partition]]:
    """(λ, λ^M) pour chaque λ ∈ Λ′_n avec Υ(L_n(λ)) ≇ L_n(λ^M) ; vide attendu."""
    violations = []
    for lam in enumerate_lambda(n, p, restricted_only=True):
        image = mullineux(lam, p)
        if not are_isomorphic(dual_module(simple_module(n, lam, p)), simple_module(n, image, p)):
            violations.append((lam, image))
    return violations


def check_globalisation(n: int, lam: Partition, p: int = 0) -> bool:
    """ε_{n+2} W_{n+2}(λ) a la dimension de W_n(λ)."""
    return localise(standard_module(n + 2, lam, p)).dimension == standard_dimension(n, lam)


def check_decomposition_support(n: int, p: int) -> List[Tuple[str, Partition, Partition]]:
    """
    Support des multiplicités [W_n(λ):L_n(μ)] : nulles si |λ| > |μ|, égales à
    celles de A_{n−2} après localisation si |λ| ≤ |μ| ≤ n − 2.

    Contrôles, vides attendus :
      - 'tête' : Hom(W_n(λ), L_n(μ)) ≠ 0 avec |λ| > |μ|, ou dim Hom(W_n(μ), L_n(μ)) ≠ 1
      - 'simple localisé' : ε L_n(μ) ≇ L_{n−2}(μ) pour μ ∈ Λ′_{n−2}, ou ε L_n(μ) ≠ 0 sinon
      - 'multiplicité' : dim Hom(ε W_n(λ), ε L_n(μ)) ≠ dim Hom(W_{n−2}(λ), L_{n−2}(μ))
    """
    violations = []
    simples = {mu: simple_module(n, mu, p) for mu in enumerate_lambda(n, p, restricted_only=True)}
    for lam in enumerate_lambda(n):
        standard = standard_module(n, lam, p)
        for mu, simple in simples.items():
            if lam.size > mu.size and hom_dimension(standard, simple):
                violations.append(('tête', lam, mu))
            elif lam == mu and hom_dimension(standard, simple) != 1:
                violations.append(('tête', lam, mu))
    if n < 3:
        return violations

    lower = enumerate_lambda(n - 2, p, restricted_only=True)
    local_simples = {}
    for mu, simple in simples.items():
        local = localise(simple)
        if mu in lower:
            local_simples[mu] = local
            if not are_isomorphic(local, simple_module(n - 2, mu, p)):
                violations.append(('simple localisé', mu, mu))
        elif local.dimension:
            violations.append(('simple localisé', mu, mu))

    for lam in enumerate_lambda(n - 2):
        local_standard = localise(standard_module(n, lam, p))
        for mu, local in local_simples.items():
            if lam.size > mu.size:
                continue
            expected = hom_dimension(standard_module(n - 2, lam, p), simple_module(n - 2, mu, p))
            if hom_dimension(local_standard, local) != expected:
                violations.append(('multiplicité', lam, mu))
    logger.debug("Support des multiplicités n=%d p=%d : %d écarts", n, p, len(violations))
    return violations


def localised_dimension_expected(n: int, lam: Partition) -> int:
    """dim ε_n W_n(λ) : dim W_{n−2}(λ) si λ ∈ Λ_{n−2}, sinon 0."""
    return standard_dimension(n - 2, lam) if in_lambda(lam, n - 2) else 0


def block_indicator(module: ExplicitModule, idempotent: AlgebraElement) -> Optional[bool]:
    """True si e agit par l'identité, False si par zéro, None sinon."""
    matrix = module.act_element(idempotent)
    if matrix.is_zero():
        return False
    if matrix == DenseMatrix.identity(module.field, module.dimension):
        return True
    return None
