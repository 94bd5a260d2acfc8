"""
Algèbre linéaire exacte sur GF(p) (p premier impair) et sur Q.

Les matrices sur GF(p) sont des tableaux `galois`; celles sur Q des
`DomainMatrix` de sympy. Toutes les opérations sont pures.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache, reduce
from typing import Any, List, Optional, Sequence, Tuple

import galois
import numpy as np
from sympy import Poly, Symbol, isprime
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from errors import DomainError, UnsupportedError, UsageError

logger = logging.getLogger(__name__)

MAX_PRIME = 2 ** 31
X = Symbol('x')


@lru_cache(maxsize=None)
def _galois_field(p: int):
    return galois.GF(p)


@dataclass(frozen=True)
class Field:
    """Corps de coefficients : GF(p) pour p premier impair, Q pour p = 0."""
    p: int

    @property
    def gf(self):
        """Classe `galois` du corps premier (p > 0 seulement)."""
        if self.p == 0:
            raise UnsupportedError("Q n'a pas de classe galois")
        return _galois_field(self.p)

    @property
    def label(self) -> str:
        return "Q" if self.p == 0 else f"GF({self.p})"

    def __call__(self, value: Any) -> Any:
        """Convertit un entier, une fraction ou une chaîne 'a/b' en scalaire du corps."""
        if isinstance(value, str):
            value = Fraction(value)
        if self.p == 0:
            if isinstance(value, Fraction):
                return QQ(value.numerator, value.denominator)
            return QQ.convert(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise DomainError(f"{value} n'a pas de réduction modulo {self.p}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    @property
    def zero(self) -> Any:
        return self(0)

    @property
    def one(self) -> Any:
        return self(1)

    def add(self, a: Any, b: Any) -> Any:
        return a + b if self.p == 0 else (a + b) % self.p

    def sub(self, a: Any, b: Any) -> Any:
        return a - b if self.p == 0 else (a - b) % self.p

    def mul(self, a: Any, b: Any) -> Any:
        return a * b if self.p == 0 else (a * b) % self.p

    def neg(self, a: Any) -> Any:
        return -a if self.p == 0 else (-a) % self.p

    def inv(self, a: Any) -> Any:
        if self.is_zero(a):
            raise DomainError("division par zéro")
        if self.p == 0:
            return QQ.one / a
        return int(self.gf(a) ** -1)

    def is_zero(self, a: Any) -> bool:
        return a == 0

    def to_python(self, a: Any) -> Any:
        """Scalaire -> int (GF(p)) ou Fraction (Q), pour la sérialisation."""
        if self.p == 0:
            return Fraction(int(a.numerator), int(a.denominator))
        return int(a)

    def to_string(self, a: Any) -> str:
        return str(self.to_python(a))


@lru_cache(maxsize=None)
def get_field(p: int) -> Field:
    """
    Retourne le corps associé à la caractéristique p.

    Raises:
        UnsupportedError: p = 2
        UsageError: p négatif, 1, composé ou trop grand
    """
    if p == 0:
        return Field(0)
    if p == 2:
        raise UnsupportedError("la caractéristique 2 n'est pas prise en charge")
    if p < 0 or p == 1 or p > MAX_PRIME or not isprime(p):
        raise UsageError(f"p = {p} n'est ni 0 ni un premier impair")
    return Field(p)


class DenseMatrix:
    """Matrice dense à coefficients dans un corps (étiquette `field`)."""

    __slots__ = ('field', 'rep')

    def __init__(self, field: Field, rep: Any):
        self.field = field
        self.rep = rep

    # --- construction -------------------------------------------------

    @staticmethod
    def from_rows(field: Field, rows: Sequence[Sequence[Any]], ncols: Optional[int] = None) -> 'DenseMatrix':
        """Construit une matrice à partir de lignes d'entiers, de fractions ou de scalaires."""
        rows = [list(row) for row in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if not rows:
            return DenseMatrix.zeros(field, 0, ncols)
        if any(len(row) != ncols for row in rows):
            raise UsageError("lignes de longueurs différentes")
        if field.p == 0:
            data = [[field(x) for x in row] for row in rows]
            return DenseMatrix(field, DomainMatrix(data, (len(rows), ncols), QQ))
        array = np.zeros((len(rows), ncols), dtype=np.int64)
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                array[i, j] = field(x)
        return DenseMatrix(field, field.gf(array))

    @staticmethod
    def from_integers(field: Field, array: np.ndarray) -> 'DenseMatrix':
        """Construit une matrice depuis un tableau numpy d'entiers (réduit modulo p)."""
        array = np.asarray(array, dtype=np.int64)
        if field.p == 0:
            return DenseMatrix.from_rows(field, array.tolist(), array.shape[1])
        return DenseMatrix(field, field.gf(array % field.p))

    @staticmethod
    def zeros(field: Field, nrows: int, ncols: int) -> 'DenseMatrix':
        if field.p == 0:
            return DenseMatrix(field, DomainMatrix.zeros((nrows, ncols), QQ))
        return DenseMatrix(field, field.gf.Zeros((nrows, ncols)))

    @staticmethod
    def identity(field: Field, size: int) -> 'DenseMatrix':
        if field.p == 0:
            return DenseMatrix(field, DomainMatrix.eye(size, QQ))
        return DenseMatrix(field, field.gf.Identity(size))

    @staticmethod
    def from_columns(field: Field, columns: Sequence[Sequence[Any]], nrows: int) -> 'DenseMatrix':
        return DenseMatrix.from_rows(field, [list(col) for col in columns], nrows).transpose()

    # --- accès ----------------------------------------------------------

    @property
    def shape(self) -> Tuple[int, int]:
        return tuple(self.rep.shape)

    @property
    def nrows(self) -> int:
        return self.shape[0]

    @property
    def ncols(self) -> int:
        return self.shape[1]

    def to_rows(self) -> List[List[Any]]:
        """Entrées sous forme Python (int pour GF(p), Fraction pour Q)."""
        if self.field.p == 0:
            if self.nrows == 0 or self.ncols == 0:
                return [[] for _ in range(self.nrows)]
            return [[self.field.to_python(x) for x in row] for row in self.rep.to_list()]
        return self.rep.view(np.ndarray).astype(np.int64).tolist()

    def to_integers(self) -> np.ndarray:
        """Tableau numpy d'entiers dans [0, p) (GF(p) seulement)."""
        if self.field.p == 0:
            raise UnsupportedError("to_integers n'existe que sur GF(p)")
        return self.rep.view(np.ndarray).astype(np.int64)

    def column(self, j: int) -> List[Any]:
        return [row[j] for row in self.to_rows()]

    def entry(self, i: int, j: int) -> Any:
        return self.to_rows()[i][j]

    def select_rows(self, indices: Sequence[int]) -> 'DenseMatrix':
        indices = list(indices)
        if self.field.p == 0:
            return DenseMatrix(self.field, self.rep.extract(indices, list(range(self.ncols))))
        return DenseMatrix(self.field, self.rep[indices, :])

    def select_columns(self, indices: Sequence[int]) -> 'DenseMatrix':
        indices = list(indices)
        if self.field.p == 0:
            return DenseMatrix(self.field, self.rep.extract(list(range(self.nrows)), indices))
        return DenseMatrix(self.field, self.rep[:, indices])

    # --- arithmétique ---------------------------------------------------

    def _check(self, other: 'DenseMatrix') -> None:
        if not isinstance(other, DenseMatrix) or other.field != self.field:
            raise UsageError("matrices sur des corps différents")

    def __matmul__(self, other: 'DenseMatrix') -> 'DenseMatrix':
        self._check(other)
        if self.ncols != other.nrows:
            raise UsageError(f"dimensions incompatibles {self.shape} @ {other.shape}")
        if self.field.p == 0:
            return DenseMatrix(self.field, self.rep.matmul(other.rep))
        return DenseMatrix(self.field, self.rep @ other.rep)

    def __add__(self, other: 'DenseMatrix') -> 'DenseMatrix':
        self._check(other)
        return DenseMatrix(self.field, self.rep + other.rep)

    def __sub__(self, other: 'DenseMatrix') -> 'DenseMatrix':
        self._check(other)
        return DenseMatrix(self.field, self.rep - other.rep)

    def __neg__(self) -> 'DenseMatrix':
        return DenseMatrix(self.field, -self.rep)

    def scale(self, scalar: Any) -> 'DenseMatrix':
        scalar = self.field(scalar)
        if self.field.p == 0:
            return DenseMatrix(self.field, self.rep.mul(scalar))
        return DenseMatrix(self.field, self.rep * self.field.gf(scalar))

    def transpose(self) -> 'DenseMatrix':
        if self.field.p == 0:
            return DenseMatrix(self.field, self.rep.transpose())
        return DenseMatrix(self.field, self.rep.T.copy())

    def hstack(self, other: 'DenseMatrix') -> 'DenseMatrix':
        self._check(other)
        if self.field.p == 0:
            return DenseMatrix(self.field, self.rep.hstack(other.rep))
        return DenseMatrix(self.field, self.field.gf(np.hstack([self.to_integers(), other.to_integers()])))

    def vstack(self, other: 'DenseMatrix') -> 'DenseMatrix':
        self._check(other)
        if self.field.p == 0:
            return DenseMatrix(self.field, self.rep.vstack(other.rep))
        return DenseMatrix(self.field, self.field.gf(np.vstack([self.to_integers(), other.to_integers()])))

    def is_zero(self) -> bool:
        if self.field.p == 0:
            return all(x == 0 for row in self.to_rows() for x in row)
        return not np.any(self.rep)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DenseMatrix) or other.field != self.field:
            return False
        return self.shape == other.shape and self.to_rows() == other.to_rows()

    def __repr__(self) -> str:
        return f"DenseMatrix({self.field.label}, {self.to_rows()})"


# ---------------------------------------------------------------------------
# Élimination
# ---------------------------------------------------------------------------

def rref(m: DenseMatrix) -> Tuple[DenseMatrix, Tuple[int, ...], int]:
    """
    Forme échelonnée réduite.

    Returns:
        (matrice réduite, colonnes pivots, rang) ; l'entrée n'est pas modifiée
    """
    if m.nrows == 0 or m.ncols == 0:
        return m, (), 0
    if m.field.p == 0:
        reduced, pivots = m.rep.rref()
        return DenseMatrix(m.field, reduced), tuple(int(j) for j in pivots), len(pivots)
    reduced = m.rep.copy().row_reduce()
    pivots = []
    for row in reduced.view(np.ndarray):
        nonzero = np.flatnonzero(row)
        if nonzero.size == 0:
            break
        pivots.append(int(nonzero[0]))
    return DenseMatrix(m.field, reduced), tuple(pivots), len(pivots)


def rank(m: DenseMatrix) -> int:
    return rref(m)[2]


def kernel(m: DenseMatrix) -> DenseMatrix:
    """
    Base du noyau {v : m·v = 0}, rangée en colonnes (matrice ncols × dim ker).
    """
    field = m.field
    reduced, pivots, r = rref(m)
    free = [j for j in range(m.ncols) if j not in set(pivots)]
    if field.p == 0:
        rows = reduced.to_rows() if r else []
        basis = []
        for f in free:
            v = [Fraction(0)] * m.ncols
            v[f] = Fraction(1)
            for i, pc in enumerate(pivots):
                v[pc] = -rows[i][f]
            basis.append(v)
        if not basis:
            return DenseMatrix.zeros(field, m.ncols, 0)
        return DenseMatrix.from_columns(field, basis, m.ncols)
    result = np.zeros((m.ncols, len(free)), dtype=np.int64)
    if free:
        result[free, list(range(len(free)))] = 1
        if r:
            top = reduced.to_integers()[:r][:, free]
            result[list(pivots), :] = (-top) % field.p
    return DenseMatrix(field, field.gf(result))


def inverse(m: DenseMatrix) -> DenseMatrix:
    """Inverse d'une matrice carrée inversible."""
    if m.nrows != m.ncols:
        raise UsageError(f"matrice non carrée {m.shape}")
    if m.nrows == 0:
        return m
    if m.field.p == 0:
        try:
            return DenseMatrix(m.field, m.rep.inv())
        except DMNonInvertibleMatrixError:
            raise DomainError("matrice singulière")
    try:
        return DenseMatrix(m.field, np.linalg.inv(m.rep))
    except np.linalg.LinAlgError:
        raise DomainError("matrice singulière")


def row_space(m: DenseMatrix) -> Tuple[DenseMatrix, Tuple[int, ...]]:
    """Base réduite de l'espace des lignes : (lignes non nulles de rref, pivots)."""
    reduced, pivots, r = rref(m)
    return reduced.select_rows(range(r)), pivots


def column_space(m: DenseMatrix) -> Tuple[DenseMatrix, Tuple[int, ...]]:
    """
    Base de l'image, en colonnes U telles que U restreinte aux lignes pivots
    soit l'identité : les coordonnées d'un vecteur de l'image se lisent sur
    ces lignes.
    """
    rows, pivots = row_space(m.transpose())
    return rows.transpose(), pivots


def kronecker(a: DenseMatrix, b: DenseMatrix) -> DenseMatrix:
    """Produit de Kronecker a ⊗ b."""
    a._check(b)
    field = a.field
    if field.p:
        return DenseMatrix.from_integers(field, np.kron(a.to_integers(), b.to_integers()) % field.p)
    ra, rb = a.to_rows(), b.to_rows()
    rows = [[ra[i][j] * rb[k][l] for j in range(a.ncols) for l in range(b.ncols)]
            for i in range(a.nrows) for k in range(b.nrows)]
    return DenseMatrix.from_rows(field, rows, a.ncols * b.ncols)


def intertwiners(pairs: Sequence[Tuple[DenseMatrix, DenseMatrix]], dim_source: int, dim_target: int,
                 field: Field) -> DenseMatrix:
    """
    Solutions X (dim_target × dim_source) de X·A = B·X pour tous les (A, B),
    vectorisées ligne par ligne et rangées en colonnes.
    """
    unknowns = dim_source * dim_target
    if unknowns == 0:
        return DenseMatrix.zeros(field, 0, 0)
    system = DenseMatrix.zeros(field, 0, unknowns)
    for a, b in pairs:
        block = (kronecker(DenseMatrix.identity(field, dim_target), a.transpose())
                 - kronecker(b, DenseMatrix.identity(field, dim_source)))
        system = system.vstack(block)
    return kernel(system)


# ---------------------------------------------------------------------------
# Polynômes
# ---------------------------------------------------------------------------

def _make_poly(field: Field, ascending: Sequence[Any]):
    descending = list(reversed(list(ascending)))
    if field.p == 0:
        return Poly([field(x) for x in descending], X, domain=QQ)
    return galois.Poly(field.gf([field(x) for x in descending]), field=field.gf)


def _poly_lcm(field: Field, polys: List[Any]):
    if field.p == 0:
        return reduce(lambda a, b: a.lcm(b), polys).monic()
    if len(polys) == 1:
        return polys[0]
    return galois.lcm(*polys)


def minimal_polynomial(m: DenseMatrix):
    """
    Polynôme minimal unitaire, par itération de Krylov sur les vecteurs de
    base et ppcm des polynômes locaux.
    """
    if m.nrows != m.ncols:
        raise UsageError(f"matrice non carrée {m.shape}")
    field = m.field
    size = m.nrows
    if size == 0:
        return _make_poly(field, [1])
    local = []
    for j in range(size):
        start = [0] * size
        start[j] = 1
        krylov = DenseMatrix.from_columns(field, [start], size)
        current = krylov
        while True:
            current = m @ current
            candidate = krylov.hstack(current)
            null = kernel(candidate)
            if null.ncols:
                coeffs = null.column(0)
                lead = coeffs[-1]
                local.append(_make_poly(field, [Fraction(c) / Fraction(lead) if field.p == 0
                                                else field.mul(c, field.inv(lead)) for c in coeffs]))
                break
            krylov = candidate
    return _poly_lcm(field, local)


def factor_squarefree_gfp(f) -> List[Tuple[Any, int]]:
    """
    Factorisation d'un polynôme sur GF(p) en irréductibles unitaires.

    Returns:
        liste de (facteur irréductible, multiplicité) ; vide pour une constante
    """
    if not isinstance(f, galois.Poly):
        raise UnsupportedError("la factorisation n'est disponible que sur GF(p)")
    if f.degree <= 0:
        return []
    monic = galois.Poly(f.coeffs / f.coeffs[0], field=f.field)
    factors, multiplicities = monic.factors()
    return [(g, int(k)) for g, k in zip(factors, multiplicities)]


# ---------------------------------------------------------------------------
# Algèbres commutatives et idempotents
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class StructureConstants:
    """
    Algèbre de dimension finie sur GF(p) : e_i e_j = Σ_k table[i, j, k] e_k.
    """
    field: Field
    table: np.ndarray
    one: Tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.one)

    def multiply(self, x, y):
        """Produit de deux vecteurs de coordonnées (tableaux galois)."""
        c = self.dimension
        return (x[:, None] * y[None, :]).reshape(-1) @ self._flat_table

    @cached_property
    def _flat_table(self):
        c = self.dimension
        return self.field.gf(self.table.reshape(c * c, c) % self.field.p)

    def unit(self):
        return self.field.gf(np.array(self.one, dtype=np.int64) % self.field.p)

    def basis_vector(self, i: int):
        v = self.field.gf.Zeros(self.dimension)
        v[i] = 1
        return v

    def power(self, x, exponent: int):
        result = self.unit()
        base = x
        while exponent:
            if exponent & 1:
                result = self.multiply(result, base)
            base = self.multiply(base, base)
            exponent >>= 1
        return result

    def left_multiplication(self, x) -> DenseMatrix:
        """Matrice de y -> x·y (colonnes = images des vecteurs de base)."""
        columns = [self.multiply(x, self.basis_vector(j)) for j in range(self.dimension)]
        array = np.stack([col.view(np.ndarray) for col in columns], axis=1)
        return DenseMatrix(self.field, self.field.gf(array))

    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.table % self.field.p,
                                   self.table.transpose(1, 0, 2) % self.field.p))


def _vector(field: Field, array) -> Any:
    return field.gf(np.asarray(array, dtype=np.int64) % field.p)


def _evaluate_poly(sc: StructureConstants, poly, x):
    """h(x) dans l'algèbre, par Horner."""
    result = sc.unit() * 0
    for c in poly.coeffs:
        result = sc.multiply(result, x) + sc.unit() * c
    return result


def _crt_idempotents(mu, factors: List[Any]) -> List[Any]:
    """Polynômes h_i avec h_i ≡ 1 mod g_i et h_i ≡ 0 mod g_j (j ≠ i)."""
    result = []
    for g in factors:
        cofactor = mu // g
        _, s, _ = galois.egcd(cofactor, g)
        result.append((s * cofactor) % mu)
    return result


def _subquotient(sc: StructureConstants, rows: DenseMatrix, pivots: Tuple[int, ...]):
    """Quotient de l'algèbre par le sous-espace de base réduite `rows`."""
    field = sc.field
    keep = [j for j in range(sc.dimension) if j not in set(pivots)]
    r = rows.to_integers() if rows.nrows else np.zeros((0, sc.dimension), dtype=np.int64)

    def reduce_vector(x):
        values = x.view(np.ndarray).astype(np.int64)
        for i, pc in enumerate(pivots):
            values = (values - values[pc] * r[i]) % field.p
        return values

    q = len(keep)
    table = np.zeros((q, q, q), dtype=np.int64)
    for a, ja in enumerate(keep):
        for b, jb in enumerate(keep):
            product = sc.multiply(sc.basis_vector(ja), sc.basis_vector(jb))
            table[a, b] = reduce_vector(product)[keep]
    one = tuple(int(v) for v in reduce_vector(sc.unit())[keep])
    return StructureConstants(field, table, one), keep


def split_idempotents(sc: StructureConstants) -> List[Any]:
    """
    Idempotents primitifs d'une algèbre commutative unitaire sur GF(p).

    1. radical J = noyau de x -> x^(p^m) avec p^m >= dim ;
    2. dans le quotient semi-simple, éclatement par les polynômes minimaux
       d'une base de la sous-algèbre {x : x^p = x} ;
    3. relèvement le long de J par e <- 3e² - 2e³.

    Returns:
        idempotents deux à deux orthogonaux de somme 1 (vecteurs galois)
    """
    field = sc.field
    if field.p == 0:
        raise UnsupportedError("split_idempotents ne travaille que sur GF(p)")
    if not sc.is_commutative():
        raise UsageError("l'algèbre n'est pas commutative")
    dim = sc.dimension
    if dim == 0:
        return []
    p = field.p
    gf = field.gf

    exponent = 1
    while p ** exponent < dim:
        exponent += 1
    frobenius = []
    for i in range(dim):
        x = sc.basis_vector(i)
        for _ in range(exponent):
            x = sc.power(x, p)
        frobenius.append(x.view(np.ndarray))
    radical = kernel(DenseMatrix(field, gf(np.stack(frobenius, axis=1))))
    rows, pivots = row_space(radical.transpose()) if radical.ncols else (DenseMatrix.zeros(field, 0, dim), ())
    quotient, keep = _subquotient(sc, rows, pivots)
    logger.debug("Radical de dimension %d, quotient de dimension %d", len(pivots), quotient.dimension)

    q = quotient.dimension
    frob_q = np.stack([quotient.power(quotient.basis_vector(a), p).view(np.ndarray) for a in range(q)], axis=1)
    fixed = kernel(DenseMatrix(field, gf(frob_q)) - DenseMatrix.identity(field, q))

    pieces = [quotient.unit()]
    for k in range(fixed.ncols):
        y = _vector(field, fixed.column(k))
        mu = minimal_polynomial(quotient.left_multiplication(y))
        factors = [g for g, _ in factor_squarefree_gfp(mu)]
        if len(factors) <= 1:
            continue
        selectors = [_evaluate_poly(quotient, h, y) for h in _crt_idempotents(mu, factors)]
        refined = []
        for e in pieces:
            for selector in selectors:
                piece = quotient.multiply(e, selector)
                if np.any(piece):
                    refined.append(piece)
        pieces = refined

    idempotents = []
    for piece in pieces:
        lifted = np.zeros(dim, dtype=np.int64)
        lifted[keep] = piece.view(np.ndarray)
        e = gf(lifted)
        while True:
            square = sc.multiply(e, e)
            following = square * 3 - sc.multiply(square, e) * 2
            if np.array_equal(following, e):
                break
            e = following
        idempotents.append(e)
    logger.info("%d idempotent(s) primitif(s) dans une algèbre de dimension %d", len(idempotents), dim)
    return idempotents


def corner_algebra(sc: StructureConstants, e) -> StructureConstants:
    """Structure de l'algèbre eC (unité e), pour vérifier la primitivité."""
    field = sc.field
    image, pivots = column_space(sc.left_multiplication(e))
    basis = [_vector(field, image.column(j)) for j in range(image.ncols)]
    size = len(basis)
    table = np.zeros((size, size, size), dtype=np.int64)
    for a in range(size):
        for b in range(size):
            product = sc.multiply(basis[a], basis[b]).view(np.ndarray)
            table[a, b] = product[list(pivots)]
    one = tuple(int(v) for v in e.view(np.ndarray)[list(pivots)])
    return StructureConstants(field, table, one)
