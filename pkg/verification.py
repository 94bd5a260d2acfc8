"""
Grille de vérification : chaque critère d'acceptation est exécuté comme un
contrôle chronométré, puis un rapport comparatif est produit.
"""
import itertools
import logging
import random
import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from algebra import generators_span, mullineux_oracle, standard_basis
from blocks import (check_linkage_closure, check_p_core_linkage, check_transpose_symmetry,
                    check_two_hook_linkage, classify, oracle, single_block_bound)
from config import Configuration, get_configuration
from data_generator import random_pairs, random_partition, random_triples
from diagrams import compose_signed, dimension, enumerate_diagrams, special_diagrams
from errors import PeriplecticError
from layers import compose_via_layers, coxeter_length, phi
from models import BlockDecomposition, BrauerDiagram, Provenance, SignedDiagram
from modules import (check_decomposition_support, check_globalisation, check_simple_duality, gram_rank, localise,
                     localised_dimension_expected, standard_dimension, standard_module)
from partitions import (enumerate_lambda, is_p_restricted, mullineux, p_core, partitions_of, remove_rim_hooks,
                        transpose, two_core)

logger = logging.getLogger(__name__)

CheckOutcome = Tuple[bool, str]

ORACLE_PRIMES = (3, 5, 7, 11)
LINKAGE_PRIMES = (3, 5, 7)


@dataclass
class CheckResult:
    """Résultat d'un contrôle de la grille."""
    nom: str
    succes: bool
    duree: float
    details: str = ""


@dataclass
class VerificationReport:
    """Rapport complet : contrôles, paramètres et durée totale."""
    resultats: List[CheckResult] = field(default_factory=list)
    max_n: int = 5
    seed: int = 0
    quick: bool = False
    duree_totale: float = 0.0

    @property
    def all_passed(self) -> bool:
        return all(r.succes for r in self.resultats)

    def to_dict(self) -> Dict:
        data = asdict(self)
        data['all_passed'] = self.all_passed
        return data


def _signed_product(x: SignedDiagram, d: BrauerDiagram) -> SignedDiagram:
    if x.is_zero:
        return x
    return compose_signed(x.diagram, d).times(x.sign)


def _left_product(d: BrauerDiagram, x: SignedDiagram) -> SignedDiagram:
    if x.is_zero:
        return x
    return compose_signed(d, x.diagram).times(x.sign)


def _phi_signed(x: SignedDiagram) -> SignedDiagram:
    if x.is_zero:
        return x
    return phi(x.diagram).times(x.sign)


class VerificationSuite:
    """Exécute les critères d'acceptation et les contrôles supplémentaires."""

    def __init__(self, config: Optional[Configuration] = None, max_n: int = 5,
                 seed: Optional[int] = None, quick: bool = False):
        self.config = config or get_configuration()
        self.max_n = max_n
        self.seed = self.config.seed if seed is None else seed
        self.quick = quick
        self.samples = min(self.config.random_samples, 500) if quick else self.config.random_samples
        self.report = VerificationReport(max_n=max_n, seed=self.seed, quick=quick)
        self._oracles: Dict[Tuple[int, int], BlockDecomposition] = {}

    def _oracle(self, n: int, p: int) -> BlockDecomposition:
        if (n, p) not in self._oracles:
            self._oracles[(n, p)] = oracle(n, p)
        return self._oracles[(n, p)]

    def run_check(self, nom: str, func: Callable[[], CheckOutcome]) -> CheckResult:
        """Exécute un contrôle et mesure le temps."""
        print(f"\n{'=' * 70}\n{nom}\n{'=' * 70}")
        start_time = time.time()
        try:
            succes, details = func()
        except PeriplecticError as e:
            succes, details = False, f"{type(e).__name__}: {e}"
        elapsed_time = time.time() - start_time
        result = CheckResult(nom, succes, round(elapsed_time, 3), details)
        self.report.resultats.append(result)
        print(f"  {'[OK]' if succes else '[ERREUR]'} {details} ({elapsed_time:.2f}s)")
        return result

    # ===== Critères =====

    def check_theorem(self) -> CheckOutcome:
        mismatches = []
        for n in range(2, self.max_n + 1):
            for p in ORACLE_PRIMES:
                if not classify(n, p).same_partition(self._oracle(n, p)):
                    mismatches.append((n, p))
        count = (self.max_n - 1) * len(ORACLE_PRIMES)
        return not mismatches, f"{count} cas (n, p), désaccords: {mismatches}"

    def check_single_block_bound(self) -> CheckOutcome:
        failures = [(n, p) for p in (3, 5, 7) for n in range(single_block_bound(p), 13)
                    if len(classify(n, p).blocks) != 1]
        return not failures, f"cas à plusieurs blocs: {failures}"

    def check_characteristic_zero(self) -> CheckOutcome:
        failures = []
        for n in range(0, 13):
            fibres = {}
            for lam in enumerate_lambda(n):
                fibres.setdefault(two_core(lam), set()).add(lam)
            expected = BlockDecomposition(n, 0, tuple(tuple(f) for f in fibres.values()), Provenance.CLASSIFIER)
            if not classify(n, 0).same_partition(expected):
                failures.append((n, 0))
        for p in (7, 11, 13):
            for n in range(0, p):
                if not classify(n, p).same_partition(classify(n, 0)):
                    failures.append((n, p))
        return not failures, f"désaccords: {failures}"

    def check_sign_rule(self) -> CheckOutcome:
        basis = enumerate_diagrams(3, 3)
        failures = 0
        for a, b, c in itertools.product(basis, repeat=3):
            if _signed_product(compose_signed(a, b), c) != _left_product(a, compose_signed(b, c)):
                failures += 1
        for n in (4, 5):
            for a, b, c in random_triples(n, self.samples, self.seed):
                if _signed_product(compose_signed(a, b), c) != _left_product(a, compose_signed(b, c)):
                    failures += 1
        layers_failures = 0
        for n in range(0, 4):
            for a, b in itertools.product(enumerate_diagrams(n, n), repeat=2):
                if compose_signed(a, b) != compose_via_layers(a, b):
                    layers_failures += 1
        for a, b in random_pairs(4, self.samples, self.seed):
            if compose_signed(a, b) != compose_via_layers(a, b):
                layers_failures += 1
        return failures == 0 and layers_failures == 0, \
            f"associativité: {failures} échec(s), couches: {layers_failures} échec(s)"

    def check_phi(self) -> CheckOutcome:
        failures = 0
        for n in range(1, 5):
            for a, b in random_pairs(n, min(self.samples, 1000), self.seed):
                if _phi_signed(compose_signed(a, b)) != _signed_product(phi(b), phi(a).diagram).times(phi(a).sign):
                    failures += 1
            for w in itertools.permutations(range(n)):
                d = BrauerDiagram.from_permutation(w)
                inverse = BrauerDiagram.from_permutation(tuple(w.index(i) for i in range(n)))
                if phi(d) != SignedDiagram(-1 if coxeter_length(w) % 2 else 1, inverse):
                    failures += 1
        cross = BrauerDiagram.from_permutation((1, 0))
        cap = BrauerDiagram(0, 2, ((1, 2),))
        cup = BrauerDiagram(2, 0, ((1, 2),))
        literal = (phi(cross) == SignedDiagram(-1, cross) and phi(cap) == SignedDiagram(1, cup)
                   and phi(cup) == SignedDiagram(-1, cap))
        return failures == 0 and literal, f"{failures} échec(s), générateurs: {'ok' if literal else 'faux'}"

    def check_idempotents(self) -> CheckOutcome:
        failures = []
        for size in range(3, 9):
            epsilon, g, f = special_diagrams(size)
            if compose_signed(epsilon, epsilon) != SignedDiagram(1, epsilon):
                failures.append(('ε²', size))
            if compose_signed(f, g) != SignedDiagram(1, BrauerDiagram.identity(size - 2)):
                failures.append(('fg', size))
            if compose_signed(g, f) != SignedDiagram(1, epsilon):
                failures.append(('gf', size))
        for n in range(3, min(self.max_n, 5) + 1):
            for lam in enumerate_lambda(n):
                if localise(standard_module(n, lam, 3)).dimension != localised_dimension_expected(n, lam):
                    failures.append(('localisation', n, str(lam)))
        return not failures, f"échecs: {failures}"

    def check_dimensions(self) -> CheckOutcome:
        failures = [n for n in range(0, 7)
                    if sum(standard_dimension(n, lam) ** 2 for lam in enumerate_lambda(n)) != dimension(n)
                    or len(enumerate_diagrams(n, n)) != dimension(n)]
        return not failures, f"n en échec: {failures}"

    def check_standard_basis(self) -> CheckOutcome:
        failures = []
        for n in range(1, 5):
            if not generators_span(n):
                failures.append(('générateurs', n))
            for p in (0, 3, 5):
                basis = standard_basis(n, p)
                basis.inverse  # DomainError si la famille n'est pas une base
                violations = basis.triangularity_violations()
                if violations:
                    failures.append(('triangularité', n, p, len(violations)))
        return not failures, f"échecs: {failures}"

    def check_simplicity(self) -> CheckOutcome:
        failures = []
        for n in range(1, 5):
            for p in (3, 5):
                restricted = set(enumerate_lambda(n, p, restricted_only=True))
                for lam in enumerate_lambda(n):
                    if (gram_rank(n, lam, p) > 0) != (lam in restricted):
                        failures.append((n, p, str(lam)))
        return not failures, f"échecs: {failures}"

    def check_combinatorics(self) -> CheckOutcome:
        rng = random.Random(self.seed)
        failures = []
        orders = 10 if self.quick else 100
        for _ in range(200):
            lam = random_partition(20, rng)
            for p in (2, 3, 5, 7):
                core = p_core(lam, p)
                for _ in range(orders):
                    if remove_rim_hooks(lam, p, random.Random(rng.random())) != core:
                        failures.append(('p-cœur', str(lam), p))
                        break
        for p in (3, 5, 7):
            for size in range(0, 9):
                for lam in partitions_of(size):
                    if not is_p_restricted(lam, p):
                        continue
                    image = mullineux(lam, p)
                    if not is_p_restricted(image, p) or mullineux(image, p) != lam:
                        failures.append(('involution', str(lam), p))
                    if p_core(lam, p) == lam and image != transpose(lam):
                        failures.append(('cœur', str(lam), p))
        for size in range(0, 5 if self.quick else 7):
            for lam in partitions_of(size):
                if is_p_restricted(lam, 3) and mullineux(lam, 3) != mullineux_oracle(lam, 3):
                    failures.append(('oracle', str(lam), 3))
        return not failures, f"échecs: {failures[:10]}"

    def check_linkage(self) -> CheckOutcome:
        failures = []
        for n in range(2, self.max_n + 1):
            for p in LINKAGE_PRIMES:
                decomposition = self._oracle(n, p)
                if check_two_hook_linkage(n, p, decomposition):
                    failures.append(('dominos', n, p))
                if check_transpose_symmetry(n, p, decomposition):
                    failures.append(('transposition', n, p))
                if check_p_core_linkage(n, p, decomposition):
                    failures.append(('p-cœur', n, p))
                if check_linkage_closure(n, p, decomposition):
                    failures.append(('fermeture', n, p))
        return not failures, f"échecs: {failures}"

    def check_supplements(self) -> CheckOutcome:
        failures = []
        for n in range(1, 5):
            for p in (3, 5):
                if check_simple_duality(n, p):
                    failures.append(('dualité', n, p))
                if check_linkage_closure(n, p):
                    failures.append(('fermeture', n, p))
        for n in range(1, 4):
            for lam in enumerate_lambda(n):
                if not check_globalisation(n, lam, 3):
                    failures.append(('globalisation', n, str(lam)))
        return not failures, f"échecs: {failures}"

    def check_decomposition_support(self) -> CheckOutcome:
        failures = []
        for n in range(1, min(self.max_n, 4 if self.quick else 5) + 1):
            for p in (3, 5):
                failures += [(kind, n, p, str(lam), str(mu))
                             for kind, lam, mu in check_decomposition_support(n, p)]
        return not failures, f"échecs: {failures}"

    # ===== Exécution =====

    def run_all_tests(self) -> VerificationReport:
        """Exécute tous les contrôles et génère le rapport."""
        print("\n" + "=" * 70)
        print("VÉRIFICATION DU MOTEUR PÉRIPLECTIQUE")
        print("=" * 70)
        print("Configuration:")
        print(f"  - n maximal (oracle): {self.max_n}")
        print(f"  - graine: {self.seed}")
        print(f"  - échantillons aléatoires: {self.samples}")

        start = time.time()
        self.run_check("1. Classification = oracle", self.check_theorem)
        self.run_check("2. Borne d'un seul bloc", self.check_single_block_bound)
        self.run_check("3. Caractéristique 0", self.check_characteristic_zero)
        self.run_check("4. Règle des signes", self.check_sign_rule)
        self.run_check("5. Anti-automorphisme φ", self.check_phi)
        self.run_check("6. Idempotents ε, f, g et localisation", self.check_idempotents)
        self.run_check("7. Dimensions", self.check_dimensions)
        self.run_check("8. Base standard", self.check_standard_basis)
        self.run_check("9. Critère de simplicité", self.check_simplicity)
        self.run_check("10. Combinatoire", self.check_combinatorics)
        self.run_check("11. Liaisons", self.check_linkage)
        self.run_check("12. Dualité, fermeture, globalisation", self.check_supplements)
        self.run_check("13. Support des multiplicités", self.check_decomposition_support)
        self.report.duree_totale = round(time.time() - start, 3)
        self.generate_report()
        return self.report

    def generate_report(self) -> VerificationReport:
        """Affiche le tableau récapitulatif et retourne le rapport."""
        print("\n" + "=" * 70)
        print("RESUME DE LA VERIFICATION")
        print("=" * 70)
        for result in self.report.resultats:
            statut = "[OK]    " if result.succes else "[ERREUR]"
            print(f"  {statut} {result.nom:<45} {result.duree:>8.2f}s")
        passed = sum(1 for r in self.report.resultats if r.succes)
        print(f"\nTotal: {passed}/{len(self.report.resultats)} contrôles réussis "
              f"en {self.report.duree_totale:.2f}s")
        return self.report
