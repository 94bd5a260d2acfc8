"""
Hiérarchie des exceptions du moteur de calcul.
"""


class PeriplecticError(Exception):
    """Erreur de base du projet."""


class UsageError(PeriplecticError):
    """Entrée mal formée ou incompatible (corps différents, p composé, ...)."""


class DomainError(PeriplecticError):
    """Objet mathématiquement hors du domaine de l'opération."""


class UnsupportedError(PeriplecticError):
    """Cas volontairement non pris en charge (caractéristique 2, ...)."""


class ResourceError(PeriplecticError):
    """Borne de ressources configurée dépassée."""

    def __init__(self, bound: str, value: int, limit: int):
        super().__init__(f"{bound} = {value} dépasse la borne configurée ({limit})")
        self.bound = bound
        self.value = value
        self.limit = limit


class ConsistencyError(PeriplecticError):
    """Une vérification interne a échoué : le résultat n'est pas fiable."""
