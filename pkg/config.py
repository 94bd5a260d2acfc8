"""
Configuration du moteur : bornes de ressources, graine, répertoire de données.
"""
import json
import logging
import os
from dataclasses import dataclass, asdict, fields
from typing import Any, Dict, Optional

from errors import ResourceError, UsageError

logger = logging.getLogger(__name__)

CONFIG_FILE = "config.json"


@dataclass
class Configuration:
    """Paramètres globaux. Les bornes se modifient sans toucher au code."""
    centre_max_n: int = 5
    murphy_max_t: int = 7
    standard_basis_max_n: int = 6
    gram_max_n: int = 6
    seed: int = 0
    random_samples: int = 10000
    data_dir: str = "data"
    log_level: str = "INFO"

    def to_dict(self) -> Dict[str, Any]:
        """Convertit la configuration en dictionnaire pour la sérialisation JSON."""
        return asdict(self)

    @staticmethod
    def from_dict(data: Dict[str, Any]) -> 'Configuration':
        """Crée une configuration à partir d'un dictionnaire (clés inconnues refusées)."""
        known = {f.name for f in fields(Configuration)}
        unknown = set(data) - known
        if unknown:
            raise UsageError(f"Clés de configuration inconnues: {sorted(unknown)}")
        return Configuration(**data)

    @staticmethod
    def load(path: str = CONFIG_FILE) -> 'Configuration':
        """Charge la configuration depuis un fichier JSON, ou les valeurs par défaut."""
        if not os.path.exists(path):
            return Configuration()
        with open(path, 'r', encoding='utf-8') as f:
            data = json.load(f)
        logger.info("Configuration chargée depuis %s", path)
        return Configuration.from_dict(data)

    def save(self, path: str = CONFIG_FILE) -> None:
        """Sauvegarde la configuration en JSON."""
        with open(path, 'w', encoding='utf-8') as f:
            json.dump(self.to_dict(), f, ensure_ascii=False, indent=2)

    def check_bound(self, bound: str, value: int) -> None:
        """Lève ResourceError si `value` dépasse la borne nommée."""
        limit = getattr(self, bound)
        if value > limit:
            raise ResourceError(bound, value, limit)


_configuration: Optional[Configuration] = None


def get_configuration() -> Configuration:
    """Retourne la configuration du processus (chargée paresseusement)."""
    global _configuration
    if _configuration is None:
        _configuration = Configuration.load()
    return _configuration


def set_configuration(configuration: Configuration) -> None:
    """Remplace la configuration du processus."""
    global _configuration
    _configuration = configuration
