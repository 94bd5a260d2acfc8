"""
Module de gestion des données : décompositions en blocs, rapports de
vérification et exports Excel.
"""
import json
import logging
import os
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

from models import BlockDecomposition, Provenance
from partitions import is_p_restricted, p_core, two_core

logger = logging.getLogger(__name__)


class DataManager:
    """Gestionnaire de données pour charger et sauvegarder les résultats."""

    def __init__(self, data_dir: str = "data"):
        self.data_dir = data_dir
        self.blocs_dir = os.path.join(data_dir, "blocs")
        self.rapports_dir = os.path.join(data_dir, "rapports")
        self.exports_dir = os.path.join(data_dir, "exports")

        # Créer les dossiers s'ils n'existent pas
        for dir_path in [self.blocs_dir, self.rapports_dir, self.exports_dir]:
            os.makedirs(dir_path, exist_ok=True)

    # ===== Gestion des décompositions =====

    @staticmethod
    def _nom_decomposition(n: int, p: int, provenance: Provenance) -> str:
        return f"blocs_n{n}_p{p}_{provenance.value}"

    def sauvegarder_decomposition(self, decomposition: BlockDecomposition) -> str:
        """Sauvegarde une décomposition dans un fichier JSON et retourne son chemin."""
        nom = self._nom_decomposition(decomposition.n, decomposition.p, decomposition.provenance)
        file_path = os.path.join(self.blocs_dir, f"{nom}.json")
        with open(file_path, 'w', encoding='utf-8') as f:
            json.dump(decomposition.to_dict(), f, ensure_ascii=False, indent=2)
        logger.info("Décomposition sauvegardée: %s", file_path)
        return file_path

    def charger_decomposition(self, n: int, p: int,
                              provenance: Provenance = Provenance.CLASSIFIER) -> Optional[BlockDecomposition]:
        """Charge une décomposition, ou None si elle n'a pas été calculée."""
        file_path = os.path.join(self.blocs_dir, f"{self._nom_decomposition(n, p, provenance)}.json")
        if not os.path.exists(file_path):
            return None
        with open(file_path, 'r', encoding='utf-8') as f:
            data = json.load(f)
        return BlockDecomposition.from_dict(data)

    def lister_decompositions(self) -> List[str]:
        """Liste toutes les décompositions disponibles."""
        noms = []
        for filename in os.listdir(self.blocs_dir):
            if filename.endswith('.json'):
                noms.append(filename[:-5])  # Enlever .json
        return sorted(noms)

    def supprimer_decomposition(self, n: int, p: int, provenance: Provenance = Provenance.CLASSIFIER) -> bool:
        """Supprime une décomposition."""
        file_path = os.path.join(self.blocs_dir, f"{self._nom_decomposition(n, p, provenance)}.json")
        if os.path.exists(file_path):
            os.remove(file_path)
            return True
        return False

    # ===== Gestion des rapports =====

    def sauvegarder_rapport(self, rapport: Dict[str, Any], nom: str = "verification") -> str:
        """Sauvegarde un rapport de vérification (dictionnaire) en JSON."""
        file_path = os.path.join(self.rapports_dir, f"{nom}.json")
        with open(file_path, 'w', encoding='utf-8') as f:
            json.dump(rapport, f, ensure_ascii=False, indent=2)
        return file_path

    def charger_rapport(self, nom: str = "verification") -> Optional[Dict[str, Any]]:
        """Charge un rapport de vérification."""
        file_path = os.path.join(self.rapports_dir, f"{nom}.json")
        if not os.path.exists(file_path):
            return None
        with open(file_path, 'r', encoding='utf-8') as f:
            return json.load(f)

    # ===== Export Excel =====

    @staticmethod
    def tableau_decomposition(decomposition: BlockDecomposition) -> pd.DataFrame:
        """Une ligne par partition : bloc, étiquette, taille, cœurs, restriction."""
        lignes = []
        for index, block in enumerate(decomposition.blocks):
            etiquette = decomposition.labels[index] if decomposition.labels else ""
            for lam in block:
                lignes.append({
                    "Bloc": index + 1,
                    "Étiquette": etiquette,
                    "Partition": str(lam),
                    "Taille": lam.size,
                    "2-cœur": str(two_core(lam)),
                    "p-cœur": str(p_core(lam, decomposition.p)) if decomposition.p else "",
                    "p-restreinte": is_p_restricted(lam, decomposition.p),
                })
        return pd.DataFrame(lignes)

    def exporter_excel(self, decompositions: Sequence[BlockDecomposition],
                       filename: str = "blocs.xlsx") -> str:
        """Exporte les décompositions vers Excel (une feuille chacune, plus un résumé)."""
        file_path = os.path.join(self.exports_dir, filename)
        with pd.ExcelWriter(file_path, engine='openpyxl') as writer:
            resume = []
            for decomposition in decompositions:
                sheet = f"n{decomposition.n}_p{decomposition.p}_{decomposition.provenance.value}"[:31]
                self.tableau_decomposition(decomposition).to_excel(writer, sheet_name=sheet, index=False)
                resume.append({
                    "n": decomposition.n,
                    "p": decomposition.p,
                    "Provenance": decomposition.provenance.value,
                    "Nombre de blocs": len(decomposition.blocks),
                    "Nombre de partitions": sum(len(b) for b in decomposition.blocks),
                })
            pd.DataFrame(resume).to_excel(writer, sheet_name='Résumé', index=False)
        logger.info("Export Excel: %s", file_path)
        return file_path
