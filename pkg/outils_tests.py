"""
Exécution autonome des fichiers de test (python test_x.py), sans pytest.
"""
import time
import traceback


def lancer_tests(namespace: dict, titre: str) -> int:
    """Exécute les fonctions test_* de `namespace` dans l'ordre de définition."""
    print(titre)
    print("=" * 70)
    results = {}
    for name, func in list(namespace.items()):
        if not name.startswith("test_") or not callable(func):
            continue
        start = time.time()
        try:
            func()
            results[name] = True
            print(f"[OK] {name} ({time.time() - start:.2f}s)")
        except Exception:
            results[name] = False
            print(f"[ERREUR] {name}")
            traceback.print_exc()

    print(f"\n{'=' * 70}")
    print("RESUME DES TESTS")
    print(f"{'=' * 70}")
    passed = sum(results.values())
    print(f"  {passed}/{len(results)} tests réussis")
    print(f"\n{'=' * 70}\n")
    return 0 if passed == len(results) else 1
