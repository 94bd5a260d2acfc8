"""
Tests de l'interface en ligne de commande : verbes, formats et codes de sortie.
"""
import io
import json
import sys

from cli import EXIT_OK, EXIT_USAGE, build_parser, run
from setup_encoding import setup_utf8_encoding
from verification import VerificationSuite


def invoke(argv, stdin_text=""):
    out = io.StringIO()
    code = run(argv, stdin=io.StringIO(stdin_text), stdout=out)
    return code, out.getvalue()


CROSS = {"r": 2, "s": 2, "pairs": [[1, 4], [2, 3]]}
IDENTITY = {"r": 2, "s": 2, "pairs": [[1, 3], [2, 4]]}
CUP_CAP = {"r": 2, "s": 2, "pairs": [[1, 2], [3, 4]]}


def test_dimension():
    assert invoke(["dim", "-n", "3"]) == (EXIT_OK, "15\n")
    assert invoke(["dim", "-n", "3", "(1)"]) == (EXIT_OK, "3\n")


def test_p_coeur():
    assert invoke(["pcore", "-p", "3", "(4,4,2,1)"]) == (EXIT_OK, "(1,1)\n")
    assert invoke(["pcore", "-p", "3", "(4,4,2,1)", "--json"]) == (EXIT_OK, "[1, 1]\n")


def test_mullineux():
    assert invoke(["mullineux", "-p", "3", "(2,1)"]) == (EXIT_OK, "(1,1,1)\n")
    code, _ = invoke(["mullineux", "-p", "3", "(4)"])
    assert code == EXIT_USAGE


def test_blocs():
    code, output = invoke(["blocks", "-n", "3", "-p", "5", "--json"])
    assert code == EXIT_OK
    data = json.loads(output)
    assert data["provenance"] == "classifier"
    blocks = {frozenset(tuple(lam) for lam in block) for block in data["blocks"]}
    assert blocks == {frozenset({(2, 1)}), frozenset({(3,), (1, 1, 1), (1,)})}
    code, text = invoke(["blocks", "-n", "3", "-p", "5"])
    assert code == EXIT_OK
    assert "B(ρ_2): {(2,1)}" in text


def test_blocs_oracle():
    code, output = invoke(["blocks", "-n", "3", "-p", "5", "--oracle", "--json"])
    assert code == EXIT_OK
    assert json.loads(output)["provenance"] == "oracle"
    assert len(json.loads(output)["blocks"]) == 2


def test_sortie_deterministe():
    first = invoke(["blocks", "-n", "6", "-p", "7"])
    assert invoke(["blocks", "-n", "6", "-p", "7"]) == first


def test_produit():
    code, output = invoke(["mult"], json.dumps([CROSS, CROSS]))
    assert code == EXIT_OK
    assert output.splitlines()[0] == "+[2,2: 1-3 2-4]"
    code, output = invoke(["mult", "--json"], json.dumps(CUP_CAP) + "\n" + json.dumps(CUP_CAP))
    assert code == EXIT_OK
    assert json.loads(output) == {"zero": True}
    code, output = invoke(["mult", "--json"], json.dumps([CUP_CAP, CROSS]))
    assert json.loads(output)["sign"] == -1


def test_phi():
    code, output = invoke(["phi"], json.dumps(CROSS))
    assert code == EXIT_OK
    assert output.splitlines()[0] == "-[2,2: 1-4 2-3]"
    code, output = invoke(["phi", "--json"], json.dumps(IDENTITY))
    assert json.loads(output) == dict(IDENTITY, sign=1)


def test_gram():
    code, output = invoke(["gram", "-n", "3", "-p", "5", "(2,1)", "--json"])
    assert code == EXIT_OK
    assert json.loads(output)["rank"] == 2


def test_verification_de_base():
    code, output = invoke(["basis-check", "-n", "2", "-p", "3"])
    assert code == EXIT_OK
    assert "0 violation(s)" in output


def test_erreurs_d_utilisation():
    assert invoke([])[0] == EXIT_USAGE
    assert invoke(["inconnu"])[0] == EXIT_USAGE
    assert invoke(["blocks", "-n", "3", "-p", "4"])[0] == EXIT_USAGE
    assert invoke(["blocks", "-n", "3", "-p", "2"])[0] == EXIT_USAGE
    assert invoke(["blocks", "-n", "-1", "-p", "3"])[0] == EXIT_USAGE
    assert invoke(["pcore", "-p", "3", "(1,2)"])[0] == EXIT_USAGE
    assert invoke(["mult"], json.dumps([CROSS]))[0] == EXIT_USAGE
    assert invoke(["mult"], "pas du json")[0] == EXIT_USAGE
    assert invoke(["gram", "-n", "3", "(2)"])[0] == EXIT_USAGE


def test_graine_par_defaut():
    parser = build_parser()
    assert parser.parse_args(["verify"]).seed == 0
    assert parser.parse_args(["verify", "--seed", "7"]).seed == 7
    assert VerificationSuite(max_n=2, seed=0, quick=True).report.seed == 0


class _Flux(io.StringIO):
    encoding_demande = None

    def reconfigure(self, encoding=None, **kwargs):
        self.encoding_demande = encoding


def test_encodage_utf8():
    saved = sys.stdout, sys.stderr
    flux, sans_reconfigure = _Flux(), io.StringIO()
    sys.stdout, sys.stderr = flux, sans_reconfigure
    try:
        setup_utf8_encoding()
    finally:
        sys.stdout, sys.stderr = saved
    assert flux.encoding_demande == "utf-8"


if __name__ == "__main__":
    import sys
    from outils_tests import lancer_tests
    sys.exit(lancer_tests(dict(globals()), "TESTS DE LA LIGNE DE COMMANDE"))
