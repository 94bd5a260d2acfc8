"""
Interface en ligne de commande du moteur périplectique.

Verbes : blocks, verify, mult, phi, pcore, mullineux, dim, gram, basis-check.
Codes de sortie : 0 succès, 1 vérification échouée ou incohérence interne,
2 erreur d'utilisation (entrée, domaine, cas non pris en charge, borne).
"""
import argparse
import contextlib
import json
import logging
import sys
from typing import Any, Dict, List, Optional, TextIO

from config import get_configuration
from errors import ConsistencyError, DomainError, PeriplecticError, ResourceError, UnsupportedError, UsageError
from models import BrauerDiagram, Partition, SignedDiagram
from setup_encoding import setup_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class _Parser(argparse.ArgumentParser):
    """argparse lève UsageError au lieu de quitter le processus."""

    def error(self, message):
        raise UsageError(message)


def _dump(data: Any, stream: TextIO) -> None:
    stream.write(json.dumps(data, ensure_ascii=False, indent=2, sort_keys=False) + "\n")


def _read_diagrams(stream: TextIO, count: int) -> List[BrauerDiagram]:
    """Lit `count` diagrammes JSON : une liste, ou des objets concaténés."""
    text = stream.read()
    decoder = json.JSONDecoder()
    documents, position = [], 0
    try:
        while True:
            while position < len(text) and text[position].isspace():
                position += 1
            if position >= len(text):
                break
            document, position = decoder.raw_decode(text, position)
            documents.append(document)
    except json.JSONDecodeError as e:
        raise UsageError(f"JSON illisible sur l'entrée standard: {e}")
    if len(documents) == 1 and isinstance(documents[0], list):
        documents = documents[0]
    if len(documents) != count:
        raise UsageError(f"{count} diagramme(s) attendu(s), {len(documents)} lu(s)")
    return [BrauerDiagram.from_dict(d) for d in documents]


def _print_signed(result: SignedDiagram, as_json: bool, stream: TextIO) -> None:
    if as_json:
        _dump(result.to_dict(), stream)
    else:
        stream.write(f"{result}\n")
        if not result.is_zero:
            stream.write(result.diagram.to_ascii() + "\n")


# ===== Verbes =====

def cmd_blocks(args, out: TextIO) -> int:
    from blocks import classify, oracle

    decomposition = oracle(args.n, args.p) if args.oracle else classify(args.n, args.p)
    if args.excel or args.save:
        from data_manager import DataManager
        manager = DataManager(get_configuration().data_dir)
        if args.save:
            manager.sauvegarder_decomposition(decomposition)
        if args.excel:
            manager.exporter_excel([decomposition], args.excel)
    if args.json:
        _dump(decomposition.to_dict(), out)
        return EXIT_OK
    out.write(f"Blocs de A_{args.n} en caractéristique {args.p} "
              f"({decomposition.provenance.value}) : {len(decomposition.blocks)}\n")
    for index, block in enumerate(decomposition.blocks):
        label = decomposition.labels[index] if decomposition.labels else f"bloc {index + 1}"
        out.write(f"  {label}: {{{', '.join(str(lam) for lam in block)}}}\n")
    return EXIT_OK


def cmd_verify(args, out: TextIO) -> int:
    from verification import VerificationSuite

    suite = VerificationSuite(max_n=args.max_n, seed=args.seed, quick=args.quick)
    if args.json:
        # stdout reste réservé au JSON
        with contextlib.redirect_stdout(sys.stderr):
            report = suite.run_all_tests()
    else:
        report = suite.run_all_tests()
    if args.save:
        from data_manager import DataManager
        DataManager(get_configuration().data_dir).sauvegarder_rapport(report.to_dict())
    if args.json:
        _dump(report.to_dict(), out)
    return EXIT_OK if report.all_passed else EXIT_FAILURE


def cmd_mult(args, out: TextIO) -> int:
    from diagrams import compose_signed

    d1, d2 = _read_diagrams(args.stdin, 2)
    _print_signed(compose_signed(d1, d2), args.json, out)
    return EXIT_OK


def cmd_phi(args, out: TextIO) -> int:
    from layers import phi

    (d,) = _read_diagrams(args.stdin, 1)
    _print_signed(phi(d), args.json, out)
    return EXIT_OK


def cmd_pcore(args, out: TextIO) -> int:
    from partitions import p_core

    if args.p < 2:
        raise UsageError("le p-cœur demande p ≥ 2")
    core = p_core(Partition.parse(args.partition), args.p)
    out.write(json.dumps(core.to_list()) + "\n" if args.json else f"{core}\n")
    return EXIT_OK


def cmd_mullineux(args, out: TextIO) -> int:
    from partitions import mullineux

    lam = Partition.parse(args.partition)
    if args.oracle:
        from algebra import mullineux_oracle
        image = mullineux_oracle(lam, args.p)
    else:
        image = mullineux(lam, args.p)
    out.write(json.dumps(image.to_list()) + "\n" if args.json else f"{image}\n")
    return EXIT_OK


def cmd_dim(args, out: TextIO) -> int:
    if args.partition is None:
        from diagrams import dimension
        value = dimension(args.n)
    else:
        from modules import standard_dimension
        value = standard_dimension(args.n, Partition.parse(args.partition))
    out.write(f"{value}\n")
    return EXIT_OK


def cmd_gram(args, out: TextIO) -> int:
    from linalg import rank
    from modules import gram_matrix

    lam = Partition.parse(args.partition)
    matrix = gram_matrix(args.n, lam, args.p)
    rows = [[str(x) for x in row] for row in matrix.to_rows()]
    value = rank(matrix)
    if args.json:
        _dump({'n': args.n, 'p': args.p, 'lambda': lam.to_list(), 'rank': value, 'gram': rows}, out)
        return EXIT_OK
    out.write(f"Forme de Gram de W_{args.n}{lam} (p = {args.p}), rang {value}\n")
    for row in rows:
        out.write("  " + " ".join(f"{x:>4}" for x in row) + "\n")
    return EXIT_OK


def cmd_basis_check(args, out: TextIO) -> int:
    from algebra import standard_basis

    basis = standard_basis(args.n, args.p)
    basis.inverse  # DomainError si la famille n'est pas une base
    violations = basis.triangularity_violations()
    data: Dict[str, Any] = {
        'n': args.n, 'p': args.p, 'size': len(basis.labels),
        'violations': [[name, str(label[0]), str(mu)] for name, label, mu in violations],
    }
    if args.json:
        _dump(data, out)
    else:
        out.write(f"Base standard de A_{args.n} (p = {args.p}) : {data['size']} éléments, "
                  f"{len(violations)} violation(s) de triangularité\n")
        for name, lam, mu in data['violations']:
            out.write(f"  [ERREUR] {name} · C^{lam} contient un terme {mu}\n")
    return EXIT_FAILURE if violations else EXIT_OK


# ===== Analyse des arguments =====

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="periplectique", description="Blocs de l'algèbre de Brauer périplectique")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument('-v', '--verbose', action='store_true', help="journal DEBUG")
    verbosity.add_argument('-q', '--quiet', action='store_true', help="journal WARNING")
    sub = parser.add_subparsers(dest='verb', parser_class=_Parser)
    sub.required = True

    blocks = sub.add_parser('blocks', help="décomposition en blocs de Λ_n")
    blocks.add_argument('-n', type=int, required=True)
    blocks.add_argument('-p', type=int, required=True)
    blocks.add_argument('--oracle', action='store_true', help="idempotents centraux au lieu du classifieur")
    blocks.add_argument('--json', action='store_true')
    blocks.add_argument('--excel', metavar='FICHIER', help="export Excel dans data/exports")
    blocks.add_argument('--save', action='store_true', help="sauvegarde JSON dans data/blocs")
    blocks.set_defaults(func=cmd_blocks)

    verify = sub.add_parser('verify', help="grille de vérification complète")
    verify.add_argument('--max-n', type=int, default=5)
    verify.add_argument('--seed', type=int, default=0)
    verify.add_argument('--quick', action='store_true')
    verify.add_argument('--json', action='store_true')
    verify.add_argument('--save', action='store_true', help="sauvegarde du rapport dans data/rapports")
    verify.set_defaults(func=cmd_verify)

    mult = sub.add_parser('mult', help="produit signé de deux diagrammes JSON lus sur stdin")
    mult.add_argument('--json', action='store_true')
    mult.set_defaults(func=cmd_mult)

    phi = sub.add_parser('phi', help="image par φ d'un diagramme JSON lu sur stdin")
    phi.add_argument('--json', action='store_true')
    phi.set_defaults(func=cmd_phi)

    pcore = sub.add_parser('pcore', help="p-cœur d'une partition")
    pcore.add_argument('-p', type=int, required=True)
    pcore.add_argument('partition')
    pcore.add_argument('--json', action='store_true')
    pcore.set_defaults(func=cmd_pcore)

    mull = sub.add_parser('mullineux', help="conjuguée de Mullineux")
    mull.add_argument('-p', type=int, required=True)
    mull.add_argument('partition')
    mull.add_argument('--oracle', action='store_true', help="calcul par torsion du signe")
    mull.add_argument('--json', action='store_true')
    mull.set_defaults(func=cmd_mullineux)

    dim = sub.add_parser('dim', help="dim A_n, ou dim W_n(λ) avec une partition")
    dim.add_argument('-n', type=int, required=True)
    dim.add_argument('partition', nargs='?')
    dim.set_defaults(func=cmd_dim)

    gram = sub.add_parser('gram', help="forme de Gram de W_n(λ)")
    gram.add_argument('-n', type=int, required=True)
    gram.add_argument('-p', type=int, default=0)
    gram.add_argument('partition')
    gram.add_argument('--json', action='store_true')
    gram.set_defaults(func=cmd_gram)

    check = sub.add_parser('basis-check', help="base standard : inversibilité et triangularité")
    check.add_argument('-n', type=int, required=True)
    check.add_argument('-p', type=int, default=0)
    check.add_argument('--json', action='store_true')
    check.set_defaults(func=cmd_basis_check)
    return parser


def run(argv: Optional[List[str]] = None, stdin: Optional[TextIO] = None,
        stdout: Optional[TextIO] = None) -> int:
    """Exécute une commande et retourne le code de sortie."""
    out = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        setup_logging("DEBUG" if args.verbose else "WARNING" if args.quiet else get_configuration().log_level)
        if getattr(args, 'n', 0) < 0:
            raise UsageError("n doit être positif ou nul")
        args.stdin = stdin or sys.stdin
        return args.func(args, out)
    except (UsageError, DomainError, UnsupportedError, ResourceError) as e:
        sys.stderr.write(f"Erreur: {e}\n")
        return EXIT_USAGE
    except ConsistencyError as e:
        logger.error("Incohérence interne: %s", e)
        sys.stderr.write(f"Incohérence: {e}\n")
        return EXIT_FAILURE
    except PeriplecticError as e:
        sys.stderr.write(f"Erreur: {e}\n")
        return EXIT_FAILURE
