"""Command-line interface.

Exit codes: 0 proved / accepted / valid, 1 unprovable / rejected / invalid,
2 bound reached, 3 usage or parse error.  The last line on stdout is always
``RESULT: <status>``.
"""
from __future__ import annotations

import argparse
import sys

from . import files, latex
from .axioms import axiom_matrix
from .core import Axiom, validate_signature
from .lnscalc import MissingSuccedent, ModeMismatch, interpret
from .search import (SYSTEMS, IllFormedGoal, SearchBudget, check_certificate,
                     prove)
from .syntax import ParseError, parse_lns, parse_sequent, show

EXIT = {"proved": 0, "accepted": 0, "valid": 0, "ok": 0,
        "unprovable": 1, "rejected": 1, "invalid": 1,
        "bound": 2, "error": 3}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="subexp", description="Proof search for subexponential linear logics.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    pr = sub.add_parser("prove", help="search for a proof")
    pr.add_argument("--sig", required=True)
    pr.add_argument("--system", required=True, choices=sorted(SYSTEMS))
    pr.add_argument("--goal", required=True, help='e.g. "(![i]a, ![j]b) |- ![i](a * b)"')
    pr.add_argument("--depth", type=int, default=12)
    pr.add_argument("--nodes", type=int, default=100_000)
    pr.add_argument("--cert", help="write the certificate here")
    pr.add_argument("--latex", help="write a LaTeX proof tree here")

    ch = sub.add_parser("check", help="re-check a certificate")
    ch.add_argument("--sig", required=True)
    ch.add_argument("--cert", required=True)

    ax = sub.add_parser("axioms", help="label x axiom provability matrix")
    ax.add_argument("--sig", required=True)
    ax.add_argument("--system", required=True, choices=sorted(SYSTEMS))
    ax.add_argument("--depth", type=int, default=12)
    ax.add_argument("--nodes", type=int, default=100_000)

    tr = sub.add_parser("translate", help="print the formula interpreting an LNS")
    tr.add_argument("--lns", required=True)

    sg = sub.add_parser("sig", help="signature utilities")
    sg_sub = sg.add_subparsers(dest="action", required=True, parser_class=_Parser)
    va = sg_sub.add_parser("validate")
    va.add_argument("file")
    return p


def _budget(args) -> SearchBudget:
    try:
        return SearchBudget(args.depth, args.nodes)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _cmd_prove(args, out, err) -> str:
    sig = files.load_signature(args.sig)
    parse = parse_sequent if SYSTEMS[args.system] is None else parse_lns
    goal = parse(args.goal)
    result = prove(goal, sig, args.system, _budget(args))
    print(f"goal: {show(goal)}", file=out)
    print(f"expansions: {result.expansions}", file=out)
    if result.status == "proved":
        cert = result.certificate
        print(f"proof: {cert.size} steps, height {cert.root.height}", file=out)
        for where, node in cert.root.walk():
            print(f"  {'  ' * len(where)}{node.rule.rule:<6} {show(node.conclusion)}", file=out)
        if args.cert:
            with open(args.cert, "w", encoding="utf-8") as fh:
                fh.write(files.certificate_to_text(cert))
        if args.latex:
            with open(args.latex, "w", encoding="utf-8") as fh:
                fh.write(latex.render_latex(cert))
    elif result.status == "bound":
        print(f"search stopped: {result.reason} bound reached", file=err)
    return result.status


def _cmd_check(args, out, err) -> str:
    sig = files.load_signature(args.sig)
    cert = files.load_certificate(args.cert)
    verdict = check_certificate(cert, sig)
    if verdict.accepted:
        print(f"certificate for {show(cert.goal)} accepted ({cert.size} steps)", file=out)
        return "accepted"
    print(f"rejected at node {list(verdict.node) if verdict.node is not None else '-'}: {verdict.reason}",
          file=err)
    return "rejected"


def _cmd_axioms(args, out, err) -> str:
    sig = files.load_signature(args.sig)
    names = {"proved": "Proved", "unprovable": "Unprovable", "bound": "Bound"}
    matrix = axiom_matrix(sig, args.system, _budget(args))
    for lab, row in matrix.items():
        cells = " ".join(f"{ax}:{names[row[ax].status]}" for ax in Axiom)
        print(f"{lab}  {cells}", file=out)
    return "ok"


def _cmd_translate(args, out, err) -> str:
    g = parse_lns(args.lns)
    print("# extended language: '|' is par", file=out)
    print(show(interpret(g)), file=out)
    return "ok"


def _cmd_sig(args, out, err) -> str:
    sig = files.load_signature(args.file, validate=False)
    problems = validate_signature(sig)
    for v in problems:
        print(f"violation: {v}", file=err)
    if problems:
        return "invalid"
    print(f"valid: {len(sig.labels)} labels, mode {sig.mode}, {sig.fingerprint()}", file=out)
    return "valid"


COMMANDS = {"prove": _cmd_prove, "check": _cmd_check, "axioms": _cmd_axioms,
            "translate": _cmd_translate, "sig": _cmd_sig}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = _parser().parse_args(argv)
        status = COMMANDS[args.command](args, out, err)
    except UsageError as exc:
        print(exc, file=err)
        status = "error"
    except files.FormatError as exc:
        for d in exc.diagnostics:
            print(f"error: {d}", file=err)
        status = "invalid" if getattr(args, "command", None) == "sig" else "error"
    except (ParseError, IllFormedGoal, ModeMismatch, MissingSuccedent, OSError) as exc:
        print(f"error: {exc}", file=err)
        status = "error"
    print(f"RESULT: {status}", file=out)
    return EXIT[status]


def main_exit():
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
