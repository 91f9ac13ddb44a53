"""``ybx`` command-line front end.

Exit codes: 0 success, 1 verification failure (witness as JSON on stdout),
2 input error (message on stderr, JSON pointer for schema errors).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import serialize as ser
from .braided import check_braid, full_report, verdict_ok
from .errors import (BraceInvalid, BraidFailure, CapExceeded, CocycleInvalid, DegenerateInput,
                     NotSetTheoretic, OperatorInvalid, RackAxiomFailure, SchemaError, SingularMap, YBXError)
from .extension import DoubledSolution, block_report, check_mixed_braid_lemmas, extend
from .field import parse_field
from .hopf import antipode_identities, brace_to_cocycle, brace_to_operator, check_brace, operator_to_brace
from .presentation import emit_presentation
from .primitive import SearchStats, check_conditions, prim_to_solution, radicals, search
from .rack import braid_rep, braid_rep_report, check_intertwining, derived_identities, guitar, solution_to_rack

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class Failure(Exception):
    """Verification failure carrying a JSON-able payload."""

    def __init__(self, payload):
        super().__init__(payload.get("error", "verification failed"))
        self.payload = payload


def _emit(obj):
    print(json.dumps(obj, ensure_ascii=False))


def _write_doc(obj, out, extra=None):
    if out:
        ser.dump(obj, out, extra)
    else:
        print(json.dumps(ser.to_doc(obj, extra), ensure_ascii=False, indent=1))


def _report_out(args, rep, extra=None):
    if args.json:
        d = rep.to_dict()
        if extra:
            d.update(extra)
        _emit(d)
    else:
        print(rep.table())


def _fail_payload(rep):
    bad = rep.first_failure()
    return {"ok": False, "check": bad.name, "witness": bad.witness}


def _load_pair(path):
    obj = ser.load(path, expect=("pair", "doubled"))
    return obj.pair if isinstance(obj, DoubledSolution) else obj


# subcommands ---------------------------------------------------------------

def cmd_verify(args):
    P = _load_pair(args.file)
    rep = full_report(P)
    verdict = verdict_ok(rep)
    # "ok" covers every row; "verdict" ignores the informational ones
    _report_out(args, rep, {"verdict": verdict})
    if not verdict:
        failing = [c for c in rep.checks if not c.ok and c.name not in ("involutive", "unitary")]
        if not args.json:
            _emit({"ok": False, "check": failing[0].name, "witness": failing[0].witness})
        return EXIT_FAIL
    return EXIT_OK


def cmd_derive(args):
    P = _load_pair(args.file)
    d = solution_to_rack(P)
    rep = derived_identities(P, d)
    F = P.field
    doc = dict(F.header())
    doc.update({"s": ser.enc_linmap(d.s), "rack": ser.enc_linmap(d.tri),
                "involutive_collapse": d.s == P.X.c})
    if not rep.ok:
        raise Failure(_fail_payload(rep))
    _write_doc_raw(doc, args.output)
    return EXIT_OK


def _write_doc_raw(doc, out):
    text = json.dumps(doc, ensure_ascii=False, indent=1)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_jmap(args):
    P = _load_pair(args.file)
    T = guitar(P, args.n, check=False)
    rep = check_intertwining(P, args.n, threads=args.threads)
    if not rep.ok:
        raise Failure(_fail_payload(rep))
    doc = dict(P.field.header())
    doc.update({"n": args.n, "J": [ser.enc_linmap(T.j[k]) for k in range(1, args.n + 1)],
                "alpha": [ser.enc_linmap(T.alpha[k]) for k in range(2, args.n + 1)]})
    _write_doc_raw(doc, args.output)
    return EXIT_OK


def cmd_braidrep(args):
    P = _load_pair(args.file)
    gens = braid_rep(P, args.n)
    rep = braid_rep_report(P, args.n)
    if not rep.ok:
        raise Failure(_fail_payload(rep))
    doc = dict(P.field.header())
    doc.update({"n": args.n, "generators": [ser.enc_linmap(g) for g in gens]})
    _write_doc_raw(doc, args.output)
    return EXIT_OK


def cmd_extend(args):
    P = _load_pair(args.file)
    D = extend(P)
    rep = block_report(D)
    rep.extend(check_mixed_braid_lemmas(D))
    if not rep.ok:
        raise Failure(_fail_payload(rep))
    _write_doc(D, args.output)
    return EXIT_OK


def cmd_brace_verify(args):
    B = ser.load(args.file, expect="brace")
    rep = check_brace(B)
    _report_out(args, rep)
    if not rep.ok:
        if not args.json:
            _emit(_fail_payload(rep))
        return EXIT_FAIL
    return EXIT_OK


def cmd_brace_to_op(args):
    B = ser.load(args.file, expect="brace")
    O = brace_to_operator(B)
    rep = antipode_identities(O)
    if not rep.ok:
        raise Failure(_fail_payload(rep))
    _write_doc(O, args.output)
    return EXIT_OK


def cmd_op_to_brace(args):
    O = ser.load(args.file, expect="operator")
    _write_doc(operator_to_brace(O), args.output)
    return EXIT_OK


def cmd_brace_to_cocycle(args):
    B = ser.load(args.file, expect="brace")
    _write_doc(brace_to_cocycle(B), args.output)
    return EXIT_OK


def cmd_prim_check(args):
    Pp = ser.load(args.file, expect="prim")
    rep = check_conditions(Pp)
    verdict = rep.passed()
    extra = {"conditions_hold": verdict}
    try:
        pair = prim_to_solution(Pp, check=False)
        braided, _ = check_braid(pair)
        extra["braided"] = braided
        extra["agrees"] = braided == verdict
        rad = radicals(Pp)
        extra["radicals_ok"] = rad.report.ok
    except SingularMap as e:
        extra["braided"] = None
        extra["error"] = str(e)
    _report_out(args, rep, extra)
    if not args.json:
        print(f"  braided: {extra.get('braided')}")
    if not verdict:
        if not args.json:
            _emit(_fail_payload(rep))
        return EXIT_FAIL
    return EXIT_OK


def cmd_prim_solve(args):
    Pp = ser.load(args.file, expect="prim")
    rep = check_conditions(Pp)
    if not rep.passed():
        raise Failure(_fail_payload(rep))
    _write_doc(prim_to_solution(Pp), args.output)
    return EXIT_OK


def cmd_prim_search(args):
    try:
        F = parse_field(args.field)
    except (ValueError, YBXError) as e:
        raise SchemaError("/field", str(e)) from None
    if not args.exhaustive and args.sample is None:
        raise SchemaError("/", "choose --exhaustive or --sample N --seed S")
    if args.sample is not None and args.seed is None:
        raise SchemaError("/seed", "sampling mode needs --seed")
    mask = None
    if args.mask:
        try:
            mask = sorted({int(x) for x in args.mask.split(",")})
        except ValueError:
            raise SchemaError("/mask", "mask is a comma-separated list of condition numbers") from None
        if not all(1 <= k <= 8 for k in mask):
            raise SchemaError("/mask", "condition numbers run from 1 to 8")
    stats = SearchStats()
    found = 0
    for P in search(F, args.dim, mask=mask, exhaustive=bool(args.exhaustive), samples=args.sample,
                    seed=args.seed, budget=args.budget, threads=args.threads, stats=stats):
        found += 1
        if args.json:
            print(ser.dumps(P))
        else:
            print(f"g={P.g.rows()} h={P.h.rows()} sigmaV={P.sigmaV.rows()} tauV={P.tauV.rows()}")
    if not args.json:
        mode = "exhaustive" if stats.exhaustive else "sampled"
        tail = "" if stats.complete else " (budget reached)"
        print(f"{found} of {stats.evaluated} tuples pass ({mode}){tail}")
    return EXIT_OK


def cmd_present(args):
    obj = ser.load(args.file, expect=("pair", "doubled"))
    P = obj.pair if isinstance(obj, DoubledSolution) else obj
    pres = emit_presentation(P)
    if args.json:
        _emit(pres.to_dict())
    else:
        print(pres.text())
    return EXIT_OK


# parser --------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS, help="worker threads for parallel checks")

    p = argparse.ArgumentParser(prog="ybx", parents=[common],
                                description="Exact verification and construction of braided sets on coalgebras.")
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, fn, help, file=True, out=False, n=False):
        sp = sub.add_parser(name, parents=[common], help=help)
        if file:
            sp.add_argument("file")
        if out:
            sp.add_argument("-o", "--output", default=None)
        if n:
            sp.add_argument("--n", type=int, default=3)
        sp.set_defaults(func=fn)
        return sp

    add("verify", cmd_verify, "check a braided pair")
    add("derive", cmd_derive, "derived rack solution", out=True)
    add("jmap", cmd_jmap, "guitar maps J_1..J_n", out=True, n=True)
    add("braidrep", cmd_braidrep, "braid group generators on X^n", out=True, n=True)
    add("extend", cmd_extend, "double to Z = X + SX", out=True)
    add("brace-verify", cmd_brace_verify, "check a brace")
    add("brace-to-op", cmd_brace_to_op, "brace to braiding operator", out=True)
    add("op-to-brace", cmd_op_to_brace, "braiding operator to brace", out=True)
    add("brace-to-cocycle", cmd_brace_to_cocycle, "brace to invertible 1-cocycle", out=True)
    add("prim-check", cmd_prim_check, "conditions (1)-(8) for k + V parameters")
    add("prim-solve", cmd_prim_solve, "k + V parameters to a braided pair", out=True)
    sp = add("prim-search", cmd_prim_search, "search k + V parameters over F_p", file=False)
    sp.add_argument("--field", required=True, help="f2, f3, ...")
    sp.add_argument("--dim", type=int, required=True)
    sp.add_argument("--exhaustive", action="store_true")
    sp.add_argument("--sample", type=int, default=None)
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--budget", type=int, default=None, help="stop after this many tuples")
    sp.add_argument("--mask", default=None, help="comma-separated conditions to require (default all)")
    add("present", cmd_present, "structure monoid presentation of a set-theoretic solution")
    return p


VERIFY_ERRORS = (BraceInvalid, OperatorInvalid, CocycleInvalid, BraidFailure, DegenerateInput,
                 RackAxiomFailure, SingularMap)
INPUT_ERRORS = (NotSetTheoretic, CapExceeded)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    args.json = getattr(args, "json", False)
    args.threads = getattr(args, "threads", None)
    try:
        return args.func(args)
    except Failure as e:
        _emit(e.payload)
        return EXIT_FAIL
    except SchemaError as e:
        print(json.dumps({"error": str(e), "path": e.path}, ensure_ascii=False), file=sys.stderr)
        return EXIT_INPUT
    except VERIFY_ERRORS as e:
        payload = {"ok": False, "error": str(e), "type": type(e).__name__}
        rep = getattr(e, "report", None)
        if rep is not None and rep.first_failure() is not None:
            bad = rep.first_failure()
            payload.update({"check": bad.name, "witness": bad.witness})
        _emit(payload)
        return EXIT_FAIL
    except INPUT_ERRORS as e:
        print(json.dumps({"error": str(e), "type": type(e).__name__}, ensure_ascii=False), file=sys.stderr)
        return EXIT_INPUT
    except (OSError, ValueError) as e:
        print(json.dumps({"error": str(e), "type": type(e).__name__}, ensure_ascii=False), file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
