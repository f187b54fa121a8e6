"""Command-line entry point ``hopfq``.

Exit codes: 0 when every required check passes, 1 when an identity fails,
2 when the input or configuration is invalid.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .dual import IntegralDual, assumption_check, dual_axiom_suite
from .errors import BoundExceeded, HopfqError, InvalidInput
from .hopf import (VARIETIES, HopfData, check_prime_bound, check_variety, group_like_algebra,
                   verify_axioms)
from .integrals import integrals_report
from .io import STRUCTURE_HEADER, export_structure, export_tmaps, import_structure
from .linalg import parse_field
from .loops import FiniteLoop, check_property, format_table
from .multiplier import (FunctionAlgebra, check_variety_dual, unital_bridges, tmap_table, verify_multiplier_axioms,
                         window_property)
from .report import Report
from .search import search_ip_loops
from .suite import DEFAULT_SEED, SuiteConfig, corrupt_antipode, paper_suite, resolve

OK, FAILED, INVALID = 0, 1, 2


class Usage(Exception):
    pass


def _field(args):
    try:
        return parse_field(args.field or "rational")
    except ValueError as exc:
        raise Usage(str(exc)) from None


def _load(spec: str):
    """A quasigroup (builtin or Cayley table) or a structure-constant file."""
    if not spec.startswith("builtin:"):
        try:
            text = Path(spec).read_text(encoding="utf-8")
        except OSError as exc:
            raise InvalidInput(f"cannot read {spec}: {exc.strerror}") from None
        if text.lstrip().startswith(STRUCTURE_HEADER):
            return import_structure(text)
    return resolve(spec)


def _algebra(args, allow_structure: bool = True) -> HopfData:
    src = _load(args.input)
    F = _field(args)
    if isinstance(src, HopfData):
        if not allow_structure:
            raise InvalidInput("expected a quasigroup, got structure constants")
        return src
    if not isinstance(src, FiniteLoop):
        raise InvalidInput(f"{args.input} is infinite; use 'hopfq mcq' for k(G) over it")
    try:
        check_prime_bound(F, src.order)
    except ValueError as exc:
        raise Usage(str(exc)) from None
    H = group_like_algebra(src, F)
    if getattr(args, "debug_corrupt_antipode", False):
        H = corrupt_antipode(H)
    return H


def _emit(rep: Report, args, out) -> int:
    print(rep.render(verbose=args.verbose), file=out)
    print(rep.trailer(), file=out)
    return OK if rep.passed else FAILED


def _write(path: str | None, text: str, out) -> None:
    if path is None or path == "-":
        out.write(text)
        return
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise InvalidInput(f"cannot write {path}: {exc.strerror}") from None


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_verify(args, out) -> int:
    H = _algebra(args)
    rep = verify_axioms(H)
    src = _load(args.input)
    for v in VARIETIES:
        r = check_variety(H, v)
        rep.probe(v, r.holds, None if r.holds else tuple(H.labels[i] for i in r.witness))
        rep.info[v] = "yes" if r.holds else "no"
    assoc = H.is_associative()
    rep.info["associative"] = "yes" if assoc.holds else "no"
    if isinstance(src, FiniteLoop):
        rep.info["order"] = str(src.order)
        rep.info["IP"] = "yes" if check_property(src, "IP").holds else "no"
    rep.info["field"] = H.field.name
    if args.export:
        _write(args.export, export_structure(H, {"associative": assoc.holds}), out)
    return _emit(rep, args, out)


def cmd_integrals(args, out) -> int:
    H = _algebra(args)
    return _emit(integrals_report(H), args, out)


def cmd_dual(args, out) -> int:
    H = _algebra(args)
    D = IntegralDual(H)
    rep = Report(f"integral dual of {H.name}")
    rep.extend(assumption_check(D))
    suite = dual_axiom_suite(D, seed=args.seed)
    rep.extend(suite)
    rep.info.update(suite.info)
    if args.export:
        A = D.structure()
        flags = {"associative": A.is_associative().holds, "coassociative": A.is_coassociative().holds}
        _write(args.export, export_structure(A, flags), out)
    return _emit(rep, args, out)


def cmd_mcq(args, out) -> int:
    G = _load(args.input)
    if isinstance(G, HopfData):
        raise InvalidInput("mcq needs a quasigroup, not structure constants")
    F = _field(args)
    if isinstance(G, FiniteLoop):
        try:
            check_prime_bound(F, G.order)
        except ValueError as exc:
            raise Usage(str(exc)) from None
    rep = verify_multiplier_axioms(G, F, args.window, args.seed)
    bridges = unital_bridges(G, F, args.window)
    rep.extend(bridges)
    rep.info.update(bridges.info)
    W = list(G.window(args.window))
    for v in VARIETIES:
        dual = check_variety_dual(G, v, F, args.window)
        loop = window_property(G, v, W)
        rep.add(f"{v} dual identity matches loop law", dual.holds == loop.holds, dual.witness,
                detail=f"dual={dual.holds} loop={loop.holds}")
        rep.info[v] = "yes" if dual.holds else "no"
    if args.export:
        A = FunctionAlgebra(G, F, args.window)
        _write(args.export, export_tmaps(A.name, [A.label(u) for u in W], tmap_table(A, W)), out)
    return _emit(rep, args, out)


def cmd_export(args, out) -> int:
    if args.what == "algebra":
        text = export_structure(_algebra(args))
    elif args.what == "dual":
        A = IntegralDual(_algebra(args)).structure()
        text = export_structure(A, {"associative": A.is_associative().holds,
                                    "coassociative": A.is_coassociative().holds})
    elif args.what == "table":
        src = _load(args.input)
        if not isinstance(src, FiniteLoop):
            raise InvalidInput("only finite loops have a Cayley table")
        text = format_table(src)
    else:
        G = _load(args.input)
        if isinstance(G, HopfData):
            raise InvalidInput("mcq export needs a quasigroup")
        A = FunctionAlgebra(G, _field(args), args.window)
        W = A.window(args.window)
        text = export_tmaps(A.name, [A.label(u) for u in W], tmap_table(A, W))
    _write(args.export, text, out)
    return OK


def cmd_search(args, out) -> int:
    found = 0
    for Q in search_ip_loops(args.order, args.filter, bound=args.bound):
        found += 1
        print(f"# {Q.name}", file=out)
        print(format_table(Q), file=out)
    print("--- summary", file=out)
    print(f"order={args.order}", file=out)
    print(f"filter={args.filter}", file=out)
    print(f"found={found}", file=out)
    return OK


def cmd_paper_suite(args, out) -> int:
    fields = (args.field,) if args.field else SuiteConfig.fields
    for f in fields:
        try:
            parse_field(f)
        except ValueError as exc:
            raise Usage(str(exc)) from None
    cfg = SuiteConfig(fields=fields, window=args.window, seed=args.seed,
                      corrupt_antipode=args.debug_corrupt_antipode)
    try:
        rep = paper_suite(cfg)
    except ValueError as exc:
        raise Usage(str(exc)) from None
    return _emit(rep, args, out)


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hopfq", description="Exact verification of Hopf quasigroups, "
                                "their integrals and integral duals.")
    p.add_argument("--version", action="version", version=f"hopfq {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default=None,
                        help="rational or gf:p (default: rational; paper-suite runs both rational and gf:101)")
    common.add_argument("--window", type=int, default=8, help="window size for infinite quasigroups")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for random test elements")
    common.add_argument("--export", metavar="PATH", help="write structure constants to PATH ('-' for stdout)")
    common.add_argument("--verbose", action="store_true", help="show witnesses and details for every entry")
    common.add_argument("--debug-corrupt-antipode", action="store_true", help=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, helptext, needs_input=True):
        sp = sub.add_parser(name, parents=[common], help=helptext)
        if needs_input:
            sp.add_argument("input", help="builtin:NAME (cyclic:N, s3, quaternion8, octonion16, "
                            "integers, free:N) or a file")
        sp.set_defaults(func=fn)
        return sp

    add("verify", cmd_verify, "check the Hopf quasigroup axioms of kG")
    add("integrals", cmd_integrals, "integrals, faithfulness and modular data")
    add("dual", cmd_dual, "build and verify the integral dual")
    add("mcq", cmd_mcq, "multiplier Hopf coquasigroup axioms of k(G) on a window")
    ex = add("export", cmd_export, "export structure constants")
    ex.add_argument("what", choices=["algebra", "dual", "mcq", "table"])
    se = add("search", cmd_search, "enumerate small loops up to isomorphism", needs_input=False)
    se.add_argument("--order", type=int, required=True)
    se.add_argument("--filter", default="IP", help="comma-separated properties, '!' negates")
    se.add_argument("--bound", type=int, default=8)
    ps = add("paper-suite", cmd_paper_suite, "run every check over the built-in corpus", needs_input=False)
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INVALID if exc.code else OK
    if getattr(args, "window", 1) < 0:
        print("error: --window must be non-negative", file=sys.stderr)
        return INVALID
    try:
        return args.func(args, out)
    except (InvalidInput, Usage, BoundExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INVALID
    except HopfqError as exc:
        print(f"failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return FAILED


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
