"""``commgraph`` command line: centralizer, structure, distance, construct, verify, census."""

from __future__ import annotations

import argparse
import json
import sys

from . import certify
from .census import census_build, census_diameter, census_distance
from .centralizer import centralizer_space
from .constructions import family_n3, family_n4, family_n5plus, theorem5_instance
from .distance import distance_le2, distance_le3_finite, enumeration_budget, path_length4
from .errors import CommGraphError, InputError, UnsupportedError
from .fields import parse_field
from .m9 import m9_certificate
from .matrix import format_matrix, parse_matrix
from .structure import JordanSpec, structure_report

EXIT_OK, EXIT_VIOLATED, EXIT_INPUT, EXIT_UNSUPPORTED = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _field_arg(text):
    return parse_field(text)


def _read_matrix(path: str, field):
    with open(path) as fh:
        return parse_matrix(fh.read(), field)


def _emit(args, text: str):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _json(obj) -> str:
    return json.dumps(obj, indent=1, sort_keys=True)


def cmd_centralizer(args) -> int:
    mats = [_read_matrix(p, args.field) for p in args.matrices]
    S = centralizer_space(mats)
    parts = [f"dim {S.dim}"] + [format_matrix(M) for M in S.matrices()]
    _emit(args, "\n\n".join(parts))
    return EXIT_OK


def cmd_structure(args) -> int:
    A = _read_matrix(args.matrix, args.field)
    _emit(args, _json(structure_report(A).to_json()))
    return EXIT_OK


def cmd_distance(args) -> int:
    A = _read_matrix(args.a, args.field)
    B = _read_matrix(args.b, A.field)
    if args.method == "le2":
        r = distance_le2(A, B)
    elif args.method == "le3":
        r = distance_le3_finite(A, B, enumeration_budget(args.budget))
    elif args.method == "path4":
        r = path_length4(A, B)
    else:
        G = census_build(A.n, A.field)
        r = census_distance(G, A, B)
    _emit(args, _json(r.to_json()))
    return EXIT_OK


def cmd_construct(args) -> int:
    F = args.field
    out = []
    summary: dict = {}
    if args.m9:
        c = m9_certificate()
        for name in ("A", "B", "N", "V"):
            out.append(f"# {name}\n" + format_matrix(getattr(c, name)))
        summary = {"construction": "m9", "stages": c.stages, "intersection_dim": c.intersection_dim}
    elif args.theorem5:
        if F is None:
            raise InputError("--theorem5 needs --field")
        sa, sb = (JordanSpec.parse(F, t) for t in args.theorem5)
        S = _read_matrix(args.S, F) if args.S else None
        A, B, S = theorem5_instance(sa, sb, S)
        out += ["# A\n" + format_matrix(A), "# B\n" + format_matrix(B), "# S\n" + format_matrix(S)]
        summary = {"construction": "theorem5", "specA": sa.text(), "specB": sb.text(), "validated": True}
    elif args.family:
        if F is None:
            raise InputError("--family needs --field")
        if args.alpha is None:
            raise InputError("--family needs --alpha")
        alpha = F.parse(args.alpha)
        if args.family == "n3":
            inst = family_n3(F, alpha)
        elif args.family == "n4":
            if args.lam is None:
                raise InputError("--family n4 needs --lambda")
            inst = family_n4(F, alpha, F.parse(args.lam))
        else:
            if args.eigs is None:
                raise InputError("--family n5 needs --eigs")
            eigs = [F.parse(t) for t in args.eigs.split(",")]
            inst = family_n5plus(F, len(eigs), alpha, eigs)
        out += ["# X\n" + format_matrix(inst.X), "# Z\n" + format_matrix(inst.Z)]
        summary = {"construction": f"family {args.family}", "n": inst.n, "alpha": F.format(inst.alpha),
                   "validated": True}
    else:
        raise InputError("construct needs --family, --theorem5 or --m9")
    _emit(args, "\n\n".join(out + [_json(summary)]))
    return EXIT_OK


def _config(args) -> certify.RunConfig:
    return certify.RunConfig(
        seed=args.seed,
        trials=args.trials,
        budget=args.budget,
        timing=not args.no_timing,
    )


def cmd_verify(args) -> int:
    cfg = _config(args)
    if args.claim == "all":
        report = certify.verify_all(cfg)
        _emit(args, _json(report))
        return EXIT_OK if report["all_verified"] else _worst(report["summary"].values())
    if args.claim == "thm5" and (args.n or args.q or args.specA):
        if not (args.n and args.q):
            raise InputError("verify thm5 with a custom instance needs --n and --q")
        pairs = [(args.specA, args.specB)] if args.specA else None
        if args.specA and not args.specB:
            raise InputError("--specA needs --specB")
        S = _read_matrix(args.S, parse_field(f"gf {args.q}")) if args.S else None
        cert = certify.suite_thm5(cfg, grid=((args.n, args.q),), S_override=S, pairs=pairs)
    elif args.claim == "census":
        cert = certify.suite_census(cfg, n=args.n or 3, q=args.q or 2)
    else:
        cert = certify.SUITES[args.claim](cfg)
    _emit(args, _json(cert.to_json()))
    return _worst([cert.verdict])


def _worst(verdicts) -> int:
    verdicts = list(verdicts)
    if "violated" in verdicts:
        return EXIT_VIOLATED
    if "unsupported" in verdicts:
        return EXIT_UNSUPPORTED
    return EXIT_OK


def cmd_census(args) -> int:
    F = args.field or parse_field("gf 2")
    G = census_build(args.n, F, args.budget or certify.RunConfig().census_budget)
    if args.save:
        G.save(args.save)
    _emit(args, _json(census_diameter(G)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="commgraph", description="Centralizers and commuting-graph distances in M_n(F).")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_field_arg, default=None, help="e.g. 'Q', 'gf 7', 'gf 2 3'")
    common.add_argument("--out", default=None, help="write output to this file")
    common.add_argument("--budget", type=int, default=None, help="enumeration budget (default: CG_BUDGET or 10^6)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("centralizer", parents=[common], help="basis of C(A) or of the centralizer of a set")
    s.add_argument("matrices", nargs="+")
    s.set_defaults(func=cmd_centralizer)

    s = sub.add_parser("structure", parents=[common], help="structural report as JSON")
    s.add_argument("matrix")
    s.set_defaults(func=cmd_structure)

    s = sub.add_parser("distance", parents=[common], help="distance verdict with witness path")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--method", choices=("le2", "le3", "census", "path4"), default="le2")
    s.set_defaults(func=cmd_distance)

    s = sub.add_parser("construct", parents=[common], help="explicit families and examples")
    s.add_argument("--family", choices=("n3", "n4", "n5"))
    s.add_argument("--alpha")
    s.add_argument("--lambda", dest="lam")
    s.add_argument("--eigs", help="comma-separated eigenvalues for n5")
    s.add_argument("--theorem5", nargs=2, metavar=("SPECA", "SPECB"))
    s.add_argument("--S", help="conjugator matrix file for --theorem5")
    s.add_argument("--m9", action="store_true")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("claim", choices=certify.CLAIMS + ("census", "all"))
    s.add_argument("--n", type=int)
    s.add_argument("--q", type=int)
    s.add_argument("--specA")
    s.add_argument("--specB")
    s.add_argument("--S", help="conjugator matrix file for thm5")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--trials", type=int, default=200)
    s.add_argument("--no-timing", action="store_true", help="omit elapsed_ms for byte-identical output")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("census", parents=[common], help="full census of a tiny M_n(F_q)")
    s.add_argument("--n", type=int, default=3)
    s.add_argument("--save", help="write the quotient graph as JSON")
    s.set_defaults(func=cmd_census)
    return p


def cli_dispatch(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UnsupportedError as exc:
        print(f"unsupported: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (InputError, OSError, ValueError) as exc:
        print(f"input error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CommGraphError as exc:
        print(f"violated: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_VIOLATED


def main():
    sys.exit(cli_dispatch())
