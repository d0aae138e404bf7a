"""Command-line interface.

Exit codes: 0 success, 1 domain or verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import amoeba as am
from .archgeo import ConeKind, ConeSpec, arch_newton, cone_member
from .discriminant import (discriminant_value, newton_polytope_vertices,
                           symbolic_discriminant)
from .errors import MsAmoebaError, ParseError, Unsupported
from .multiplier import Kind, ms_check
from .polycore import GammaSeq, Poly
from .realroots import classify, root_report
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
IMAGE_FORMATS = ("svg", "png", "pdf")


class UsageError(Exception):
    pass


def _emit(text: str, out: Optional[str]):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _json(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _need(args, name: str):
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"--{name.replace('_', '-')} is required for this command")
    return value


def _parse_point(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",")]
    except ValueError as exc:
        raise ParseError(f"cannot parse point {text!r}") from exc


# -- commands ----------------------------------------------------------------------

def cmd_classify(args) -> int:
    p = Poly.parse(_need(args, "poly"))
    flags = classify(p)
    doc = {"poly": p.to_text(), "degree": p.degree, "flags": flags.to_dict(),
           "roots": root_report(p).to_dict()}
    an = arch_newton(p)
    doc["archnewt"] = an.to_dict()
    doc["discriminant"] = str(discriminant_value(p)) if p.degree >= 2 else None
    if p.degree >= 2 and all(c > 0 for c in p.coeffs):
        doc["cones"] = {kind.value: cone_member(ConeSpec(kind, p.degree), p.coeffs).to_dict()
                        for kind in ConeKind}
    else:
        doc["cones"] = None
    _emit(_json(doc), args.out)
    return EXIT_OK


def cmd_ms_check(args) -> int:
    gamma = GammaSeq.parse(_need(args, "gamma"))
    v = ms_check(gamma, Kind(args.kind))
    _emit(_json({"gamma": gamma.to_text(), **v.to_dict()}), args.out)
    return EXIT_OK


def cmd_discriminant(args) -> int:
    if args.symbolic is not None:
        s = symbolic_discriminant(args.symbolic)
        if args.format == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow([f"e{j}" for j in range(s.nvars)] + ["coefficient"])
            for e, c in s.terms.items():
                w.writerow(list(e) + [c])
            _emit(buf.getvalue(), args.out)
        else:
            doc = {"k": args.symbolic, "terms": s.to_records(),
                   "vertices": [list(v) for v in newton_polytope_vertices(s).vertices]}
            _emit(_json(doc), args.out)
        return EXIT_OK
    p = Poly.parse(_need(args, "poly"))
    _emit(_json({"poly": p.to_text(), "discriminant": str(discriminant_value(p))}), args.out)
    return EXIT_OK


def cmd_archnewt(args) -> int:
    an = arch_newton(Poly.parse(_need(args, "poly")))
    _emit(an.to_csv() if args.format == "csv" else _json(an.to_dict()), args.out)
    return EXIT_OK


def _amoeba_sample(args) -> int:
    k, n = _need(args, "k"), args.n or 1000
    pts, coeffs = am.sample_amoeba(k, n, args.seed, return_coeffs=True)
    labels = am.label_slice_points(k, pts) if k <= am.MAX_SYMBOLIC_K else [""] * n
    cert = am.sample_certificates(k, coeffs)
    if args.format == "json":
        doc = [{"slice": [float(v) for v in p], "label": int(l), "min_abs_delta": float(c)}
               for p, l, c in zip(pts, labels, cert)]
        _emit(_json(doc), args.out)
        return EXIT_OK
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([f"x_{j}'" for j in range(1, k)] + ["label", "min_abs_delta"])
    for p, l, c in zip(pts, labels, cert):
        w.writerow([repr(float(v)) for v in p] + [l, repr(float(c))])
    _emit(buf.getvalue(), args.out)
    return EXIT_OK


def _amoeba_member(args) -> int:
    k = _need(args, "k")
    x = _parse_point(_need(args, "point"))
    v = am.amoeba_member(k, x, grid=args.grid or am.DEFAULT_GRID,
                         tol_inside=args.tol_inside, tol_outside=args.tol_outside)
    _emit(_json({"k": k, "point": x, **v.to_dict()}), args.out)
    return EXIT_OK


def _amoeba_ronkin(args) -> int:
    k = _need(args, "k")
    x = _parse_point(_need(args, "point"))
    est = am.ronkin_estimate(k, x, grid=args.grid or 512)
    _emit(_json({"k": k, "point": x, **est.to_dict()}), args.out)
    return EXIT_OK


def _amoeba_components(args) -> int:
    k = _need(args, "k")
    probes = None
    if k == 3:
        probes = {"SI_witness": [math.log(9), math.log(9)],
                  "II_witness": [-math.log(10), -math.log(10)]}
    rep = am.count_reflected_components(k, resolution=args.grid or 512, probes=probes)
    _emit(_json(rep), args.out)
    return EXIT_OK


def _amoeba_plot(args) -> int:
    from .plotting import amoeba_figure

    if _need(args, "k") != 3:
        raise Unsupported("plots are drawn for k = 3 only")
    out = args.out or "amoeba.svg"
    fmt = args.format if args.format in IMAGE_FORMATS else None
    info = amoeba_figure(args.n or 20000, args.seed, out, fmt=fmt)
    sys.stdout.write(_json(info))
    return EXIT_OK


AMOEBA = {"sample": _amoeba_sample, "member": _amoeba_member, "ronkin": _amoeba_ronkin,
          "components": _amoeba_components, "plot": _amoeba_plot}


def cmd_amoeba(args) -> int:
    return AMOEBA[args.action](args)


def cmd_regions(args) -> int:
    from .plotting import regions_figure

    info = regions_figure(args.out or "regions.svg", size=args.grid or 100)
    sys.stdout.write(_json(info))
    return EXIT_OK if info["violations"] == 0 else EXIT_FAIL


def cmd_verify(args) -> int:
    names = SUITES if args.suite == "all" else (args.suite,)
    reports = [run_suite(n, args.seed, args.samples) for n in names]
    doc = {"seed": args.seed, "pass": all(r.passed for r in reports),
           "suites": [r.to_dict() for r in reports]}
    _emit(_json(doc), args.out)
    for r in reports:
        for c in r.checks:
            sys.stderr.write(f"{'PASS' if c.passed else 'FAIL'} {r.suite}.{c.name} "
                             f"({c.cases} cases)\n")
    return EXIT_OK if doc["pass"] else EXIT_FAIL


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="msamoeba", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt=("json",)):
        p.add_argument("--out", help="write output to this file instead of stdout")
        p.add_argument("--format", choices=fmt, default=fmt[0])
        p.add_argument("--seed", type=int, default=0)
        return p

    p = common(sub.add_parser("classify", help="RR/SS/SI/II flags and related data"))
    p.add_argument("--poly")
    p.set_defaults(func=cmd_classify)

    p = common(sub.add_parser("ms-check", help="multiplier-sequence tests"))
    p.add_argument("--gamma")
    p.add_argument("--kind", choices=[k.value for k in Kind], default=Kind.KIND3.value)
    p.set_defaults(func=cmd_ms_check)

    p = common(sub.add_parser("discriminant", help="exact discriminant or Delta_k"),
               ("json", "csv"))
    p.add_argument("--poly")
    p.add_argument("--symbolic", type=int, metavar="K")
    p.set_defaults(func=cmd_discriminant)

    p = common(sub.add_parser("archnewt", help="Archimedean Newton polygon"), ("json", "csv"))
    p.add_argument("--poly")
    p.set_defaults(func=cmd_archnewt)

    p = common(sub.add_parser("amoeba", help="discriminant amoeba tools"),
               ("csv", "json", "svg", "png", "pdf"))
    p.add_argument("action", choices=sorted(AMOEBA))
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--point", help="slice coordinates x_1',...,x_{k-1}'")
    p.add_argument("--grid", type=int)
    p.add_argument("--tol-inside", type=float, default=am.TOL_INSIDE)
    p.add_argument("--tol-outside", type=float, default=am.TOL_OUTSIDE)
    p.set_defaults(func=cmd_amoeba)

    p = common(sub.add_parser("regions", help="SI/SS/RR regions of 1+ax+bx^2+x^3"),
               ("svg", "png", "pdf"))
    p.add_argument("--grid", type=int)
    p.set_defaults(func=cmd_regions)

    p = common(sub.add_parser("verify", help="run verification suites"))
    p.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    p.add_argument("--samples", type=int)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "amoeba" and args.action != "plot" and args.format in IMAGE_FORMATS:
        parser.print_usage(sys.stderr)
        sys.stderr.write("image formats apply to 'amoeba plot' only\n")
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, ParseError) as exc:
        sys.stderr.write(_json({"error": getattr(exc, "code", "UsageError"),
                                "message": str(exc)}))
        return EXIT_USAGE
    except MsAmoebaError as exc:
        sys.stderr.write(_json({"error": exc.code, "message": str(exc)}))
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
