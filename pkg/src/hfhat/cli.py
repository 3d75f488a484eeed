"""Command line front end: ``hf SUBCOMMAND FILE [flags]``.

Every subcommand reads an HFD file (or a corpus name), prints either an
aligned text report or, with ``--json``, a stable JSON document, and
exits with 0 on success, 1 for an invalid diagram or unreadable file,
2 when a computation is blocked by non-admissibility or an unbounded
enumeration, 3 when a counted domain is not a certified rigid shape,
and 4 for usage errors.  Nonzero exits still print the structured
witness that caused them.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import corpus
from .admissibility import (
    NotAdmissible,
    area_certificate,
    strong_admissible,
    weak_admissible,
)
from .diagram import (
    HeegaardDiagram,
    HFDFormatError,
    parse_hfd,
    serialize_hfd,
    stabilize,
    validate,
)
from .domains import UnboundedEnumeration, positive_domains
from .floer import NotCombinatorial, homology
from .generators import Generator, enumerate_generators
from .spinc import spinc_partition

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_NOT_ADMISSIBLE = 2
EXIT_NOT_COMBINATORIAL = 3
EXIT_USAGE = 4


class _Parser(argparse.ArgumentParser):
    """argparse with usage failures mapped to exit code 4."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _fmt_gen(g: Generator) -> str:
    return ",".join(g.points)


def _parse_gen(text: str) -> Generator:
    return Generator(tuple(text.split(",")))


def _fmt_frac(x: Fraction) -> str:
    return str(x)


def _emit(report: dict, as_json: bool, text_lines: list[str]) -> None:
    if as_json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _table(rows: list[Sequence[str]]) -> list[str]:
    if not rows:
        return []
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]


def _load(path: str) -> HeegaardDiagram:
    """Parse and validate; raises HFDFormatError or ValueError."""
    with open(path, "r", encoding="utf-8") as fh:
        d = parse_hfd(fh.read())
    report = validate(d)
    if not report.ok:
        raise ValueError(str(report))
    return d


def _cmd_validate(args) -> int:
    try:
        with open(args.file, "r", encoding="utf-8") as fh:
            d = parse_hfd(fh.read())
    except (OSError, HFDFormatError, json.JSONDecodeError) as exc:
        _emit({"ok": False, "violations": [str(exc)]}, args.json, [f"invalid: {exc}"])
        return EXIT_INVALID
    report = validate(d)
    doc = {
        "ok": report.ok,
        "violations": [f"{name}: {detail}" for name, detail in report.violations],
    }
    if report.ok:
        _emit(doc, args.json, ["ok"])
        return EXIT_OK
    _emit(doc, args.json, ["invalid:"] + [f"  {v}" for v in doc["violations"]])
    return EXIT_INVALID


def _cmd_generators(args) -> int:
    d = _load(args.file)
    gens = enumerate_generators(d)
    doc = {"count": len(gens), "generators": [list(g.points) for g in gens]}
    lines = [f"{len(gens)} generators"] + [f"  {_fmt_gen(g)}" for g in gens]
    _emit(doc, args.json, lines)
    return EXIT_OK


def _cmd_spinc(args) -> int:
    d = _load(args.file)
    classes = spinc_partition(d)
    doc = {
        "classes": [
            {
                "members": [list(g.points) for g in c.members],
                "divisor": c.divisor,
                "gradings": [[_fmt_gen(g), k] for g, k in c.gradings],
            }
            for c in classes
        ]
    }
    lines = [f"{len(classes)} spin-c classes"]
    for i, c in enumerate(classes):
        lines.append(f"class {i}  divisor {c.divisor}")
        lines += _table([["  " + _fmt_gen(g), f"grading {k}"] for g, k in c.gradings])
    _emit(doc, args.json, lines)
    return EXIT_OK


def _cmd_domains(args) -> int:
    d = _load(args.file)
    gens = set(enumerate_generators(d))
    x = _parse_gen(getattr(args, "from"))
    y = _parse_gen(args.to)
    if x not in gens or y not in gens:
        print(f"error: unknown generator {_fmt_gen(x if x not in gens else y)}", file=sys.stderr)
        return EXIT_USAGE
    try:
        found = positive_domains(d, x, y, args.index, args.nz)
    except UnboundedEnumeration as exc:
        doc = {"unbounded": True, "witness": list(exc.witness)}
        _emit(doc, args.json, [f"unbounded enumeration; periodic witness {list(exc.witness)}"])
        return EXIT_NOT_ADMISSIBLE
    doc = {"count": len(found), "domains": [list(dom.coefficients) for dom in found]}
    lines = [f"{len(found)} domains"] + [f"  {list(dom.coefficients)}" for dom in found]
    _emit(doc, args.json, lines)
    return EXIT_OK


def _pick_class(d: HeegaardDiagram, index: Optional[int]):
    classes = spinc_partition(d)
    if index is None:
        return classes, None
    if not 0 <= index < len(classes):
        raise SystemExit(EXIT_USAGE)
    return classes, classes[index]


def _cmd_admissible(args) -> int:
    d = _load(args.file)
    classes, chosen = _pick_class(d, getattr(args, "class"))
    targets = [chosen] if chosen is not None else (classes if args.strong else [None])
    reports = []
    for c in targets:
        if args.strong:
            rep = strong_admissible(d, c)
        else:
            rep = weak_admissible(d, c)
        cert = None
        if rep.verdict:
            try:
                cert = area_certificate(d, rep.kind, c)
            except NotAdmissible:  # pragma: no cover - verdict true implies cert
                cert = None
        reports.append((c, rep, cert))
    doc = {"kind": "strong" if args.strong else "weak", "reports": []}
    lines = []
    ok = True
    for c, rep, cert in reports:
        label = "all" if c is None else _fmt_gen(c.members[0])
        entry = {"class": None if c is None else [list(g.points) for g in c.members],
                 "verdict": rep.verdict}
        if rep.witness is not None:
            entry["witness"] = list(rep.witness)
        if cert is not None:
            entry["areas"] = [_fmt_frac(a) for a in cert]
        doc["reports"].append(entry)
        if rep.verdict:
            lines.append(f"{rep.kind} admissible ({label})")
            if cert is not None:
                lines.append("  areas " + " ".join(_fmt_frac(a) for a in cert))
        else:
            ok = False
            lines.append(f"NOT {rep.kind} admissible ({label}); witness {list(rep.witness)}")
    _emit(doc, args.json, lines)
    return EXIT_OK if ok else EXIT_NOT_ADMISSIBLE


def _cmd_homology(args) -> int:
    d = _load(args.file)
    results = homology(d, strict_rectangles=args.strict_rectangles, threads=args.threads)
    doc = {"classes": [], "total": sum(r.total for r in results)}
    lines = []
    for i, r in enumerate(results):
        doc["classes"].append(
            {
                "members": [list(g.points) for g in r.spinc.members],
                "divisor": r.spinc.divisor,
                "ranks": [[k, v] for k, v in r.ranks],
                "total": r.total,
            }
        )
        lines.append(f"class {i}  divisor {r.spinc.divisor}  total rank {r.total}")
        lines += _table([[f"  grading {k}", f"rank {v}"] for k, v in r.ranks])
    lines.append(f"total rank {doc['total']}")
    _emit(doc, args.json, lines)
    return EXIT_OK


def _cmd_stabilize(args) -> int:
    d = _load(args.file)
    out = stabilize(d)
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(serialize_hfd(out))
    _emit(
        {"genus": out.genus, "regions": len(out.regions), "output": args.output},
        args.json,
        [f"wrote genus {out.genus} diagram with {len(out.regions)} regions to {args.output}"],
    )
    return EXIT_OK


def _cmd_corpus(args) -> int:
    d = corpus.build(args.name, p=args.p, q=args.q, g=args.g)
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(serialize_hfd(d))
    _emit(
        {"name": args.name, "genus": d.genus, "regions": len(d.regions), "output": args.output},
        args.json,
        [f"wrote {args.name}: genus {d.genus}, {len(d.regions)} regions to {args.output}"],
    )
    return EXIT_OK


def _build_parser() -> _Parser:
    parser = _Parser(prog="hf", description="exact Heegaard Floer hat calculator")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="stable JSON output")
        p.add_argument("--threads", type=int, default=1, help="worker threads")

    p = sub.add_parser("validate", help="check an HFD file")
    p.add_argument("file")
    common(p)
    p.set_defaults(fn=_cmd_validate)

    p = sub.add_parser("generators", help="list intersection-point generators")
    p.add_argument("file")
    common(p)
    p.set_defaults(fn=_cmd_generators)

    p = sub.add_parser("spinc", help="spin-c classes, divisors, gradings")
    p.add_argument("file")
    common(p)
    p.set_defaults(fn=_cmd_spinc)

    p = sub.add_parser("domains", help="positive domains between two generators")
    p.add_argument("file")
    p.add_argument("--from", required=True, metavar="X", help="comma-joined points")
    p.add_argument("--to", required=True, metavar="Y", help="comma-joined points")
    p.add_argument("--index", type=int, required=True, help="Maslov index")
    p.add_argument("--nz", type=int, required=True, help="basepoint multiplicity")
    common(p)
    p.set_defaults(fn=_cmd_domains)

    p = sub.add_parser("admissible", help="weak/strong admissibility with certificates")
    p.add_argument("file")
    p.add_argument("--class", type=int, default=None, metavar="K", help="spin-c class index")
    p.add_argument("--strong", action="store_true")
    common(p)
    p.set_defaults(fn=_cmd_admissible)

    p = sub.add_parser("homology", help="graded hat homology over F2")
    p.add_argument("file")
    p.add_argument("--strict-rectangles", action="store_true",
                   help="count only bigons; rectangles become errors")
    common(p)
    p.set_defaults(fn=_cmd_homology)

    p = sub.add_parser("stabilize", help="add a standard one-point torus summand")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    common(p)
    p.set_defaults(fn=_cmd_stabilize)

    p = sub.add_parser("corpus", help="write a named example diagram")
    p.add_argument("name")
    p.add_argument("-p", type=int, default=None)
    p.add_argument("-q", type=int, default=None)
    p.add_argument("-g", type=int, default=None)
    p.add_argument("-o", "--output", required=True)
    common(p)
    p.set_defaults(fn=_cmd_corpus)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.fn(args)
    except (OSError, HFDFormatError, json.JSONDecodeError) as exc:
        print(f"invalid diagram file: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:
        print(f"invalid diagram: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except UnboundedEnumeration as exc:
        print(f"unbounded enumeration; periodic witness {list(exc.witness)}", file=sys.stderr)
        return EXIT_NOT_ADMISSIBLE
    except NotAdmissible as exc:
        print(f"not admissible; witness {list(exc.witness)}", file=sys.stderr)
        return EXIT_NOT_ADMISSIBLE
    except NotCombinatorial as exc:
        print(f"not combinatorial:\n{exc}", file=sys.stderr)
        return EXIT_NOT_COMBINATORIAL
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
