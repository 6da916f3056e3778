"""Command-line front end.

Subcommands: ``approx`` (approximation pair tables), ``lattice`` (the
ordered set of pairs as DOT or JSON), ``verify`` (structure report and exit
code), ``infosys`` (materialise relations from an attribute table).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import algebra, infosys
from .approximation import ENUMERATION_CAP
from .compatibility import is_compatible
from .errors import CapExceeded, CsvError, NotCompatible, UniverseMismatch
from .lattice import approximation_lattice, rough_pair
from .relations import (
    Equivalence,
    Tolerance,
    induced_tolerance,
    kernel,
    load_covering,
    load_relation,
    relation_to_dict,
    save_relation,
)


def _add_relation_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--e-relation", metavar="FILE", help="equivalence as a relation JSON file")
    p.add_argument("--t-relation", metavar="FILE", help="tolerance as a relation JSON file")
    p.add_argument("--covering", metavar="FILE", help="covering JSON file; the tolerance it induces is used")
    p.add_argument("--cap", type=int, default=ENUMERATION_CAP, help="enumeration cap (default %(default)s)")


def _load_pair(args) -> tuple[Equivalence, Tolerance]:
    if args.covering:
        t = induced_tolerance(load_covering(args.covering))
        if args.t_relation:
            raise ValueError("give either --covering or --t-relation, not both")
    elif args.t_relation:
        t = load_relation(args.t_relation, Tolerance)
    elif args.e_relation:
        t = None
    else:
        raise ValueError("no relations given; use --covering, --t-relation or --e-relation")
    e = load_relation(args.e_relation, Equivalence) if args.e_relation else kernel(t)
    if t is None:
        t = e
    return e, t


def _emit(args, text: str) -> None:
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _cmd_approx(args) -> int:
    e, t = _load_pair(args)
    report = is_compatible(e, t)
    if not report.compatible and not args.force:
        sys.stderr.write(json.dumps(report.to_json_dict(), ensure_ascii=False) + "\n")
        sys.stderr.write("incompatible pair; re-run with --force to compute the table anyway\n")
        return 1
    u = e.universe
    if args.all:
        if u.size > args.cap:
            raise CapExceeded(f"table over 2^{u.size} subsets exceeds the cap of 2^{args.cap}")
        masks = list(u.graded_masks())
    elif args.set is not None:
        masks = [u.subset(lab for lab in args.set.split(",") if lab)]
    else:
        raise ValueError("give --set LABELS or --all")
    pairs = [rough_pair(e, t, x, force=True) for x in masks]
    if args.format == "json":
        data = {
            "universe": list(u.labels),
            "compatible": report.compatible,
            "rows": [
                {"set": list(u.labels_of(x)), "lower": list(u.labels_of(p.lower)), "upper": list(u.labels_of(p.upper))}
                for x, p in zip(masks, pairs)
            ],
        }
        _emit(args, json.dumps(data, indent=2, ensure_ascii=False) + "\n")
    else:
        lines = ["X\t(X_E,X^T)"]
        lines += [f"{u.format_set(x, braces=True)}\t{u.format_pair(*p)}" for x, p in zip(masks, pairs)]
        _emit(args, "\n".join(lines) + "\n")
    return 0


def _cmd_lattice(args) -> int:
    e, t = _load_pair(args)
    report = is_compatible(e, t)
    rl = approximation_lattice(e, t, cap=args.cap, force=True)
    lattice_verdict = algebra.is_lattice(rl)
    annotations: dict = {
        "compatible": report.compatible,
        "is_lattice": bool(lattice_verdict.holds),
    }
    if lattice_verdict.holds:
        distr = algebra.is_distributive(rl)
        annotations["is_distributive"] = bool(distr.holds)
        if distr.holds is False:
            annotations["distributivity_witness"] = distr.witness
            pent = algebra.find_pentagon(rl)
            if pent:
                annotations["pentagon"] = ", ".join(rl.universe.format_pair(*p) for p in pent)
    else:
        annotations["non_lattice_witness"] = lattice_verdict.witness
    if args.format == "json":
        _emit(args, rl.to_json(annotations))
    elif args.format == "table":
        u = rl.universe
        lines = [f"{k}: {v}" for k, v in annotations.items()]
        lines += [f"{i}\t{u.format_pair(*p)}" for i, p in enumerate(rl.elements)]
        lines += [f"cover\t{i} -> {j}" for i, j in rl.covers()]
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, rl.to_dot(annotations))
    return 0


_VERIFY_NAMES = ("compatible",) + algebra.AlgebraReport.CHECKS


def _cmd_verify(args) -> int:
    e, t = _load_pair(args)
    report = algebra.analyze(e, t, cap=args.cap)
    if args.format == "table":
        lines = []
        for name in _VERIFY_NAMES:
            v = report.verdict(name)
            state = {True: "yes", False: "no", None: "n/a"}[v.holds]
            extra = "".join(
                f"  [{part}]" for part in (v.witness, v.note) if part
            )
            lines.append(f"{name}: {state}{extra}")
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, json.dumps(report.to_json_dict(), indent=2, ensure_ascii=False) + "\n")
    required = [name.strip() for name in (args.require or "").split(",") if name.strip()]
    for name in required:
        if name not in _VERIFY_NAMES:
            raise ValueError(f"unknown check {name!r}; known: {', '.join(_VERIFY_NAMES)}")
        if report.verdict(name).holds is not True:
            return 1
    return 0


def _cmd_infosys(args) -> int:
    system = infosys.load_csv(args.table)
    names = [n.strip() for n in args.attrs.split(",") if n.strip()] if args.attrs else list(system.names())
    outdir = Path(args.output or ".")
    outdir.mkdir(parents=True, exist_ok=True)
    ind_rel = infosys.ind(system, names)
    produced: list[tuple[str, Tolerance]] = [("ind", ind_rel), ("wind", infosys.wind(system, names))]
    if all(system.attribute(n).numeric for n in names):
        produced.append(("sim", infosys.sim(system, names)))
    else:
        symbolic = next(n for n in names if not system.attribute(n).numeric)
        print(f"sim skipped: attribute {symbolic!r} is symbolic")
    if args.k is not None:
        produced.append((f"graded_k{args.k}", infosys.graded(system, names, args.k)))
    for stem, rel in produced:
        path = outdir / f"{stem}.json"
        save_relation(rel, path)
        print(f"wrote {path}")
        if stem != "ind":
            ok = is_compatible(ind_rel, rel).compatible
            name = stem.split("_")[0] if stem.startswith("graded") else stem
            print(f"{name} compatible with ind: {str(ok).lower()}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="roughtol", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("approx", help="print approximation pairs for one subset or the whole table")
    _add_relation_args(p)
    p.add_argument("--set", metavar="LABELS", help="comma-separated element labels (empty for the empty set)")
    p.add_argument("--all", action="store_true", help="tabulate every subset")
    p.add_argument("--force", action="store_true", help="proceed even if the pair is incompatible")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--output", metavar="FILE")
    p.set_defaults(func=_cmd_approx)

    p = sub.add_parser("lattice", help="emit the ordered set of pairs with its Hasse diagram")
    _add_relation_args(p)
    p.add_argument("--format", choices=("dot", "json", "table"), default="dot")
    p.add_argument("--output", metavar="FILE")
    p.set_defaults(func=_cmd_lattice)

    p = sub.add_parser("verify", help="run the structure checks and report verdicts")
    _add_relation_args(p)
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.add_argument("--require", metavar="NAMES", help="comma-separated checks that must hold for exit code 0")
    p.add_argument("--output", metavar="FILE")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("infosys", help="derive relations from an attribute table")
    p.add_argument("table", help="CSV file (header row; optional threshold row)")
    p.add_argument("--attrs", metavar="NAMES", help="comma-separated attribute selection (default: all)")
    p.add_argument("--k", type=int, help="agreement count for the graded relation")
    p.add_argument("--output", metavar="DIR", help="directory for the relation files (default: .)")
    p.set_defaults(func=_cmd_infosys)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotCompatible as exc:
        sys.stderr.write(json.dumps(exc.report.to_json_dict(), ensure_ascii=False) + "\n")
        return 1
    except (ValueError, CapExceeded, UniverseMismatch, CsvError, OSError, json.JSONDecodeError, KeyError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
