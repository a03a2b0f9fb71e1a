"""Command-line interface: ``weylorbits <command> [options]``."""
from __future__ import annotations

import argparse
import re
import sys
from typing import Callable, Sequence

from . import export
from .conjclass import DEFAULT_BUDGET, BudgetExceeded, enumerate_classes
from .labels import EXCEPTIONAL, ClassLabel, canonical_carter, parse_class_label
from .maps import (
    NotUnique,
    all_orbits,
    d_of,
    elementary_moves,
    fiber_records,
    kl,
    move_graph,
    phi,
    psi,
    verify_identity,
)
from .orbits import orbit_record, parse_jordan
from .partitions import parse_parts
from .rootsys import RootSystem, build_root_system, weyl_group_order
from .skeleta import (
    build_uspace,
    jblock_partition,
    minimal_jordan_via_skeleton,
    minimal_profile,
    quadric_pair_counts,
    rank_sequence,
    torsor_size,
)
from .tables import SHIPPED, TableError, load_exceptional_tables, load_shipped_tables


class UsageError(ValueError):
    pass


# argument handling -----------------------------------------------------

def _common(suppress: bool = False) -> argparse.ArgumentParser:
    # Subcommand copies suppress their defaults so that flags given before the
    # subcommand name are not overwritten.
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--type", dest="cartan_type", default=d(None),
                   help="A, B, C, D, G2, F4, E6, E7, E8 (or e.g. B4)")
    p.add_argument("--rank", type=int, default=d(None), help="rank for classical types")
    p.add_argument("--format", choices=("text", "json", "csv", "dot"), default=d("text"))
    p.add_argument("--tables", default=d(None), help="directory with classes.tsv, orbits.tsv, phi.tsv")
    p.add_argument("--budget", type=int, default=d(DEFAULT_BUDGET), help="BFS size limit")
    p.add_argument("--seed", type=int, default=d(None), help="eigenvalue seed for quadrics")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weylorbits", parents=[_common()],
                                     description="Weyl group classes and nilpotent orbits.")
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common(suppress=True)
    sub.add_parser("roots", parents=[common], help="root system summary")
    c = sub.add_parser("classes", parents=[common], help="conjugacy classes and invariants")
    c.add_argument("--min-length", action="store_true", help="also compute minimal lengths")
    c.add_argument("--allow-large", action="store_true", help="permit E7/E8 enumeration")
    sub.add_parser("orbits", parents=[common], help="nilpotent orbits")
    p = sub.add_parser("phi", parents=[common], help="orbit of a class")
    p.add_argument("--class", dest="cls")
    for name in ("psi", "kl"):
        q = sub.add_parser(name, parents=[common], help=f"{name} section of a fiber")
        q.add_argument("--orbit")
    f = sub.add_parser("fiber", parents=[common], help="classes over an orbit")
    f.add_argument("--orbit", required=True)
    m = sub.add_parser("moves", parents=[common], help="elementary moves from a class")
    m.add_argument("--class", dest="cls", required=True)
    s = sub.add_parser("skeleton", parents=[common], help="lattice-profile model of an elliptic class")
    s.add_argument("--cycles", required=True, help="negative cycle lengths, e.g. 2,1,1")
    qd = sub.add_parser("quadrics", parents=[common], help="isotropic line counts for a quadric pair")
    qd.add_argument("--m", type=int, required=True)
    v = sub.add_parser("verify", parents=[common], help="run every identity check")
    v.add_argument("--no-min-length", action="store_true")
    e = sub.add_parser("export", parents=[common], help="dump records")
    e.add_argument("--what", choices=("classes", "orbits", "phi", "report"), default="classes")
    return parser


def _root_system(args) -> RootSystem:
    t = (args.cartan_type or "").upper()
    if not t:
        raise UsageError("--type is required")
    if t in EXCEPTIONAL:
        return build_root_system(t)
    m = re.fullmatch(r"([ABCD])(\d+)?", t)
    if not m:
        raise UsageError(f"unknown type {args.cartan_type!r}")
    rank = int(m[2]) if m[2] else args.rank
    if rank is None:
        raise UsageError(f"--rank is required for type {m[1]}")
    try:
        return build_root_system(m[1], rank)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _tables(args, rs: RootSystem, required: bool = False):
    if rs.is_classical:
        return None
    if args.tables:
        return load_exceptional_tables(args.tables, rs.cartan_type)
    if rs.cartan_type in SHIPPED:
        return load_shipped_tables(rs.cartan_type)
    if required:
        raise KeyError(f"{rs.cartan_type} needs --tables")
    return None


def _class(rs: RootSystem, text: str | None) -> ClassLabel:
    if text is None:
        raise UsageError("--class is required")
    try:
        return parse_class_label(text, rs.cartan_type)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _orbit(rs: RootSystem, text: str, tables):
    if rs.is_classical:
        try:
            return parse_jordan(text, rs.cartan_type, rs.rank)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    label = "0" if text.strip() in ("0", "1") else canonical_carter(text)
    for orb in all_orbits(rs, tables):
        if orb.label == label:
            return orb
    raise UsageError(f"unknown orbit {text!r} for {rs.name}")


# output ----------------------------------------------------------------

def _emit(args, out, text_lines: Sequence[str], json_obj=None, csv_rows=None, csv_cols=None, dot=None):
    fmt = args.format
    if fmt == "json":
        out.write(export.dumps(json_obj) + "\n")
    elif fmt == "csv":
        if csv_rows is None:
            raise UsageError("csv output is not available for this command")
        out.write(export.to_csv(csv_rows, csv_cols))
    elif fmt == "dot":
        if dot is None:
            raise UsageError("dot output is not available for this command")
        out.write(dot())
    else:
        for line in text_lines:
            out.write(line + "\n")


def _orbit_row(orb) -> dict:
    if hasattr(orb, "label"):
        return {"orbit": orb.label, "dim_orbit": orb.dim_orbit, "d_O": orb.d_O}
    rec = orbit_record(orb)
    return {"orbit": str(orb), "dim_orbit": rec.dim_orbit, "d_O": rec.d_O}


CLASS_COLUMNS = ("label", "order", "fixed_dim", "delta", "class_size", "min_length", "word")


def _class_row(r) -> dict:
    return {"label": str(r.label), "order": r.order, "fixed_dim": r.fixed_dim, "delta": r.delta,
            "class_size": r.class_size, "min_length": r.min_length,
            "word": "-".join(map(str, r.word))}


# commands --------------------------------------------------------------

def cmd_roots(args, out) -> int:
    rs = _root_system(args)
    positive = [list(r) for i, r in enumerate(rs.roots) if rs.is_positive(i)]
    info = {"type": rs.cartan_type, "rank": rs.rank, "roots": len(rs.roots),
            "weyl_order": weyl_group_order(rs.cartan_type, rs.rank),
            "simple_roots": [list(r) for r in rs.simple_roots], "positive_roots": positive}
    lines = [f"{rs.name}: {len(rs.roots)} roots, |W| = {info['weyl_order']}",
             "simple roots: " + " ".join(str(tuple(r)) for r in rs.simple_roots)]
    rows = [{"index": i, "root": " ".join(map(str, r))} for i, r in enumerate(positive)]
    _emit(args, out, lines, info, rows, ("index", "root"))
    return 0


def cmd_classes(args, out) -> int:
    rs = _root_system(args)
    records = enumerate_classes(rs, _tables(args, rs), with_min_length=args.min_length,
                                budget=args.budget, allow_large=args.allow_large)
    rows = [_class_row(r) for r in records]
    lines = ["\t".join(CLASS_COLUMNS)] + ["\t".join("" if row[c] is None else str(row[c])
                                                    for c in CLASS_COLUMNS) for row in rows]
    _emit(args, out, lines, records, rows, CLASS_COLUMNS)
    return 0


def cmd_orbits(args, out) -> int:
    rs = _root_system(args)
    orbits = all_orbits(rs, _tables(args, rs, required=True))
    rows = [_orbit_row(o) for o in orbits]
    lines = [f"{r['orbit']}\tdim={r['dim_orbit']}\td_O={r['d_O']}" for r in rows]

    def dot():
        if not rs.is_classical:
            raise UsageError("closure order is only available for classical types")
        nodes, edges = export.orbit_poset(orbits)
        return export.render_poset_dot(nodes, edges, f"{rs.name} orbits")
    _emit(args, out, lines, orbits, rows, ("orbit", "dim_orbit", "d_O"), dot)
    return 0


def cmd_phi(args, out) -> int:
    rs = _root_system(args)
    tables = _tables(args, rs, required=True)
    if args.cls is not None:
        label = _class(rs, args.cls)
        orb = phi(rs, label, tables)
        _emit(args, out, [str(orb)], {"class": label, "orbit": orb},
              [{"class": str(label), "orbit": str(orb)}], ("class", "orbit"))
        return 0
    records = enumerate_classes(rs, tables, budget=args.budget)
    pairs = [(r.label, phi(rs, r.label, tables)) for r in records]
    _emit(args, out, [f"{c}\t{o}" for c, o in pairs],
          [{"class": c, "orbit": o} for c, o in pairs],
          [{"class": str(c), "orbit": str(o)} for c, o in pairs], ("class", "orbit"))
    return 0


def _section(fn: Callable) -> Callable:
    def run(args, out) -> int:
        rs = _root_system(args)
        tables = _tables(args, rs, required=True)
        records = enumerate_classes(rs, tables, budget=args.budget)
        orbits = [_orbit(rs, args.orbit, tables)] if args.orbit else all_orbits(rs, tables)
        pairs = [(o, fn(rs, o, tables, records)) for o in orbits]
        lines = [str(c) for _, c in pairs] if args.orbit else [f"{o}\t{c}" for o, c in pairs]
        _emit(args, out, lines, [{"orbit": o, "class": c} for o, c in pairs],
              [{"orbit": str(o), "class": str(c)} for o, c in pairs], ("orbit", "class"))
        return 0
    return run


def cmd_fiber(args, out) -> int:
    rs = _root_system(args)
    tables = _tables(args, rs, required=True)
    orb = _orbit(rs, args.orbit, tables)
    members = fiber_records(rs, orb, tables, enumerate_classes(rs, tables, budget=args.budget))
    rows = [_class_row(r) for r in members]
    d = d_of(orb)
    lines = [f"{orb}: d_O = {d}"] + [f"{r['label']}\tfixed_dim={r['fixed_dim']}\tdelta={r['delta']}"
                                     for r in rows]

    def dot():
        edges = [(str(e.from_label), str(e.to_label)) for e in move_graph(rs, members)]
        return export.render_poset_dot([r["label"] for r in rows], edges, f"fiber {orb}")
    _emit(args, out, lines, {"orbit": orb, "d_O": d, "classes": members}, rows, CLASS_COLUMNS, dot)
    return 0


def cmd_moves(args, out) -> int:
    rs = _root_system(args)
    if rs.cartan_type not in ("B", "C", "D"):
        raise UsageError("elementary moves are defined for types B, C, D")
    label = _class(rs, args.cls)
    edges = elementary_moves(label, rs.cartan_type)
    start = phi(rs, label)
    rows = [{"from": str(e.from_label), "to": str(e.to_label), "removed_part": e.removed_part,
             "same_fiber": phi(rs, e.to_label) == start} for e in edges]
    lines = [f"{r['from']} -> {r['to']}\tremove {r['removed_part']}"
             + ("" if r["same_fiber"] else "\t(leaves fiber)") for r in rows]

    def dot():
        return export.render_poset_dot([str(label)] + [r["to"] for r in rows],
                                       [(r["from"], r["to"]) for r in rows], f"moves {label}")
    _emit(args, out, lines, edges, rows, ("from", "to", "removed_part", "same_fiber"), dot)
    return 0


def cmd_skeleton(args, out) -> int:
    t = (args.cartan_type or "").upper()[:1]
    if t not in ("B", "C", "D"):
        raise UsageError("skeleton needs --type B, C or D")
    try:
        cycles = parse_parts(args.cycles)
        if not cycles:
            raise ValueError("empty cycle list")
        if args.rank is not None and args.rank != sum(cycles):
            raise ValueError(f"cycles sum to {sum(cycles)}, not the rank {args.rank}")
        u = build_uspace(t, cycles)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    jordan = minimal_jordan_via_skeleton(t, cycles)
    size = torsor_size(t, cycles)
    info = {"type": t, "cycles": list(cycles), "jordan": jordan, "torsor_size": size}
    lines = []
    if t != "C":
        prof = minimal_profile(u)
        ranks = rank_sequence(u, prof)
        info.update(dims={str(k): v for k, v in u.dims.items()}, profile=prof, ranks=ranks,
                    blocks=[list(b) for b in jblock_partition(u).blocks])
        lines += ["U dims: " + ", ".join(f"{j}:{d}" for j, d in u.dims.items()),
                  "minimal profile: " + ", ".join(f"j={j} ell={prof.ell[j]} r={prof.r[j]}" for j in u.dims),
                  "ranks: " + ",".join(map(str, ranks))]
    lines += [f"jordan type: {jordan}", f"torsor size: {size}"]
    _emit(args, out, lines, info)
    return 0


def cmd_quadrics(args, out) -> int:
    if not 1 <= args.m <= 5:
        raise UsageError("--m must be between 1 and 5")
    x, y = quadric_pair_counts(args.m, args.seed)
    _emit(args, out, [f"dim {2 * args.m}: {x}", f"dim {2 * args.m + 1}: {y}"],
          {"m": args.m, "x_count": x, "y_count": y},
          [{"m": args.m, "x_count": x, "y_count": y}], ("m", "x_count", "y_count"))
    return 0


def _report(args):
    rs = _root_system(args)
    return verify_identity(rs, args.budget, _tables(args, rs, required=True),
                           check_min_length=not getattr(args, "no_min_length", False))


def cmd_verify(args, out) -> int:
    report = _report(args)
    d = report.to_dict()
    s = d["summary"]
    lines = [f"{e['status'].upper()}\t{e['check']}\t{e['subject']}\t{e['detail']}" for e in report.failures]
    lines.append(f"{report.cartan_type}{report.rank}: {s['pass']} pass, {s['fail']} fail, {s['skip']} skip")
    _emit(args, out, lines, d, report.entries, ("check", "subject", "status", "detail"))
    return 0 if report.ok else 1


def cmd_export(args, out) -> int:
    if args.format == "text":
        args.format = "json"
    handler = {"classes": cmd_classes, "orbits": cmd_orbits, "phi": cmd_phi, "report": cmd_verify}
    if args.what == "classes":
        args.min_length, args.allow_large = False, False
    if args.what == "phi":
        args.cls = None
    return handler[args.what](args, out)


COMMANDS = {
    "roots": cmd_roots, "classes": cmd_classes, "orbits": cmd_orbits, "phi": cmd_phi,
    "psi": _section(psi), "kl": _section(kl), "fiber": cmd_fiber, "moves": cmd_moves,
    "skeleton": cmd_skeleton, "quadrics": cmd_quadrics, "verify": cmd_verify, "export": cmd_export,
}


def run_command(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    """Run one command; returns 0 on success, 1 on failure, 2 on usage error."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 2
    except (BudgetExceeded, NotUnique, TableError, KeyError, ValueError, ArithmeticError, AssertionError) as exc:
        err.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run_command())

