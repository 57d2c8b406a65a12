"""Command line: ``cmkraft {group,classify,cmtypes,tables,density}``.

Exit status is 0 on success, 1 when ``--verify`` finds a mismatch and 2 for
usage errors (bad flags, unknown groups or element tokens).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .cm import (
    CMError,
    format_cm_type,
    labelled_cm_type_classes,
    parse_cm_type,
    standard_config,
)
from .groups import GROUP_NAMES, GroupError, build_named_group
from .tables import (
    TABLE_IDS,
    THEOREM_BLOCKS,
    TableCheck,
    classify,
    dimension_block,
    verify_table,
)
from .weil import CSV_HEADER, DensityError, density_report

FORMATS = ("md", "csv", "json")


class UsageError(Exception):
    pass


# -- rendering helpers -----------------------------------------------------

def _md_table(header, rows) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    lines += ["| " + " | ".join(str(c) for c in r) + " |" for r in rows]
    return "\n".join(lines)


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _render(fmt, header, rows, payload) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2, sort_keys=False)
    if fmt == "csv":
        return _csv(header, rows)
    return _md_table(header, rows)


def _check_text(check: TableCheck, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(check.to_dict(), indent=2)
    header = ["row", "expected", "computed", "status"]
    rows = [
        [r.label, _cell(r.expected), _cell(r.computed), "ok" if r.ok else "MISMATCH"]
        for r in check.rows
    ]
    body = _csv(header, rows) if fmt == "csv" else _md_table(header, rows)
    if fmt == "csv":
        return body
    status = "PASS" if check.ok else f"FAIL ({check.n_bad} of {len(check.rows)} rows differ)"
    return f"{check.table_id}: {status}\n{body}"


def _cell(x) -> str:
    if x is None:
        return "-"
    if isinstance(x, tuple):
        return " / ".join(map(str, x))
    return str(x)


# -- subcommands -------------------------------------------------------------

def cmd_group(args) -> tuple[str, int]:
    if args.action == "list":
        rows = [[n, build_named_group(n).order] for n in GROUP_NAMES]
        payload = [{"name": n, "order": o} for n, o in rows]
        return _render(args.format, ["group", "order"], rows, payload), 0
    if not args.name:
        raise UsageError("group show needs a group name")
    cfg = _config(args.name)
    G = cfg.G
    classes = [
        [i + 1, cfg.class_name(i), " ".join(G.names[g] for g in c.members),
         cfg.class_name(cfg.conj(i))]
        for i, c in enumerate(cfg.classes)
    ]
    payload = {
        "name": G.name,
        "order": G.order,
        "elements": list(G.names),
        "delta": [G.names[g] for g in cfg.delta.members],
        "iota": G.names[cfg.iota],
        "classes": [
            {"representative": r[1], "members": r[2].split(), "conjugate": r[3]}
            for r in classes
        ],
    }
    if args.format == "json":
        return json.dumps(payload, indent=2), 0
    if args.format == "csv":
        return _csv(["class", "representative", "members", "conjugate"], classes), 0
    head = (
        f"{G.name}: order {G.order}\n"
        f"Delta = {{{', '.join(payload['delta'])}}}, iota = {payload['iota']}\n"
        f"elements: {' '.join(G.names)}\n\n"
    )
    return head + _md_table(["class", "representative", "members", "conjugate"], classes), 0


def _config(name: str):
    try:
        return standard_config(name)
    except (GroupError, KeyError):
        raise UsageError(
            f"unknown group {name!r}; choose from {', '.join(GROUP_NAMES)}"
        ) from None


def _element(G, token: str, what: str) -> int:
    try:
        return G.element(token)
    except GroupError:
        raise UsageError(f"cannot parse {what} {token!r} in {G.name}") from None


def cmd_classify(args) -> tuple[str, int]:
    cfg = _config(args.group)
    sigma = _element(cfg.G, args.sigma, "sigma")
    if args.cm_type_class:
        labelled = dict(labelled_cm_type_classes(cfg))
        if args.cm_type_class not in labelled:
            raise UsageError(
                f"unknown CM-type class {args.cm_type_class!r}; "
                f"choose from {', '.join(labelled)}"
            )
        t = labelled[args.cm_type_class][0]
        label = args.cm_type_class
    else:
        try:
            t = parse_cm_type(cfg, args.cm_type)
        except CMError as exc:
            raise UsageError(str(exc)) from None
        label = format_cm_type(cfg, t)
    rep = classify(cfg, sigma, t, label)
    if args.format == "json":
        return json.dumps(rep.to_dict(), indent=2), 0
    if args.format == "csv":
        header = ["group", "sigma", "cm_type", "pattern", "words", "bt1", "p_rank", "a_number"]
        row = [rep.group, rep.sigma, rep.cm_type, rep.splitting.pattern_string,
               " ".join(rep.bt1.words()), rep.bt1.name, rep.bt1.p_rank, rep.bt1.a_number]
        return _csv(header, [row]), 0
    return rep.line(), 0


def cmd_cmtypes(args) -> tuple[str, int]:
    cfg = _config(args.group)
    rows = []
    for label, orbit in labelled_cm_type_classes(cfg):
        rows.append([label, format_cm_type(cfg, orbit[0]), len(orbit),
                     " ".join(format_cm_type(cfg, t)[3:] for t in orbit)])
    payload = [
        {"label": r[0], "representative": r[1], "size": r[2],
         "members": [format_cm_type(cfg, t) for t in orbit]}
        for r, (_, orbit) in zip(rows, labelled_cm_type_classes(cfg))
    ]
    return _render(args.format, ["class", "representative", "size", "members"], rows, payload), 0


def cmd_tables(args) -> tuple[str, int]:
    if args.all:
        ids = list(TABLE_IDS)
    elif args.table:
        ids = [args.table]
    elif args.dim is not None:
        if args.dim not in THEOREM_BLOCKS:
            raise UsageError(f"--dim must be one of {sorted(THEOREM_BLOCKS)}")
        ids = [f"dim{args.dim}"]
    else:
        raise UsageError("tables needs --dim N, --table ID or --all")

    if not args.verify:
        if args.dim is not None and not args.table and not args.all:
            rows = sorted(dimension_block(args.dim), key=lambda r: (-len(r[0].split()), r[0], -r[2]))
            payload = [dict(zip(("pattern", "bt1", "p_rank", "a_number"), r)) for r in rows]
            return _render(args.format, ["pattern", "BT1", "p-rank", "a-number"], rows, payload), 0
        # for a named table, show the comparison without failing
        checks = [_verify(t) for t in ids]
        return _join_checks(checks, args.format), 0

    checks = [_verify(t) for t in ids]
    return _join_checks(checks, args.format), 0 if all(c.ok for c in checks) else 1


def _verify(table_id: str) -> TableCheck:
    try:
        return verify_table(table_id)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None


def _join_checks(checks, fmt) -> str:
    if fmt == "json":
        return json.dumps([c.to_dict() for c in checks], indent=2)
    return "\n\n".join(_check_text(c, fmt) for c in checks)


def cmd_density(args) -> tuple[str, int]:
    try:
        rep = density_report(args.p, args.n, workers=args.workers)
    except DensityError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        return json.dumps(rep.to_dict(), indent=2), 0
    if args.format == "csv":
        return CSV_HEADER + "\n" + rep.csv_row(), 0
    row = rep.csv_row().split(",")
    return _md_table(CSV_HEADER.split(","), [row]), 0


# -- parser ----------------------------------------------------------------

def _common() -> argparse.ArgumentParser:
    # accepted both before and after the subcommand
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    p.add_argument("--out", default=argparse.SUPPRESS, help="write output to this file")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="cmkraft",
        description="Reduction of CM abelian varieties: splitting, Kraft words, densities.",
    )
    parser.add_argument("--format", choices=FORMATS, default="md")
    parser.add_argument("--out", default=None, help="write output to this file")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("group", parents=[common], help="list or show the built-in groups")
    g.add_argument("action", choices=("list", "show"))
    g.add_argument("name", nargs="?")
    g.set_defaults(func=cmd_group)

    c = sub.add_parser("classify", parents=[common], help="splitting and BT1 for one sigma")
    c.add_argument("--group", required=True)
    c.add_argument("--sigma", required=True)
    ct = c.add_mutually_exclusive_group(required=True)
    ct.add_argument("--cm-type", help='e.g. "S1=[1,y]"')
    ct.add_argument("--cm-type-class", help="class label from `cmtypes`")
    c.set_defaults(func=cmd_classify)

    m = sub.add_parser("cmtypes", parents=[common], help="primitive CM-type classes")
    m.add_argument("--group", required=True)
    m.set_defaults(func=cmd_cmtypes)

    t = sub.add_parser("tables", parents=[common], help="regenerate and verify tables")
    sel = t.add_mutually_exclusive_group()
    sel.add_argument("--dim", type=int)
    sel.add_argument("--table", help="one of: " + ", ".join(TABLE_IDS))
    sel.add_argument("--all", action="store_true")
    t.add_argument("--verify", action="store_true")
    t.set_defaults(func=cmd_tables)

    d = sub.add_parser("density", parents=[common], help="ordinary surface census over F_q")
    d.add_argument("--p", type=int, required=True)
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--workers", type=int, default=1)
    d.set_defaults(func=cmd_density)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = args.func(args)
    except UsageError as exc:
        print(f"cmkraft: error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
