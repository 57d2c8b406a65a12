"""Published reduction tables, the sweep that regenerates them, and diffs.

Fixture rows are transcribed as printed, with the BT1 names rewritten in
this package's notation (``Z/pZ``, ``mu_p``, ``I_{r,s}``) and prime patterns
in the ``P1 P1c P2`` grammar.  The two places where a reading was needed
are commented inline; every other disagreement shows up in the diff.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .cm import (
    DIMENSION_GROUPS,
    CMConfig,
    CMType,
    labelled_cm_type_classes,
    parse_cm_type,
    standard_config,
)
from .kraft import BT1Decomposition, build_kraft_words
from .splitting import SplittingPattern, splitting_pattern

__all__ = [
    "Report",
    "classify",
    "sweep",
    "group_block",
    "dimension_block",
    "THEOREM_BLOCKS",
    "GROUP_BLOCKS",
    "SIGMA_TABLES",
    "SigmaTable",
    "RowCheck",
    "TableCheck",
    "verify_dimension",
    "verify_group_block",
    "verify_sigma_table",
    "TABLE_IDS",
    "verify_table",
    "verify_density",
    "DENSITY_TABLES",
]

ORD1 = "Z/pZ x mu_p"
ORD2 = "(Z/pZ x mu_p)^2"
ORD3 = "(Z/pZ x mu_p)^3"
I11 = "I_{1,1}"
I11_2 = "I_{1,1}^2"
I11_3 = "I_{1,1}^3"
O2_I11 = "(Z/pZ x mu_p)^2 x I_{1,1}"
O1_I11 = "Z/pZ x mu_p x I_{1,1}"
O1_I11_2 = "Z/pZ x mu_p x I_{1,1}^2"
O1_I21 = "Z/pZ x mu_p x I_{2,1}"
I21_I11 = "I_{2,1} x I_{1,1}"


@dataclass(frozen=True)
class Report:
    group: str
    sigma: str
    cm_type: str
    splitting: SplittingPattern
    bt1: BT1Decomposition

    @property
    def key(self) -> tuple[str, str, int, int]:
        """The (pattern, BT1, p-rank, a-number) row this report contributes."""
        return (self.splitting.pattern, self.bt1.name, self.bt1.p_rank, self.bt1.a_number)

    def line(self) -> str:
        return (
            f"{self.splitting.pattern_string} | {self.bt1.name} | "
            f"f={self.bt1.p_rank} a={self.bt1.a_number}"
        )

    def to_dict(self) -> dict:
        return {
            "group": self.group,
            "sigma": self.sigma,
            "cm_type": self.cm_type,
            "splitting": self.splitting.to_dict(),
            "words": self.bt1.words(),
            "kraft": self.bt1.to_dict(),
        }


def classify(cfg: CMConfig, sigma: int, cm_type: CMType, label: str = "") -> Report:
    from .cm import format_cm_type

    return Report(
        cfg.G.name,
        cfg.G.names[sigma],
        label or format_cm_type(cfg, cm_type),
        splitting_pattern(cfg, sigma),
        build_kraft_words(cfg, sigma, cm_type),
    )


def sweep(group: str) -> list[Report]:
    """Every sigma in G against the least member of every primitive class."""
    cfg = standard_config(group)
    out = []
    for label, orbit in labelled_cm_type_classes(cfg):
        for s in range(cfg.G.order):
            out.append(classify(cfg, s, orbit[0], label))
    return out


def group_block(group: str) -> set[tuple[str, str, int, int]]:
    return {r.key for r in sweep(group)}


def dimension_block(dim: int) -> set[tuple[str, str, int, int]]:
    rows: set = set()
    for name in DIMENSION_GROUPS[dim]:
        rows |= group_block(name)
    return rows


# -- fixtures ---------------------------------------------------------------

THEOREM_BLOCKS: dict[int, tuple[tuple[str, str, int, int], ...]] = {
    1: (
        ("P Pc", ORD1, 1, 0),
        ("P", I11, 0, 1),
    ),
    2: (
        ("P1 P1c P2 P2c", ORD2, 2, 0),
        ("P Pc", ORD2, 2, 0),
        ("P Pc", I11_2, 0, 2),
        ("P1 P1c P2", O1_I11, 1, 1),
        ("P1 P2", I11_2, 0, 2),
        ("P", "I_{2,1}", 0, 1),
    ),
    3: (
        ("P1 P1c P2 P2c P3 P3c", ORD3, 3, 0),
        ("P1 P1c P2 P2c", ORD3, 3, 0),
        ("P1 P1c P2 P2c", O1_I11_2, 1, 2),
        ("P Pc", ORD3, 3, 0),
        ("P Pc", "I_{3,2}", 0, 2),
        ("P1 P1c P2 P2c P3", O2_I11, 2, 1),
        ("P1 P1c P2", O2_I11, 2, 1),
        ("P1 P1c P2", I11_3, 0, 3),
        ("P1 P1c P2 P3", ORD3, 3, 0),
        ("P1 P1c P2 P3", O1_I11_2, 1, 2),
        ("P1 P2 P3", I11_3, 0, 3),
        ("P1 P2", I21_I11, 0, 2),
        ("P", "I_{3,1}", 0, 1),
        ("P", I11_3, 0, 3),
    ),
}

GROUP_BLOCKS: dict[str, tuple[tuple[str, str, int, int], ...]] = {
    "E8semiS3": THEOREM_BLOCKS[3],
    "C6": (
        ("P1 P1c P2 P2c P3 P3c", ORD3, 3, 0),
        ("P Pc", ORD3, 3, 0),
        ("P Pc", "I_{3,2}", 0, 2),
        ("P", "I_{3,1}", 0, 1),
    ),
    "C2xS3": (
        ("P1 P1c P2 P2c P3 P3c", ORD3, 3, 0),
        ("P1 P1c P2 P2c", ORD3, 3, 0),
        ("P1 P1c P2 P2c", O1_I11_2, 1, 2),
        ("P Pc", ORD3, 3, 0),
        ("P Pc", "I_{3,2}", 0, 2),
        ("P1 P1c P2", O2_I11, 2, 1),
        ("P1 P1c P2", I11_3, 0, 3),
        ("P1 P2 P3", I11_3, 0, 3),
        ("P1 P2", I21_I11, 0, 2),
        ("P", "I_{3,1}", 0, 1),
    ),
    "E8semiC3": (
        ("P1 P1c P2 P2c P3 P3c", ORD3, 3, 0),
        ("P Pc", ORD3, 3, 0),
        ("P Pc", "I_{3,2}", 0, 2),
        ("P1 P1c P2 P2c P3", O2_I11, 2, 1),
        ("P1 P1c P2 P3", ORD3, 3, 0),
        ("P1 P1c P2 P3", O1_I11_2, 1, 2),
        ("P1 P2 P3", I11_3, 0, 3),
        ("P", "I_{3,1}", 0, 1),
        ("P", I11_3, 0, 3),
    ),
}


@dataclass(frozen=True)
class SigmaTable:
    """A per-sigma table: each row lists sigmas, a pattern and the BT1 name
    for each group of CM-type labels."""

    group: str
    # label -> CM type text; empty means use the labelled classes
    types: dict[str, str]
    rows: tuple[tuple[tuple[str, ...], str, tuple[tuple[str, str], ...]], ...]
    caption: str = ""


_ALL = "ABCD"

SIGMA_TABLES: dict[str, SigmaTable] = {
    "c4": SigmaTable(
        "C4",
        {"*": "S1=[1,x]"},
        (
            (("1",), "P1 P1c P2 P2c", (("*", ORD2),)),
            # printed as I_{1,2} next to the word [FFVV]; the name list
            # only has I_{2,1} for that word
            (("x",), "P", (("*", "I_{2,1}"),)),
            (("x2",), "P1 P2", (("*", I11_2),)),
        ),
        "cyclic quartic",
    ),
    "d4": SigmaTable(
        "D4",
        # the text fixes S1={1,y}, but the printed xy and xy3 rows are those
        # of {1,y3}, its image under the automorphism y -> y3 (which fixes
        # Delta and iota)
        {"*": "S1=[1,y3]"},
        (
            (("1",), "P1 P1c P2 P2c", (("*", ORD2),)),
            (("xy",), "P Pc", (("*", ORD2),)),
            (("xy3",), "P Pc", (("*", I11_2),)),
            (("x",), "P1 P1c P2", (("*", O1_I11),)),
            (("y", "y3"), "P", (("*", "I_{2,1}"),)),
        ),
        "dihedral quartic",
    ),
    "e8s3-order2": SigmaTable(
        "E8semiS3",
        {},
        (
            (("(0,0,1;ts)",), "P1 P1c P2 P2c", (("DB", ORD3), ("AC", O1_I11_2))),
            (("(0,0,0;ts)",), "P1 P1c P2 P2c", (("AC", ORD3), ("BD", O1_I11_2))),
            (("(0,0,1;t)",), "P1 P1c P2", (("AB", I11_3), ("CD", O2_I11))),
            # second label printed in lower case
            (("(0,0,0;ts2)",), "P1 P1c P2", (("AD", O2_I11), ("bC", I11_3))),
            (("(1,0,0;ts2)",), "P1 P1c P2 P2c", (("AD", ORD3), ("BC", O1_I11_2))),
            (("(0,1,0;ts)",), "P1 P1c P2", (("AC", O2_I11), ("BD", I11_3))),
            (("(1,1,1;ts)",), "P1 P1c P2", (("BD", O2_I11), ("AC", I11_3))),
            (("(1,1,0;t)",), "P1 P1c P2 P2c", (("AC", ORD3), ("BD", O1_I11_2))),
            (("(1,1,1;ts2)",), "P1 P1c P2 P2c", (("BC", ORD3), ("AD", O1_I11_2))),
            (("(0,1,1;ts2)",), "P1 P1c P2", (("BC", O2_I11), ("AD", I11_3))),
            (("(0,0,0;t)",), "P1 P1c P2 P2c", (("DC", ORD3), ("AB", O1_I11_2))),
            (("(0,0,0;ts2)",), "P1 P1c P2 P2c", (("AD", ORD3), ("BC", O1_I11_2))),
            (("(0,0,0;ts)",), "P1 P1c P2 P2c", (("AC", ORD3), ("BD", O1_I11_2))),
            (("(1,1,1;t)",), "P1 P1c P2", (("AB", O2_I11), ("CD", I11_3))),
            (("(1,1,1;st)",), "P1 P1c P2 P2c", (("BC", ORD3), ("AD", O1_I11_2))),
            (("(1,1,1;ts)",), "P1 P1c P2", (("CD", O2_I11), ("AB", I11_3))),
            (("(1,1,1;1)",), "P1 P2 P3", ((_ALL, I11_3),)),
            (("(0,0,0;1)",), "P1 P1c P2 P2c P3 P3c", ((_ALL, ORD3),)),
            (("(1,0,0;1)", "(1,1,0;1)", "(0,1,0;1)"), "P1 P1c P2 P2c P3", ((_ALL, O2_I11),)),
            (("(0,1,1;1)", "(0,1,0;1)", "(0,0,1;1)"), "P1 P1c P2", ((_ALL, O1_I11_2),)),
        ),
        "elements of order 2",
    ),
    "e8s3-order3": SigmaTable(
        "E8semiS3",
        {},
        (
            (("(0,0,0;s)", "(0,0,0;s2)"), "P Pc", (("ABC", "I_{3,2}"), ("D", ORD3))),
            (("(1,1,0;s)", "(0,1,1;s2)"), "P Pc", (("ACD", "I_{3,2}"), ("B", ORD3))),
            (("(1,0,1;s)", "(1,1,0;s2)"), "P Pc", (("BCD", "I_{3,2}"), ("A", ORD3))),
        ),
        "elements of order 3",
    ),
    "e8s3-order4": SigmaTable(
        "E8semiS3",
        {},
        (
            (("(1,0,0;t)", "(0,1,0;t)", "(0,1,1;t)", "(1,0,1;t)"), "P1 P1c P2", ((_ALL, O1_I21),)),
            (("(1,0,0;ts)", "(0,0,0;ts)", "(0,1,1;ts)", "(1,1,0;ts)"), "P1 P1c P2", ((_ALL, O1_I21),)),
            (("(1,0,1;ts2)", "(1,1,0;ts2)", "(0,1,0;ts2)", "(0,0,1;ts2)"), "P1 P2", ((_ALL, I21_I11),)),
        ),
        "elements of order 4",
    ),
    "e8s3-order6": SigmaTable(
        "E8semiS3",
        {},
        (
            (("(0,0,1;s)", "(1,0,0;s2)"), "P", (("ABC", "I_{3,1}"), ("D", I11_3))),
            (("(1,1,1;s2)", "(1,1,1;s)"), "P", (("ABC", "I_{3,1}"), ("D", I11_3))),
            (("(1,0,0;s)", "(0,1,0;s2)"), "P", (("ABD", "I_{3,1}"), ("C", I11_3))),
        ),
        "elements of order 6",
    ),
}


# -- verification -----------------------------------------------------------

@dataclass
class RowCheck:
    label: str
    expected: object
    computed: object
    ok: bool

    def to_dict(self) -> dict:
        return {
            "row": self.label,
            "expected": _jsonable(self.expected),
            "computed": _jsonable(self.computed),
            "ok": self.ok,
        }


def _jsonable(x):
    if isinstance(x, (set, frozenset, tuple, list)):
        return [_jsonable(v) for v in x]
    return x


@dataclass
class TableCheck:
    table_id: str
    rows: list[RowCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    @property
    def n_bad(self) -> int:
        return sum(not r.ok for r in self.rows)

    def to_dict(self) -> dict:
        return {"table": self.table_id, "ok": self.ok, "rows": [r.to_dict() for r in self.rows]}


def _set_check(table_id: str, expected, computed) -> TableCheck:
    exp, got = set(expected), set(computed)
    check = TableCheck(table_id)
    for row in sorted(exp | got, key=_row_order):
        check.rows.append(
            RowCheck(
                " / ".join(map(str, row)),
                row if row in exp else None,
                row if row in got else None,
                row in exp and row in got,
            )
        )
    return check


def _row_order(row):
    # more primes first, then pattern text, then p-rank descending
    return (-len(row[0].split()), row[0], -row[2], row[1])


def verify_dimension(dim: int) -> TableCheck:
    return _set_check(f"dim{dim}", THEOREM_BLOCKS[dim], dimension_block(dim))


def verify_group_block(group: str) -> TableCheck:
    return _set_check(f"block-{group}", GROUP_BLOCKS[group], group_block(group))


def _types_for(table: SigmaTable, cfg: CMConfig) -> dict[str, CMType]:
    if table.types:
        return {k: parse_cm_type(cfg, v) for k, v in table.types.items()}
    return {label: orbit[0] for label, orbit in labelled_cm_type_classes(cfg)}


def verify_sigma_table(table_id: str) -> TableCheck:
    table = SIGMA_TABLES[table_id]
    cfg = standard_config(table.group)
    types = _types_for(table, cfg)
    check = TableCheck(table_id)
    for sigmas, pattern, outcomes in table.rows:
        for sname in sigmas:
            s = cfg.G.element(sname)
            pat = splitting_pattern(cfg, s).pattern
            check.rows.append(RowCheck(f"{sname} pattern", pattern, pat, pat == pattern))
            for labels, name in outcomes:
                for lab in labels:
                    got = build_kraft_words(cfg, s, types[lab.upper()]).name
                    check.rows.append(
                        RowCheck(f"{sname} type {lab}", name, got, got == name)
                    )
    return check


# (n, D(B_1), D(B_2)) as printed, per odd prime p
DENSITY_TABLES: dict[int, tuple[tuple[int, str, str], ...]] = {
    3: (
        (1, "0.3388888889", "0.6611111111"),
        (2, "0.3383233533", "0.6616766467"),
        (3, "0.3342293907", "0.6657706093"),
        (5, "0.3334656710", "0.6665343290"),
        (8, "0.3333404746", "0.6666595254"),
    ),
    5: (
        (1, "0.4070080863", "0.5929919137"),
        (2, "0.4019172317", "0.5980827683"),
        (3, "0.4001517555", "0.5998482445"),
        (5, "0.4000055751", "0.5999944249"),
    ),
}
DENSITY_TOL = 1e-9


def verify_density(p: int) -> TableCheck:
    from .weil import density_report, render_decimal

    check = TableCheck(f"density-p{p}")
    for n, e1, e2 in DENSITY_TABLES[p]:
        rep = density_report(p, n)
        for col, exp, got in (("d1", e1, rep.d1), ("d2", e2, rep.d2)):
            ok = abs(float(got) - float(exp)) <= DENSITY_TOL
            check.rows.append(RowCheck(f"q={rep.q} {col}", exp, render_decimal(got), ok))
    return check


TABLE_IDS: tuple[str, ...] = (
    tuple(f"dim{d}" for d in THEOREM_BLOCKS)
    + tuple(f"block-{g}" for g in GROUP_BLOCKS)
    + tuple(SIGMA_TABLES)
    + tuple(f"density-p{p}" for p in DENSITY_TABLES)
)


def verify_table(table_id: str) -> TableCheck:
    if table_id.startswith("dim") and table_id[3:].isdigit():
        return verify_dimension(int(table_id[3:]))
    if table_id.startswith("block-") and table_id[6:] in GROUP_BLOCKS:
        return verify_group_block(table_id[6:])
    if table_id in SIGMA_TABLES:
        return verify_sigma_table(table_id)
    if table_id.startswith("density-p") and table_id[9:].isdigit() and int(table_id[9:]) in DENSITY_TABLES:
        return verify_density(int(table_id[9:]))
    raise KeyError(f"unknown table {table_id!r}; choose from {', '.join(TABLE_IDS)}")
