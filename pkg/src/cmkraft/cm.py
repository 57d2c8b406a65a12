"""CM configurations (G, Delta, iota) and CM types as sets of coset classes."""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

from .groups import (
    CosetClass,
    GroupError,
    GroupTable,
    Subgroup,
    build_named_group,
    element_order,
    generated_subgroup,
    is_central,
    left_cosets,
    normalizer,
    subgroup,
)

__all__ = [
    "CMError",
    "CMConfig",
    "CMType",
    "make_cm_config",
    "standard_config",
    "STANDARD_CONFIGS",
    "DIMENSION_GROUPS",
    "all_cm_types",
    "is_primitive",
    "cm_type_classes",
    "parse_cm_type",
    "format_cm_type",
    "E8S3_TYPE_LABELS",
    "labelled_cm_type_classes",
]


class CMError(ValueError):
    pass


@dataclass(frozen=True)
class CMConfig:
    G: GroupTable
    delta: Subgroup
    iota: int
    classes: tuple[CosetClass, ...]
    # class_of[g] = index of the class containing g
    class_of: tuple[int, ...]

    @property
    def g(self) -> int:
        """Dimension of the abelian variety: half the number of classes."""
        return len(self.classes) // 2

    def translate(self, x: int, c: int) -> int:
        """Index of the class ``x * classes[c]``."""
        return self.class_of[self.G.mul[x][self.classes[c].representative]]

    def conj(self, c: int) -> int:
        return self.translate(self.iota, c)

    def class_name(self, c: int) -> str:
        return self.G.names[self.classes[c].representative]


@dataclass(frozen=True)
class CMType:
    """A CM type: ``s1`` holds class indices, ``s0`` their conjugates."""

    s1: frozenset[int]
    s0: frozenset[int]

    def letter(self, c: int) -> str:
        return "F" if c in self.s1 else "V"


def make_cm_config(G: GroupTable, delta: Subgroup, iota: int) -> CMConfig:
    try:
        delta = subgroup(G, delta.members)
    except GroupError as exc:
        raise CMError(f"Delta is not a subgroup: {exc}") from None
    if not 0 <= iota < G.order:
        raise CMError("iota out of range")
    if element_order(G, iota) != 2:
        raise CMError("iota must have order 2")
    if iota in delta:
        raise CMError("iota must not lie in Delta")
    if not is_central(G, iota):
        raise CMError("iota must be central in G")
    classes = tuple(left_cosets(G, delta))
    class_of = [0] * G.order
    for i, c in enumerate(classes):
        for g in c.members:
            class_of[g] = i
    cfg = CMConfig(G, delta, iota, classes, tuple(class_of))
    # iota central and outside Delta: left translation by iota has no fixed class
    if any(cfg.conj(c) == c for c in range(len(classes))):
        raise CMError("iota fixes a coset class")
    return cfg


# (group, Delta generators, iota) for each Galois group the tables cover
STANDARD_CONFIGS: dict[str, tuple[tuple[str, ...], str]] = {
    "C2": ((), "x"),
    "C4": ((), "x2"),
    "D4": (("x",), "y2"),
    "C6": ((), "x3"),
    "C2xS3": (("(0;t)",), "(1;1)"),
    "E8semiC3": (("(1,0,0;1)", "(0,1,0;1)"), "(1,1,1;1)"),
    "E8semiS3": (("(1,0,0;1)", "(0,1,0;1)", "(0,0,0;t)"), "(1,1,1;1)"),
}

DIMENSION_GROUPS: dict[int, tuple[str, ...]] = {
    1: ("C2",),
    2: ("C4", "D4"),
    3: ("C6", "C2xS3", "E8semiC3", "E8semiS3"),
}

_CFG_CACHE: dict[str, CMConfig] = {}


def standard_config(name: str) -> CMConfig:
    if name not in _CFG_CACHE:
        G = build_named_group(name)
        gens, iota = STANDARD_CONFIGS[name]
        delta = generated_subgroup(G, [G.element(t) for t in gens])
        _CFG_CACHE[name] = make_cm_config(G, delta, G.element(iota))
    return _CFG_CACHE[name]


def _orbit_pairs(cfg: CMConfig) -> list[tuple[int, int]]:
    pairs = []
    for c in range(len(cfg.classes)):
        d = cfg.conj(c)
        if c < d:
            pairs.append((c, d))
    return pairs


def make_cm_type(cfg: CMConfig, s1) -> CMType:
    s1 = frozenset(s1)
    s0 = frozenset(cfg.conj(c) for c in s1)
    if s1 & s0 or len(s1 | s0) != len(cfg.classes):
        raise CMError("not a CM type: must pick exactly one class from each conjugate pair")
    return CMType(s1, s0)


def all_cm_types(cfg: CMConfig) -> list[CMType]:
    """All 2^g CM types, in lexicographic order of their sorted class lists."""
    pairs = _orbit_pairs(cfg)
    types = [
        make_cm_type(cfg, choice)
        for choice in itertools.product(*pairs)
    ]
    return sorted(types, key=lambda t: sorted(t.s1))


def _lifted(cfg: CMConfig, t: CMType) -> frozenset[int]:
    return frozenset(g for c in t.s1 for g in cfg.classes[c].members)


def is_primitive(cfg: CMConfig, t: CMType) -> bool:
    """True iff the right stabiliser of the lifted CM type equals Delta."""
    G = cfg.G
    lifted = _lifted(cfg, t)
    stab = [
        h for h in range(G.order)
        if frozenset(G.mul[x][h] for x in lifted) == lifted
    ]
    return tuple(stab) == cfg.delta.members


def _right_act(cfg: CMConfig, t: CMType, n: int) -> CMType:
    G = cfg.G
    s1 = frozenset(
        cfg.class_of[G.mul[cfg.classes[c].representative][n]] for c in t.s1
    )
    return make_cm_type(cfg, s1)


def cm_type_classes(cfg: CMConfig, primitive_only: bool = True) -> list[list[CMType]]:
    """Orbits of CM types under right translation by the normaliser of Delta.

    Each orbit is sorted with its lexicographically least member first; the
    orbits themselves are ordered by that member.
    """
    N = normalizer(cfg.G, cfg.delta)
    types = all_cm_types(cfg)
    if primitive_only:
        types = [t for t in types if is_primitive(cfg, t)]
    key = lambda t: sorted(t.s1)  # noqa: E731
    seen: set[frozenset[int]] = set()
    orbits = []
    for t in types:
        if t.s1 in seen:
            continue
        orbit = {u.s1: u for u in (_right_act(cfg, t, n) for n in N.members)}
        seen.update(orbit)
        orbits.append(sorted(orbit.values(), key=key))
    return sorted(orbits, key=lambda o: key(o[0]))


# The four classes of CM types for E8semiS3.  With phi1=[(0,0,0;1)],
# phi3=[(0,0,0;st)], phi4=[(0,0,0;ts)] and iota-translates for the flipped
# entries, the letters follow the order-3 and order-6 tables: (D) is the
# unflipped triple and (A), (B), (C) flip phi4, phi3, phi1 respectively.
E8S3_TYPE_LABELS: dict[str, tuple[str, ...]] = {
    "A": ("(0,0,0;1)", "(0,0,0;st)", "(1,1,1;ts)"),
    "B": ("(0,0,0;1)", "(1,1,1;st)", "(0,0,0;ts)"),
    "C": ("(1,1,1;1)", "(0,0,0;st)", "(0,0,0;ts)"),
    "D": ("(0,0,0;1)", "(0,0,0;st)", "(0,0,0;ts)"),
}


def labelled_cm_type_classes(cfg: CMConfig) -> list[tuple[str, list[CMType]]]:
    """CM type classes with display labels.

    For E8semiS3 the labels A-D follow the worked example; otherwise classes
    are labelled A, B, ... in order.
    """
    orbits = cm_type_classes(cfg)
    if cfg.G.name == "E8semiS3" and cfg == standard_config("E8semiS3"):
        out = []
        for label, reps in E8S3_TYPE_LABELS.items():
            s1 = frozenset(cfg.class_of[cfg.G.element(r)] for r in reps)
            orbit = next(o for o in orbits if any(t.s1 == s1 for t in o))
            out.append((label, orbit))
        return out
    return [(chr(ord("A") + i), o) for i, o in enumerate(orbits)]


_CM_TYPE = re.compile(r"^\s*S1\s*=\s*\[(.*)\]\s*$")


def _split_top(s: str) -> list[str]:
    out, depth, cur = [], 0, ""
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    if cur.strip():
        out.append(cur)
    return [x.strip() for x in out]


def parse_cm_type(cfg: CMConfig, text: str) -> CMType:
    """Parse ``S1=[1,y]``; each token may name any member of its class."""
    m = _CM_TYPE.match(text)
    if not m:
        raise CMError(f"cannot parse CM type {text!r}; expected S1=[...]")
    tokens = _split_top(m.group(1))
    s1 = set()
    for tok in tokens:
        try:
            g = cfg.G.element(tok)
        except GroupError:
            raise CMError(f"unknown element {tok!r} in CM type") from None
        s1.add(cfg.class_of[g])
    if len(s1) != len(tokens):
        raise CMError("CM type lists the same class twice")
    return make_cm_type(cfg, s1)


def format_cm_type(cfg: CMConfig, t: CMType) -> str:
    return "S1=[" + ",".join(cfg.class_name(c) for c in sorted(t.s1)) + "]"
