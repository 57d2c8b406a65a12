"""Small finite groups stored as explicit multiplication tables.

Every group used here has order at most 48, so all structural checks
(Latin square, associativity, closure) are done exhaustively.  Element 0 is
always the identity.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

__all__ = [
    "GroupError",
    "GroupTable",
    "Subgroup",
    "CosetClass",
    "GROUP_NAMES",
    "build_named_group",
    "subgroup",
    "generated_subgroup",
    "cyclic_subgroup",
    "element_order",
    "left_cosets",
    "double_cosets",
    "normalizer",
    "is_central",
]


class GroupError(ValueError):
    """Raised for malformed groups, subgroups or element names."""


@dataclass(frozen=True)
class GroupTable:
    """A finite group given by its Cayley table.

    ``mul[i][j]`` is the index of the product of elements ``i`` and ``j``.
    """

    name: str
    mul: tuple[tuple[int, ...], ...]
    names: tuple[str, ...]
    inv: tuple[int, ...] = field(init=False)
    _index: dict = field(init=False, repr=False, compare=False)
    # extra accepted spellings for elements, e.g. "yx" or "(0,0,0;st)"
    _parser: Callable[[str], int | None] | None = field(
        default=None, repr=False, compare=False
    )

    def __post_init__(self):
        n = len(self.mul)
        if n == 0 or len(self.names) != n:
            raise GroupError("table and name list must have equal positive length")
        if len(set(self.names)) != n:
            raise GroupError("element names must be unique")
        full = set(range(n))
        for row in self.mul:
            if len(row) != n or set(row) != full:
                raise GroupError("multiplication table is not a Latin square")
        for j in range(n):
            if {self.mul[i][j] for i in range(n)} != full:
                raise GroupError("multiplication table is not a Latin square")
        if any(self.mul[0][j] != j or self.mul[j][0] != j for j in range(n)):
            raise GroupError("element 0 must be the identity")
        inv = tuple(self.mul[i].index(0) for i in range(n))
        object.__setattr__(self, "inv", inv)
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(self.names)})

    @property
    def order(self) -> int:
        return len(self.mul)

    @property
    def identity(self) -> int:
        return 0

    def __len__(self):
        return len(self.mul)

    def __iter__(self):
        return iter(range(len(self.mul)))

    def m(self, *elements: int) -> int:
        """Product of the given elements, left to right."""
        out = 0
        for e in elements:
            out = self.mul[out][e]
        return out

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = self.inv[g], -k
        out = 0
        for _ in range(k):
            out = self.mul[out][g]
        return out

    def element(self, token: str) -> int:
        """Look up an element by name; also accepts product spellings."""
        token = token.strip()
        if token in self._index:
            return self._index[token]
        if self._parser is not None:
            idx = self._parser(token)
            if idx is not None:
                return idx
        raise GroupError(f"unknown element {token!r} of {self.name}")

    def name_of(self, g: int) -> str:
        return self.names[g]

    def is_associative(self) -> bool:
        mul = self.mul
        n = len(mul)
        return all(
            mul[mul[a][b]][c] == mul[a][mul[b][c]]
            for a in range(n)
            for b in range(n)
            for c in range(n)
        )


@dataclass(frozen=True)
class Subgroup:
    members: tuple[int, ...]

    def __contains__(self, g):
        return g in self.members

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


@dataclass(frozen=True)
class CosetClass:
    """A left coset ``rep * H`` with ``rep`` its smallest member."""

    representative: int
    members: tuple[int, ...]

    def __contains__(self, g):
        return g in self.members

    def __len__(self):
        return len(self.members)


def subgroup(G: GroupTable, elements: Iterable[int]) -> Subgroup:
    """Validate that ``elements`` form a subgroup of ``G``."""
    members = tuple(sorted(set(elements)))
    if not members or any(not 0 <= g < G.order for g in members):
        raise GroupError("subgroup elements out of range")
    mset = set(members)
    if 0 not in mset:
        raise GroupError("subgroup must contain the identity")
    for a in members:
        if G.inv[a] not in mset:
            raise GroupError("subgroup is not closed under inverses")
        for b in members:
            if G.mul[a][b] not in mset:
                raise GroupError("subgroup is not closed under multiplication")
    return Subgroup(members)


def generated_subgroup(G: GroupTable, generators: Iterable[int]) -> Subgroup:
    gens = list(generators)
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                k = G.mul[h][g]
                if k not in seen:
                    seen.add(k)
                    nxt.append(k)
        frontier = nxt
    return Subgroup(tuple(sorted(seen)))


def element_order(G: GroupTable, g: int) -> int:
    k, x = 1, g
    while x != 0:
        x = G.mul[x][g]
        k += 1
    return k


def cyclic_subgroup(G: GroupTable, g: int) -> Subgroup:
    if not 0 <= g < G.order:
        raise GroupError(f"element index {g} out of range")
    return generated_subgroup(G, [g])


def left_cosets(G: GroupTable, H: Subgroup) -> list[CosetClass]:
    """Left cosets ``gH`` ordered by their smallest element."""
    subgroup(G, H.members)
    seen: set[int] = set()
    out = []
    for g in range(G.order):
        if g in seen:
            continue
        members = tuple(sorted(G.mul[g][h] for h in H.members))
        seen.update(members)
        out.append(CosetClass(members[0], members))
    return out


def double_cosets(G: GroupTable, H: Subgroup, K: Subgroup) -> list[tuple[int, ...]]:
    """Double cosets ``H g K`` as sorted tuples, ordered by minimum element."""
    subgroup(G, H.members)
    subgroup(G, K.members)
    seen: set[int] = set()
    out = []
    for g in range(G.order):
        if g in seen:
            continue
        block = tuple(
            sorted({G.mul[G.mul[h][g]][k] for h in H.members for k in K.members})
        )
        seen.update(block)
        out.append(block)
    return out


def normalizer(G: GroupTable, H: Subgroup) -> Subgroup:
    hs = set(H.members)
    return Subgroup(
        tuple(
            g
            for g in range(G.order)
            if {G.m(g, h, G.inv[g]) for h in H.members} == hs
        )
    )


def is_central(G: GroupTable, g: int) -> bool:
    return all(G.mul[g][h] == G.mul[h][g] for h in range(G.order))


# ---------------------------------------------------------------------------
# named groups


def _from_elements(name, elements, op, names, parser_factory=None) -> GroupTable:
    index = {e: i for i, e in enumerate(elements)}
    mul = tuple(tuple(index[op(a, b)] for b in elements) for a in elements)
    table = GroupTable(name, mul, tuple(names))
    if parser_factory is not None:
        object.__setattr__(table, "_parser", parser_factory(table))
    return table


_WORD = re.compile(r"([a-z])(?:\^?(-?\d+))?")


def _word_parser(letters: dict[str, str]):
    """Parser for juxtaposed words such as ``yx``, ``y^3x`` or ``ts^2``.

    ``letters`` maps a generator letter to the canonical element name.
    """

    def factory(G: GroupTable):
        def parse(token: str):
            token = token.replace(" ", "")
            if token in ("", "1", "e"):
                return 0
            pos, out = 0, 0
            while pos < len(token):
                m = _WORD.match(token, pos)
                if not m or m.group(1) not in letters:
                    return None
                g = G.element(letters[m.group(1)])
                out = G.mul[out][G.power(g, int(m.group(2) or 1))]
                pos = m.end()
            return out

        return parse

    return factory


def _cyclic(n: int) -> GroupTable:
    def name(k):
        return "1" if k == 0 else ("x" if k == 1 else f"x{k}")

    base = _word_parser({"x": "x", "g": "x"})

    def factory(G):
        parse_word = base(G)
        alias = re.compile(r"g\^(\d+)$")

        def parse(token):
            m = alias.match(token.strip())
            if m:
                return int(m.group(1)) % n
            return parse_word(token)

        return parse

    return _from_elements(
        f"C{n}", list(range(n)), lambda a, b: (a + b) % n, [name(k) for k in range(n)],
        factory,
    )


def _dihedral8() -> GroupTable:
    # x^i y^j with y^4 = x^2 = (xy)^2 = 1, so y^j x = x y^-j
    elements = [(i, j) for i in range(2) for j in range(4)]

    def op(a, b):
        i, j = a
        k, l = b
        return ((i + k) % 2, ((-j if k else j) + l) % 4)

    def name(e):
        i, j = e
        s = "x" if i else ""
        if j:
            s += "y" if j == 1 else f"y{j}"
        return s or "1"

    return _from_elements(
        "D4", elements, op, [name(e) for e in elements],
        _word_parser({"x": "x", "y": "y"}),
    )


# S3 realised as coordinate permutations of (Z/2)^3: an element p acts by
# (p.a)_i = a_{p[i]}.  s.(a1,a2,a3) = (a2,a3,a1), t.(a1,a2,a3) = (a2,a1,a3).
_S = (1, 2, 0)
_T = (1, 0, 2)


def _compose(p, q):
    # action of p after q: (p.(q.a))_i = (q.a)_{p[i]} = a_{q[p[i]]}
    return tuple(q[p[i]] for i in range(3))


def _act(p, v):
    return tuple(v[p[i]] for i in range(3))


_ID3 = (0, 1, 2)
_S2 = _compose(_S, _S)
_S3_ORDER = [_ID3, _S, _S2, _T, _compose(_T, _S), _compose(_T, _S2)]
_S3_NAMES = ["1", "s", "s2", "t", "ts", "ts2"]
_C3_ORDER = _S3_ORDER[:3]


def _semidirect_parser(letter_names: dict[str, str], coords: int):
    """Parse ``(a1,...;w)`` where ``w`` is any word in s and t."""
    pat = re.compile(r"^\((.*);(.*)\)$")

    def factory(G: GroupTable):
        def parse(token):
            m = pat.match(token.replace(" ", ""))
            if not m:
                return None
            bits = m.group(1).split(",")
            if len(bits) != coords or any(b not in ("0", "1") for b in bits):
                return None
            word = m.group(2)
            # the translation part times the S3 part
            vec = G.element("(" + ",".join(bits) + ";1)")
            w = _word_parser({k: "(" + ",".join("0" * coords) + f";{v})"
                              for k, v in letter_names.items()})(G)(word)
            if w is None:
                return None
            return G.mul[vec][w]

        return parse

    return factory


def _e8_semidirect(perms, perm_names, name) -> GroupTable:
    vecs = list(itertools.product((0, 1), repeat=3))
    elements = [(v, p) for v in vecs for p in perms]

    def op(x, y):
        v, p = x
        w, q = y
        pw = _act(p, w)
        return (tuple((v[i] + pw[i]) % 2 for i in range(3)), _compose(p, q))

    pname = dict(zip(perms, perm_names))
    names = [f"({v[0]},{v[1]},{v[2]};{pname[p]})" for v, p in elements]
    letters = {"s": "s"} if len(perms) == 3 else {"s": "s", "t": "t"}
    return _from_elements(name, elements, op, names, _semidirect_parser(letters, 3))


def _c2_times_s3() -> GroupTable:
    elements = [(e, p) for e in (0, 1) for p in _S3_ORDER]

    def op(x, y):
        return ((x[0] + y[0]) % 2, _compose(x[1], y[1]))

    pname = dict(zip(_S3_ORDER, _S3_NAMES))
    names = [f"({e};{pname[p]})" for e, p in elements]
    return _from_elements(
        "C2xS3", elements, op, names,
        _semidirect_parser({"s": "s", "t": "t"}, 1),
    )


_BUILDERS = {
    "C2": lambda: _cyclic(2),
    "C4": lambda: _cyclic(4),
    "C6": lambda: _cyclic(6),
    "D4": _dihedral8,
    "C2xS3": _c2_times_s3,
    "E8semiC3": lambda: _e8_semidirect(_C3_ORDER, _S3_NAMES[:3], "E8semiC3"),
    "E8semiS3": lambda: _e8_semidirect(_S3_ORDER, _S3_NAMES, "E8semiS3"),
}

GROUP_NAMES: tuple[str, ...] = tuple(_BUILDERS)
_CACHE: dict[str, GroupTable] = {}


def build_named_group(name: str) -> GroupTable:
    """Return one of the groups C2, C4, D4, C6, C2xS3, E8semiC3, E8semiS3."""
    if name not in _BUILDERS:
        raise GroupError(f"unknown group {name!r}")
    if name not in _CACHE:
        _CACHE[name] = _BUILDERS[name]()
    return _CACHE[name]


def elements_by_name(G: GroupTable, tokens: Sequence[str]) -> list[int]:
    return [G.element(t) for t in tokens]
