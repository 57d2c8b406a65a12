"""Kraft circular words and the BT1 group scheme they describe.

A word over {F, V} is read around the orbits of the Frobenius element on the
coset classes: a class in the CM type contributes F, its conjugate V.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .cm import CMConfig, CMType

__all__ = [
    "KraftWord",
    "BT1Decomposition",
    "canonical_rotation",
    "primitive_period",
    "frobenius_orbits",
    "build_kraft_words",
    "name_bt1",
    "invariants_of",
    "dual_word",
]


def canonical_rotation(word: str) -> str:
    """Lexicographically least rotation (F < V)."""
    if not word:
        raise ValueError("empty word")
    if set(word) - {"F", "V"}:
        raise ValueError(f"word {word!r} has letters other than F and V")
    return min(word[i:] + word[:i] for i in range(len(word)))


def primitive_period(word: str) -> tuple[str, int]:
    """Split ``word`` as ``root * k`` with the shortest possible root.

    The root is returned in canonical rotation.
    """
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word[:d] * (n // d) == word:
            return canonical_rotation(word[:d]), n // d
    raise AssertionError("unreachable")


@dataclass(frozen=True, order=True)
class KraftWord:
    letters: str

    def __post_init__(self):
        if canonical_rotation(self.letters) != self.letters:
            raise ValueError(f"{self.letters!r} is not in canonical rotation")
        if primitive_period(self.letters)[1] != 1:
            raise ValueError(f"{self.letters!r} is periodic")

    def __str__(self):
        return self.letters

    @property
    def f_runs(self) -> int:
        """Maximal runs of F around the circle; 0 for the one-letter words."""
        w = self.letters
        if len(w) == 1:
            return 0
        return sum(1 for i in range(len(w)) if w[i] == "F" and w[i - 1] != "F")


def dual_word(word: str) -> str:
    """Swap F and V and reverse orientation (Cartier duality on words)."""
    swapped = word.translate(str.maketrans("FV", "VF"))[::-1]
    return canonical_rotation(swapped)


def invariants_of(components) -> tuple[int, int]:
    """(p-rank, a-number) of a multiset {word: multiplicity}."""
    comps = _as_counter(components)
    f = comps.get("F", 0)
    v = comps.get("V", 0)
    if f != v:
        raise ValueError("unbalanced decomposition: #F-loops != #V-loops")
    a = sum(KraftWord(w).f_runs * k for w, k in comps.items())
    return f, a


def _as_counter(components) -> Counter:
    if isinstance(components, dict):
        return Counter({str(w): k for w, k in components.items()})
    return Counter({str(w): k for w, k in components})


# named indecomposables; the pair FFV + FVV together is I_{3,2}
_NAMES = {
    "FV": "I_{1,1}",
    "FFVV": "I_{2,1}",
    "FFFVVV": "I_{3,1}",
}


def name_bt1(components) -> str:
    """Display name such as ``Z/pZ x mu_p x I_{1,1}``.

    F-loops are mu_p and V-loops Z/pZ; they are printed paired as
    ``(Z/pZ x mu_p)^k`` when their counts agree.
    """
    comps = _as_counter(components)
    factors: list[tuple[str, int]] = []
    f, v = comps.pop("F", 0), comps.pop("V", 0)
    if f and f == v:
        factors.append(("Z/pZ x mu_p", f))
    else:
        if v:
            factors.append(("Z/pZ", v))
        if f:
            factors.append(("mu_p", f))
    pair = min(comps.get("FFV", 0), comps.get("FVV", 0))
    if pair:
        comps["FFV"] -= pair
        comps["FVV"] -= pair
    named = []
    if pair:
        named.append(("I_{3,2}", pair))
    for w, k in comps.items():
        if k:
            named.append((_NAMES.get(w, f"G[{w}]"), k))
    # larger group schemes first, so I_{2,1} x I_{1,1} reads as in the tables
    named.sort(key=lambda nk: (-_size(nk[0]), nk[0]))
    factors.extend(named)
    if not factors:
        return "0"
    parts = []
    for label, k in factors:
        if k == 1:
            parts.append(label)
        elif " x " in label:
            parts.append(f"({label})^{k}")
        else:
            parts.append(f"{label}^{k}")
    return " x ".join(parts)


def _size(label: str) -> int:
    if label.startswith("I_{"):
        r, s = label[3:-1].split(",")
        return 10 * int(r) + int(s)
    if label.startswith("G["):
        return len(label) - 3
    return 0


@dataclass(frozen=True)
class BT1Decomposition:
    components: tuple[tuple[KraftWord, int], ...]
    name: str
    p_rank: int
    a_number: int
    orbit_words: tuple[str, ...] = ()

    @classmethod
    def from_counter(cls, comps: Counter, orbit_words=()) -> "BT1Decomposition":
        items = tuple(sorted((KraftWord(w), k) for w, k in comps.items()))
        p_rank, a_number = invariants_of(comps)
        return cls(items, name_bt1(comps), p_rank, a_number, tuple(orbit_words))

    def as_counter(self) -> Counter:
        return Counter({w.letters: k for w, k in self.components})

    def words(self) -> list[str]:
        return [f"{w}^{k}" if k > 1 else str(w) for w, k in self.components]

    def to_dict(self) -> dict:
        return {
            "components": [{"word": w.letters, "mult": k} for w, k in self.components],
            "name": self.name,
            "p_rank": self.p_rank,
            "a_number": self.a_number,
        }


def frobenius_orbits(cfg: CMConfig, sigma: int) -> list[list[int]]:
    """Orbits of ``c -> sigma * c`` on the classes, each in traversal order."""
    seen: set[int] = set()
    orbits = []
    for c in range(len(cfg.classes)):
        if c in seen:
            continue
        orbit = [c]
        seen.add(c)
        nxt = cfg.translate(sigma, c)
        while nxt != c:
            orbit.append(nxt)
            seen.add(nxt)
            nxt = cfg.translate(sigma, nxt)
        orbits.append(orbit)
    return orbits


def build_kraft_words(cfg: CMConfig, sigma: int, cm_type: CMType) -> BT1Decomposition:
    comps: Counter = Counter()
    orbit_words = []
    for orbit in frobenius_orbits(cfg, sigma):
        word = "".join(cm_type.letter(c) for c in orbit)
        orbit_words.append(word)
        root, k = primitive_period(word)
        comps[root] += k
    return BT1Decomposition.from_counter(comps, orbit_words)
