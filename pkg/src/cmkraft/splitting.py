"""Prime decomposition of p in the CM field from double cosets.

Primes above p correspond to the orbits of the decomposition group <sigma>
on the coset classes gDelta, that is to the double cosets <sigma> g Delta.
Inverting elements maps these bijectively onto Delta g^-1 <sigma>, so the
residue degrees agree with the Delta \\ G / <sigma> description.
"""
from __future__ import annotations

from dataclasses import dataclass

from .cm import CMConfig
from .groups import cyclic_subgroup

__all__ = ["Prime", "SplittingPattern", "splitting_pattern", "render_pattern"]


@dataclass(frozen=True)
class Prime:
    id: int
    f: int
    conj: int
    classes: tuple[int, ...] = ()

    @property
    def self_conjugate(self) -> bool:
        return self.conj == self.id


@dataclass(frozen=True)
class SplittingPattern:
    primes: tuple[Prime, ...]
    # bare tokens, e.g. "P1 P1c P2"; this is what the tables compare
    pattern: str
    # bare tokens plus "[f=...]" when the tokens alone do not fix the degrees
    pattern_string: str

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(p.f for p in self.primes)

    @property
    def all_self_conjugate(self) -> bool:
        return all(p.self_conjugate for p in self.primes)

    def to_dict(self) -> dict:
        return {
            "primes": [{"id": p.id, "f": p.f, "conj": p.conj} for p in self.primes],
            "pattern": self.pattern,
        }


def _orbits(cfg: CMConfig, sigma: int) -> list[tuple[int, ...]]:
    sub = cyclic_subgroup(cfg.G, sigma)
    seen: set[int] = set()
    out = []
    for c in range(len(cfg.classes)):
        if c in seen:
            continue
        orbit = tuple(sorted({cfg.translate(s, c) for s in sub.members}))
        seen.update(orbit)
        out.append(orbit)
    return out


def splitting_pattern(cfg: CMConfig, sigma: int) -> SplittingPattern:
    if not 0 <= sigma < cfg.G.order:
        raise ValueError("sigma out of range")
    orbits = _orbits(cfg, sigma)
    index = {o: i for i, o in enumerate(orbits)}
    conj = [index[tuple(sorted(cfg.conj(c) for c in o))] for o in orbits]
    # (f, conj index, classes) in discovery order; render_pattern renumbers
    raw = [(len(o), conj[i], o) for i, o in enumerate(orbits)]
    return render_pattern(raw, 2 * cfg.g)


def _ambiguous(n_pairs: int, n_self: int, total: int) -> bool:
    """True if more than one degree assignment fits the bare tokens."""
    def count(k: int, remaining: int, cap: int, weight: int) -> int:
        # non-increasing sequences of k positive ints, weighted sum == remaining
        if k == 0:
            return 1 if remaining == 0 else 0
        return sum(
            count(k - 1, remaining - weight * f, f, weight)
            for f in range(1, min(cap, remaining // weight) + 1)
        )

    n = 0
    for pair_sum in range(0, total + 1, 2):
        a = count(n_pairs, pair_sum, total, 2)
        if a:
            n += a * count(n_self, total - pair_sum, total, 1)
        if n > 1:
            return True
    return False


def render_pattern(raw, total_degree: int | None = None) -> SplittingPattern:
    """Canonical numbering and rendering.

    ``raw`` is a list of ``(f, conj_index, classes)`` indexed by position.
    Conjugate pairs come first, then self-conjugate primes; within each kind
    the order is descending f, then original position.  A lone pair renders
    as "P Pc" and a lone prime as "P".
    """
    pairs, selfs = [], []
    for i, (f, j, _) in enumerate(raw):
        if j == i:
            selfs.append(i)
        elif i < j:
            pairs.append(i)
    pairs.sort(key=lambda i: (-raw[i][0], i))
    selfs.sort(key=lambda i: (-raw[i][0], i))
    numbered = len(pairs) + len(selfs) > 1

    primes: list[Prime] = []
    tokens: list[str] = []
    k = 0
    for i in pairs:
        k += 1
        base = f"P{k}" if numbered else "P"
        pid = len(primes) + 1
        f = raw[i][0]
        primes.append(Prime(pid, f, pid + 1, raw[i][2]))
        primes.append(Prime(pid + 1, f, pid, raw[raw[i][1]][2]))
        tokens += [base, base + "c"]
    for i in selfs:
        k += 1
        pid = len(primes) + 1
        primes.append(Prime(pid, raw[i][0], pid, raw[i][2]))
        tokens.append(f"P{k}" if numbered else "P")

    bare = " ".join(tokens)
    total = total_degree if total_degree is not None else sum(p.f for p in primes)
    text = bare
    if _ambiguous(len(pairs), len(selfs), total):
        text += " [f=" + ",".join(str(p.f) for p in primes) + "]"
    return SplittingPattern(tuple(primes), bare, text)
