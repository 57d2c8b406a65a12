"""Exhaustive invariant checks over every built-in configuration.

``violations()`` walks all (group, sigma, CM type) combinations, primitive or
not, and returns a list of human-readable problems; an empty list is the
expected outcome.
"""
from __future__ import annotations

from collections import Counter
from typing import Iterator

from .cm import STANDARD_CONFIGS, all_cm_types, cm_type_classes, standard_config
from .kraft import build_kraft_words, dual_word
from .splitting import splitting_pattern

PROPERTIES = (
    "letter-balance",
    "word-length",
    "p-rank-count",
    "duality",
    "degree-sum",
    "conjugation",
    "local-local",
    "equivalence",
)


def cases() -> Iterator[tuple[str, object, int, object]]:
    for name in STANDARD_CONFIGS:
        cfg = standard_config(name)
        types = all_cm_types(cfg)
        for s in range(cfg.G.order):
            for t in types:
                yield name, cfg, s, t


def _check_case(cfg, s, t) -> list[tuple[str, str]]:
    g = cfg.g
    out = []
    f = sum(t.letter(c) == "F" for c in range(len(cfg.classes)))
    if not (f == g and len(cfg.classes) - f == g):
        out.append(("letter-balance", f"#F={f}, g={g}"))
    bt = build_kraft_words(cfg, s, t)
    comps = bt.as_counter()
    if sum(len(w) * k for w, k in comps.items()) != 2 * g:
        out.append(("word-length", str(dict(comps))))
    if not (comps.get("F", 0) == comps.get("V", 0) == bt.p_rank):
        out.append(("p-rank-count", f"{dict(comps)} p_rank={bt.p_rank}"))
    dual = Counter()
    for w, k in comps.items():
        dual[dual_word(w)] += k
    if dual != comps:
        out.append(("duality", f"{dict(comps)} vs {dict(dual)}"))
    sp = splitting_pattern(cfg, s)
    if sum(p.f for p in sp.primes) != 2 * g:
        out.append(("degree-sum", sp.pattern_string))
    by_id = {p.id: p for p in sp.primes}
    for p in sp.primes:
        q = by_id[p.conj]
        if q.f != p.f or q.conj != p.id:
            out.append(("conjugation", sp.pattern_string))
            break
    if sp.all_self_conjugate and bt.p_rank != 0:
        out.append(("local-local", f"{sp.pattern} with p_rank {bt.p_rank}"))
    return out


def violations() -> list[str]:
    problems = []
    for name, cfg, s, t in cases():
        for prop, detail in _check_case(cfg, s, t):
            problems.append(f"{prop}: {name} sigma={cfg.G.names[s]} S1={sorted(t.s1)}: {detail}")
    # equivalent CM types must give the same report for every sigma
    for name in STANDARD_CONFIGS:
        cfg = standard_config(name)
        for orbit in cm_type_classes(cfg, primitive_only=False):
            for s in range(cfg.G.order):
                keys = set()
                for t in orbit:
                    bt = build_kraft_words(cfg, s, t)
                    keys.add((splitting_pattern(cfg, s).pattern, bt.name, bt.p_rank, bt.a_number))
                if len(keys) != 1:
                    problems.append(
                        f"equivalence: {name} sigma={cfg.G.names[s]}: {sorted(keys)}"
                    )
    return problems


def count_cases() -> int:
    return sum(1 for _ in cases())
