"""Kraft words by hand: reading letters along Frobenius orbits.

Run:  python demos/02_kraft_words.py
"""
from cmkraft.cm import parse_cm_type, standard_config
from cmkraft.kraft import build_kraft_words, dual_word, frobenius_orbits, primitive_period

cfg = standard_config("D4")
G = cfg.G
t = parse_cm_type(cfg, "S1=[1,y]")

for s in ("1", "x", "y", "xy"):
    sigma = G.element(s)
    orbits = frobenius_orbits(cfg, sigma)
    raw = ["".join(t.letter(c) for c in o) for o in orbits]
    bt = build_kraft_words(cfg, sigma, t)
    print(f"sigma={s:3s} orbits={orbits}  letters={raw}")
    print(f"          -> {bt.words()}  {bt.name}  (p-rank {bt.p_rank}, a-number {bt.a_number})")

# periodic words split into copies of their primitive period
print()
print("FVFV ->", primitive_period("VFVF"))
print("dual of FFV is", dual_word("FFV"))
