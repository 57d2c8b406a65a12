"""Walk through the dihedral quartic setup: group, Delta, iota, cosets, CM types.

Run:  python demos/01_groups_and_cm_types.py
"""
from cmkraft.cm import all_cm_types, format_cm_type, is_primitive, standard_config

cfg = standard_config("D4")
G = cfg.G
print(f"{G.name} has order {G.order}: {' '.join(G.names)}")
print("Delta =", [G.names[g] for g in cfg.delta.members], " iota =", G.names[cfg.iota])

# The coset classes g*Delta stand in for the embeddings of the CM field.
for i, c in enumerate(cfg.classes):
    members = ", ".join(G.names[g] for g in c.members)
    print(f"  class {i}: {{{members}}}  conjugate -> class {cfg.conj(i)}")

# A CM type picks one class from each conjugate pair: 2^g choices.
print()
for t in all_cm_types(cfg):
    print(f"  {format_cm_type(cfg, t):12s} primitive={is_primitive(cfg, t)}")

# The threefold group with four primitive classes up to equivalence.
from cmkraft.cm import labelled_cm_type_classes

e8 = standard_config("E8semiS3")
print()
for label, orbit in labelled_cm_type_classes(e8):
    print(f"  ({label}) {format_cm_type(e8, orbit[0])}   [{len(orbit)} types]")
